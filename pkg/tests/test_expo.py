import pytest
from hypothesis import given

from strategies import graph_in_theory
from xmgraph.errors import CapacityError, ValidationError
from xmgraph.expo import (
    MatchProfile,
    arc_count_formula,
    arc_is_compatible,
    curry,
    eval_morphism,
    exponential,
    matching_arcs,
    pair_construction_applies,
    uncurry,
)
from xmgraph.gallery import lrefl, lrefl2_power_a, lsym, lsym2_power_a
from xmgraph.graph import (
    UNFIXED_LOOP,
    classify_arcs,
    count_homs,
    enumerate_homs,
    find_isomorphism,
    identity_morphism,
    representable,
)
from xmgraph.limits import coproduct, product, terminal
from xmgraph.theory import A, V, standard_theory

SYM2 = standard_theory("symmetric", 2)
RSYM2 = standard_theory("reflexive-symmetric", 2)
PAIR_THEORIES = [("oriented", 2), ("symmetric", 2), ("reflexive-symmetric", 2),
                 ("reflexive-oriented", 2), ("symmetric", 3)]
ALL_SMALL = PAIR_THEORIES + [("hereditary", 2), ("reflexive-hereditary", 2)]


def test_matching_arcs():
    assert matching_arcs(lsym(2), MatchProfile((0, 0))) == (0, 1)
    Ab = representable(SYM2, A)
    assert [Ab.arc_name(b) for b in matching_arcs(Ab, (0, 1))] == ["a_id"]
    G, _ = coproduct(lsym(2), representable(SYM2, V))
    assert matching_arcs(G, (1, 1)) == ()


@pytest.mark.parametrize("n", [2, 3])
def test_v_to_the_v_is_terminal(n):
    T = standard_theory("symmetric", n)
    Vb = representable(T, V)
    E = exponential(Vb, Vb).graph
    assert find_isomorphism(E, terminal(T)) is not None


def test_lsym2_power_a():
    E, G = lsym2_power_a()
    assert G.size() == (1, 4)
    orbits = {tuple(G.arc_name(a) for a in c.orbit): c.kind for c in classify_arcs(G)}
    assert orbits[("01", "10")] == UNFIXED_LOOP
    assert len(orbits) == 3


def test_lsym2_evaluation_reads_first_digit():
    E, G = lsym2_power_a()
    ev = eval_morphism(E)
    H = E.exponent
    a1 = H.arc_names.index("a_id")
    for arc in G.arcs:
        out = ev.fa[arc * H.n_arcs + a1]
        assert E.base.arc_name(out) == G.arc_name(arc)[0]


def test_lrefl2_power_a_size_and_digits():
    E, G = lrefl2_power_a()
    assert G.size() == (2, 64)
    assert len(set(G.arc_names)) == 64
    ev = eval_morphism(E)
    H = E.exponent
    cols = {name: H.arc_names.index(name) for name in ("a_c_s", "a_id", "a_[t,s]", "a_c_t")}
    digit = {"a_c_s": 1, "a_id": 2, "a_[t,s]": 3, "a_c_t": 4}
    for arc in G.arcs:
        for name, col in cols.items():
            out = ev.fa[arc * H.n_arcs + col]
            assert E.base.arc_name(out) == G.arc_name(arc)[digit[name]]


def test_reflexive_eval_on_identity_hom():
    L = lrefl(2)
    E = exponential(L, L)
    ev = eval_morphism(E)
    k = next(i for i, h in enumerate(E.vertex_homs) if h.key() == identity_morphism(L).key())
    for v in L.vertices:
        assert ev.fv[k * L.n_vertices + v] == v


def test_curry_of_eval_is_identity():
    for G, H in ((lsym(2), representable(SYM2, A)), (lrefl(2), representable(RSYM2, A))):
        E = exponential(G, H)
        k = curry(eval_morphism(E), E.graph, H, E)
        assert k.key() == identity_morphism(E.graph).key()


def test_method_selection():
    assert pair_construction_applies(standard_theory("reflexive-symmetric", 3))
    assert not pair_construction_applies(standard_theory("hereditary", 2))
    H2 = standard_theory("hereditary", 2)
    with pytest.raises(ValidationError):
        exponential(terminal(H2), terminal(H2), method="pairs")
    assert exponential(terminal(H2), terminal(H2)).method == "yoneda"


def test_capacity_limit():
    with pytest.raises(CapacityError):
        exponential(lsym(4), representable(SYM2, A), limit=10)


def test_theory_mismatch():
    with pytest.raises(ValidationError):
        exponential(lsym(2), lrefl(2))


@given(graph_in_theory(PAIR_THEORIES, count=2, max_vertices=2, max_arcs=3))
def test_every_arc_compatible_and_formula_agrees(pair):
    G, H = pair
    E = exponential(G, H)
    assert all(arc_is_compatible(E, i) for i in E.graph.arcs)
    if not G.theory.reflexive:
        assert arc_count_formula(E) == E.graph.n_arcs


@given(graph_in_theory(ALL_SMALL, count=2, max_vertices=2, max_arcs=2))
def test_pairs_agrees_with_yoneda(pair):
    G, H = pair
    Y = exponential(G, H, method="yoneda").graph
    if pair_construction_applies(G.theory):
        P = exponential(G, H, method="pairs").graph
        assert find_isomorphism(P, Y) is not None
    assert Y.n_arcs == count_homs(product(representable(G.theory, A), H)[0], G)
    assert Y.n_vertices == count_homs(product(representable(G.theory, V), H)[0], G)


@given(graph_in_theory(ALL_SMALL, count=3, max_vertices=2, max_arcs=2))
def test_curry_uncurry_bijection(triple):
    F, H, G = triple
    E = exponential(G, H)
    FH, _ = product(F, H)
    left = enumerate_homs(FH, G)
    right = enumerate_homs(F, E.graph)
    assert len(left) == len(right)
    for h in left:
        assert uncurry(curry(h, F, H, E), E).key() == h.key()
    for k in right:
        assert curry(uncurry(k, E), F, H, E).key() == k.key()


@given(graph_in_theory(PAIR_THEORIES, max_vertices=2, max_arcs=3))
def test_exponent_terminal(G):
    E = exponential(G, terminal(G.theory)).graph
    assert find_isomorphism(E, G) is not None


@given(graph_in_theory(PAIR_THEORIES, count=3, max_vertices=2, max_arcs=2))
def test_exponent_of_coproduct(triple):
    G, H, K = triple
    S, _ = coproduct(H, K)
    left = exponential(G, S).graph
    right, _ = product(exponential(G, H).graph, exponential(G, K).graph)
    assert left.size() == right.size()
    assert find_isomorphism(left, right) is not None


@given(graph_in_theory([("oriented", 2), ("symmetric", 2), ("symmetric", 3), ("hereditary", 2)]))
def test_power_of_vertex(G):
    T = G.theory
    E = exponential(G, representable(T, V)).graph
    assert E.n_arcs == G.n_vertices ** T.n_x
