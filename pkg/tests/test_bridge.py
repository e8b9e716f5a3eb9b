import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from xmgraph.bridge import (
    FMorphism,
    Hypergraph,
    PowerGraph,
    ReflexiveFGraph,
    adjunction_units,
    compose_fmorphisms,
    fgraph_homs,
    hyper_nerve,
    hyper_realize,
    identity_fmorphism,
    interpretation,
    is_k_uniform,
    make_fmorphism,
    multiset_power,
    nerve,
    power_nerve,
    power_realize,
    realize,
    rf_coequalizer,
    rf_coproduct,
    rpower_nerve,
    rpower_realize,
    uniformity_profile,
)
from xmgraph.bridge.nerve import m_a_quotient, unit
from xmgraph.checks import full_faithful_trial, nerve_trial
from xmgraph.errors import CapacityError, ValidationError
from xmgraph.gallery import example_2_3_symmetric, lrefl, lsym
from xmgraph.generators import (
    random_graph,
    random_hypergraph,
    random_power_graph,
    random_rfgraph,
)
from xmgraph.graph import (
    FIXED_LOOP,
    classify_arcs,
    empty_graph,
    find_isomorphism,
    representable,
)
from xmgraph.theory import A, V, standard_theory

SYM2 = standard_theory("symmetric", 2)
RSYM2 = standard_theory("reflexive-symmetric", 2)
seeds = st.integers(0, 2**32 - 1)


def test_uniformity():
    H = Hypergraph(3, ((0, 1),))
    assert is_k_uniform(H, 2)
    H = Hypergraph(3, ((0, 1), (0, 1, 2)))
    assert not is_k_uniform(H, 2)
    assert uniformity_profile(Hypergraph(1, ((),))) == {0: 0}


def test_hyper_nerve_examples():
    assert hyper_nerve(Hypergraph(2, ((0, 1),)), 2).n_arcs == 2
    assert hyper_nerve(Hypergraph(3, ((0, 1, 2),)), 2).n_arcs == 0
    N = hyper_nerve(Hypergraph(1, ((0,),)), 2)
    assert N.n_arcs == 1
    assert [c.kind for c in classify_arcs(N)] == [FIXED_LOOP]


def test_surjection_count_oracle():
    # arcs over a k-edge at |X| = n are the surjections n -> k
    from math import comb

    def surjections(n, k):
        return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))

    for n in range(1, 4):
        for k in range(0, 4):
            H = Hypergraph(k, (tuple(range(k)),))
            assert hyper_nerve(H, n).n_arcs == surjections(n, k)


def test_hyper_realize_examples():
    R = hyper_realize(representable(SYM2, A))
    assert R.edges == ((0, 1),)
    assert hyper_realize(lsym(2)).edges == ((0,), (0,))
    E = hyper_realize(empty_graph(SYM2))
    assert (E.n_vertices, E.n_edges) == (0, 0)


def test_hyper_units():
    assert adjunction_units(Hypergraph(2, ((0, 1),)), x_size=2).counit_iso
    assert not adjunction_units(Hypergraph(3, ((0, 1, 2),)), x_size=2).counit_iso
    # the unfixed loop pair β0, β1 collapses to one nerve arc
    u = adjunction_units(example_2_3_symmetric(), "hyper")
    assert not u.unit_iso
    assert sorted(u.unit.fv) == list(u.unit.dst.vertices)
    assert set(u.unit.fa) == set(u.unit.dst.arcs)


def test_single_vertex_edge_is_a_fixed_point():
    u = adjunction_units(Hypergraph(2, ((0,),)), x_size=2)
    assert u.is_fixed_point


def test_multiset_power():
    assert multiset_power(2, 2) == [(0, 0), (0, 1), (1, 1)]
    assert len(multiset_power(1, 5)) == 1
    assert multiset_power(3, 0) == [()]


def test_power_nerve_examples():
    assert power_nerve(PowerGraph(2, 2, ((0, 1),))).n_arcs == 2
    N = power_nerve(PowerGraph(2, 1, ((0, 0),)))
    assert N.n_arcs == 1 and classify_arcs(N)[0].kind == FIXED_LOOP
    P = power_realize(lsym(2))
    assert P.edges == ((0, 0), (0, 0))


def test_rpower_examples():
    IA = interpretation("rpower", "A", 2)
    N = rpower_nerve(IA)
    assert N.size() == (2, 4)
    assert find_isomorphism(N, representable(RSYM2, A)) is not None
    IV = interpretation("rpower", "V", 2)
    assert find_isomorphism(rpower_nerve(IV), representable(RSYM2, V)) is not None
    R = rpower_realize(lrefl(2))
    assert (R.n_parts, R.n_vertices) == (2, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_interpretations_are_representables(n):
    for flavor, kind in (("power", "symmetric"), ("rpower", "reflexive-symmetric")):
        T = standard_theory(kind, n)
        for obj in (V, A):
            N = nerve(interpretation(flavor, obj, n)).graph
            assert find_isomorphism(N, representable(T, obj)) is not None


def test_m_a_quotient():
    M = RSYM2.monoid
    Q = m_a_quotient(M)
    names = [[M.names[m] for m in c] for c in Q.classes]
    assert names == [["id", "[t,s]"], ["c_s"], ["c_t"]]
    # the induced action is well defined on every representative
    for i, c in enumerate(Q.classes):
        for rep in c:
            assert [Q.class_of[M.mul[rep][k]] for k in M.elements] == list(Q.act[i])
    M3 = standard_theory("reflexive-symmetric", 3).monoid
    assert len(m_a_quotient(M3)) == 4


def test_rf_coproduct_and_coequalizer():
    one = ReflexiveFGraph(2, 1, (0,), ((0, 0),))
    S, (i1, i2) = rf_coproduct(one, one)
    assert (S.n_parts, S.n_vertices) == (2, 2)
    IA = interpretation("rpower", "A", 2)
    IV = interpretation("rpower", "V", 2)
    s, t = (h for h in fgraph_homs(IV, IA))
    Q, q = rf_coequalizer(s, t)
    top = q.fe[IA.part_names.index("⊤")]
    assert Q.inc[top] == (Q.vertices[0],) * 2
    assert Q.n_vertices == 1
    Q2, q2 = rf_coequalizer(s, s)
    assert (Q2.n_parts, Q2.inc) == (IA.n_parts, IA.inc)


def test_fgraph_homs_examples():
    IV = interpretation("hyper", "V", 2)
    H = Hypergraph(3, ((0, 1), (2,)))
    assert len(fgraph_homs(IV, H)) == H.n_vertices
    for P in (H, PowerGraph(2, 2, ((0, 1),)), interpretation("rpower", "A", 2)):
        ident = identity_fmorphism(P)
        assert ident.key() in {h.key() for h in fgraph_homs(P, P)}


def test_fgraph_budget():
    P = PowerGraph(2, 3, ((0, 1), (1, 2), (0, 2)))
    with pytest.raises(CapacityError):
        fgraph_homs(P, P, budget=3)


def test_fmorphism_validation():
    P = PowerGraph(2, 2, ((0, 1),))
    with pytest.raises(ValidationError):
        make_fmorphism(P, P, (0, 0), (0,))
    with pytest.raises(ValidationError):
        ReflexiveFGraph(2, 2, (0,), ((0, 0), (0, 1)))


@given(seeds)
def test_fmorphism_composition(seed):
    rng = random.Random(seed)
    P, Q, R = (random_power_graph(2, rng) for _ in range(3))
    for f in fgraph_homs(P, Q)[:3]:
        for g in fgraph_homs(Q, R)[:3]:
            h = compose_fmorphisms(g, f)
            make_fmorphism(P, R, h.fv, h.fe)
        assert compose_fmorphisms(identity_fmorphism(Q), f).key() == f.key()


@given(seeds, st.sampled_from(["power", "rpower"]))
def test_nerves_have_only_fixed_loops(seed, flavor):
    rng = random.Random(seed)
    P = random_power_graph(2, rng) if flavor == "power" else random_rfgraph(2, rng)
    N = nerve(P).graph
    assert all(len(c.orbit) == 1 for c in classify_arcs(N) if c.is_loop)


@given(seeds)
def test_power_unit_bijective_on_vertices_surjective_on_arcs(seed):
    G = random_graph(SYM2, seed)
    eta = unit(G, "power")
    assert sorted(eta.fv) == list(eta.dst.vertices)
    assert set(eta.fa) == set(eta.dst.arcs)


@given(seeds, st.sampled_from([2, 3]))
def test_hyper_adjunction_property(seed, n):
    rng = random.Random(seed)
    G = random_graph(standard_theory("symmetric", n), rng, 3, 4)
    H = random_hypergraph(rng, max_vertices=3, max_edges=2, max_card=n + 1)
    assert nerve_trial(G, H, "hyper").ok


@given(seeds)
def test_counit_iso_iff_uniform(seed):
    rng = random.Random(seed)
    H = random_hypergraph(rng, max_vertices=4, max_edges=3, uniform=2)
    assert adjunction_units(H, x_size=2).counit_iso
    big = Hypergraph(H.n_vertices + 3, H.edges + ((0, H.n_vertices + 1, H.n_vertices + 2),))
    assert not adjunction_units(big, x_size=2).counit_iso


@given(seeds, st.sampled_from(["power", "rpower"]))
def test_full_faithful_property(seed, flavor):
    rng = random.Random(seed)
    make = random_power_graph if flavor == "power" else random_rfgraph
    P, Q = make(2, rng), make(2, rng)
    assert full_faithful_trial(P, Q, 2).ok


def test_realize_wrong_theory():
    with pytest.raises(ValidationError):
        realize(lrefl(2), "power")
    with pytest.raises(ValidationError):
        realize(lsym(2), "rpower")
    with pytest.raises(ValidationError):
        nerve(Hypergraph(1, ()))


def test_fmorphism_bijective_flag():
    P = PowerGraph(2, 2, ((0, 1),))
    assert identity_fmorphism(P).is_bijective
    assert not FMorphism(P, P, (0, 0), (0,)).is_bijective
