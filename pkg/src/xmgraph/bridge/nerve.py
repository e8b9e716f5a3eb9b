"""Nerve and realization between F-graphs and symmetric (X,M)-graphs.

An arc of a nerve is a morphism out of the arc interpretation I(A), which
amounts to a pair ``(e, g)``: an edge (or part) ``e`` together with an
ordering ``g : X -> vertices`` whose image (hypergraphs) or multiset
(power graphs) is the incidence of ``e``.  The monoid acts by precomposition,
``(e, g).m = (e, g ∘ m)``; in the reflexive case a constant ``c_y`` sends the
arc to the distinguished loop at ``g(y)``.

Realization quotients the arcs by the invertible elements of M.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from ..algebra import FiniteMonoid, MonoidKind, invertibles
from ..errors import ValidationError
from ..graph import GraphMorphism, XMGraph, classify_arcs, make_graph
from ..theory import Theory, standard_theory
from .fgraphs import (
    FMorphism,
    Hypergraph,
    PowerGraph,
    ReflexiveFGraph,
    flavor_of,
    multiset_map,
)

FLAVORS = ("hyper", "power", "rpower")


@lru_cache(maxsize=None)
def nerve_theory(flavor: str, x_size: int) -> Theory:
    kind = MonoidKind.REFLEXIVE_SYMMETRIC if flavor == "rpower" else MonoidKind.SYMMETRIC
    return standard_theory(kind, x_size)


@dataclass(frozen=True)
class Nerve:
    """A nerve together with the (edge, ordering) label of every arc.

    Orderings are expressed in vertex positions of the nerve; for reflexive
    F-graphs ``vertex_parts[i]`` is the part behind nerve vertex ``i``.
    """

    source: object
    graph: XMGraph
    labels: tuple[tuple[int, tuple[int, ...]], ...]
    vertex_parts: tuple[int, ...]
    index: dict = field(compare=False, repr=False, default_factory=dict)

    def arc_of(self, edge, ordering) -> int:
        return self.index[(edge, tuple(ordering))]


def _orderings_with_image(support, n):
    return [f for f in itertools.product(support, repeat=n) if set(f) == set(support)]


def _orderings_of_multiset(ms):
    return sorted(set(itertools.permutations(ms)))


def nerve(obj, x_size: int | None = None) -> Nerve:
    """The nerve of a hypergraph (over sX for the given |X|), power graph or
    reflexive power graph (over sX / srX with |X| the arity)."""
    flavor = flavor_of(obj)
    if flavor == "hyper":
        if x_size is None:
            raise ValidationError("the hypergraph nerve needs |X|")
        n = x_size
    else:
        n = obj.arity
    T = nerve_theory(flavor, n)
    M = T.monoid
    units = set(invertibles(M))

    if flavor == "rpower":
        vparts = obj.vertices
        pos = {p: i for i, p in enumerate(vparts)}
        labels = []
        for p in obj.parts:
            support = tuple(pos[u] for u in obj.inc[p])
            for g in _orderings_of_multiset(support):
                labels.append((p, g))
        names = [obj.part_name(p) for p in vparts]
    else:
        vparts = tuple(range(obj.n_vertices))
        labels = []
        for e, vs in enumerate(obj.edges):
            if flavor == "hyper":
                gs = _orderings_with_image(vs, n)
            else:
                gs = _orderings_of_multiset(vs)
            labels.extend((e, g) for g in gs)
        names = [obj.vertex_name(v) for v in vparts]

    index = {lab: a for a, lab in enumerate(labels)}

    def act(lab, m):
        e, g = lab
        f = M.maps[m]
        g2 = tuple(g[f[x]] for x in range(n))
        if m in units:
            return index[(e, g2)]
        return index[(vparts[g2[0]], g2)]

    inc = [g for _, g in labels]
    acts = [tuple(act(lab, m) for m in M.elements) for lab in labels]
    loops = None
    if flavor == "rpower":
        loops = [index[(p, (i,) * n)] for i, p in enumerate(vparts)]

    def arc_name(lab):
        e, g = lab
        ename = obj.part_name(e) if flavor == "rpower" else obj.edge_name(e)
        return f"{ename}[{','.join(names[v] for v in g)}]"

    G = make_graph(T, len(vparts), inc, acts, loops, names, [arc_name(l) for l in labels])
    return Nerve(obj, G, tuple(labels), tuple(vparts), index)


def hyper_nerve(H: Hypergraph, x_size: int) -> XMGraph:
    return nerve(H, x_size).graph


def power_nerve(P: PowerGraph) -> XMGraph:
    return nerve(P).graph


def rpower_nerve(R: ReflexiveFGraph) -> XMGraph:
    return nerve(R).graph


def _require(G: XMGraph, flavor: str):
    want = MonoidKind.REFLEXIVE_SYMMETRIC if flavor == "rpower" else MonoidKind.SYMMETRIC
    if G.theory.kind is not want:
        raise ValidationError(
            f"{flavor} realization needs a {want} graph, got {G.theory.label()}"
        )


@dataclass(frozen=True)
class Realization:
    """A realization with the edge (or part) assigned to each arc."""

    source: XMGraph
    obj: object
    edge_of_arc: tuple[int, ...]
    part_of_vertex: tuple[int, ...]


def realize(G: XMGraph, flavor: str) -> Realization:
    _require(G, flavor)
    orbits = [c.orbit for c in classify_arcs(G)]
    edge_of = [0] * G.n_arcs
    for i, orbit in enumerate(orbits):
        for a in orbit:
            edge_of[a] = i
    names = [G.arc_name(o[0]) for o in orbits]
    if flavor == "rpower":
        part_of_vertex = tuple(edge_of[G.loops[v]] for v in G.vertices)
        inc = [tuple(part_of_vertex[u] for u in G.inc[o[0]]) for o in orbits]
        pnames = list(names)
        for v in G.vertices:
            pnames[part_of_vertex[v]] = G.vertex_name(v)
        obj = ReflexiveFGraph(G.theory.n_x, len(orbits), part_of_vertex, tuple(inc), pnames)
        return Realization(G, obj, tuple(edge_of), part_of_vertex)
    vnames = [G.vertex_name(v) for v in G.vertices]
    if flavor == "hyper":
        edges = [tuple(sorted(set(G.inc[o[0]]))) for o in orbits]
        obj = Hypergraph(G.n_vertices, tuple(edges), vnames, names)
    else:
        edges = [tuple(sorted(G.inc[o[0]])) for o in orbits]
        obj = PowerGraph(G.theory.n_x, G.n_vertices, tuple(edges), vnames, names)
    return Realization(G, obj, tuple(edge_of), tuple(G.vertices))


def hyper_realize(G: XMGraph) -> Hypergraph:
    return realize(G, "hyper").obj


def power_realize(G: XMGraph) -> PowerGraph:
    return realize(G, "power").obj


def rpower_realize(G: XMGraph) -> ReflexiveFGraph:
    return realize(G, "rpower").obj


# Transposition across the adjunction R ⊣ N -------------------------------

def transpose_to_nerve(h: FMorphism, R: Realization, N: Nerve) -> GraphMorphism:
    """h : R(G) -> P  becomes  G -> N(P)."""
    G = R.source
    if isinstance(h.src, ReflexiveFGraph):
        where = {p: i for i, p in enumerate(N.vertex_parts)}
        fv = tuple(where[h.fe[R.part_of_vertex[v]]] for v in G.vertices)
    else:
        fv = tuple(h.fv)
    fa = tuple(
        N.arc_of(h.fe[R.edge_of_arc[a]], tuple(fv[u] for u in G.inc[a])) for a in G.arcs
    )
    return GraphMorphism(G, N.graph, fv, fa)


def transpose_from_nerve(k: GraphMorphism, R: Realization, N: Nerve) -> FMorphism:
    """k : G -> N(P)  becomes  R(G) -> P."""
    G, obj = R.source, R.obj
    n_edges = obj.n_parts if isinstance(obj, ReflexiveFGraph) else obj.n_edges
    fe = [0] * n_edges
    for a in G.arcs:
        fe[R.edge_of_arc[a]] = N.labels[k.fa[a]][0]
    if isinstance(obj, ReflexiveFGraph):
        return FMorphism(obj, N.source, tuple(fe[v] for v in obj.vertices), tuple(fe))
    return FMorphism(obj, N.source, tuple(N.vertex_parts[w] for w in k.fv), tuple(fe))


def nerve_morphism(f: FMorphism, Np: Nerve, Nq: Nerve) -> GraphMorphism:
    """N(f) : N(P) -> N(Q), postcomposition with f."""
    if isinstance(f.src, ReflexiveFGraph):
        where = {p: i for i, p in enumerate(Nq.vertex_parts)}
        fv = tuple(where[f.fe[p]] for p in Np.vertex_parts)
    else:
        fv = tuple(f.fv)
    fa = tuple(
        Nq.arc_of(f.fe[e], tuple(fv[v] for v in g)) for e, g in Np.labels
    )
    return GraphMorphism(Np.graph, Nq.graph, fv, fa)


@dataclass(frozen=True)
class AdjunctionUnits:
    unit: GraphMorphism | None
    counit: FMorphism | None
    unit_iso: bool
    counit_iso: bool

    @property
    def is_fixed_point(self) -> bool:
        return self.unit_iso and self.counit_iso


def unit(G: XMGraph, flavor: str) -> GraphMorphism:
    """η_G : G -> N R(G), sending an arc to (its orbit, its incidence profile)."""
    R = realize(G, flavor)
    N = nerve(R.obj, G.theory.n_x)
    if flavor == "rpower":
        where = {p: i for i, p in enumerate(N.vertex_parts)}
        fv = tuple(where[R.part_of_vertex[v]] for v in G.vertices)
    else:
        fv = tuple(G.vertices)
    fa = tuple(
        N.arc_of(R.edge_of_arc[a], tuple(fv[u] for u in G.inc[a])) for a in G.arcs
    )
    return GraphMorphism(G, N.graph, fv, fa)


def counit(P, x_size: int | None = None) -> FMorphism:
    """ε_P : R N(P) -> P, sending an orbit of (e, g) to e."""
    N = nerve(P, x_size)
    R = realize(N.graph, flavor_of(P))
    return transpose_from_nerve(
        GraphMorphism(N.graph, N.graph, tuple(N.graph.vertices), tuple(N.graph.arcs)), R, N
    )


def adjunction_units(obj, flavor: str | None = None, x_size: int | None = None) -> AdjunctionUnits:
    """Unit and counit components at ``obj`` with their bijectivity flags.

    For an (X,M)-graph G this is η_G and ε_{R(G)}; for an F-graph P it is
    η_{N(P)} and ε_P.
    """
    if isinstance(obj, XMGraph):
        if flavor is None:
            raise ValidationError("give the flavor of the realization")
        eta = unit(obj, flavor)
        eps = counit(realize(obj, flavor).obj, obj.theory.n_x)
    else:
        eps = counit(obj, x_size)
        eta = unit(nerve(obj, x_size).graph, flavor_of(obj))
    return AdjunctionUnits(eta, eps, eta.is_bijective, eps.is_bijective)


# Interpretation objects and M_A -------------------------------------------

@dataclass(frozen=True)
class MAQuotient:
    """M/~ with m ~ m' iff mul(n, m) = m' for some invertible n."""

    monoid: FiniteMonoid
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    act: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.classes)


def m_a_quotient(M: FiniteMonoid) -> MAQuotient:
    units = invertibles(M)
    class_of = [-1] * len(M)
    classes = []
    for m in M.elements:
        if class_of[m] >= 0:
            continue
        members = tuple(sorted({M.mul[n][m] for n in units}))
        for k in members:
            class_of[k] = len(classes)
        classes.append(members)
    act = tuple(
        tuple(class_of[M.mul[c[0]][k]] for k in M.elements) for c in classes
    )
    for c, row in zip(classes, act):
        for rep in c[1:]:
            if tuple(class_of[M.mul[rep][k]] for k in M.elements) != row:
                raise ValidationError("M_A action is not well defined")  # pragma: no cover
    return MAQuotient(M, tuple(classes), tuple(class_of), act)


def interpretation(flavor: str, obj: str, x_size: int):
    """I(V) or I(A) in the F-graph category of the given flavor."""
    n = x_size
    if flavor not in FLAVORS:
        raise ValidationError(f"unknown flavor {flavor!r}")
    T = nerve_theory(flavor, n)
    xn = T.x_names
    if obj == "V":
        if flavor == "hyper":
            return Hypergraph(1, (), ["v"])
        if flavor == "power":
            return PowerGraph(n, 1, (), ["v"])
        return ReflexiveFGraph(n, 1, (0,), ((0,) * n,), ["v"])
    if obj != "A":
        raise ValidationError(f"unknown object {obj!r}")
    if flavor == "hyper":
        return Hypergraph(n, (tuple(range(n)),), xn, ["⊤"])
    if flavor == "power":
        return PowerGraph(n, n, (tuple(range(n)),), xn, ["⊤"])
    M = T.monoid
    Q = m_a_quotient(M)
    fix_part = {x: Q.class_of[f] for x, f in enumerate(T.fix_elem)}
    inc = tuple(
        multiset_map(fix_part, M.maps[c[0]]) for c in Q.classes
    )
    names = ["⊤"] * len(Q)
    for x, p in fix_part.items():
        names[p] = xn[x]
    return ReflexiveFGraph(n, len(Q), tuple(fix_part.values()), inc, names)

