"""Hypergraphs, power graphs and reflexive power graphs as F-graphs.

All three store incidence over integer vertices.  Hypergraph edges are
sorted tuples of distinct vertices (a subset), power-graph edges are sorted
tuples with repetition (a multiset of fixed size), and a reflexive F-graph
keeps one table of parts, some of which are vertices with degenerate
incidence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import CapacityError, ValidationError
from ..graph import default_budget
from ..limits import UnionFind


def _names(given, n, prefix):
    given = tuple(given or ())
    if given and len(given) != n:
        raise ValidationError(f"expected {n} {prefix} names, got {len(given)}")
    return given


@dataclass(frozen=True)
class Hypergraph:
    n_vertices: int
    edges: tuple[tuple[int, ...], ...]
    vertex_names: tuple[str, ...] = field(default=(), compare=False, repr=False)
    edge_names: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        edges = []
        for i, e in enumerate(self.edges):
            if any(not 0 <= v < self.n_vertices for v in e):
                raise ValidationError(f"hypergraph edge {i} uses an undeclared vertex")
            edges.append(tuple(sorted(set(e))))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "vertex_names", _names(self.vertex_names, self.n_vertices, "vertex"))
        object.__setattr__(self, "edge_names", _names(self.edge_names, len(edges), "edge"))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def vertex_name(self, v):
        return self.vertex_names[v] if self.vertex_names else str(v)

    def edge_name(self, e):
        return self.edge_names[e] if self.edge_names else f"e{e}"


@dataclass(frozen=True)
class PowerGraph:
    arity: int
    n_vertices: int
    edges: tuple[tuple[int, ...], ...]
    vertex_names: tuple[str, ...] = field(default=(), compare=False, repr=False)
    edge_names: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        edges = []
        for i, e in enumerate(self.edges):
            if len(e) != self.arity:
                raise ValidationError(
                    f"power-graph edge {i} has {len(e)} incidences, expected {self.arity}"
                )
            if any(not 0 <= v < self.n_vertices for v in e):
                raise ValidationError(f"power-graph edge {i} uses an undeclared vertex")
            edges.append(tuple(sorted(e)))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "vertex_names", _names(self.vertex_names, self.n_vertices, "vertex"))
        object.__setattr__(self, "edge_names", _names(self.edge_names, len(edges), "edge"))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def vertex_name(self, v):
        return self.vertex_names[v] if self.vertex_names else str(v)

    def edge_name(self, e):
        return self.edge_names[e] if self.edge_names else f"e{e}"


@dataclass(frozen=True)
class ReflexiveFGraph:
    """Parts with a vertex subset; ``inc[p]`` is a multiset of vertex parts."""

    arity: int
    n_parts: int
    vertices: tuple[int, ...]
    inc: tuple[tuple[int, ...], ...]
    part_names: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if any(not 0 <= v < self.n_parts for v in verts):
            raise ValidationError("vertex subset names an undeclared part")
        if len(self.inc) != self.n_parts:
            raise ValidationError(f"incidence table needs {self.n_parts} rows")
        vset = set(verts)
        inc = []
        for p, row in enumerate(self.inc):
            if len(row) != self.arity:
                raise ValidationError(
                    f"part {p} has {len(row)} incidences, expected {self.arity}"
                )
            if any(u not in vset for u in row):
                raise ValidationError(f"part {p} is incident to a non-vertex part")
            inc.append(tuple(sorted(row)))
        for v in verts:
            if inc[v] != (v,) * self.arity:
                raise ValidationError(f"vertex part {v} must have degenerate incidence")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "inc", tuple(inc))
        object.__setattr__(self, "part_names", _names(self.part_names, self.n_parts, "part"))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def parts(self) -> range:
        return range(self.n_parts)

    @property
    def edges(self) -> tuple[int, ...]:
        vset = set(self.vertices)
        return tuple(p for p in self.parts if p not in vset)

    def part_name(self, p):
        return self.part_names[p] if self.part_names else str(p)


FGraph = Hypergraph | PowerGraph | ReflexiveFGraph


def flavor_of(obj) -> str:
    if isinstance(obj, Hypergraph):
        return "hyper"
    if isinstance(obj, PowerGraph):
        return "power"
    if isinstance(obj, ReflexiveFGraph):
        return "rpower"
    raise TypeError(f"not an F-graph: {type(obj).__name__}")


def uniformity_profile(H: Hypergraph) -> dict[int, int]:
    """Edge -> number of incident vertices."""
    return {e: len(vs) for e, vs in enumerate(H.edges)}


def is_k_uniform(H: Hypergraph, k: int) -> bool:
    return all(c == k for c in uniformity_profile(H).values())


def multiset_power(n_items: int, size: int) -> list[tuple[int, ...]]:
    """All multisets of the given size over range(n_items), as sorted tuples."""
    return list(itertools.combinations_with_replacement(range(n_items), size))


def multiset_map(f, ms) -> tuple[int, ...]:
    """The induced map on multisets: apply f pointwise and re-sort."""
    return tuple(sorted(f[v] for v in ms))


def subset_map(f, s) -> tuple[int, ...]:
    return tuple(sorted({f[v] for v in s}))


@dataclass(frozen=True)
class FMorphism:
    """Vertex and edge maps between hypergraphs or power graphs.

    For reflexive F-graphs ``fe`` is the map on all parts and ``fv`` its
    restriction to vertex parts (given as part indices).
    """

    src: object
    dst: object
    fv: tuple[int, ...]
    fe: tuple[int, ...]

    def key(self):
        return (self.fv, self.fe)

    @property
    def is_bijective(self) -> bool:
        if isinstance(self.src, ReflexiveFGraph):
            return (
                sorted(self.fe) == list(self.dst.parts)
                and sorted(self.fv) == list(self.dst.vertices)
            )
        return (
            sorted(self.fv) == list(range(self.dst.n_vertices))
            and sorted(self.fe) == list(range(self.dst.n_edges))
        )


def fmorphism_violations(src, dst, fv, fe) -> list[str]:
    if flavor_of(src) != flavor_of(dst):
        return ["source and target are different kinds of F-graph"]
    if isinstance(src, ReflexiveFGraph):
        if src.arity != dst.arity:
            return ["arity mismatch"]
        if len(fe) != src.n_parts or any(not 0 <= q < dst.n_parts for q in fe):
            return ["parts table has the wrong shape"]
        out = []
        dverts = set(dst.vertices)
        for v in src.vertices:
            if fe[v] not in dverts:
                out.append(f"vertex part {src.part_name(v)} maps to a non-vertex")
        if out:
            return out
        for p in src.parts:
            if dst.inc[fe[p]] != multiset_map(fe, src.inc[p]):
                out.append(f"incidence of part {src.part_name(p)} is not preserved")
        return out
    if isinstance(src, PowerGraph) and src.arity != dst.arity:
        return ["arity mismatch"]
    if len(fv) != src.n_vertices or any(not 0 <= w < dst.n_vertices for w in fv):
        return ["vertex table has the wrong shape"]
    if len(fe) != src.n_edges or any(not 0 <= e < dst.n_edges for e in fe):
        return ["edge table has the wrong shape"]
    image = subset_map if isinstance(src, Hypergraph) else multiset_map
    return [
        f"incidence of edge {src.edge_name(e)} is not preserved"
        for e in range(src.n_edges)
        if dst.edges[fe[e]] != image(fv, src.edges[e])
    ]


def make_fmorphism(src, dst, fv, fe) -> FMorphism:
    fe = tuple(fe)
    if isinstance(src, ReflexiveFGraph):
        fv = tuple(fe[v] for v in src.vertices)
    problems = fmorphism_violations(src, dst, tuple(fv), fe)
    if problems:
        raise ValidationError(problems[0])
    return FMorphism(src, dst, tuple(fv), fe)


def identity_fmorphism(G) -> FMorphism:
    if isinstance(G, ReflexiveFGraph):
        return FMorphism(G, G, G.vertices, tuple(G.parts))
    return FMorphism(G, G, tuple(range(G.n_vertices)), tuple(range(G.n_edges)))


def compose_fmorphisms(f: FMorphism, g: FMorphism) -> FMorphism:
    """f ∘ g."""
    fe = tuple(f.fe[e] for e in g.fe)
    if isinstance(g.src, ReflexiveFGraph):
        return FMorphism(g.src, f.dst, tuple(fe[v] for v in g.src.vertices), fe)
    return FMorphism(g.src, f.dst, tuple(f.fv[v] for v in g.fv), fe)


def fgraph_homs(src, dst, budget: int | None = None) -> list[FMorphism]:
    """Every morphism src -> dst, in lexicographic order of (fv, fe).

    Vertex maps are enumerated outright; each edge then has a fixed set of
    admissible targets, and the result is their product.
    """
    if flavor_of(src) != flavor_of(dst):
        raise ValidationError("fgraph_homs needs two F-graphs of the same kind")
    limit = default_budget() if budget is None else budget
    nodes = 0

    def tick(k=1):
        nonlocal nodes
        nodes += k
        if nodes > limit:
            raise CapacityError(f"hom search exceeded its budget of {limit} nodes")

    out = []
    if isinstance(src, ReflexiveFGraph):
        if src.arity != dst.arity:
            return []
        by_inc: dict[tuple, list[int]] = {}
        for q in dst.parts:
            by_inc.setdefault(dst.inc[q], []).append(q)
        edges = src.edges
        for vmap in itertools.product(dst.vertices, repeat=src.n_vertices):
            tick()
            fp = [0] * src.n_parts
            for v, w in zip(src.vertices, vmap):
                fp[v] = w
            options = [by_inc.get(multiset_map(fp, src.inc[p]), []) for p in edges]
            for choice in itertools.product(*options):
                tick()
                for p, q in zip(edges, choice):
                    fp[p] = q
                out.append(FMorphism(src, dst, tuple(vmap), tuple(fp)))
        out.sort(key=lambda h: h.fe)
        return out

    if isinstance(src, PowerGraph):
        if src.arity != dst.arity:
            return []
        image = multiset_map
    else:
        image = subset_map
    by_inc = {}
    for e, vs in enumerate(dst.edges):
        by_inc.setdefault(vs, []).append(e)
    for fv in itertools.product(range(dst.n_vertices), repeat=src.n_vertices):
        tick()
        options = [by_inc.get(image(fv, vs), []) for vs in src.edges]
        for fe in itertools.product(*options):
            tick()
            out.append(FMorphism(src, dst, tuple(fv), tuple(fe)))
    return out


def rf_coproduct(R1: ReflexiveFGraph, R2: ReflexiveFGraph):
    """Disjoint union of parts; returns (S, (i1, i2))."""
    if R1.arity != R2.arity:
        raise ValidationError("coproduct needs equal arities")
    d = R1.n_parts
    names = ()
    if R1.part_names or R2.part_names:
        names = [R1.part_name(p) + ".1" for p in R1.parts]
        names += [R2.part_name(p) + ".2" for p in R2.parts]
    S = ReflexiveFGraph(
        R1.arity, d + R2.n_parts,
        R1.vertices + tuple(v + d for v in R2.vertices),
        R1.inc + tuple(tuple(u + d for u in row) for row in R2.inc),
        names,
    )
    i1 = FMorphism(R1, S, R1.vertices, tuple(R1.parts))
    i2 = FMorphism(R2, S, tuple(v + d for v in R2.vertices), tuple(p + d for p in R2.parts))
    return S, (i1, i2)


def rf_coequalizer(f: FMorphism, g: FMorphism):
    """Quotient of the common target by f(p) ~ g(p); returns (Q, q)."""
    if f.src != g.src or f.dst != g.dst:
        raise ValidationError("coequalizer needs a parallel pair")
    H = f.dst
    uf = UnionFind(H.n_parts)
    for p in f.src.parts:
        uf.union(f.fe[p], g.fe[p])
    classes = uf.classes()
    cls = {p: i for i, c in enumerate(classes) for p in c}
    hverts = set(H.vertices)
    verts = [i for i, c in enumerate(classes) if hverts & set(c)]
    inc = []
    for c in classes:
        rows = {multiset_map(cls, H.inc[p]) for p in c}
        if len(rows) != 1:
            raise ValidationError("identified parts have incompatible incidences")
        inc.append(rows.pop())
    names = [H.part_name(c[0]) for c in classes] if H.part_names else ()
    Q = ReflexiveFGraph(H.arity, len(classes), tuple(verts), tuple(inc), names)
    q = FMorphism(H, Q, tuple(cls[v] for v in H.vertices), tuple(cls[p] for p in H.parts))
    return Q, q
