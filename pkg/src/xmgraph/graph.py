"""(Reflexive) (X,M)-graphs as finite presheaves, and their morphisms.

A graph stores three tables over integer cells:

* ``inc[a][x]``  the x-incidence ``a.x`` of arc ``a`` (a vertex),
* ``act[a][m]``  the m-partner ``a.m`` of arc ``a`` (an arc),
* ``loops[v]``   the distinguished loop ``v.ℓ`` (reflexive theories only).

The presheaf laws, with ``mul(a, b)`` = "a then b" on M, are::

    a.id = a            (a.m).n = a.mul(n, m)        (a.m).x = a.(x.m)
    (v.ℓ).x = v         (v.ℓ).m = v.ℓ                (a.x).ℓ = a.fix_elem[x]
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import invertibles
from .errors import CapacityError, ValidationError
from .theory import A, V, Theory

DEFAULT_BUDGET = 10_000_000

NONLOOP = "nonloop"
FIXED_LOOP = "fixed-loop"
UNFIXED_LOOP = "unfixed-loop"
DISTINGUISHED_LOOP = "distinguished-loop"


def default_budget() -> int:
    raw = os.environ.get("XMGRAPH_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True, eq=False)
class XMGraph:
    theory: Theory
    n_vertices: int
    inc: tuple[tuple[int, ...], ...]
    act: tuple[tuple[int, ...], ...]
    loops: tuple[int, ...] | None = None
    vertex_names: tuple[str, ...] = field(default=(), repr=False)
    arc_names: tuple[str, ...] = field(default=(), repr=False)

    @property
    def n_arcs(self) -> int:
        return len(self.inc)

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def arcs(self) -> range:
        return range(len(self.inc))

    @property
    def reflexive(self) -> bool:
        return self.theory.reflexive

    def size(self) -> tuple[int, int]:
        return self.n_vertices, self.n_arcs

    def key(self):
        return (self.n_vertices, self.inc, self.act, self.loops)

    def __eq__(self, other):
        if not isinstance(other, XMGraph):
            return NotImplemented
        return self.theory == other.theory and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    @cached_property
    def profile_index(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        """Incidence profile -> arcs having exactly that profile."""
        index: dict[tuple[int, ...], list[int]] = {}
        for a, prof in enumerate(self.inc):
            index.setdefault(prof, []).append(a)
        return {p: tuple(arcs) for p, arcs in index.items()}

    @cached_property
    def distinguished(self) -> frozenset[int]:
        return frozenset(self.loops or ())

    def is_loop(self, a: int) -> bool:
        return len(set(self.inc[a])) <= 1

    def vertex_name(self, v: int) -> str:
        return self.vertex_names[v] if self.vertex_names else str(v)

    def arc_name(self, a: int) -> str:
        return self.arc_names[a] if self.arc_names else str(a)

    def with_names(self, vertex_names=None, arc_names=None) -> "XMGraph":
        return XMGraph(
            self.theory, self.n_vertices, self.inc, self.act, self.loops,
            tuple(vertex_names) if vertex_names is not None else self.vertex_names,
            tuple(arc_names) if arc_names is not None else self.arc_names,
        )


def graph_violations(G: XMGraph, limit: int | None = 1) -> list[str]:
    """Check every table shape and presheaf law; return readable violations."""
    T = G.theory
    M = T.monoid
    nX, nM, nV, nA = T.n_x, T.n_m, G.n_vertices, G.n_arcs
    out: list[str] = []

    def bad(msg):
        out.append(msg)
        return limit is not None and len(out) >= limit

    if nV < 0:
        bad("negative vertex count")
        return out
    if len(G.act) != nA:
        bad(f"action table has {len(G.act)} rows for {nA} arcs")
        return out
    for a in range(nA):
        if len(G.inc[a]) != nX or any(not 0 <= v < nV for v in G.inc[a]):
            if bad(f"incidence row of arc {G.arc_name(a)} is malformed"):
                return out
        if len(G.act[a]) != nM or any(not 0 <= b < nA for b in G.act[a]):
            if bad(f"action row of arc {G.arc_name(a)} is malformed"):
                return out
    if out:
        return out
    if T.reflexive:
        if G.loops is None or len(G.loops) != nV or any(not 0 <= b < nA for b in G.loops):
            bad("reflexive graph needs a loop table over all vertices")
            return out
    elif G.loops is not None:
        bad("loop table given for a non-reflexive theory")
        return out
    for names, n, what in ((G.vertex_names, nV, "vertex"), (G.arc_names, nA, "arc")):
        if names and (len(names) != n or len(set(names)) != n):
            if bad(f"{what} names must be {n} distinct strings"):
                return out

    an, mn, xn = G.arc_name, T.m_names, T.x_names
    e = M.identity
    for a in range(nA):
        row = G.act[a]
        if row[e] != a:
            if bad(f"arc {an(a)}: {an(a)}.id = {an(row[e])}"):
                return out
        for m in range(nM):
            am = row[m]
            for n in range(nM):
                if G.act[am][n] != row[M.mul[n][m]]:
                    if bad(
                        f"action law fails at (α={an(a)}, m={mn[m]}, n={mn[n]}): "
                        f"(α.m).n = {an(G.act[am][n])} but "
                        f"α.{mn[M.mul[n][m]]} = {an(row[M.mul[n][m]])}"
                    ):
                        return out
            for x in range(nX):
                if G.inc[am][x] != G.inc[a][T.act_x(x, m)]:
                    if bad(
                        f"incidence law fails at (α={an(a)}, m={mn[m]}, x={xn[x]}): "
                        f"∂(α.m)({xn[x]}) != ∂(α)({xn[T.act_x(x, m)]})"
                    ):
                        return out
    if T.reflexive:
        for v in range(nV):
            lv = G.loops[v]
            if any(u != v for u in G.inc[lv]):
                if bad(f"distinguished loop of {G.vertex_name(v)} is not a loop at it"):
                    return out
            if any(b != lv for b in G.act[lv]):
                if bad(f"distinguished loop of {G.vertex_name(v)} is moved by M"):
                    return out
        for a in range(nA):
            for x in range(nX):
                want = G.act[a][T.fix_elem[x]]
                if G.loops[G.inc[a][x]] != want:
                    if bad(
                        f"loop law fails at (α={an(a)}, x={xn[x]}): "
                        f"(α.{xn[x]}).ℓ != α.{mn[T.fix_elem[x]]}"
                    ):
                        return out
    return out


def make_graph(theory, n_vertices, inc, act, loops=None, vertex_names=None,
               arc_names=None) -> XMGraph:
    """Build and validate a graph; raise ValidationError on the first violation."""
    G = XMGraph(
        theory,
        int(n_vertices),
        tuple(tuple(row) for row in inc),
        tuple(tuple(row) for row in act),
        tuple(loops) if loops is not None else None,
        tuple(vertex_names or ()),
        tuple(arc_names or ()),
    )
    problems = graph_violations(G)
    if problems:
        raise ValidationError(problems[0])
    return G


def representable(theory: Theory, obj: str) -> XMGraph:
    """The Yoneda presheaves V̲ = hom(-, V) and A̲ = hom(-, A)."""
    T = theory
    if obj == V:
        if T.reflexive:
            return make_graph(T, 1, [(0,) * T.n_x], [(0,) * T.n_m], [0], ["v_1"], ["a_ℓ"])
        return make_graph(T, 1, [], [], None, ["v_1"], [])
    if obj != A:
        raise ValueError(f"unknown object {obj!r}")
    M = T.monoid
    inc = [tuple(T.act_x(x, n) for x in range(T.n_x)) for n in M.elements]
    act = [tuple(M.mul[m][n] for m in M.elements) for n in M.elements]
    loops = list(T.fix_elem) if T.reflexive else None
    return make_graph(
        T, T.n_x, inc, act, loops,
        [f"v_{x}" for x in T.x_names],
        [f"a_{m}" for m in T.m_names],
    )


def empty_graph(theory: Theory) -> XMGraph:
    return make_graph(theory, 0, [], [], [] if theory.reflexive else None)


@dataclass(frozen=True)
class ArcClass:
    kind: str
    orbit: tuple[int, ...]

    @property
    def is_loop(self) -> bool:
        return self.kind != NONLOOP


def classify_arcs(G: XMGraph) -> list[ArcClass]:
    """Orbits of arcs under the invertible elements of M, labelled by kind."""
    units = invertibles(G.theory.monoid)
    seen = [False] * G.n_arcs
    out = []
    for a in G.arcs:
        if seen[a]:
            continue
        orbit = tuple(sorted({G.act[a][u] for u in units}))
        for b in orbit:
            seen[b] = True
        if not G.is_loop(a):
            kind = NONLOOP
        elif a in G.distinguished:
            kind = DISTINGUISHED_LOOP
        elif len(orbit) > 1:
            kind = UNFIXED_LOOP
        else:
            kind = FIXED_LOOP
        out.append(ArcClass(kind, orbit))
    return out


@dataclass(frozen=True)
class GraphSummary:
    vertices: int
    arcs: int
    fixed_loops: int
    distinguished_loops: int
    unfixed_loop_orbits: int
    nonloop_orbits: int
    orbit_sizes: dict = field(default_factory=dict)
    per_vertex: dict = field(default_factory=dict)


def summarize(G: XMGraph) -> GraphSummary:
    classes = classify_arcs(G)
    kinds = Counter(c.kind for c in classes)
    sizes = Counter((c.kind, len(c.orbit)) for c in classes)
    per_vertex: dict[int, Counter] = {v: Counter() for v in G.vertices}
    for c in classes:
        if c.is_loop and G.theory.n_x:
            per_vertex[G.inc[c.orbit[0]][0]][c.kind] += 1
    return GraphSummary(
        vertices=G.n_vertices,
        arcs=G.n_arcs,
        fixed_loops=kinds[FIXED_LOOP] + kinds[DISTINGUISHED_LOOP],
        distinguished_loops=kinds[DISTINGUISHED_LOOP],
        unfixed_loop_orbits=kinds[UNFIXED_LOOP],
        nonloop_orbits=kinds[NONLOOP],
        orbit_sizes=dict(sorted(sizes.items())),
        per_vertex={v: dict(sorted(c.items())) for v, c in per_vertex.items()},
    )


@dataclass(frozen=True, eq=False)
class GraphMorphism:
    src: XMGraph
    dst: XMGraph
    fv: tuple[int, ...]
    fa: tuple[int, ...]

    def key(self):
        return (self.fv, self.fa)

    def __eq__(self, other):
        if not isinstance(other, GraphMorphism):
            return NotImplemented
        return self.src == other.src and self.dst == other.dst and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    @property
    def is_bijective(self) -> bool:
        return (
            sorted(self.fv) == list(self.dst.vertices)
            and sorted(self.fa) == list(self.dst.arcs)
        )


def morphism_violations(src: XMGraph, dst: XMGraph, fv, fa) -> list[str]:
    if src.theory != dst.theory:
        return ["source and target are over different theories"]
    T = src.theory
    if len(fv) != src.n_vertices or any(not 0 <= w < dst.n_vertices for w in fv):
        return ["vertex table has the wrong shape"]
    if len(fa) != src.n_arcs or any(not 0 <= b < dst.n_arcs for b in fa):
        return ["arc table has the wrong shape"]
    for a in src.arcs:
        b = fa[a]
        for x in range(T.n_x):
            if fv[src.inc[a][x]] != dst.inc[b][x]:
                return [f"incidence not preserved at (α={src.arc_name(a)}, x={T.x_names[x]})"]
        for m in range(T.n_m):
            if fa[src.act[a][m]] != dst.act[b][m]:
                return [f"action not preserved at (α={src.arc_name(a)}, m={T.m_names[m]})"]
    if T.reflexive:
        for v in src.vertices:
            if fa[src.loops[v]] != dst.loops[fv[v]]:
                return [f"distinguished loop of {src.vertex_name(v)} not preserved"]
    return []


def is_morphism(src, dst, fv, fa) -> bool:
    return not morphism_violations(src, dst, fv, fa)


def make_morphism(src: XMGraph, dst: XMGraph, fv, fa) -> GraphMorphism:
    fv, fa = tuple(fv), tuple(fa)
    problems = morphism_violations(src, dst, fv, fa)
    if problems:
        raise ValidationError(problems[0])
    return GraphMorphism(src, dst, fv, fa)


def identity_morphism(G: XMGraph) -> GraphMorphism:
    return GraphMorphism(G, G, tuple(G.vertices), tuple(G.arcs))


def compose_morphisms(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """``f ∘ g``: first g, then f."""
    if g.dst != f.src:
        raise ValidationError("cannot compose: target of the first is not the source of the second")
    return GraphMorphism(
        g.src, f.dst,
        tuple(f.fv[w] for w in g.fv),
        tuple(f.fa[b] for b in g.fa),
    )


class _Budget:
    __slots__ = ("left", "limit")

    def __init__(self, limit):
        self.limit = limit
        self.left = limit

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise CapacityError(f"hom search exceeded its budget of {self.limit} nodes")


def iter_homs(G: XMGraph, H: XMGraph, budget: int | None = None, injective: bool = False):
    """Yield all morphisms G -> H in lexicographic order of (fv, fa).

    Vertex images are chosen first; each arc check fires as soon as its last
    incident vertex is placed.  Arc images are then chosen orbit by orbit:
    fixing the image of ``a`` forces the image of every ``a.m``.  With
    ``injective`` only monomorphisms are produced.
    """
    if G.theory != H.theory:
        raise ValidationError("hom search between graphs over different theories")
    T = G.theory
    nM = T.n_m
    bud = _Budget(default_budget() if budget is None else budget)
    profiles = H.profile_index

    check_at: list[list[int]] = [[] for _ in G.vertices]
    for a in G.arcs:
        if G.inc[a]:
            check_at[max(G.inc[a])].append(a)
        elif not H.n_arcs:
            return
    fv = [0] * G.n_vertices
    fa = [-1] * G.n_arcs
    used_v = [False] * H.n_vertices
    used_a = [False] * H.n_arcs
    Gact, Hact = G.act, H.act

    def set_arc(a2, b2, trail):
        if injective:
            if used_a[b2]:
                return False
            used_a[b2] = True
        fa[a2] = b2
        trail.append(a2)
        return True

    def undo(trail):
        for c in trail:
            if injective:
                used_a[fa[c]] = False
            fa[c] = -1

    def place(a, b, trail):
        for m in range(nM):
            a2, b2 = Gact[a][m], Hact[b][m]
            cur = fa[a2]
            if cur == -1:
                if not set_arc(a2, b2, trail):
                    return False
            elif cur != b2:
                return False
        return True

    def arcs_from(a):
        while a < G.n_arcs and fa[a] != -1:
            a += 1
        if a == G.n_arcs:
            yield GraphMorphism(G, H, tuple(fv), tuple(fa))
            return
        prof = tuple(fv[v] for v in G.inc[a])
        for b in profiles.get(prof, ()):
            bud.tick()
            trail: list[int] = []
            if place(a, b, trail):
                yield from arcs_from(a + 1)
            undo(trail)

    def start_arcs():
        if T.reflexive:
            trail: list[int] = []
            ok = True
            for v in G.vertices:
                lv, target = G.loops[v], H.loops[fv[v]]
                if fa[lv] == -1:
                    if not set_arc(lv, target, trail):
                        ok = False
                        break
                elif fa[lv] != target:
                    ok = False
                    break
            if ok:
                yield from arcs_from(0)
            undo(trail)
        else:
            yield from arcs_from(0)

    def vertices_from(i):
        if i == G.n_vertices:
            yield from start_arcs()
            return
        for w in range(H.n_vertices):
            if injective and used_v[w]:
                continue
            bud.tick()
            fv[i] = w
            if all(tuple(fv[u] for u in G.inc[a]) in profiles for a in check_at[i]):
                used_v[w] = True
                yield from vertices_from(i + 1)
                used_v[w] = False

    yield from vertices_from(0)


def enumerate_homs(G: XMGraph, H: XMGraph, budget: int | None = None) -> list[GraphMorphism]:
    return list(iter_homs(G, H, budget))


def count_homs(G: XMGraph, H: XMGraph, budget: int | None = None) -> int:
    return sum(1 for _ in iter_homs(G, H, budget))


def brute_force_homs(G: XMGraph, H: XMGraph) -> list[GraphMorphism]:
    """Every (fv, fa) table pair filtered by the morphism laws; tiny inputs only."""
    out = []
    for fv in itertools.product(H.vertices, repeat=G.n_vertices):
        for fa in itertools.product(H.arcs, repeat=G.n_arcs):
            if is_morphism(G, H, fv, fa):
                out.append(GraphMorphism(G, H, tuple(fv), tuple(fa)))
    return out


def find_isomorphism(G: XMGraph, H: XMGraph, budget: int | None = None) -> GraphMorphism | None:
    if G.size() != H.size() or G.theory != H.theory:
        return None
    for f in iter_homs(G, H, budget, injective=True):
        return f
    return None
