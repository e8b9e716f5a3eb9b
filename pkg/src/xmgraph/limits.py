"""Finite limits and colimits of (X,M)-graphs, computed pointwise."""

from __future__ import annotations

from .errors import ValidationError
from .graph import GraphMorphism, XMGraph, empty_graph, make_graph
from .theory import Theory


def _same_theory(*graphs):
    t = graphs[0].theory
    if any(g.theory != t for g in graphs[1:]):
        raise ValidationError("graphs are over different theories")
    return t


def terminal(theory: Theory) -> XMGraph:
    """One vertex and one loop fixed by all of M (distinguished when reflexive)."""
    return make_graph(
        theory, 1, [(0,) * theory.n_x], [(0,) * theory.n_m],
        [0] if theory.reflexive else None, ["*"], ["*"],
    )


def initial(theory: Theory) -> XMGraph:
    return empty_graph(theory)


def terminal_morphism(G: XMGraph) -> GraphMorphism:
    one = terminal(G.theory)
    return GraphMorphism(G, one, (0,) * G.n_vertices, (0,) * G.n_arcs)


def product(G: XMGraph, H: XMGraph):
    """G × H with its two projections; cell (g, h) has index g * |H| + h."""
    T = _same_theory(G, H)
    nv, na = H.n_vertices, H.n_arcs
    inc = [
        tuple(G.inc[a][x] * nv + H.inc[b][x] for x in range(T.n_x))
        for a in G.arcs for b in H.arcs
    ]
    act = [
        tuple(G.act[a][m] * na + H.act[b][m] for m in range(T.n_m))
        for a in G.arcs for b in H.arcs
    ]
    loops = None
    if T.reflexive:
        loops = [G.loops[v] * na + H.loops[w] for v in G.vertices for w in H.vertices]
    P = make_graph(
        T, G.n_vertices * nv, inc, act, loops,
        [f"({G.vertex_name(v)},{H.vertex_name(w)})" for v in G.vertices for w in H.vertices],
        [f"({G.arc_name(a)},{H.arc_name(b)})" for a in G.arcs for b in H.arcs],
    )
    p1 = GraphMorphism(
        P, G,
        tuple(v for v in G.vertices for _ in H.vertices),
        tuple(a for a in G.arcs for _ in H.arcs),
    )
    p2 = GraphMorphism(
        P, H,
        tuple(w for _ in G.vertices for w in H.vertices),
        tuple(b for _ in G.arcs for b in H.arcs),
    )
    return P, (p1, p2)


def product_morphism(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """f × g : A × B -> C × D."""
    src, _ = product(f.src, g.src)
    dst, _ = product(f.dst, g.dst)
    nv, na = g.dst.n_vertices, g.dst.n_arcs
    return GraphMorphism(
        src, dst,
        tuple(f.fv[v] * nv + g.fv[w] for v in f.src.vertices for w in g.src.vertices),
        tuple(f.fa[a] * na + g.fa[b] for a in f.src.arcs for b in g.src.arcs),
    )


def pairing(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """The mediating map <f, g> : S -> C × D."""
    if f.src != g.src:
        raise ValidationError("pairing needs a common source")
    dst, _ = product(f.dst, g.dst)
    nv, na = g.dst.n_vertices, g.dst.n_arcs
    return GraphMorphism(
        f.src, dst,
        tuple(f.fv[v] * nv + g.fv[v] for v in f.src.vertices),
        tuple(f.fa[a] * na + g.fa[a] for a in f.src.arcs),
    )


def _disjoint_names(left, right):
    if set(left) & set(right):
        return [f"{n}.1" for n in left] + [f"{n}.2" for n in right]
    return list(left) + list(right)


def coproduct(G: XMGraph, H: XMGraph):
    """G ⊔ H with its injections; H's cells follow G's."""
    T = _same_theory(G, H)
    dv, da = G.n_vertices, G.n_arcs
    inc = list(G.inc) + [tuple(v + dv for v in row) for row in H.inc]
    act = list(G.act) + [tuple(b + da for b in row) for row in H.act]
    loops = None
    if T.reflexive:
        loops = list(G.loops) + [b + da for b in H.loops]
    S = make_graph(
        T, dv + H.n_vertices, inc, act, loops,
        _disjoint_names([G.vertex_name(v) for v in G.vertices],
                        [H.vertex_name(v) for v in H.vertices]),
        _disjoint_names([G.arc_name(a) for a in G.arcs], [H.arc_name(a) for a in H.arcs]),
    )
    i1 = GraphMorphism(G, S, tuple(G.vertices), tuple(G.arcs))
    i2 = GraphMorphism(
        H, S, tuple(v + dv for v in H.vertices), tuple(a + da for a in H.arcs)
    )
    return S, (i1, i2)


def copairing(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """The mediating map [f, g] : A ⊔ B -> C."""
    if f.dst != g.dst:
        raise ValidationError("copairing needs a common target")
    S, _ = coproduct(f.src, g.src)
    return GraphMorphism(S, f.dst, f.fv + g.fv, f.fa + g.fa)


def _parallel(f: GraphMorphism, g: GraphMorphism):
    if f.src != g.src or f.dst != g.dst:
        raise ValidationError("equalizer/coequalizer need a parallel pair")


def equalizer(f: GraphMorphism, g: GraphMorphism):
    """The subgraph where f and g agree, with its inclusion."""
    _parallel(f, g)
    G = f.src
    T = G.theory
    verts = [v for v in G.vertices if f.fv[v] == g.fv[v]]
    arcs = [a for a in G.arcs if f.fa[a] == g.fa[a]]
    vpos = {v: i for i, v in enumerate(verts)}
    apos = {a: i for i, a in enumerate(arcs)}
    E = make_graph(
        T, len(verts),
        [tuple(vpos[v] for v in G.inc[a]) for a in arcs],
        [tuple(apos[b] for b in G.act[a]) for a in arcs],
        [apos[G.loops[v]] for v in verts] if T.reflexive else None,
        [G.vertex_name(v) for v in verts],
        [G.arc_name(a) for a in arcs],
    )
    return E, GraphMorphism(E, G, tuple(verts), tuple(arcs))


class UnionFind:
    """Union-find keeping the least element of each class as its root."""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True

    def classes(self):
        """Classes in order of their least element, each sorted."""
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return [groups[r] for r in sorted(groups)]


def congruence_closure(G: XMGraph, vertex_pairs, arc_pairs):
    """Least congruence on G containing the given pairs.

    Closed under the M-action, incidence and (reflexive) the ℓ-action.
    Returns the vertex and arc union-find structures.
    """
    T = G.theory
    uv, ua = UnionFind(G.n_vertices), UnionFind(G.n_arcs)
    for v, w in vertex_pairs:
        uv.union(v, w)
    for a, b in arc_pairs:
        ua.union(a, b)
    changed = True
    while changed:
        changed = False
        for a in G.arcs:
            r = ua.find(a)
            if r == a:
                continue
            for m in range(T.n_m):
                changed |= ua.union(G.act[a][m], G.act[r][m])
            for x in range(T.n_x):
                changed |= uv.union(G.inc[a][x], G.inc[r][x])
        if T.reflexive:
            for v in G.vertices:
                r = uv.find(v)
                if r != v:
                    changed |= ua.union(G.loops[v], G.loops[r])
    return uv, ua


def quotient(G: XMGraph, uv: UnionFind, ua: UnionFind):
    """The quotient graph by a congruence, with the quotient map."""
    T = G.theory
    vclasses, aclasses = uv.classes(), ua.classes()
    vcls = {v: i for i, c in enumerate(vclasses) for v in c}
    acls = {a: i for i, c in enumerate(aclasses) for a in c}
    inc = [tuple(vcls[G.inc[c[0]][x]] for x in range(T.n_x)) for c in aclasses]
    act = [tuple(acls[G.act[c[0]][m]] for m in range(T.n_m)) for c in aclasses]
    loops = [acls[G.loops[c[0]]] for c in vclasses] if T.reflexive else None
    Q = make_graph(
        T, len(vclasses), inc, act, loops,
        [G.vertex_name(c[0]) for c in vclasses],
        [G.arc_name(c[0]) for c in aclasses],
    )
    q = GraphMorphism(
        G, Q,
        tuple(vcls[v] for v in G.vertices),
        tuple(acls[a] for a in G.arcs),
    )
    return Q, q


def coequalizer(f: GraphMorphism, g: GraphMorphism):
    """Quotient of the common target by the congruence generated by f ~ g."""
    _parallel(f, g)
    H = f.dst
    uv, ua = congruence_closure(
        H,
        [(f.fv[v], g.fv[v]) for v in f.src.vertices],
        [(f.fa[a], g.fa[a]) for a in f.src.arcs],
    )
    return quotient(H, uv, ua)
