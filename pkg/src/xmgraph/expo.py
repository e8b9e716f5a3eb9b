"""Exponential objects G^H, evaluation, and the currying bijection.

Two constructions are provided:

``pairs``
    Arcs are pairs ``((f_x)_{x∈X}, g)`` with ``g(α).x = f_x(α.x)``.  Valid when
    every element of M is invertible or (reflexive theories) lies in Fix(M),
    which covers the oriented, symmetric and reflexive oriented/symmetric
    theories.  Arcs of ``A̲ × H`` are then all reachable from ``(a_1, α)``.

``yoneda``
    Arcs are the morphisms ``A̲ × H -> G`` and vertices the morphisms
    ``V̲ × H -> G``, with actions by precomposition.  Works for any theory and
    doubles as an oracle for the first construction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .algebra import invertibles
from .errors import CapacityError, ValidationError
from .graph import (
    GraphMorphism,
    XMGraph,
    compose_morphisms,
    default_budget,
    identity_morphism,
    iter_homs,
    make_graph,
    make_morphism,
    representable,
)
from .limits import product, product_morphism
from .theory import A, V, Theory

DEFAULT_LIMIT = 1_000_000


@dataclass(frozen=True)
class ExponentialArc:
    """``family[x]`` indexes a vertex of G^H; ``g`` maps arcs of H to arcs of G."""

    family: tuple[int, ...]
    g: tuple[int, ...]


@dataclass(frozen=True)
class MatchProfile:
    """An assignment X -> G(V)."""

    targets: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Exponential:
    base: XMGraph
    exponent: XMGraph
    graph: XMGraph
    vertex_maps: tuple[tuple[int, ...], ...]
    vertex_homs: tuple[GraphMorphism, ...] | None
    arcs: tuple[ExponentialArc, ...]
    method: str
    arc_morphisms: tuple[GraphMorphism, ...] | None = field(default=None, repr=False)

    def vertex_index(self) -> dict:
        if self.vertex_homs is not None:
            return {k.key(): i for i, k in enumerate(self.vertex_homs)}
        return {fv: i for i, fv in enumerate(self.vertex_maps)}

    def arc_index(self) -> dict:
        if self.method == "pairs":
            return {(a.family, a.g): i for i, a in enumerate(self.arcs)}
        return {F.key(): i for i, F in enumerate(self.arc_morphisms)}

    def family_maps(self, arc: int) -> list:
        """The family (f_x) of an arc as vertex tables (or morphisms, reflexively)."""
        fam = self.arcs[arc].family
        if self.vertex_homs is not None:
            return [self.vertex_homs[k] for k in fam]
        return [self.vertex_maps[k] for k in fam]


def pair_construction_applies(theory: Theory) -> bool:
    M = theory.monoid
    reachable = set(invertibles(M))
    if theory.reflexive:
        reachable |= set(theory.fix_elem)
    return len(reachable) == len(M)


def matching_arcs(G: XMGraph, p) -> tuple[int, ...]:
    """Arcs β of G with β.x = p(x) for every x."""
    targets = tuple(p.targets if isinstance(p, MatchProfile) else p)
    return tuple(b for b in G.arcs if G.inc[b] == targets)


def _guard(count: int, limit: int, what: str):
    if count > limit:
        raise CapacityError(f"exponential would have {count} {what}; limit is {limit}")


def _vertices(G: XMGraph, H: XMGraph, limit: int):
    if G.theory.reflexive:
        homs = []
        for k in iter_homs(H, G, max(default_budget(), limit)):
            homs.append(k)
            _guard(len(homs), limit, "vertices")
        return tuple(k.fv for k in homs), tuple(homs)
    _guard(G.n_vertices ** H.n_vertices, limit, "vertices")
    maps = tuple(itertools.product(G.vertices, repeat=H.n_vertices))
    return maps, None


def exponential(G: XMGraph, H: XMGraph, limit: int | None = None, method: str = "auto") -> Exponential:
    """The exponential G^H with its arc data retained."""
    if G.theory != H.theory:
        raise ValidationError("exponential of graphs over different theories")
    limit = DEFAULT_LIMIT if limit is None else limit
    if method == "auto":
        method = "pairs" if pair_construction_applies(G.theory) else "yoneda"
    if method == "pairs":
        if not pair_construction_applies(G.theory):
            raise ValidationError(
                "pair construction needs every monoid element to be invertible "
                "or (reflexive) fixed; use method='yoneda'"
            )
        return _exponential_pairs(G, H, limit)
    if method == "yoneda":
        return _exponential_yoneda(G, H, limit)
    raise ValueError(f"unknown method {method!r}")


def _exponential_pairs(G: XMGraph, H: XMGraph, limit: int) -> Exponential:
    T = G.theory
    M = T.monoid
    nX = T.n_x
    maps, homs = _vertices(G, H, limit)
    nvert = len(maps)
    _guard(nvert ** nX, limit, "arc families")

    arcs: list[ExponentialArc] = []
    profiles = G.profile_index
    for family in itertools.product(range(nvert), repeat=nX):
        fx = [maps[k] for k in family]
        choices = []
        for alpha in H.arcs:
            prof = tuple(fx[x][H.inc[alpha][x]] for x in range(nX))
            cands = profiles.get(prof)
            if not cands:
                break
            choices.append(cands)
        else:
            _guard(len(arcs) + math.prod(len(c) for c in choices), limit, "arcs")
            arcs.extend(ExponentialArc(family, g) for g in itertools.product(*choices))

    index = {(a.family, a.g): i for i, a in enumerate(arcs)}
    loops = None
    if T.reflexive:
        loops = [index[((k,) * nX, homs[k].fa)] for k in range(nvert)]
    inverse = M.inverses
    fix_pos = {m: x for x, m in enumerate(T.fix_elem)}

    act = []
    for arc in arcs:
        row = []
        for m in M.elements:
            if m in inverse:
                inv = inverse[m]
                fam = tuple(arc.family[T.act_x(x, m)] for x in range(nX))
                g = tuple(G.act[arc.g[H.act[alpha][inv]]][m] for alpha in H.arcs)
                row.append(index[(fam, g)])
            else:
                # m names x in Fix(M): a.m = (a.x).ℓ
                row.append(loops[arc.family[fix_pos[m]]])
        act.append(tuple(row))

    graph = make_graph(
        T, nvert, [a.family for a in arcs], act, loops,
        _vertex_names(G, H, maps, homs),
        _distinct([_arc_name(G, a) for a in arcs], "e"),
    )
    return Exponential(G, H, graph, maps, homs, tuple(arcs), "pairs")


def _distinct(names, prefix):
    names = list(names)
    if len(set(names)) == len(names):
        return names
    return [f"{prefix}{i}" for i in range(len(names))]


def _vertex_names(G, H, maps, homs):
    if homs is not None and H.n_arcs:
        names = ["<" + ",".join(G.arc_name(b) for b in k.fa) + ">" for k in homs]
    else:
        names = ["<" + ",".join(G.vertex_name(w) for w in fv) + ">" for fv in maps]
    return _distinct(names, "k")


def _arc_name(G, arc):
    fam = ",".join(str(k) for k in arc.family)
    g = ",".join(G.arc_name(b) for b in arc.g)
    return f"({fam}|{g})"


def _exponential_yoneda(G: XMGraph, H: XMGraph, limit: int) -> Exponential:
    T = G.theory
    M = T.monoid
    nX = T.n_x
    budget = max(default_budget(), limit)
    AH, _ = product(representable(T, A), H)
    VH, _ = product(representable(T, V), H)
    nvH, naH = H.n_vertices, H.n_arcs

    verts = []
    for k in iter_homs(VH, G, budget):
        verts.append(k)
        _guard(len(verts), limit, "vertices")
    homs = None
    if T.reflexive:
        homs = tuple(GraphMorphism(H, G, k.fv, k.fa) for k in verts)
    maps = tuple(k.fv for k in verts)
    vindex = {k.key(): i for i, k in enumerate(verts)}

    arcs_F = []
    for F in iter_homs(AH, G, budget):
        arcs_F.append(F)
        _guard(len(arcs_F), limit, "arcs")
    aindex = {F.key(): i for i, F in enumerate(arcs_F)}

    def at_x(F, x):
        fv = tuple(F.fv[x * nvH + w] for w in H.vertices)
        fa = ()
        if T.reflexive:
            fa = tuple(F.fa[T.fix_elem[x] * naH + b] for b in H.arcs)
        return vindex[(fv, fa)]

    def along(F, m):
        fv = tuple(
            F.fv[T.act_x(x, m) * nvH + w] for x in range(nX) for w in H.vertices
        )
        fa = tuple(F.fa[M.mul[n][m] * naH + b] for n in M.elements for b in H.arcs)
        return aindex[(fv, fa)]

    inc = [tuple(at_x(F, x) for x in range(nX)) for F in arcs_F]
    act = [tuple(along(F, m) for m in M.elements) for F in arcs_F]
    loops = None
    if T.reflexive:
        loops = []
        for k in homs:
            fv = tuple(k.fv[w] for x in range(nX) for w in H.vertices)
            fa = tuple(k.fa[b] for n in M.elements for b in H.arcs)
            loops.append(aindex[(fv, fa)])
    e = M.identity
    arcs = tuple(
        ExponentialArc(inc[i], tuple(F.fa[e * naH + b] for b in H.arcs))
        for i, F in enumerate(arcs_F)
    )
    graph = make_graph(
        T, len(verts), inc, act, loops,
        _vertex_names(G, H, maps, homs),
        [_arc_name(G, a) + f"#{i}" for i, a in enumerate(arcs)],
    )
    return Exponential(G, H, graph, maps, homs, arcs, "yoneda", tuple(arcs_F))


def arc_is_compatible(E: Exponential, i: int) -> bool:
    """g(α).x = f_x(α.x) for every α in H(A) and x in X."""
    G, H = E.base, E.exponent
    arc = E.arcs[i]
    return all(
        G.inc[arc.g[alpha]][x] == E.vertex_maps[arc.family[x]][H.inc[alpha][x]]
        for alpha in H.arcs
        for x in range(G.theory.n_x)
    )


def arc_count_formula(E: Exponential) -> int:
    """Σ over families f of Π over α in H(A) of |G_f(a_1, α)|.

    ``G_f(a_1, α)`` is computed literally: take the incidence of the arc
    ``(a_1, α)`` in ``A̲ × H``, push it through ``f: X × H(V) -> G(V)`` and
    collect the arcs of G with that incidence.
    """
    G, H = E.base, E.exponent
    T = G.theory
    AH, _ = product(representable(T, A), H)
    nvH, naH = H.n_vertices, H.n_arcs
    e = T.monoid.identity
    total = 0
    for family in itertools.product(range(len(E.vertex_maps)), repeat=T.n_x):
        def f(cell):
            x, w = divmod(cell, nvH)
            return E.vertex_maps[family[x]][w]

        term = 1
        for alpha in H.arcs:
            incidence = AH.inc[e * naH + alpha]
            term *= len(matching_arcs(G, [f(c) for c in incidence]))
            if not term:
                break
        total += term
    return total


def eval_morphism(E: Exponential) -> GraphMorphism:
    """ev : G^H × H -> G, (k, v) -> k(v) and (((f_x), g), α) -> g(α)."""
    H = E.exponent
    P, _ = product(E.graph, H)
    fv = tuple(E.vertex_maps[k][w] for k in E.graph.vertices for w in H.vertices)
    fa = tuple(E.arcs[i].g[alpha] for i in E.graph.arcs for alpha in H.arcs)
    return make_morphism(P, E.base, fv, fa)


def curry(h: GraphMorphism, F: XMGraph, H: XMGraph, E: Exponential | None = None) -> GraphMorphism:
    """The transpose F -> G^H of h : F × H -> G."""
    FH, _ = product(F, H)
    if h.src != FH:
        raise ValidationError("curry: source of h is not F × H")
    G = h.dst
    if E is None:
        E = exponential(G, H)
    elif E.base != G or E.exponent != H:
        raise ValidationError("curry: exponential does not match h")
    T = G.theory
    nvH, naH = H.n_vertices, H.n_arcs
    vindex, aindex = E.vertex_index(), E.arc_index()

    def vertex_of(v):
        fv = tuple(h.fv[v * nvH + w] for w in H.vertices)
        if T.reflexive:
            return vindex[(fv, tuple(h.fa[F.loops[v] * naH + b] for b in H.arcs))]
        return vindex[fv]

    kv = tuple(vertex_of(v) for v in F.vertices)
    ka = []
    for phi in F.arcs:
        if E.method == "pairs":
            family = tuple(kv[F.inc[phi][x]] for x in range(T.n_x))
            g = tuple(h.fa[phi * naH + alpha] for alpha in H.arcs)
            ka.append(aindex[(family, g)])
        else:
            fv = tuple(
                h.fv[F.inc[phi][x] * nvH + w] for x in range(T.n_x) for w in H.vertices
            )
            fa = tuple(
                h.fa[F.act[phi][n] * naH + b] for n in T.monoid.elements for b in H.arcs
            )
            ka.append(aindex[(fv, fa)])
    return make_morphism(F, E.graph, kv, ka)


def uncurry(k: GraphMorphism, E: Exponential) -> GraphMorphism:
    """ev ∘ (k × id_H) : F × H -> G."""
    if k.dst != E.graph:
        raise ValidationError("uncurry: target of k is not the exponential")
    kh = product_morphism(k, identity_morphism(E.exponent))
    return compose_morphisms(eval_morphism(E), kh)
