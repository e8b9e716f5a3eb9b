"""Small named graphs and the worked-example reports behind ``xmgraph example``."""

from __future__ import annotations

from .errors import ValidationError
from .expo import exponential
from .graph import (
    DISTINGUISHED_LOOP,
    FIXED_LOOP,
    NONLOOP,
    UNFIXED_LOOP,
    XMGraph,
    classify_arcs,
    find_isomorphism,
    make_graph,
    representable,
    summarize,
)
from .limits import terminal
from .theory import A, V, standard_theory


def bouquet(kind: str, n_loops: int, x_size: int = 2) -> XMGraph:
    """One vertex with loops fixed by every monoid element.

    Reflexively, loop 0 is the distinguished one and constants send every
    loop to it.
    """
    T = standard_theory(kind, x_size)
    M = T.monoid
    if T.reflexive and n_loops < 1:
        raise ValidationError("a reflexive bouquet needs its distinguished loop")
    units = set(M.inverses)
    act = [tuple(a if m in units else 0 for m in M.elements) for a in range(n_loops)]
    return make_graph(
        T, 1, [(0,) * T.n_x] * n_loops, act, [0] if T.reflexive else None,
        ["v"], [str(a) for a in range(n_loops)],
    )


def lsym(n_loops: int = 2, x_size: int = 2) -> XMGraph:
    return bouquet("symmetric", n_loops, x_size)


def lrefl(n_loops: int = 2, x_size: int = 2) -> XMGraph:
    return bouquet("reflexive-symmetric", n_loops, x_size)


def example_2_3() -> XMGraph:
    """Reflexive symmetric graph on a, b, c: an edge a-b, a 2-loop at b, an edge b-c."""
    T = standard_theory("reflexive-symmetric", 2)
    M = T.monoid
    names = ["ℓ_a", "ℓ_b", "ℓ_c", "α0", "α1", "β0", "β1", "γ0", "γ1"]
    inc = [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 1), (1, 1), (1, 2), (2, 1)]
    partner = [0, 1, 2, 4, 3, 6, 5, 8, 7]
    act = []
    for a, (s, t) in enumerate(inc):
        row = []
        for m in M.elements:
            f = M.maps[m]
            if f == (0, 1):
                row.append(a)
            elif f == (1, 0):
                row.append(partner[a])
            else:
                row.append((s, t)[f[0]])  # constants land on a distinguished loop
        act.append(tuple(row))
    return make_graph(T, 3, inc, act, [0, 1, 2], ["a", "b", "c"], names)


def _orbit_lines(G: XMGraph) -> list[str]:
    lines = []
    for c in classify_arcs(G):
        ends = "{" + ",".join(sorted(G.vertex_name(v) for v in set(G.inc[c.orbit[0]]))) + "}"
        label = "~".join(G.arc_name(a) for a in c.orbit)
        lines.append(f"  {label}: {c.kind}, ends {ends}")
    return lines


def _summary_lines(G: XMGraph) -> list[str]:
    s = summarize(G)
    return [
        f"vertices: {s.vertices}",
        f"arcs: {s.arcs}",
        f"fixed loops: {s.fixed_loops} ({s.distinguished_loops} distinguished)",
        f"unfixed-loop orbits: {s.unfixed_loop_orbits}",
        f"cross-edge orbits: {s.nonloop_orbits}",
    ]


def _relabel(E, labels) -> XMGraph:
    return E.graph.with_names(arc_names=labels)


def lsym2_power_a():
    """Lsym2^A̲ with arcs named xy = (g(a_1), g(a_i))."""
    L = lsym(2)
    E = exponential(L, representable(L.theory, A))
    labels = ["".join(L.arc_name(b) for b in arc.g) for arc in E.arcs]
    return E, _relabel(E, labels).with_names(vertex_names=["v"])


def lrefl2_power_a():
    """Lrefl2^A̲ with arcs named by the six digits x y z w u v.

    Digits read f_s, g(ℓ_s), g(a_1), g(a_i), g(ℓ_t), f_t, where a vertex
    (a morphism A̲ -> L) is identified with its value on a_1.
    """
    L = lrefl(2)
    T = L.theory
    Abar = representable(T, A)
    E = exponential(L, Abar)
    idx = {f: m for m, f in enumerate(T.monoid.maps)}
    a1, ai, ls, lt = idx[(0, 1)], idx[(1, 0)], idx[(0, 0)], idx[(1, 1)]
    labels = []
    for arc in E.arcs:
        fs, ft = (E.vertex_homs[k].fa[a1] for k in arc.family)
        digits = (fs, arc.g[ls], arc.g[a1], arc.g[ai], arc.g[lt], ft)
        labels.append("".join(L.arc_name(d) for d in digits))
    G = _relabel(E, labels).with_names(
        vertex_names=[L.arc_name(k.fa[a1]) for k in E.vertex_homs]
    )
    return E, G


def _report_ex_2_3() -> list[str]:
    G = example_2_3()
    return ["example ex-2-3: reflexive symmetric graph on {a, b, c}", *_summary_lines(G),
            "edges:", *_orbit_lines(G)]


def _report_yoneda() -> list[str]:
    out = ["example yoneda-x2: representables over X = {s, t}"]
    for kind in ("oriented", "reflexive-oriented", "symmetric", "reflexive-symmetric"):
        T = standard_theory(kind, 2)
        for obj in (V, A):
            R = representable(T, obj)
            dist = len(R.distinguished)
            arcs = ",".join(R.arc_name(a) for a in R.arcs) or "-"
            out.append(
                f"  {kind} {obj}: {R.n_vertices} vertices, {R.n_arcs} arcs "
                f"({dist} distinguished) [{arcs}]"
            )
    return out


def _report_ex_4_1() -> list[str]:
    out = ["example ex-4-1: V^V is terminal"]
    for n in (2, 3):
        T = standard_theory("symmetric", n)
        Vb = representable(T, V)
        E = exponential(Vb, Vb).graph
        iso = find_isomorphism(E, terminal(T)) is not None
        kinds = [c.kind for c in classify_arcs(E)]
        out.append(
            f"  symmetric X{n}: {E.n_vertices} vertex, {E.n_arcs} arc, "
            f"loop kinds {kinds}, terminal: {'yes' if iso else 'no'}"
        )
    T = standard_theory("symmetric", 2)
    G = example_2_3_symmetric()
    E = exponential(G, representable(T, V)).graph
    out.append(
        f"  G^V for the symmetric part of ex-2-3: {E.n_vertices} vertices, "
        f"{E.n_arcs} arcs = {G.n_vertices}^{T.n_x}"
    )
    return out


def example_2_3_symmetric() -> XMGraph:
    """The non-reflexive shadow of example_2_3: same arcs without the ℓ loops."""
    T = standard_theory("symmetric", 2)
    inc = [(0, 1), (1, 0), (1, 1), (1, 1), (1, 2), (2, 1)]
    act = [(0, 1), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4)]
    return make_graph(T, 3, inc, act, None, ["a", "b", "c"],
                      ["α0", "α1", "β0", "β1", "γ0", "γ1"])


def _report_ex_4_2() -> list[str]:
    E, G = lsym2_power_a()
    ev = ", ".join(f"ev({G.arc_name(a)}, a_1)={G.arc_name(a)[0]}" for a in G.arcs)
    return ["example ex-4-2: Lsym2^A over symmetric X = {s, t}", *_summary_lines(G),
            "edges:", *_orbit_lines(G), f"evaluation: {ev}"]


def _report_ex_4_3() -> list[str]:
    E, G = lrefl2_power_a()
    s = summarize(G)
    out = ["example ex-4-3: Lrefl2^A over reflexive symmetric X = {s, t}",
           *_summary_lines(G)]
    for v in G.vertices:
        kinds = s.per_vertex[v]
        out.append(
            f"  vertex {G.vertex_name(v)}: {kinds.get(FIXED_LOOP, 0)} fixed, "
            f"{kinds.get(DISTINGUISHED_LOOP, 0)} distinguished, "
            f"{kinds.get(UNFIXED_LOOP, 0)} unfixed-loop pairs"
        )
    sizes = sorted({len(c.orbit) for c in classify_arcs(G) if c.kind == NONLOOP})
    out.append(f"cross-edge orbit sizes: {sizes}")
    out.append("distinguished loops: " + ", ".join(G.arc_name(G.loops[v]) for v in G.vertices))
    out.append("edges:")
    out += _orbit_lines(G)
    return out


EXAMPLES = {
    "ex-2-3": _report_ex_2_3,
    "yoneda-x2": _report_yoneda,
    "ex-4-1": _report_ex_4_1,
    "ex-4-2": _report_ex_4_2,
    "ex-4-3": _report_ex_4_3,
}


def run_example(name: str) -> str:
    try:
        fn = EXAMPLES[name]
    except KeyError:
        raise ValidationError(
            f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}"
        ) from None
    return "\n".join(fn()) + "\n"
