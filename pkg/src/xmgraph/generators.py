"""Seeded random graphs, hypergraphs and power graphs for tests and the CLI.

Every presheaf is a quotient of a coproduct of representables, so random
(X,M)-graphs are drawn that way: glue a few copies of A̲ and V̲, identify a
random handful of cells, and close up under the congruence.
"""

from __future__ import annotations

import random

from .bridge.fgraphs import Hypergraph, PowerGraph, ReflexiveFGraph
from .errors import ValidationError
from .graph import XMGraph, empty_graph, representable
from .limits import congruence_closure, coproduct, quotient
from .theory import A, V, Theory


def _rng(seed_or_rng):
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_graph(theory: Theory, rng=None, max_vertices: int = 3, max_arcs: int = 4,
                 tries: int = 500) -> XMGraph:
    """A random graph with at most the given numbers of vertices and arcs."""
    rng = _rng(rng)
    Av, Vv = representable(theory, A), representable(theory, V)
    for _ in range(tries):
        G = empty_graph(theory)
        for _ in range(rng.randint(0, max_arcs)):
            G, _ = coproduct(G, Av)
        for _ in range(rng.randint(0, max_vertices)):
            G, _ = coproduct(G, Vv)
        vpairs, apairs = [], []
        if G.n_vertices > 1:
            for _ in range(rng.randint(0, 2 * G.n_vertices)):
                vpairs.append((rng.randrange(G.n_vertices), rng.randrange(G.n_vertices)))
        if G.n_arcs > 1:
            for _ in range(rng.randint(0, G.n_arcs)):
                a = rng.randrange(G.n_arcs)
                # half the time glue an arc to one of its own translates
                if rng.random() < 0.5:
                    apairs.append((a, G.act[a][rng.randrange(theory.n_m)]))
                else:
                    apairs.append((a, rng.randrange(G.n_arcs)))
        uv, ua = congruence_closure(G, vpairs, apairs)
        Q, _ = quotient(G, uv, ua)
        if Q.n_vertices <= max_vertices and Q.n_arcs <= max_arcs:
            return Q.with_names((), ())
    raise ValidationError(
        f"no random {theory.label()} graph within {max_vertices} vertices and "
        f"{max_arcs} arcs after {tries} tries"
    )


def random_hypergraph(rng=None, max_vertices: int = 4, max_edges: int = 3,
                      max_card: int | None = None, uniform: int | None = None) -> Hypergraph:
    """Random hypergraph; ``uniform=k`` makes every edge have exactly k vertices."""
    rng = _rng(rng)
    lo = uniform if uniform is not None else 1
    nv = rng.randint(lo, max(lo, max_vertices))
    top = min(nv, max_card if max_card is not None else nv)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        k = uniform if uniform is not None else rng.randint(0, top)
        edges.append(tuple(sorted(rng.sample(range(nv), k))))
    return Hypergraph(nv, tuple(edges))


def random_power_graph(arity: int, rng=None, max_vertices: int = 3, max_edges: int = 3) -> PowerGraph:
    rng = _rng(rng)
    nv = rng.randint(1, max_vertices)
    edges = [
        tuple(sorted(rng.randrange(nv) for _ in range(arity)))
        for _ in range(rng.randint(0, max_edges))
    ]
    return PowerGraph(arity, nv, tuple(edges))


def random_rfgraph(arity: int, rng=None, max_vertices: int = 3, max_edges: int = 3) -> ReflexiveFGraph:
    """Vertices come first among the parts, then the proper edges."""
    rng = _rng(rng)
    nv = rng.randint(1, max_vertices)
    ne = rng.randint(0, max_edges)
    inc = [(v,) * arity for v in range(nv)]
    inc += [tuple(rng.randrange(nv) for _ in range(arity)) for _ in range(ne)]
    return ReflexiveFGraph(arity, nv + ne, tuple(range(nv)), tuple(inc))
