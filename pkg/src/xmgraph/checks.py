"""Randomized verification of the exponential and nerve adjunctions."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bridge.fgraphs import fgraph_homs
from .bridge.nerve import nerve, nerve_morphism, realize, transpose_from_nerve, transpose_to_nerve
from .expo import curry, exponential, uncurry
from .generators import random_graph, random_hypergraph, random_power_graph, random_rfgraph
from .graph import enumerate_homs
from .limits import product
from .theory import standard_theory

ADJUNCTION_THEORIES = (
    ("oriented", 2),
    ("symmetric", 2),
    ("reflexive-symmetric", 2),
    ("symmetric", 3),
)


@dataclass(frozen=True)
class Trial:
    """One hom-set comparison: |left| vs |right| and whether the transpose
    maps are mutually inverse bijections."""

    label: str
    left: int
    right: int
    bijective: bool

    @property
    def ok(self) -> bool:
        return self.left == self.right and self.bijective


def exponential_trial(F, H, G, label="") -> Trial:
    """hom(F × H, G) against hom(F, G^H) via curry and uncurry."""
    FH, _ = product(F, H)
    E = exponential(G, H)
    left = enumerate_homs(FH, G)
    right = enumerate_homs(F, E.graph)
    images = set()
    ok = True
    for h in left:
        k = curry(h, F, H, E)
        images.add(k.key())
        ok &= uncurry(k, E).key() == h.key()
    for k in right:
        ok &= curry(uncurry(k, E), F, H, E).key() == k.key()
    ok &= len(images) == len(left)
    return Trial(label, len(left), len(right), bool(ok))


def nerve_trial(G, P, flavor: str, label="") -> Trial:
    """hom(R(G), P) against hom(G, N(P)) via the two transposes."""
    R = realize(G, flavor)
    N = nerve(P, G.theory.n_x)
    left = fgraph_homs(R.obj, P)
    right = enumerate_homs(G, N.graph)
    ok = True
    images = set()
    for h in left:
        k = transpose_to_nerve(h, R, N)
        images.add(k.key())
        ok &= transpose_from_nerve(k, R, N).key() == h.key()
    for k in right:
        ok &= transpose_to_nerve(transpose_from_nerve(k, R, N), R, N).key() == k.key()
    ok &= len(images) == len(left)
    return Trial(label, len(left), len(right), bool(ok))


def full_faithful_trial(P, Q, x_size=None, label="") -> Trial:
    """|hom(P, Q)| against |hom(N(P), N(Q))| with N injective on hom-sets."""
    Np, Nq = nerve(P, x_size), nerve(Q, x_size)
    homs = fgraph_homs(P, Q)
    images = {nerve_morphism(f, Np, Nq).key() for f in homs}
    right = enumerate_homs(Np.graph, Nq.graph)
    return Trial(label, len(homs), len(right), len(images) == len(homs))


def _random_fgraph(flavor, rng, x_size):
    if flavor == "hyper":
        return random_hypergraph(rng, max_vertices=3, max_edges=2, max_card=x_size + 1)
    if flavor == "power":
        return random_power_graph(x_size, rng)
    return random_rfgraph(x_size, rng, max_edges=2)


def adjunction_trials(kind: str = "exponential", trials: int = 100, seed: int = 0,
                      x_size: int = 2) -> list[Trial]:
    """Seeded random trials of one adjunction.

    ``kind`` is "exponential" (cycling over a few standard theories) or a
    nerve flavor: "hyper", "power" or "rpower".
    """
    rng = random.Random(seed)
    out = []
    for i in range(trials):
        if kind == "exponential":
            name, n = ADJUNCTION_THEORIES[i % len(ADJUNCTION_THEORIES)]
            T = standard_theory(name, n)
            F, H, G = (random_graph(T, rng) for _ in range(3))
            out.append(exponential_trial(F, H, G, f"{name}-{n} #{i}"))
        else:
            tkind = "reflexive-symmetric" if kind == "rpower" else "symmetric"
            T = standard_theory(tkind, x_size)
            G = random_graph(T, rng, max_vertices=3, max_arcs=4)
            P = _random_fgraph(kind, rng, x_size)
            out.append(nerve_trial(G, P, kind, f"{kind} #{i}"))
    return out


def full_faithful_trials(flavor: str = "power", trials: int = 20, seed: int = 0,
                         x_size: int = 2) -> list[Trial]:
    rng = random.Random(seed)
    out = []
    for i in range(trials):
        if flavor == "power":
            P, Q = (random_power_graph(x_size, rng) for _ in range(2))
        else:
            P, Q = (random_rfgraph(x_size, rng) for _ in range(2))
        out.append(full_faithful_trial(P, Q, x_size, f"{flavor} #{i}"))
    return out
