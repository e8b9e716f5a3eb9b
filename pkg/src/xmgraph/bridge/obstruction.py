"""Concrete witnesses that uniform hypergraphs, power graphs and reflexive
power graphs lack exponentials.

Each certificate builds F-graphs G and H, computes N(G)^N(H) among (X,M)-graphs,
and exhibits an arc that no nerve can contain: a loop moved by an invertible
element (nerves have only fixed loops), or, for k-uniform hypergraphs, an arc
whose incidence has fewer than |X| distinct vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import invertibles
from ..errors import ValidationError
from ..expo import exponential
from ..graph import XMGraph, classify_arcs, find_isomorphism, representable
from ..limits import terminal
from ..theory import V
from .fgraphs import Hypergraph, PowerGraph, ReflexiveFGraph
from .nerve import interpretation, nerve

CASES = ("k-uniform", "power-graph", "reflexive-power-graph")
DEGENERATE = "degenerate"


@dataclass
class ObstructionCertificate:
    case: str
    G: object
    H: object
    exponential: XMGraph
    witness_arc: int
    witness_sigma: int | str
    verified: bool = False
    transcript: list[str] = field(default_factory=list)

    @property
    def sigma_name(self) -> str:
        if self.witness_sigma == DEGENERATE:
            return DEGENERATE
        return self.exponential.theory.m_names[self.witness_sigma]

    def _sigma_label(self) -> str:
        # the swap of a two-element X is conventionally called i
        T = self.exponential.theory
        if self.witness_sigma != DEGENERATE and T.monoid.maps[self.witness_sigma] == (1, 0):
            return f"i = {self.sigma_name}"
        return self.sigma_name

    def witness_orbit(self) -> tuple[int, ...]:
        for c in classify_arcs(self.exponential):
            if self.witness_arc in c.orbit:
                return c.orbit
        raise AssertionError("arc missing from its own graph")  # pragma: no cover

    def report(self) -> str:
        E = self.exponential
        a = self.witness_arc
        lines = [
            f"case: {self.case}",
            f"theory: {E.theory.label()}",
            f"exponential: {E.n_vertices} vertices, {E.n_arcs} arcs",
            f"witness arc: {E.arc_name(a)} (index {a})",
            "incidence: " + ", ".join(
                f"{x}->{E.vertex_name(v)}" for x, v in zip(E.theory.x_names, E.inc[a])
            ),
            f"sigma: {self._sigma_label()}",
            "orbit: {" + ", ".join(E.arc_name(b) for b in self.witness_orbit()) + "}",
            "checks:",
        ]
        lines += [f"  {t}" for t in self.transcript]
        lines.append(f"verified: {'true' if self.verified else 'false'}")
        return "\n".join(lines)


def _only_fixed_loops(G: XMGraph) -> bool:
    return all(len(c.orbit) == 1 for c in classify_arcs(G) if c.is_loop)


def verify_certificate(cert: ObstructionCertificate) -> bool:
    """Re-check the witness against the raw tables of the exponential."""
    E = cert.exponential
    T = E.theory
    M = T.monoid
    a = cert.witness_arc
    log = cert.transcript
    log.clear()

    def check(ok, text):
        log.append(f"[{'ok' if ok else 'FAIL'}] {text}")
        return ok

    ok = check(0 <= a < E.n_arcs, f"arc {a} exists")
    if not ok:
        cert.verified = False
        return False
    image = set(E.inc[a])
    if cert.case == "k-uniform":
        ok &= check(len(image) < T.n_x,
                    f"incidence image has {len(image)} vertex < |X| = {T.n_x}")
        ok &= check(T.n_x > 1, "|X| > 1, so a k-uniform nerve has no such arc")
    else:
        s = cert.witness_sigma
        e = M.identity
        ok &= check(len(image) == 1, "arc is a loop: all incidences equal")
        inv = [t for t in M.elements if M.mul[s][t] == e and M.mul[t][s] == e]
        ok &= check(bool(inv), f"{T.m_names[s]} is invertible")
        moved = E.act[a][s]
        ok &= check(moved != a, f"act(arc, {T.m_names[s]}) = {moved} != {a}")
        for x in range(T.n_x):
            ok &= check(E.inc[moved][x] == E.inc[a][x],
                        f"moved arc has the same {T.x_names[x]}-incidence")
    if cert.case != "k-uniform":
        NG, NH = nerve(cert.G, T.n_x).graph, nerve(cert.H, T.n_x).graph
        ok &= check(_only_fixed_loops(NG) and _only_fixed_loops(NH),
                    "N(G) and N(H) have only fixed loops")
    cert.verified = bool(ok)
    return cert.verified


def obstruction_certificate(case: str, x_size: int = 2) -> ObstructionCertificate:
    if case not in CASES:
        raise ValidationError(f"unknown case {case!r}; choose from {', '.join(CASES)}")
    if x_size < 2:
        raise ValidationError("obstructions need |X| >= 2")
    n = x_size
    if case == "k-uniform":
        G = H = Hypergraph(1, (), ["v"])
    elif case == "power-graph":
        G = PowerGraph(n, 1, ((0,) * n, (0,) * n), ["v"], ["0", "1"])
        H = interpretation("power", "A", n)
    else:
        G = ReflexiveFGraph(n, 2, (0,), ((0,) * n, (0,) * n), ["v", "1"])
        H = interpretation("rpower", "A", n)
    NG, NH = nerve(G, n).graph, nerve(H, n).graph
    E = exponential(NG, NH).graph
    if case == "k-uniform":
        arc = next(a for a in E.arcs if len(set(E.inc[a])) < n)
        cert = ObstructionCertificate(case, G, H, E, arc, DEGENERATE)
    else:
        units = [u for u in invertibles(E.theory.monoid) if u != E.theory.monoid.identity]
        pair = next(
            (a, s) for a in E.arcs if E.is_loop(a) for s in units if E.act[a][s] != a
        )
        cert = ObstructionCertificate(case, G, H, E, *pair)
    verify_certificate(cert)
    if case == "k-uniform":
        T = NG.theory
        same = find_isomorphism(NG, representable(T, V)) is not None
        cert.transcript.append(f"[{'ok' if same else 'FAIL'}] N(G) = N(H) is the representable V")
        term = find_isomorphism(E, terminal(T)) is not None
        cert.transcript.append(f"[{'ok' if term else 'FAIL'}] exponential is terminal")
        cert.verified = cert.verified and same and term
    return cert
