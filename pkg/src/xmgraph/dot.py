"""Graphviz DOT rendering of (X,M)-graphs."""

from __future__ import annotations

from .algebra import MonoidKind
from .errors import ValidationError
from .graph import DISTINGUISHED_LOOP, UNFIXED_LOOP, XMGraph, classify_arcs

UNDIRECTED_KINDS = (MonoidKind.SYMMETRIC, MonoidKind.REFLEXIVE_SYMMETRIC)


def _q(text) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _attrs(**kw) -> str:
    body = ", ".join(f"{k}={_q(v)}" for k, v in kw.items() if v is not None)
    return f" [{body}]" if body else ""


def to_dot(G: XMGraph, mode: str = "undirected", name: str = "G") -> str:
    """Render G; ``mode`` is "undirected" (one edge per orbit) or "directed"."""
    if mode not in ("undirected", "directed"):
        raise ValueError(f"unknown mode {mode!r}")
    T = G.theory
    if mode == "undirected" and T.kind not in UNDIRECTED_KINDS:
        raise ValidationError(
            f"undirected rendering needs a symmetric theory, got {T.label()}"
        )
    head = "graph" if mode == "undirected" else "digraph"
    link = " -- " if mode == "undirected" else " -> "
    lines = [f"{head} {_q(name)} {{"]
    for v in G.vertices:
        lines.append(f"  v{v}{_attrs(label=G.vertex_name(v))};")

    if mode == "undirected":
        cells = []
        for c in classify_arcs(G):
            label = "~".join(G.arc_name(a) for a in c.orbit)
            style = "dotted" if c.kind == DISTINGUISHED_LOOP else None
            if c.kind == UNFIXED_LOOP:
                cells.append((c.orbit[0], dict(label=str(len(c.orbit)), xlabel=label, style=style)))
            else:
                cells.append((c.orbit[0], dict(label=label, style=style)))
    else:
        cells = [
            (a, dict(label=G.arc_name(a), style="dotted" if a in G.distinguished else None))
            for a in G.arcs
        ]

    if T.n_x == 2:
        for a, attrs in cells:
            s, t = G.inc[a]
            lines.append(f"  v{s}{link}v{t}{_attrs(**attrs)};")
    else:
        # incidence bipartite graph: one box per arc (or orbit)
        for i, (a, attrs) in enumerate(cells):
            lines.append(f"  e{i}{_attrs(shape='box', **attrs)};")
            for x, v in enumerate(G.inc[a]):
                lines.append(f"  e{i}{link}v{v}{_attrs(label=T.x_names[x])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(G: XMGraph, path, mode: str = "undirected", name: str = "G") -> None:
    text = to_dot(G, mode, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
