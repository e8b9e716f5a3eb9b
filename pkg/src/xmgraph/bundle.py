"""A line-oriented text format for theories, graphs, F-graphs and morphisms.

Example::

    xmgraph-bundle 1
    theory symmetric 2
    graph L
      vertices v
      arcs 0 1
      inc 0 v v
      inc 1 v v
      act 0 0 0
      act 1 1 1
    end

Names are whitespace-free tokens; ``#`` starts a comment line.  ``dumps``
writes a canonical form (fixed field order, two-space indent) and
``dumps(loads(text)) == text`` for canonical text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import FiniteMonoid, MonoidKind, RightMSet
from .bridge.fgraphs import (
    FMorphism,
    Hypergraph,
    PowerGraph,
    ReflexiveFGraph,
    fmorphism_violations,
)
from .errors import ParseError, ValidationError
from .graph import GraphMorphism, XMGraph, make_graph, morphism_violations
from .theory import Theory, make_theory, standard_theory

MAGIC = "xmgraph-bundle"
VERSION = 1
_TOKEN = re.compile(r"\S+")


@dataclass
class Bundle:
    theory: Theory | None = None
    objects: dict = field(default_factory=dict)
    ends: dict = field(default_factory=dict)
    version: int = VERSION

    def add(self, name: str, obj, src: str | None = None, dst: str | None = None):
        if name in self.objects:
            raise ValidationError(f"duplicate object name {name!r}")
        _check_token(name)
        if isinstance(obj, (GraphMorphism, FMorphism)):
            if src is None or dst is None:
                raise ValidationError("morphisms need the names of their ends")
            self.ends[name] = (src, dst)
        self.objects[name] = obj
        return obj

    def __getitem__(self, name):
        try:
            return self.objects[name]
        except KeyError:
            raise KeyError(f"no object named {name!r} in bundle") from None

    def __contains__(self, name):
        return name in self.objects

    def of_type(self, cls) -> dict:
        return {k: v for k, v in self.objects.items() if isinstance(v, cls)}


def _check_token(name):
    if not name or any(c.isspace() for c in name) or name.startswith("#"):
        raise ValidationError(f"name {name!r} is not a single token")


# ---------------------------------------------------------------- writing

def _line(*tokens, indent=False) -> str:
    for t in tokens:
        _check_token(str(t))
    return ("  " if indent else "") + " ".join(str(t) for t in tokens)


def _row(*tokens) -> str:
    return _line(*tokens, indent=True)


def _theory_lines(T: Theory) -> list[str]:
    if T.kind is not None:
        return [_line("theory", T.kind.value, T.n_x)]
    M = T.monoid
    out = ["theory explicit", _row("reflexive", "yes" if T.reflexive else "no")]
    out.append(_row("monoid", *M.names))
    for a in M.elements:
        out.append(_row("mul", M.names[a], *(M.names[c] for c in M.mul[a])))
    out.append(_row("xset", *T.x_names))
    for x in T.xset.elements:
        out.append(_row("act", T.x_names[x], *(T.x_names[y] for y in T.xset.act[x])))
    out.append("end")
    return out


def _graph_lines(name, G: XMGraph) -> list[str]:
    vn = [G.vertex_name(v) for v in G.vertices]
    an = [G.arc_name(a) for a in G.arcs]
    out = [_line("graph", name), _row("vertices", *vn), _row("arcs", *an)]
    out += [_row("inc", an[a], *(vn[v] for v in G.inc[a])) for a in G.arcs]
    out += [_row("act", an[a], *(an[b] for b in G.act[a])) for a in G.arcs]
    if G.reflexive:
        out += [_row("loop", vn[v], an[G.loops[v]]) for v in G.vertices]
    out.append("end")
    return out


def _edge_lines(name, P, head) -> list[str]:
    vn = [P.vertex_name(v) for v in range(P.n_vertices)]
    out = [head, _row("vertices", *vn)]
    out += [_row("edge", P.edge_name(e), *(vn[v] for v in vs)) for e, vs in enumerate(P.edges)]
    out.append("end")
    return out


def _rf_lines(name, R: ReflexiveFGraph) -> list[str]:
    pn = [R.part_name(p) for p in R.parts]
    out = [_line("rfgraph", name, "arity", R.arity), _row("parts", *pn),
           _row("vertices", *(pn[v] for v in R.vertices))]
    out += [_row("inc", pn[p], *(pn[u] for u in R.inc[p])) for p in R.parts]
    out.append("end")
    return out


def _morphism_lines(name, f, src_name, dst_name) -> list[str]:
    out = [_line("morphism", name, src_name, dst_name)]
    S, D = f.src, f.dst
    if isinstance(f, GraphMorphism):
        out += [_row("vmap", S.vertex_name(v), D.vertex_name(w)) for v, w in enumerate(f.fv)]
        out += [_row("amap", S.arc_name(a), D.arc_name(b)) for a, b in enumerate(f.fa)]
    elif isinstance(S, ReflexiveFGraph):
        out += [_row("pmap", S.part_name(p), D.part_name(q)) for p, q in enumerate(f.fe)]
    else:
        out += [_row("vmap", S.vertex_name(v), D.vertex_name(w)) for v, w in enumerate(f.fv)]
        out += [_row("emap", S.edge_name(e), D.edge_name(d)) for e, d in enumerate(f.fe)]
    out.append("end")
    return out


def dumps(bundle: Bundle) -> str:
    lines = [f"{MAGIC} {bundle.version}"]
    if bundle.theory is not None:
        lines += _theory_lines(bundle.theory)
    for name, obj in bundle.objects.items():
        if isinstance(obj, XMGraph):
            lines += _graph_lines(name, obj)
        elif isinstance(obj, Hypergraph):
            lines += _edge_lines(name, obj, _line("hypergraph", name))
        elif isinstance(obj, PowerGraph):
            lines += _edge_lines(name, obj, _line("powergraph", name, "arity", obj.arity))
        elif isinstance(obj, ReflexiveFGraph):
            lines += _rf_lines(name, obj)
        else:
            src, dst = bundle.ends[name]
            lines += _morphism_lines(name, obj, src, dst)
    return "\n".join(lines) + "\n"


def save_bundle(bundle: Bundle, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(bundle))


# ---------------------------------------------------------------- reading

@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _tokenize(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield i, [_Tok(m.group(), i, m.start() + 1) for m in _TOKEN.finditer(raw)]


class _Parser:
    def __init__(self, text):
        self.lines = list(_tokenize(text))
        self.pos = 0
        self.last_line = len(text.splitlines())

    def next(self):
        if self.pos >= len(self.lines):
            return None
        self.pos += 1
        return self.lines[self.pos - 1][1]

    def block(self, head):
        """Rows up to the matching ``end``."""
        rows = []
        while True:
            toks = self.next()
            if toks is None:
                raise ParseError("block opened here is missing 'end'", head[0].line, head[0].col)
            if toks[0].text == "end":
                if len(toks) > 1:
                    raise ParseError("unexpected text after 'end'", toks[1].line, toks[1].col)
                return rows
            rows.append(toks)


def _err(tok: _Tok, msg):
    return ParseError(msg, tok.line, tok.col)


def _int(tok: _Tok) -> int:
    try:
        return int(tok.text)
    except ValueError:
        raise _err(tok, f"expected an integer, got {tok.text!r}") from None


def _lookup(tok: _Tok, table: dict, what: str) -> int:
    try:
        return table[tok.text]
    except KeyError:
        raise _err(tok, f"unknown {what} {tok.text!r}") from None


def _names(toks) -> tuple[list[str], dict]:
    names = [t.text for t in toks]
    index = {}
    for t in toks:
        if t.text in index:
            raise _err(t, f"duplicate name {t.text!r}")
        index[t.text] = len(index)
    return names, index


def _keyed_rows(rows, key, index, width, what, head=None):
    """Rows ``key <name> fields...``: one per name, in any order."""
    table = {}
    for row in rows:
        if row[0].text != key:
            continue
        if len(row) < 2:
            raise _err(row[0], f"{key} row needs a name")
        i = _lookup(row[1], index, what)
        if i in table:
            raise _err(row[1], f"second {key} row for {row[1].text!r}")
        if len(row) != width + 2:
            tok = row[-1]
            raise _err(tok, f"{key} row for {row[1].text!r} needs {width} entries, got {len(row) - 2}")
        table[i] = row[2:]
    missing = [n for n, i in index.items() if i not in table]
    if missing:
        line, col = (head.line, head.col) if head is not None else (None, None)
        raise ParseError(f"no {key} row for {what} {missing[0]!r}", line, col)
    return [table[i] for i in range(len(index))]


def _single(rows, key, head):
    found = [r for r in rows if r[0].text == key]
    if not found:
        raise _err(head, f"block is missing its '{key}' row")
    if len(found) > 1:
        raise _err(found[1][0], f"repeated '{key}' row")
    return found[0]


def _check_keys(rows, allowed):
    for r in rows:
        if r[0].text not in allowed:
            raise _err(r[0], f"unexpected row {r[0].text!r}")


def _parse_theory(head, p: _Parser) -> Theory:
    if len(head) == 3:
        try:
            kind = MonoidKind(head[1].text)
        except ValueError:
            raise _err(head[1], f"unknown theory kind {head[1].text!r}") from None
        return standard_theory(kind, _int(head[2]))
    if len(head) != 2 or head[1].text != "explicit":
        raise _err(head[0], "expected 'theory <kind> <n>' or 'theory explicit'")
    rows = p.block(head)
    _check_keys(rows, {"reflexive", "monoid", "mul", "xset", "act"})
    refl = _single(rows, "reflexive", head[0])
    if len(refl) != 2 or refl[1].text not in ("yes", "no"):
        raise _err(refl[0], "reflexive must be 'yes' or 'no'")
    mnames, mindex = _names(_single(rows, "monoid", head[0])[1:])
    mul = [[_lookup(t, mindex, "monoid element") for t in r]
           for r in _keyed_rows(rows, "mul", mindex, len(mnames), "monoid element", head[0])]
    xnames, xindex = _names(_single(rows, "xset", head[0])[1:])
    act = [[_lookup(t, xindex, "X element") for t in r]
           for r in _keyed_rows(rows, "act", xindex, len(mnames), "X element", head[0])]
    M = FiniteMonoid.from_table(mnames, mul)
    X = RightMSet(M, tuple(xnames), tuple(tuple(r) for r in act))
    problems = X.check_laws()
    if problems:
        raise ValidationError(f"theory: {problems[0]}")
    return make_theory(M, X, refl[1].text == "yes")


def _parse_graph(name, head, rows, T: Theory) -> XMGraph:
    if T is None:
        raise _err(head, "a graph needs a theory line before it")
    _check_keys(rows, {"vertices", "arcs", "inc", "act", "loop"})
    vn, vi = _names(_single(rows, "vertices", head)[1:])
    an, ai = _names(_single(rows, "arcs", head)[1:])
    inc = [[_lookup(t, vi, "vertex") for t in r] for r in _keyed_rows(rows, "inc", ai, T.n_x, "arc", head)]
    act = [[_lookup(t, ai, "arc") for t in r] for r in _keyed_rows(rows, "act", ai, T.n_m, "arc", head)]
    loops = None
    if T.reflexive:
        loops = [_lookup(r[0], ai, "arc") for r in _keyed_rows(rows, "loop", vi, 1, "vertex", head)]
    elif any(r[0].text == "loop" for r in rows):
        tok = next(r[0] for r in rows if r[0].text == "loop")
        raise _err(tok, "loop rows need a reflexive theory")
    try:
        return make_graph(T, len(vn), inc, act, loops, vn, an)
    except ValidationError as exc:
        raise ValidationError(f"graph {name}: {exc}") from None


def _parse_edges(name, head, rows, arity):
    _check_keys(rows, {"vertices", "edge"})
    vn, vi = _names(_single(rows, "vertices", head)[1:])
    edges, en = [], []
    seen = set()
    for r in rows:
        if r[0].text != "edge":
            continue
        if len(r) < 2:
            raise _err(r[0], "edge row needs a name")
        if r[1].text in seen:
            raise _err(r[1], f"duplicate edge name {r[1].text!r}")
        seen.add(r[1].text)
        en.append(r[1].text)
        edges.append(tuple(_lookup(t, vi, "vertex") for t in r[2:]))
    try:
        if arity is None:
            return Hypergraph(len(vn), tuple(edges), vn, en)
        return PowerGraph(arity, len(vn), tuple(edges), vn, en)
    except ValidationError as exc:
        raise ValidationError(f"{'hypergraph' if arity is None else 'powergraph'} {name}: {exc}") from None


def _parse_rf(name, head, rows, arity):
    _check_keys(rows, {"parts", "vertices", "inc"})
    pn, pi = _names(_single(rows, "parts", head)[1:])
    verts = [_lookup(t, pi, "part") for t in _single(rows, "vertices", head)[1:]]
    inc = [[_lookup(t, pi, "part") for t in r] for r in _keyed_rows(rows, "inc", pi, arity, "part", head)]
    try:
        return ReflexiveFGraph(arity, len(pn), tuple(verts), tuple(tuple(r) for r in inc), pn)
    except ValidationError as exc:
        raise ValidationError(f"rfgraph {name}: {exc}") from None


def _name_index(names):
    return {n: i for i, n in enumerate(names)}


def _parse_morphism(name, head, rows, S, D):
    def table(key, src_names, dst_names, what):
        si, di = _name_index(src_names), _name_index(dst_names)
        return [_lookup(r[0], di, what) for r in _keyed_rows(rows, key, si, 1, what, head)]

    if isinstance(S, XMGraph):
        _check_keys(rows, {"vmap", "amap"})
        fv = table("vmap", [S.vertex_name(v) for v in S.vertices], [D.vertex_name(v) for v in D.vertices], "vertex")
        fa = table("amap", [S.arc_name(a) for a in S.arcs], [D.arc_name(a) for a in D.arcs], "arc")
        problems = morphism_violations(S, D, tuple(fv), tuple(fa))
        if problems:
            raise ValidationError(f"morphism {name}: {problems[0]}")
        return GraphMorphism(S, D, tuple(fv), tuple(fa))
    if isinstance(S, ReflexiveFGraph):
        _check_keys(rows, {"pmap"})
        fe = table("pmap", [S.part_name(p) for p in S.parts], [D.part_name(p) for p in D.parts], "part")
        fv = [fe[v] for v in S.vertices]
    else:
        _check_keys(rows, {"vmap", "emap"})
        fv = table("vmap", [S.vertex_name(v) for v in range(S.n_vertices)],
                   [D.vertex_name(v) for v in range(D.n_vertices)], "vertex")
        fe = table("emap", [S.edge_name(e) for e in range(S.n_edges)],
                   [D.edge_name(e) for e in range(D.n_edges)], "edge")
    problems = fmorphism_violations(S, D, tuple(fv), tuple(fe))
    if problems:
        raise ValidationError(f"morphism {name}: {problems[0]}")
    return FMorphism(S, D, tuple(fv), tuple(fe))


def loads(text: str) -> Bundle:
    p = _Parser(text)
    first = p.next()
    if first is None or first[0].text != MAGIC:
        raise ParseError(f"expected '{MAGIC} {VERSION}' header", 1, 1)
    if len(first) != 2 or _int(first[1]) != VERSION:
        raise _err(first[-1], f"unsupported bundle version (expected {VERSION})")
    b = Bundle()
    while (head := p.next()) is not None:
        kw = head[0].text
        if kw == "theory":
            if b.theory is not None:
                raise _err(head[0], "bundle has a second theory")
            if b.objects:
                raise _err(head[0], "theory must come before all objects")
            b.theory = _parse_theory(head, p)
            continue
        if kw not in ("graph", "hypergraph", "powergraph", "rfgraph", "morphism"):
            raise _err(head[0], f"unknown section {kw!r}")
        if len(head) < 2:
            raise _err(head[0], f"{kw} needs a name")
        name = head[1].text
        if name in b.objects:
            raise _err(head[1], f"duplicate object name {name!r}")
        if kw in ("powergraph", "rfgraph"):
            if len(head) != 4 or head[2].text != "arity":
                raise _err(head[0], f"expected '{kw} <name> arity <k>'")
            arity = _int(head[3])
        elif kw == "morphism":
            if len(head) != 4:
                raise _err(head[0], "expected 'morphism <name> <source> <target>'")
        elif len(head) != 2:
            raise _err(head[2], f"unexpected text after {kw} name")
        rows = p.block(head)
        if kw == "graph":
            obj = _parse_graph(name, head[0], rows, b.theory)
            b.objects[name] = obj
        elif kw == "hypergraph":
            b.objects[name] = _parse_edges(name, head[0], rows, None)
        elif kw == "powergraph":
            b.objects[name] = _parse_edges(name, head[0], rows, arity)
        elif kw == "rfgraph":
            b.objects[name] = _parse_rf(name, head[0], rows, arity)
        else:
            ends = []
            for tok in head[2:]:
                obj = b.objects.get(tok.text)
                if obj is None or isinstance(obj, (GraphMorphism, FMorphism)):
                    raise _err(tok, f"unknown object {tok.text!r}")
                ends.append(obj)
            S, D = ends
            if type(S) is not type(D):
                raise _err(head[3], "morphism ends are different kinds of object")
            b.objects[name] = _parse_morphism(name, head[0], rows, S, D)
            b.ends[name] = (head[2].text, head[3].text)
    return b


def load_bundle(path) -> Bundle:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
