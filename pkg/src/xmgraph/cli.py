"""Command-line front end: ``xmgraph <command> ...``.

Exit status: 0 success, 1 usage, 2 validation or parse failure, 3 capacity.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .bridge.fgraphs import FMorphism, Hypergraph, PowerGraph, ReflexiveFGraph, flavor_of
from .bridge.nerve import FLAVORS, adjunction_units, nerve, realize
from .bridge.obstruction import CASES, obstruction_certificate
from .bundle import Bundle, dumps, load_bundle
from .checks import adjunction_trials
from .dot import to_dot
from .errors import CapacityError, ParseError, ValidationError
from .expo import curry, exponential, uncurry
from .gallery import EXAMPLES, run_example
from .graph import GraphMorphism, XMGraph, enumerate_homs, summarize
from .limits import coequalizer, coproduct, equalizer, product

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _get(bundle: Bundle, name: str, kind=None):
    if name not in bundle:
        raise UsageError(f"no object named {name!r} in bundle")
    obj = bundle[name]
    if kind is not None and not isinstance(obj, kind):
        want = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise UsageError(f"{name!r} is a {type(obj).__name__}, expected {want}")
    return obj


def _summary(G: XMGraph) -> str:
    s = summarize(G)
    return (
        f"{s.vertices} vertices, {s.arcs} arcs, {s.fixed_loops} fixed loops "
        f"({s.distinguished_loops} distinguished), {s.unfixed_loop_orbits} unfixed-loop orbits, "
        f"{s.nonloop_orbits} cross-edge orbits"
    )


def _emit(out: Bundle, path) -> str:
    text = dumps(out)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def _with_inputs(b: Bundle, *names) -> Bundle:
    out = Bundle(b.theory)
    for n in names:
        if n not in out:
            out.add(n, b[n])
    return out


def cmd_validate(args):
    b = load_bundle(args.bundle)
    lines = [f"theory: {b.theory.label() if b.theory else '-'}"]
    for name, obj in b.objects.items():
        if isinstance(obj, XMGraph):
            lines.append(f"graph {name}: ok, {_summary(obj)}")
        elif isinstance(obj, (GraphMorphism, FMorphism)):
            src, dst = b.ends[name]
            lines.append(f"morphism {name}: {src} -> {dst} ok")
        else:
            lines.append(f"{flavor_of(obj)} {name}: ok")
    return "\n".join(lines) + "\n"


def cmd_homs(args):
    b = load_bundle(args.bundle)
    G, H = _get(b, args.source, XMGraph), _get(b, args.target, XMGraph)
    homs = enumerate_homs(G, H, args.budget)
    lines = [f"{len(homs)} morphisms {args.source} -> {args.target}"]
    if not args.count:
        for i, h in enumerate(homs):
            vs = " ".join(f"{G.vertex_name(v)}->{H.vertex_name(w)}" for v, w in enumerate(h.fv))
            arcs = " ".join(f"{G.arc_name(a)}->{H.arc_name(c)}" for a, c in enumerate(h.fa))
            lines.append(f"  #{i}: {vs} | {arcs}")
    return "\n".join(lines) + "\n"


def cmd_limit(args):
    b = load_bundle(args.bundle)
    op = args.command
    if op in ("product", "coproduct"):
        G, H = _get(b, args.left, XMGraph), _get(b, args.right, XMGraph)
        obj, (m1, m2) = (product if op == "product" else coproduct)(G, H)
        out = _with_inputs(b, args.left, args.right)
        out.add(args.name, obj)
        if op == "product":
            out.add("p1", m1, args.name, args.left)
            out.add("p2", m2, args.name, args.right)
        else:
            out.add("i1", m1, args.left, args.name)
            out.add("i2", m2, args.right, args.name)
    else:
        f, g = _get(b, args.left, GraphMorphism), _get(b, args.right, GraphMorphism)
        src, dst = b.ends[args.left]
        out = _with_inputs(b, src, dst)
        if op == "equalizer":
            obj, e = equalizer(f, g)
            out.add(args.name, obj)
            out.add("e", e, args.name, src)
        else:
            obj, q = coequalizer(f, g)
            out.add(args.name, obj)
            out.add("q", q, dst, args.name)
    header = f"# {op}: {_summary(obj)}\n"
    return header + _emit(out, args.out)


def cmd_exponential(args):
    b = load_bundle(args.bundle)
    G, H = _get(b, args.base, XMGraph), _get(b, args.exponent, XMGraph)
    E = exponential(G, H, method=args.method)
    out = _with_inputs(b, args.base, args.exponent)
    out.add(args.name, E.graph)
    return f"# exponential ({E.method}): {_summary(E.graph)}\n" + _emit(out, args.out)


def cmd_curry(args):
    b = load_bundle(args.bundle)
    h = _get(b, args.morphism, GraphMorphism)
    F, H = _get(b, args.F, XMGraph), _get(b, args.H, XMGraph)
    E = exponential(h.dst, H)
    k = curry(h, F, H, E)
    out = _with_inputs(b, args.F)
    out.add("GH", E.graph)
    out.add("curried", k, args.F, "GH")
    return _emit(out, args.out)


def cmd_uncurry(args):
    b = load_bundle(args.bundle)
    k = _get(b, args.morphism, GraphMorphism)
    G, H = _get(b, args.G, XMGraph), _get(b, args.H, XMGraph)
    E = exponential(G, H)
    if k.dst != E.graph:
        raise ValidationError(f"target of {args.morphism} is not {args.G}^{args.H}")
    h = uncurry(k, E)
    out = _with_inputs(b, args.G)
    out.add("FxH", h.src)
    out.add("uncurried", h, "FxH", args.G)
    return _emit(out, args.out)


def cmd_nerve(args):
    b = load_bundle(args.bundle)
    P = _get(b, args.object, (Hypergraph, PowerGraph, ReflexiveFGraph))
    if flavor_of(P) != args.flavor:
        raise UsageError(f"{args.object!r} is a {flavor_of(P)} object, not {args.flavor}")
    N = nerve(P, args.x)
    out = Bundle(N.graph.theory)
    out.add(args.name, N.graph)
    return f"# nerve: {_summary(N.graph)}\n" + _emit(out, args.out)


def cmd_realize(args):
    b = load_bundle(args.bundle)
    G = _get(b, args.graph, XMGraph)
    R = realize(G, args.flavor)
    out = Bundle()
    out.add(args.name, R.obj)
    return _emit(out, args.out)


def cmd_fixed_point(args):
    b = load_bundle(args.bundle)
    obj = _get(b, args.object)
    if isinstance(obj, XMGraph):
        if args.flavor is None:
            raise UsageError("--flavor is required for an (X,M)-graph")
        u = adjunction_units(obj, args.flavor)
    else:
        u = adjunction_units(obj, x_size=args.x)
    def iso(flag):
        return "iso" if flag else "not iso"

    return (
        f"unit: {iso(u.unit_iso)}\ncounit: {iso(u.counit_iso)}\n"
        f"fixed point: {'yes' if u.is_fixed_point else 'no'}\n"
    )


def cmd_adjunction_check(args):
    trials = adjunction_trials(args.kind, args.trials, args.seed, args.x)
    passed = sum(t.ok for t in trials)
    lines = []
    if args.verbose:
        lines += [
            f"  {t.label}: {t.left} vs {t.right} {'ok' if t.ok else 'FAIL'}" for t in trials
        ]
    lines.append(f"{passed}/{len(trials)} bijection passes ({args.kind}, seed {args.seed})")
    if passed != len(trials):
        raise _Failed("\n".join(lines) + "\n")
    return "\n".join(lines) + "\n"


def cmd_obstruction(args):
    cert = obstruction_certificate(args.case, args.x)
    text = cert.report() + "\n"
    if not cert.verified:
        raise _Failed(text)
    return text


def cmd_example(args):
    return run_example(args.name)


def cmd_export_dot(args):
    b = load_bundle(args.bundle)
    G = _get(b, args.graph, XMGraph)
    text = to_dot(G, args.mode, args.graph)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
        return ""
    return text


class _Failed(Exception):
    """A check ran to completion and failed; carries the report."""


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="xmgraph", description="Finite (X,M)-graphs, exponentials and nerves.")
    p.add_argument("--version", action="version", version=f"xmgraph {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="load a bundle and re-check every object")
    s.add_argument("bundle")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("homs", help="enumerate graph morphisms")
    s.add_argument("bundle")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--count", action="store_true", help="print only the count")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_homs)

    for op, a, c in (("product", "left", "right"), ("coproduct", "left", "right"),
                     ("equalizer", "left", "right"), ("coequalizer", "left", "right")):
        s = sub.add_parser(op, help=f"{op} of two graphs" if "product" in op else f"{op} of two morphisms")
        s.add_argument("bundle")
        s.add_argument(a)
        s.add_argument(c)
        s.add_argument("--name", default=op[:1].upper() if "product" in op else op[:2].upper())
        s.add_argument("--out")
        s.set_defaults(func=cmd_limit)

    s = sub.add_parser("exponential", help="the exponential G^H")
    s.add_argument("bundle")
    s.add_argument("base")
    s.add_argument("exponent")
    s.add_argument("--method", choices=("auto", "pairs", "yoneda"), default="auto")
    s.add_argument("--name", default="GH")
    s.add_argument("--out")
    s.set_defaults(func=cmd_exponential)

    s = sub.add_parser("curry", help="transpose h : F × H -> G to F -> G^H")
    s.add_argument("bundle")
    s.add_argument("morphism")
    s.add_argument("F")
    s.add_argument("H")
    s.add_argument("--out")
    s.set_defaults(func=cmd_curry)

    s = sub.add_parser("uncurry", help="transpose k : F -> G^H to F × H -> G")
    s.add_argument("bundle")
    s.add_argument("morphism")
    s.add_argument("G")
    s.add_argument("H")
    s.add_argument("--out")
    s.set_defaults(func=cmd_uncurry)

    s = sub.add_parser("nerve", help="nerve of a hypergraph, power graph or reflexive power graph")
    s.add_argument("bundle")
    s.add_argument("object")
    s.add_argument("--flavor", choices=FLAVORS, required=True)
    s.add_argument("--x", type=int, default=2, help="|X| for hypergraph nerves")
    s.add_argument("--name", default="N")
    s.add_argument("--out")
    s.set_defaults(func=cmd_nerve)

    s = sub.add_parser("realize", help="realization of a symmetric (X,M)-graph")
    s.add_argument("bundle")
    s.add_argument("graph")
    s.add_argument("--flavor", choices=FLAVORS, required=True)
    s.add_argument("--name", default="R")
    s.add_argument("--out")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("fixed-point", help="unit/counit bijectivity at an object")
    s.add_argument("bundle")
    s.add_argument("object")
    s.add_argument("--flavor", choices=FLAVORS)
    s.add_argument("--x", type=int, default=2)
    s.set_defaults(func=cmd_fixed_point)

    s = sub.add_parser("adjunction-check", help="seeded random adjunction trials")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--kind", choices=("exponential",) + FLAVORS, default="exponential")
    s.add_argument("--x", type=int, default=2, help="|X| for nerve trials")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_adjunction_check)

    s = sub.add_parser("obstruction", help="certificate that exponentials fail to exist")
    s.add_argument("--case", choices=CASES, required=True)
    s.add_argument("--x", type=int, default=2)
    s.set_defaults(func=cmd_obstruction)

    s = sub.add_parser("example", help="reproduce a worked example")
    s.add_argument("name", choices=tuple(EXAMPLES))
    s.set_defaults(func=cmd_example)

    s = sub.add_parser("export-dot", help="render a graph as Graphviz DOT")
    s.add_argument("bundle")
    s.add_argument("graph")
    s.add_argument("--mode", choices=("undirected", "directed"), default="undirected")
    s.add_argument("--out")
    s.set_defaults(func=cmd_export_dot)
    return p


def run_command(argv) -> tuple[int, str]:
    """Run one command; returns (exit status, text for stdout or stderr)."""
    try:
        args = build_parser().parse_args(argv)
        return EXIT_OK, args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}\n"
    except _Failed as exc:
        return EXIT_INVALID, str(exc)
    except (ValidationError, ParseError) as exc:
        return EXIT_INVALID, f"error: {exc}\n"
    except CapacityError as exc:
        return EXIT_CAPACITY, f"capacity exceeded: {exc}\n"
    except FileNotFoundError as exc:
        return EXIT_USAGE, f"usage error: {exc.filename}: no such file\n"


def main(argv=None) -> int:
    try:
        status, text = run_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help and --version
        return int(exc.code or 0)
    (sys.stdout if status == EXIT_OK else sys.stderr).write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
