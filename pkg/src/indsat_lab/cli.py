"""Command-line front end: construct, verify, search, tables and export.

Machine-readable lines start with ``RESULT``, ``FAIL`` or ``CERT``; wall-clock
timings go to stderr so stdout is reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from indsat_lab import constructions as C
from indsat_lab.formats import (
    FormatError,
    decode_graph6,
    decode_trigraph,
    encode_graph6,
    encode_trigraph,
    from_dot,
    to_dot,
)
from indsat_lab.graph import Graph, GraphError, GuardError, Trigraph
from indsat_lab.saturation import verify_family_saturated
from indsat_lab.search import (
    default_jobs,
    projected_indsat_space,
    search_indsat,
    search_sis,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--name {args.name} requires " + ", ".join(f"--{m}" for m in missing))


def build(args: argparse.Namespace) -> Graph | Trigraph:
    name = args.name
    if name == "icosa":
        _need(args, "j", "k")
        return C.icosa(args.j, args.k)
    if name == "c4-minimal":
        _need(args, "n")
        return C.c4_minimal(args.n)
    if name == "matching":
        _need(args, "n", "k")
        return C.matching_construction(args.n, args.k)
    if name == "cycles":
        _need(args, "n", "k")
        return C.cycles_construction(args.n, args.k)
    if name == "cycles-subquadratic":
        _need(args, "n", "k", "t")
        return C.cycles_subquadratic(args.n, args.k, args.t)
    if name == "star":
        _need(args, "n", "k")
        return C.star_construction(args.n, args.k)
    if name == "minimal-paw":
        _need(args, "n")
        return C.minimal_paw(args.n)
    if name == "paw-shape":
        _need(args, "parts")
        comps = tuple(tuple(int(x) for x in c.split(",")) for c in args.parts.split("/"))
        return C.paw_construction(C.PawSpec(args.isolated, comps))
    if name in ("H", "J", "K", "L"):
        return C.claw_catalogue(name)
    if name == "generalized-L":
        _need(args, "m")
        return C.generalized_L(args.m)
    if name == "claw":
        _need(args, "n")
        return C.claw_construction(args.n)
    if name == "table":
        _need(args, "target", "n")
        return C.table_trigraphs(args.target, args.n)
    if name == "c5-trigraph":
        return C.c5_trigraph10()
    if name == "threshold":
        _need(args, "signs")
        return C.threshold_from_string(args.signs)
    if name == "pattern":
        _need(args, "target")
        return C.pattern(C.parse_pattern(args.target))
    raise UsageError(f"unknown catalogue id {name!r}")


CATALOGUE_IDS = [
    "icosa", "c4-minimal", "matching", "cycles", "cycles-subquadratic", "star",
    "minimal-paw", "paw-shape", "H", "J", "K", "L", "generalized-L", "claw",
    "table", "c5-trigraph", "threshold", "pattern",
]


def serialize(x: Graph | Trigraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(x)
    if isinstance(x, Trigraph):
        return encode_trigraph(x)
    return encode_graph6(x) + "\n"


def read_object(path: str) -> Graph | Trigraph:
    text = Path(path).read_text()
    if path.endswith(".dot"):
        return from_dot(text)
    if path.endswith(".tg"):
        return decode_trigraph(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise FormatError(f"{path}: expected exactly one graph6 line")
    return decode_graph6(lines[0])


def _family(target: str) -> list[Graph]:
    return [C.pattern(C.parse_pattern(t)) for t in target.split("+")]


def cmd_construct(args: argparse.Namespace) -> int:
    x = build(args)
    fmt = args.format
    if fmt is None:
        fmt = "dot" if args.out and args.out.endswith(".dot") else "graph6"
    text = serialize(x, fmt)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _report(verdict, x: Graph | Trigraph, family: list[Graph]) -> int:
    if x.n < max(h.n for h in family):
        print(
            "warning: fewer vertices than the target; such orders are normally "
            "handled by all-gray trigraphs",
            file=sys.stderr,
        )
    print(verdict.report_line())
    return EXIT_OK if verdict.saturated else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_object(args.graph)
    if isinstance(g, Trigraph):
        raise UsageError("verify expects a graph; use verify-trigraph")
    fam = _family(args.target)
    return _report(verify_family_saturated(g, fam), g, fam)


def cmd_verify_trigraph(args: argparse.Namespace) -> int:
    t = read_object(args.trigraph)
    if isinstance(t, Graph):
        t = Trigraph.from_graph(t)
    fam = _family(args.target)
    return _report(verify_family_saturated(t, fam), t, fam)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_search(args: argparse.Namespace) -> int:
    h = C.pattern(C.parse_pattern(args.target))
    if args.unsafe_override and args.kind == "indsat":
        print(f"PROJECTED {projected_indsat_space(args.n, args.max_gray)}")
    if args.kind == "indsat":
        rep = search_indsat(
            args.n, h, args.max_gray, jobs=args.jobs or default_jobs(), override=args.unsafe_override
        )
    else:
        rep = search_sis(args.n, h, args.max_edges, prune=args.prune, override=args.unsafe_override)
    lines = [f"RESULT {rep.result}", f"NODES {rep.nodes_explored}"]
    if rep.certificate is not None:
        if isinstance(rep.certificate, Trigraph):
            lines.append("CERT trigraph")
            text = "\n".join(lines) + "\n" + encode_trigraph(rep.certificate)
        else:
            lines.append(f"CERT {encode_graph6(rep.certificate)}")
            text = "\n".join(lines) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    print(f"wall time {rep.wall_time:.3f}s", file=sys.stderr)
    return EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    if args.which == "paw":
        print("n formula construction verified")
        for n in range(7, args.n_max + 1):
            g = C.minimal_paw(n)
            ok = verify_family_saturated(g, [C.PAW]).saturated
            print(f"{n} {C.minimal_paw_edges(n)} {g.num_edges} {'yes' if ok else 'no'}")
    else:
        print("n lower upper construction verified")
        for n in range(9, args.n_max + 1):
            if n in (14, 17):
                print(f"{n} - - - -")
                continue
            lo, hi = C.claw_bounds(n)
            g = C.claw_construction(n)
            ok = verify_family_saturated(g, [C.CLAW]).saturated
            print(f"{n} {lo} {hi} {g.num_edges} {'yes' if ok else 'no'}")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    if not args.all:
        raise UsageError("export currently requires --all")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for stem, x in C.catalogue():
        if args.format == "dot":
            name = f"{stem}.dot"
        else:
            name = f"{stem}.tg" if isinstance(x, Trigraph) else f"{stem}.g6"
        (out / name).write_text(serialize(x, args.format))
        print(name)
    return EXIT_OK


def _add_export(sub: argparse._SubParsersAction, name: str) -> None:
    p = sub.add_parser(name, help="write every catalogue object to a directory")
    p.add_argument("--all", action="store_true")
    p.add_argument("--format", choices=["graph6", "dot"], default="graph6")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indsat-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a catalogue graph or trigraph")
    p.add_argument("--name", required=True, choices=CATALOGUE_IDS)
    for flag in ("n", "k", "j", "m", "t"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--target")
    p.add_argument("--parts", help="components as 1,3,3/1,3,4")
    p.add_argument("--isolated", type=int, default=0)
    p.add_argument("--signs")
    p.add_argument("--format", choices=["graph6", "dot"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a graph for induced saturation")
    p.add_argument("--target", required=True, help="pattern, or several joined by '+'")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-trigraph", help="check a trigraph for induced saturation")
    p.add_argument("--target", required=True)
    p.add_argument("--trigraph", required=True)
    p.set_defaults(func=cmd_verify_trigraph)

    p = sub.add_parser("search", help="exhaustive minimum searches")
    p.add_argument("kind", choices=["indsat", "sis"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--max-gray", type=int, default=3)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--prune", action="store_true", help="claw degree pruning (sis only)")
    p.add_argument("--jobs", type=int)
    p.add_argument("--out")
    p.add_argument("--unsafe-override", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("tables", help="formula and bound tables next to measured values")
    p.add_argument("which", choices=["paw", "claw"])
    p.add_argument("--n-max", type=int, default=30)
    p.set_defaults(func=cmd_tables)

    _add_export(sub, "export")
    cat = sub.add_parser("catalogue", help="catalogue operations")
    _add_export(cat.add_subparsers(dest="action", required=True), "export")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "kind", None) == "sis" and args.max_edges is None:
        args.max_edges = args.n * (args.n - 1) // 2
    try:
        return args.func(args)
    except (UsageError, GraphError, FormatError, GuardError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, GuardError) and getattr(args, "kind", None) == "indsat":
            size = projected_indsat_space(args.n, args.max_gray)
            print(f"projected state space {size}; rerun with --unsafe-override", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
