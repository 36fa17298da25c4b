"""Command line front end.

Exit status: 0 success, 1 unreadable input (bad PD syntax, bad arguments,
missing table), 2 invalid diagram, 3 knot not p-colourable where a colouring
is required.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .coloring import coloring_classes, is_colorable
from .cu import classify
from .diagram import (
    InvalidDiagramError,
    PDSyntaxError,
    PlanarDiagram,
    connected_sum,
    mirror,
    parse_pd,
    r1_twist,
    serialize_pd,
    torus_knot,
)
from .goeritz import goeritz, knot_determinant
from .tables import bundled_table, emit_json, emit_text, load_csv

log = logging.getLogger("coloredknots")

EXIT_PARSE, EXIT_INVALID, EXIT_NOT_COLORABLE = 1, 2, 3

COMMANDS = ("parse", "det", "goeritz", "colorings", "cu", "classify", "sum", "mirror", "torus", "r1")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coloredknots", description="Fox colourings and the colored untying invariant of knots")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--pd", action="append", default=[], help="PD code (repeat for 'sum')")
    parser.add_argument("--file", help="CSV table with columns name,pd_notation")
    parser.add_argument("--name", action="append", default=[], help="knot name in the table (repeatable)")
    parser.add_argument("--p", type=int, help="odd prime modulus")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--hand", choices=("left", "right"), default="left")
    parser.add_argument("--edge", type=int, default=1, help="edge for 'r1'")
    parser.add_argument("--sign", type=int, choices=(1, -1), default=1, help="kink sign for 'r1'")
    parser.add_argument("--arc", type=int, nargs=2, default=(0, 0), metavar=("A1", "A2"),
                        help="over-arc indices spliced by 'sum'")
    return parser


class _Exit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _diagrams(args) -> tuple[list[PlanarDiagram], bool]:
    """Diagrams named on the command line, and whether this is a whole-table batch."""
    out = []
    for i, text in enumerate(args.pd):
        out.append(parse_pd(text, name=f"pd{i + 1}" if len(args.pd) > 1 else "pd"))
    if args.file or args.name:
        path = args.file or bundled_table()
        try:
            records, _ = load_csv(path)
        except (OSError, KeyError) as exc:
            raise _Exit(EXIT_PARSE, str(exc)) from exc
        by_name = {r.name: r.parsed for r in records}
        if not args.name:
            return [r.parsed for r in records], True
        for n in args.name:
            if n not in by_name:
                raise _Exit(EXIT_PARSE, f"no knot named {n!r} in {path}")
            out.append(by_name[n])
    return out, False


def _need_p(args):
    if args.p is None:
        raise _Exit(EXIT_PARSE, f"'{args.command}' needs --p")
    return args.p


def _emit(args, obj, text):
    print(json.dumps(obj) if args.json else text)


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except PDSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidDiagramError as exc:
        print(f"invalid diagram: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def _dispatch(args) -> int:
    if args.command == "torus":
        d = torus_knot(_need_p(args), args.hand)
        _emit(args, {"name": d.name, "pd": serialize_pd(d)}, serialize_pd(d))
        return 0

    diagrams, batch = _diagrams(args)
    if not diagrams:
        raise _Exit(EXIT_PARSE, "no diagram given: use --pd, --name or --file")

    if args.command == "sum":
        if len(diagrams) != 2:
            raise _Exit(EXIT_PARSE, "'sum' needs exactly two diagrams")
        d = connected_sum(diagrams[0], args.arc[0], diagrams[1], args.arc[1])
        _emit(args, {"name": d.name or "", "pd": serialize_pd(d)}, serialize_pd(d))
        return 0

    status = 0
    for d in diagrams:
        status = max(status, _single(args, d, batch))
    return status


def _single(args, d: PlanarDiagram, batch: bool) -> int:
    cmd = args.command
    prefix = f"{d.name}\t" if batch else ""
    if cmd == "parse":
        info = {
            "name": d.name or "",
            "pd": serialize_pd(d),
            "crossings": len(d.crossings),
            "faces": len(d.faces),
            "arcs": len(d.over_arcs),
            "writhe": d.writhe,
        }
        _emit(args, info, prefix + serialize_pd(d))
    elif cmd == "det":
        det = knot_determinant(d)
        _emit(args, {"name": d.name or "", "determinant": det}, f"{prefix}{det}")
    elif cmd == "goeritz":
        G = goeritz(d)
        _emit(args, {"name": d.name or "", "goeritz": G}, prefix + "\n".join(" ".join(map(str, r)) for r in G))
    elif cmd in ("mirror", "r1"):
        m = mirror(d) if cmd == "mirror" else r1_twist(d, args.edge, args.sign)
        _emit(args, {"name": m.name or "", "pd": serialize_pd(m)}, prefix + serialize_pd(m))
    elif cmd == "colorings":
        p = _need_p(args)
        classes = coloring_classes(d, p)
        if not is_colorable(d, p):
            print(f"{d.name}: not {p}-colorable", file=sys.stderr)
            return EXIT_NOT_COLORABLE
        rows = [list(c.canonical.labels) for c in classes]
        _emit(args, {"name": d.name or "", "p": p, "classes": rows},
              "\n".join(prefix + " ".join(map(str, r)) for r in rows))
    elif cmd in ("cu", "classify"):
        p = _need_p(args)
        report = classify(d, p)
        print(emit_json(report) if args.json else emit_text(report))
        if cmd == "cu" and not report.colorable:
            print(f"{report.name}: not {p}-colorable", file=sys.stderr)
            return EXIT_NOT_COLORABLE
    return 0


def main():
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    sys.exit(run())


if __name__ == "__main__":
    main()
