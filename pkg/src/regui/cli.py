"""Command-line interface.

    regui classify   --spec FILE --width W --height H
    regui resolve    --spec FILE --width W --height H [--anchor A] [--format json|svg]
    regui validate   --spec FILE
    regui trace      --spec FILE --events FILE
    regui export-svg --spec FILE --width W --height H [--anchor A]

The success stream carries exactly one machine-readable document (JSON,
JSON lines for trace, or SVG); messages go to stderr. Exit codes: 0 ok,
1 validation errors present, 2 unreadable/unparseable input or engine
error, 3 invalid flag combination.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .classify import classify
from .controller import (
    UpdateAction,
    action_to_doc,
    initial_state,
    parse_event,
    process_event,
)
from .errors import RejectedEvent, ReguiError
from .geometry import WindowState
from .jsonio import dumps_doc, dumps_line
from .resolve import layout_to_doc, resolve
from .spec import LayoutSpec, parse_spec
from .svg import render_svg
from .validate import diagnostic_to_doc, has_errors, validate_spec


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract reserves 2 for
    # unreadable inputs and uses 3 for bad flag combinations.
    def error(self, message):
        self.exit(3, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="regui", description="Aspect-ratio-driven layout engine")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p: _Parser, window: bool = False, anchor: bool = False) -> None:
        p.add_argument("--spec", required=True, help="layout spec file")
        if window:
            p.add_argument("--width", required=True, type=float, help="window width in pixels")
            p.add_argument("--height", required=True, type=float, help="window height in pixels")
        if anchor:
            p.add_argument("--anchor", choices=("none", "left", "right"), default="none",
                           help="horizontal screen position for mirroring")

    p = sub.add_parser("classify", help="print the layout class for a window size")
    add_common(p, window=True)
    p.add_argument("--format", choices=("json", "svg"), default="json")

    p = sub.add_parser("resolve", help="print the resolved layout document")
    add_common(p, window=True, anchor=True)
    p.add_argument("--format", choices=("json", "svg"), default="json")

    p = sub.add_parser("validate", help="print diagnostics for a spec")
    add_common(p)
    p.add_argument("--format", choices=("json", "svg"), default="json")

    p = sub.add_parser("trace", help="replay a resize/move event trace")
    add_common(p)
    p.add_argument("--events", required=True, help="JSONL trace file, one event per line")
    p.add_argument("--format", choices=("json", "svg"), default="json")

    p = sub.add_parser("export-svg", help="render the resolved layout as SVG")
    add_common(p, window=True, anchor=True)
    p.add_argument("--format", choices=("json", "svg"), default="svg")

    return parser


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_spec(path: str) -> LayoutSpec:
    return parse_spec(_read_file(path))


def _run(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    svg_ok = args.command in ("resolve", "export-svg")
    if args.format == "svg" and not svg_ok:
        err.write(f"regui: error: --format svg is not supported by {args.command}\n")
        return 3
    if args.command == "export-svg" and args.format == "json":
        err.write("regui: error: export-svg emits SVG; use resolve for JSON output\n")
        return 3

    spec = _load_spec(args.spec)

    if args.command == "classify":
        window = WindowState(args.width, args.height)
        cls = classify(window.aspect_ratio, spec.classes)
        out.write(dumps_line({"r": window.aspect_ratio, "class": cls.name}))
        return 0

    if args.command in ("resolve", "export-svg"):
        layout = resolve(spec, WindowState(args.width, args.height), args.anchor)
        if args.format == "svg":
            out.write(render_svg(layout))
        else:
            out.write(dumps_doc(layout_to_doc(layout)))
        return 0

    if args.command == "validate":
        diags = validate_spec(spec)
        out.write(dumps_doc([diagnostic_to_doc(d) for d in diags]))
        return 1 if has_errors(diags) else 0

    if args.command == "trace":
        events = []
        for lineno, line in enumerate(_read_file(args.events).splitlines(), start=1):
            if not line.strip():
                continue
            try:
                events.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ReguiError(f"{args.events}:{lineno}: malformed event line: {exc.msg}")

        state = initial_state(spec)
        for obj in events:
            try:
                state, action = process_event(state, parse_event(obj))
            except RejectedEvent as exc:
                action = UpdateAction("rejected", reason=str(exc))
            out.write(dumps_line(action_to_doc(action)))
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def run(argv: Sequence[str] | None = None,
        out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Parse arguments and execute one command; returns the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 3
    try:
        return _run(args, out, err)
    except (OSError, UnicodeDecodeError) as exc:
        err.write(f"regui: error: cannot read input: {exc}\n")
        return 2
    except ReguiError as exc:
        err.write(f"regui: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
