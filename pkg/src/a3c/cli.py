"""Command line: ``a3c check FILE``, ``a3c g2 FILE``, ``a3c s7``, ``a3c catalog NAME``.

Exit codes: 0 when every check passes, 1 when some check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import catalog
from .deform import DeformParams, h_deform
from .dsl import from_structure, parse, render, to_structure
from .errors import A3CError
from .report import SKIP, Report
from .scalar import Assignment, parse_expr
from .suites import SUITES, RunResult, run_checks, s7_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _assignments(pairs) -> Assignment | None:
    if not pairs:
        return None
    values = {}
    for item in pairs:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise InputError(f"--eval expects name=value, got {item!r}")
        try:
            values[name.strip()] = parse_expr(value).as_fraction()
        except (A3CError, ValueError, TypeError) as exc:
            raise InputError(f"--eval {item!r}: value is not an exact rational ({exc})") from exc
    try:
        return Assignment(values)
    except A3CError as exc:
        raise InputError(str(exc)) from exc


def load(path: str):
    """``(sha256, structure)`` for an ``.alg`` file, or InputError."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path} is not UTF-8") from exc
    try:
        S = to_structure(parse(text))
    except A3CError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return hashlib.sha256(raw).hexdigest(), S


def _deformed(S, s, c):
    if s is None and c is None:
        return S
    if s is None or c is None:
        raise InputError("--deform-s and --deform-c go together")
    try:
        return h_deform(S, DeformParams(parse_expr(s), parse_expr(c)))
    except A3CError as exc:
        raise InputError(str(exc)) from exc


def _print(result: RunResult, out) -> None:
    for c in result.report:
        line = f"{c.status:8} {c.id}"
        if c.status != "pass" and c.residual not in ("", "0"):
            line += f"  ({c.residual})"
        print(line, file=out)
    fails = len(result.report.failures())
    skips = sum(c.status == SKIP for c in result.report)
    total = len(result.report)
    print(f"{total - fails - skips} passed, {fails} failed, {skips} skipped", file=out)


def _finish(result: RunResult, json_path, out) -> int:
    # with --json - stdout carries only the JSON document
    _print(result, sys.stderr if json_path == "-" else out)
    if json_path:
        text = json.dumps(result.to_json(), indent=2, sort_keys=True)
        if json_path == "-":
            print(text, file=out)
        else:
            Path(json_path).write_text(text + "\n")
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_check(args, out) -> int:
    digest, S = load(args.file)
    S = _deformed(S, args.deform_s, args.deform_c)
    result = run_checks(S, args.suite, _assignments(args.eval), digest)
    return _finish(result, args.json, out)


def cmd_g2(args, out) -> int:
    from .spin7 import g2_form

    digest, S = load(args.file)
    try:
        g2_form(S)
    except A3CError as exc:
        raise InputError(f"{args.file}: {type(exc).__name__}: {exc}") from exc
    result = run_checks(S, "g2", _assignments(args.eval), digest)
    return _finish(result, args.json, out)


def cmd_s7(args, out) -> int:
    if not 1 <= args.points <= 8:
        raise InputError("--points must be between 1 and 8")
    rep: Report = s7_suite(points=args.points)
    return _finish(RunResult(None, rep, {}), args.json, out)


def cmd_catalog(args, out) -> int:
    if args.name not in catalog.EXAMPLES[:6]:
        raise InputError(f"unknown example {args.name!r}; known: {', '.join(catalog.EXAMPLES[:6])}")
    try:
        S = catalog.build(args.name, args.n)
    except A3CError as exc:
        raise InputError(str(exc)) from exc
    print(render(from_structure(S, standard=not args.explicit)), end="", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="a3c", description="Exact checks for almost 3-contact metric Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run check suites on an .alg file")
    c.add_argument("file")
    c.add_argument("--suite", action="append", choices=SUITES + ("all",),
                   help="suite to run (repeatable; default all)")
    c.add_argument("--deform-s", dest="deform_s", metavar="S", help="H-homothetic deformation, a = S^2")
    c.add_argument("--deform-c", dest="deform_c", metavar="C", help="H-homothetic deformation, c = C")
    c.add_argument("--eval", nargs="+", metavar="K=V", help="rerun every suite with parameters substituted")
    c.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")
    c.set_defaults(fn=cmd_check)

    g = sub.add_parser("g2", help="G2 form and spinor suite on a 7-dimensional .alg file")
    g.add_argument("file")
    g.add_argument("--eval", nargs="+", metavar="K=V")
    g.add_argument("--json", metavar="OUT")
    g.set_defaults(fn=cmd_g2)

    s = sub.add_parser("s7", help="pointwise suite for the parallelized 7-sphere")
    s.add_argument("--points", type=int, default=3)
    s.add_argument("--json", metavar="OUT")
    s.set_defaults(fn=cmd_s7)

    k = sub.add_parser("catalog", help="print a built-in example as an .alg document")
    k.add_argument("name")
    k.add_argument("--n", type=int, default=1)
    k.add_argument("--explicit", action="store_true", help="write the endomorphisms as matrices")
    k.set_defaults(fn=cmd_catalog)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "suite", None) is None and args.command == "check":
        args.suite = ["all"]
    try:
        return args.fn(args, out)
    except InputError as exc:
        print(f"a3c: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
