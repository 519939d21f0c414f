"""Command-line front end.

Exit status: 0 when everything passes, 1 when a verification check fails,
2 for usage, parse or configuration errors.  Set ``QTORUS_COLOR=1`` to
colour PASS/FAIL markers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .alternating import FAULTS, AltFamily, alt_elem, alt_gf, full_suite
from .expr import EvalError, ParseError, evaluate
from .render import render
from .repcheck import RepConfig, clock_shift, perturb, residual_suite
from .series import omega_series, s_series, t_series

REP_FAULTS = ("perturbed-shift",)
_SERIES = {"omega": omega_series, "T": t_series, "S": s_series}


class _UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return v


def _family(text: str) -> AltFamily:
    try:
        return AltFamily.parse(text)
    except ValueError:
        names = ", ".join(f.value for f in AltFamily)
        raise argparse.ArgumentTypeError(f"unknown family {text!r} (choose from {names})") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtorus", description="Exact quantum torus computations.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("elem", help="print one alternating element")
    e.add_argument("--family", type=_family, required=True)
    e.add_argument("--k", type=_nonneg, required=True)
    e.add_argument("--format", choices=("text", "latex", "json"), default="text")

    g = sub.add_parser("gf", help="print a truncated generating function")
    g.add_argument("--family", type=_family, required=True)
    g.add_argument("--order", type=_nonneg, default=12)
    g.add_argument("--format", choices=("text", "latex", "json"), default="text")

    v = sub.add_parser("verify", help="run the exact identity suite")
    v.add_argument("--order", type=_nonneg, default=12, help="univariate truncation")
    v.add_argument("--bi-order", type=_nonneg, default=8, help="bivariate truncation")
    v.add_argument("--kmax", type=_nonneg, default=12, help="largest index for symmetry checks")
    v.add_argument("--json", action="store_true")
    v.add_argument("--inject-fault", choices=FAULTS)

    r = sub.add_parser("rep", help="numeric check with clock and shift matrices")
    r.add_argument("--dim", type=int, default=5)
    r.add_argument("--kmax", type=_nonneg, default=6)
    r.add_argument("--tol", type=_positive_float, default=1e-9)
    r.add_argument("--json", action="store_true")
    r.add_argument("--inject-fault", choices=REP_FAULTS)

    x = sub.add_parser("eval", help="parse, evaluate and print an expression")
    x.add_argument("--expr", required=True)
    x.add_argument("--format", choices=("text", "latex", "json"), default="text")

    s = sub.add_parser("series", help="print omega, T or S")
    s.add_argument("--which", choices=tuple(_SERIES), required=True)
    s.add_argument("--order", type=_nonneg, default=12)
    s.add_argument("--format", choices=("text", "latex", "json"), default="text")
    return p


def _colorize(text: str) -> str:
    if os.environ.get("QTORUS_COLOR", "") not in ("1", "true", "yes"):
        return text
    out = []
    for line in text.splitlines():
        if line.startswith("PASS"):
            line = "\x1b[32mPASS\x1b[0m" + line[4:]
        elif line.startswith("FAIL"):
            line = "\x1b[31mFAIL\x1b[0m" + line[4:]
        out.append(line)
    return "\n".join(out)


def _emit_report(report, as_json: bool, out) -> int:
    if as_json:
        print(json.dumps(report.to_json(), indent=2), file=out)
    else:
        print(_colorize(report.text()), file=out)
    return 0 if report.passed else 1


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "elem":
        print(render(alt_elem(args.family, args.k), args.format), file=out)
    elif cmd == "gf":
        print(render(alt_gf(args.family, args.order), args.format), file=out)
    elif cmd == "series":
        print(render(_SERIES[args.which](args.order), args.format), file=out)
    elif cmd == "eval":
        try:
            value = evaluate(args.expr)
        except ParseError as exc:
            raise _UsageError(f"parse error at {exc}") from None
        except EvalError as exc:
            raise _UsageError(f"evaluation error: {exc}") from None
        print(render(value, args.format), file=out)
    elif cmd == "verify":
        report = full_suite(n_uni=args.order, n_bi=args.bi_order, kmax=args.kmax,
                            fault=args.inject_fault)
        return _emit_report(report, args.json, out)
    elif cmd == "rep":
        cfg = RepConfig(args.dim, tol=args.tol)
        try:
            mats = clock_shift(cfg)
        except ValueError as exc:  # includes PoleError
            raise _UsageError(f"invalid representation: {exc}") from None
        if args.inject_fault == "perturbed-shift":
            mats = perturb(mats, "Y", 0, 0, 1e-3)
        return _emit_report(residual_suite(cfg, args.kmax, mats), args.json, out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the message
        return int(exc.code or 0)
    try:
        return _run(args, sys.stdout)
    except _UsageError as exc:
        print(f"qtorus: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
