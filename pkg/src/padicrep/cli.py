"""Command-line front end.

::

    padicrep apply dirac --a=1 --p=5 --trunc=8 -o one_plus_T.series
    padicrep apply uminus-power --m=1 --chi=0,2 F.series
    padicrep newton F.series
    padicrep verify prop55 --c=1

Exit codes: 0 success, 1 failed verification, 2 parse/usage error,
3 domain error, 4 precision exhausted (retry with larger ``--prec``/``--trunc``).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import reps as R
from . import series as S
from .errors import DomainError, ParseError, PrecisionError, PrimeMismatchError, PadicError
from .fileformat import format_series, parse_series
from .newton import polygon
from .reps import parse_character
from .verify import SUITES, RunConfig, run_suite

EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN, EXIT_PRECISION = 1, 2, 3, 4

APPLY_OPS = ("dirac", "log1p", "translate", "lie-mult", "pushforward", "delta",
             "uplus", "uminus", "uminus-power", "h", "e", "diag", "lower-unip",
             "entire", "divide-log")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _character(text: str):
    try:
        return parse_character(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = {"default": argparse.SUPPRESS} if suppress else {"default": None}
    g = parser.add_argument_group("global options")
    g.add_argument("--p", type=int, help="the prime (default 5)", **d)
    g.add_argument("--prec", type=int, help="absolute precision M (default 20)", **d)
    g.add_argument("--trunc", type=int, help="truncation order N (default 32)", **d)
    g.add_argument("--backend", choices=S.BACKENDS, help="coefficient backend", **d)
    g.add_argument("--seed", type=int, help="seed for randomized cases", **d)
    g.add_argument("--chi", type=_character, help="character as m1,m2", **d)
    g.add_argument("--side", choices=R.SIDES, help="chart side (default minus)", **d)
    g.add_argument("--json", action="store_true", help="machine-readable output",
                   **({"default": argparse.SUPPRESS} if suppress else {}))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="padicrep", description=__doc__.split("\n")[0])
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    ap = sub.add_parser("apply", help="apply a dictionary operation to a series")
    ap.add_argument("op", choices=APPLY_OPS)
    ap.add_argument("series", nargs="?", help="input series file ('-' for stdin)")
    ap.add_argument("-o", "--output", help="output file (default stdout)")
    ap.add_argument("--a", type=_rational, help="point for dirac")
    ap.add_argument("--b", type=_rational, help="parameter for translate/pushforward/diag")
    ap.add_argument("--m", type=int, help="power for uminus-power")
    ap.add_argument("--coeffs", help="comma-separated b_0,...,b_K for entire")
    _common(ap, suppress=True)

    nw = sub.add_parser("newton", help="Newton polygon and zero counts of a series")
    nw.add_argument("series", help="input series file ('-' for stdin)")
    nw.add_argument("--tail-floor", default="auto",
                    help="'auto', 'none' (polynomial input) or a rational lower bound")
    _common(nw, suppress=True)

    vf = sub.add_parser("verify", help="run a named verification suite")
    vf.add_argument("suite", choices=sorted(SUITES))
    vf.add_argument("--c", type=_rational, help="c(chi) for prop55 / intertwiner")
    vf.add_argument("--m", type=int, help="exponent for pbw-ad")
    vf.add_argument("--report-json", help="also write the JSON mirror to this file")
    _common(vf, suppress=True)
    return parser


def _config(args, suite: str | None = None) -> RunConfig:
    kw = {k: getattr(args, k) for k in ("p", "prec", "trunc", "backend", "seed", "chi", "side")
          if getattr(args, k, None) is not None}
    if suite is not None:
        kw["suite"] = suite
        if getattr(args, "c", None) is not None:
            kw["c"] = args.c
        if getattr(args, "m", None) is not None:
            kw["m"] = args.m
    return RunConfig(**kw)


def _read(path: str) -> S.TruncatedSeries:
    text = sys.stdin.read() if path == "-" else _read_file(path)
    return parse_series(text)


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}")


def _need(value, flag: str, op: str):
    if value is None:
        raise ParseError(f"{op} requires {flag}")
    return value


def _apply(args) -> S.TruncatedSeries:
    cfg = _config(args)
    op = args.op
    if op == "dirac":
        return S.dirac(_need(args.a, "--a", op), cfg.p, cfg.trunc, cfg.backend, cfg.prec)
    if op == "log1p":
        return S.log1p(cfg.p, cfg.trunc, cfg.backend, cfg.prec)
    F = _read(_need(args.series, "an input series", op))
    if args.p is not None and args.p != F.p:
        raise PrimeMismatchError(f"--p={args.p} but the series has p={F.p}")
    chi = cfg.chi
    side = cfg.side
    if op == "translate":
        return S.translate(_need(args.b, "--b", op), F)
    if op == "lie-mult":
        return S.lie_mult(F)
    if op == "pushforward":
        return S.pushforward(_need(args.b, "--b", op), F)
    if op == "delta":
        return S.delta_op(F)
    if op == "divide-log":
        return S.divide_by_log1p(F)
    if op == "lower-unip":
        return R.dual_lower_unip(_need(args.b, "--b", op), F)
    if op == "entire":
        coeffs = [_rational(x) for x in _need(args.coeffs, "--coeffs", op).split(",")]
        return S.entire_series_apply(coeffs, F)
    chi = _need(chi, "--chi", op)
    if op == "uplus":
        return R.dual_uplus(F, chi, side)
    if op == "uminus":
        return R.dual_uminus(chi, F, side)
    if op == "uminus-power":
        if side != "minus":
            raise DomainError("uminus-power is the minus-side closed formula")
        return R.dual_uminus_power(chi, _need(args.m, "--m", op), F)
    if op == "h":
        return R.dual_h(chi, F, side)
    if op == "e":
        return R.dual_e(chi, F, side)
    if op == "diag":
        return R.dual_diag(chi, _need(args.b, "--b", op), F, side)
    raise ParseError(f"unknown op {op!r}")


def _tail_floor(text: str):
    if text == "auto":
        return "auto"
    if text == "none":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad --tail-floor {text!r}")


def _newton_text(pol) -> str:
    rows = [("slope", "length", "zero-valuation", "count", "certified?")]
    for s in pol.segments:
        rows.append((str(s.slope), str(s.length), str(s.zero_valuation), str(s.length),
                     "yes" if s.certified else "no"))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.append(f"t-adic order: {pol.t_adic_order}")
    lines.append(f"certified through valuation: {pol.certified_through}")
    lines.append(f"reliable horizon: {pol.horizon}")
    lines.append(f"tail floor: {pol.tail_floor}")
    return "\n".join(lines) + "\n"


def _dispatch(args) -> int:
    if args.command == "apply":
        _config(args)  # validates the global flags
        out = format_series(_apply(args))
        if args.output:
            Path(args.output).write_text(out)
        else:
            sys.stdout.write(out)
        return 0
    if args.command == "newton":
        F = _read(args.series)
        pol = polygon(F, _tail_floor(args.tail_floor))
        if args.json:
            sys.stdout.write(json.dumps(pol.as_dict(), indent=2, sort_keys=True) + "\n")
        else:
            sys.stdout.write(_newton_text(pol))
        return 0
    report = run_suite(args.suite, _config(args, args.suite))
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    if args.report_json:
        Path(args.report_json).write_text(report.to_json() + "\n")
    return 0 if report.passed else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # argparse binds an optional positional before later flags are seen, so
    # `apply OP --flag=x FILE` leaves FILE over; pick it up here
    if (args.command == "apply" and args.series is None and len(extra) == 1
            and not extra[0].startswith("--")):
        args.series, extra = extra[0], []
    if extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        return _dispatch(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PrecisionError as e:
        print(f"precision exhausted: {e}", file=sys.stderr)
        return EXIT_PRECISION
    except (DomainError, PadicError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
