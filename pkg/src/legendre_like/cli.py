"""Command-line front end.

Rational literals are read exactly ("3/2", "-1", "0.25"); degree ranges accept
"5", "0..6" (inclusive) or "1,3,5".
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from . import hermite, legendre_family as lf
from .errors import DomainError, UsageError
from .identities.suites import ASYMPTOTIC_DEFAULTS, SMALL_GRID, SUITE_NAMES, SuiteOptions, run_suite
from .precision import context, to_mpf
from .report import encode_value, reports_to_csv, reports_to_json

GRIDS = {"small": SMALL_GRID}
# lets "--y -3/2" parse as a value rather than an unknown option
_NEGATIVE_LITERAL = re.compile(r"^-\.?\d[\d.,/:-]*$")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}") from None


def parse_range(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
            values = tuple(range(lo, hi + 1))
        else:
            values = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a degree range: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty degree range: {text!r}")
    return values


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(p) for p in text.split(","))


def parse_grid(text: str) -> tuple[Fraction, ...]:
    if text in GRIDS:
        return GRIDS[text]
    return parse_rational_list(text)


# --- family registry ------------------------------------------------------------
# name -> (evaluator(n, args), table(n, args), variable names)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


def _xs(args):
    (xs,) = _need(args, "xs")
    return xs


FAMILIES: dict[str, tuple[Callable, Callable, Sequence[str] | None]] = {
    "hermite2": (
        lambda n, a: hermite.hermite2_eval(n, *_need(a, "x", "y")),
        lambda n, a: hermite.hermite2_poly(n),
        None,
    ),
    "hermite-lacunary": (
        lambda n, a: hermite.hermite_lacunary_eval(n, *_need(a, "m", "x", "y")),
        lambda n, a: hermite.hermite_lacunary_poly(n, *_need(a, "m")),
        None,
    ),
    "hermite-multivar": (
        lambda n, a: hermite.hermite_multivar_eval(n, _xs(a)),
        lambda n, a: hermite.hermite_multivar_poly(n, *_need(a, "p")),
        None,
    ),
    "chebyshev-u": (
        lambda n, a: lf.chebyshev_u2_eval(n, *_need(a, "x", "y")),
        lambda n, a: lf.chebyshev_u2_poly(n),
        None,
    ),
    "humbert": (
        lambda n, a: lf.humbert_eval(n, *_need(a, "m", "x", "y")),
        lambda n, a: lf.humbert_poly(n, *_need(a, "m")),
        None,
    ),
    "multivar-u": (
        lambda n, a: lf.multivar_u_eval(n, _xs(a)),
        lambda n, a: lf.multivar_u_poly(n, *_need(a, "p")),
        None,
    ),
    "legendre2": (
        lambda n, a: lf.legendre2_eval(n, *_need(a, "x", "y")),
        lambda n, a: lf.legendre2_poly(n),
        None,
    ),
    "legendre-multivar": (
        lambda n, a: lf.legendre_multivar_eval(n, _xs(a)),
        lambda n, a: lf.legendre_multivar_poly(n, *_need(a, "p")),
        None,
    ),
    "legendre": (
        lambda n, a: lf.legendre_classical(n, *_need(a, "x")),
        lambda n, a: lf.legendre_classical_poly(n),
        ("x",),
    ),
    "u2n": (
        lambda n, a: lf.u2n_eval(n, *_need(a, "x", "y")),
        lambda n, a: lf.u2n_poly(n),
        ("alpha", "beta"),
    ),
    "gegenbauer": (
        lambda n, a: lf.gegenbauer_eval(n, *_need(a, "gamma", "x")),
        lambda n, a: lf.gegenbauer_poly(n, *_need(a, "gamma")),
        ("x",),
    ),
}


def _table_string(poly, names) -> str:
    if names is None:
        return poly.to_string()
    return poly.to_string(names[0]) if len(names) == 1 else poly.to_string(names)


def _float_string(value) -> str:
    try:
        return repr(float(value))
    except OverflowError:
        return mpmath.nstr(to_mpf(value, context()), 17)


# --- commands -------------------------------------------------------------------


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_coeffs(args) -> int:
    _, table, names = FAMILIES[args.family]
    lines = []
    for n in args.n:
        poly = table(n, args)
        if args.format == "json":
            lines.append({"family": args.family, "n": n, "terms": _terms_json(poly)})
        else:
            text = _table_string(poly, names)
            lines.append(text if len(args.n) == 1 else f"n={n}: {text}")
    _write(json.dumps(lines, indent=2) if args.format == "json" else "\n".join(lines), args.output)
    return 0


def _terms_json(poly) -> list:
    if hasattr(poly, "sorted_terms"):
        return [{"exponents": list(e), "coeff": encode_value(c)} for e, c in poly.sorted_terms()]
    return [{"exponents": [k], "coeff": encode_value(c)} for k, c in enumerate(poly.coeffs) if c != 0]


def cmd_eval(args) -> int:
    evaluator = FAMILIES[args.family][0]
    out = []
    for n in args.n:
        value = evaluator(n, args)
        if args.format == "json":
            out.append({"family": args.family, "n": n, "exact": encode_value(value), "float": _float_string(value)})
        else:
            out.extend([str(value), _float_string(value)] if len(args.n) == 1 else [f"n={n}: {value} {_float_string(value)}"])
    _write(json.dumps(out, indent=2) if args.format == "json" else "\n".join(out), args.output)
    return 0


def _emit_reports(reports, args) -> int:
    failed = [r for r in reports if not r.passed]
    if args.format == "json":
        _write(reports_to_json(reports), args.output)
    elif args.format == "csv":
        _write(reports_to_csv(reports).rstrip("\n"), args.output)
    else:
        lines = [f"{len(reports)} reports, {len(reports) - len(failed)} passed, {len(failed)} failed"]
        for r in failed:
            note = f" ({r.note})" if r.note else ""
            lines.append(f"FAIL {r.identity} {r.parameters} deviation={r.max_abs_deviation}{note}")
        _write("\n".join(lines), args.output)
    return 0 if reports and not failed else 1


def cmd_verify(args) -> int:
    opts = SuiteOptions(m=args.m, n=args.n, order=args.order, grid=args.grid)
    return _emit_reports(run_suite(args.suite, opts, jobs=args.jobs), args)


def cmd_asymptotic(args) -> int:
    extra = {
        "hermite_ns": args.hermite_ns,
        "legendre_ns": args.legendre_ns,
        "gammas": args.gammas,
        "gegenbauer_ns": args.gegenbauer_ns,
        "gegenbauer_x": args.gegenbauer_x,
    }
    if args.points is not None:
        extra["hermite_points"] = extra["legendre_points"] = args.points
    opts = SuiteOptions(extra=extra)
    return _emit_reports(run_suite("asymptotic", opts, jobs=args.jobs), args)


def _grid_arguments(family: str, grid, args):
    """Yield (label, namespace) pairs covering the grid for the family's arguments."""
    if family in ("legendre", "gegenbauer"):
        for x in grid:
            yield {"x": x}
    elif family in ("hermite-multivar", "multivar-u", "legendre-multivar"):
        p = args.p or 2
        for xs in itertools.product(grid, repeat=p):
            yield {"xs": xs}
    else:
        for x, y in itertools.product(grid, repeat=2):
            yield {"x": x, "y": y}


def cmd_table(args) -> int:
    evaluator = FAMILIES[args.family][0]
    rows = []
    for point in _grid_arguments(args.family, args.grid, args):
        ns = argparse.Namespace(**{**vars(args), **point})
        for n in args.n:
            try:
                value = evaluator(n, ns)
            except DomainError as exc:
                rows.append({"n": n, **point, "exact": None, "float": None, "error": str(exc)})
                continue
            rows.append({"n": n, **point, "exact": value, "float": _float_string(value)})
    if args.format == "json":
        text = json.dumps([{k: encode_value(v) for k, v in r.items()} for r in rows], indent=2)
    else:
        keys = [k for k in rows[0] if k != "error"] if rows else []
        lines = [",".join(keys)]
        for r in rows:
            cells = []
            for k in keys:
                v = r.get(k)
                cells.append("[" + " ".join(str(x) for x in v) + "]" if isinstance(v, tuple) else "" if v is None else str(v))
            lines.append(",".join(cells))
        text = "\n".join(lines)
    _write(text, args.output)
    return 1 if any("error" in r for r in rows) else 0


# --- parser -----------------------------------------------------------------------


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=parse_range, required=True, help="degree or degree range")
    p.add_argument("--m", type=int, help="lacunarity")
    p.add_argument("--p", type=int, help="number of variables")
    p.add_argument("--x", type=parse_rational)
    p.add_argument("--y", type=parse_rational)
    p.add_argument("--xs", type=parse_rational_list, help="comma-separated arguments")
    p.add_argument("--gamma", type=parse_rational)


def _output_args(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="legendre-like", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print the exact monomial table")
    _family_args(p)
    _output_args(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("eval", help="exact and floating value at a point")
    _family_args(p)
    _output_args(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--m", type=parse_range, help="derivative order / lacunarity range")
    p.add_argument("--n", type=parse_range, help="degree or shift range")
    p.add_argument("--order", type=int, help="series truncation order")
    p.add_argument("--grid", type=parse_grid, default=SMALL_GRID, help="'small' or comma-separated rationals")
    p.add_argument("--jobs", type=int, default=1)
    _output_args(p, ("summary", "json", "csv"), "summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="sweep a family over a grid")
    _family_args(p)
    p.add_argument("--grid", type=parse_grid, default=SMALL_GRID)
    _output_args(p, ("csv", "json"), "csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("asymptotic", help="large-degree and large-index limits")
    p.add_argument("--hermite-ns", type=parse_range, default=ASYMPTOTIC_DEFAULTS["hermite_ns"])
    p.add_argument("--legendre-ns", type=parse_range, default=ASYMPTOTIC_DEFAULTS["legendre_ns"])
    p.add_argument("--gegenbauer-ns", type=parse_range, default=ASYMPTOTIC_DEFAULTS["gegenbauer_ns"])
    p.add_argument("--gegenbauer-x", type=parse_rational, default=ASYMPTOTIC_DEFAULTS["gegenbauer_x"])
    p.add_argument("--gammas", type=parse_rational_list, default=ASYMPTOTIC_DEFAULTS["gammas"])
    p.add_argument("--points", type=_parse_points, help="x:y pairs, e.g. 1:1,2:1")
    p.add_argument("--jobs", type=int, default=1)
    _output_args(p, ("summary", "json", "csv"), "summary")
    p.set_defaults(func=cmd_asymptotic)
    for command_parser in (parser, *sub.choices.values()):
        command_parser._negative_number_matcher = _NEGATIVE_LITERAL
    return parser


def _parse_points(text: str) -> tuple[tuple[Fraction, Fraction], ...]:
    out = []
    for item in text.split(","):
        x, sep, y = item.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected x:y, got {item!r}")
        out.append((parse_rational(x), parse_rational(y)))
    return tuple(out)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (DomainError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    return 1


if __name__ == "__main__":
    sys.exit(main())
