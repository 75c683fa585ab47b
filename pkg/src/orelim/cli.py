"""Command-line front end.

Exit codes: 0 success, 1 failed check or nonzero residual, 2 usage or parse
error, 3 a mathematical precondition failed (e.g. no LU decomposition).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .infmat import CatalogError, NoLU, catalog, lu_minor, minor
from .oresystem import OreParseError, eq_residual, parse_orepoly, system_residual
from .suites import DEFAULT_C, DEFAULT_DEPTH, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MATH = 0, 1, 2, 3


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _rational_list(text: str):
    return tuple(_rational(part) for part in text.split(",") if part.strip())


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _render(m, name, fmt):
    if fmt == "json":
        return m.to_json(name)
    if fmt == "csv":
        return m.to_csv().rstrip("\n")
    return m.pretty()


def cmd_catalog(args, out) -> int:
    try:
        a = catalog(args.name, {"q": args.q} if args.q is not None else None)
    except CatalogError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    print(_render(minor(a, args.n), args.name, args.format), file=out)
    return EXIT_OK


def cmd_lu(args, out) -> int:
    try:
        a = catalog(args.name, {"q": args.q} if args.q is not None else None)
    except CatalogError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    try:
        L, U = lu_minor(a, args.n)
    except NoLU as exc:
        print(f"error: no LU decomposition, leading {exc.k}-minor is singular", file=sys.stderr)
        return EXIT_MATH
    if args.format == "json":
        text = json.dumps({"name": args.name, "n": args.n, "L": L.strings(), "U": U.strings()})
    elif args.format == "csv":
        text = "L\n" + L.to_csv() + "U\n" + U.to_csv().rstrip("\n")
    else:
        text = f"L =\n{L.pretty()}\n\nU =\n{U.pretty()}"
    print(text, file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    depth = args.depth
    if depth is None and os.environ.get("ORELIM_DEPTH"):
        try:
            depth = _positive(os.environ["ORELIM_DEPTH"])
        except argparse.ArgumentTypeError as exc:
            print(f"error: ORELIM_DEPTH {exc}", file=sys.stderr)
            return EXIT_USAGE
    reports = run_suite(args.suite, depth, args.c)
    payload = json.dumps([r.to_dict(timing=not args.no_timing) for r in reports], indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload, file=out)
    failed = [r for r in reports if r.failed]
    for r in failed:
        print(f"FAIL {r.name} {json.dumps(r.parameters)}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_ore_residual(args, out) -> int:
    try:
        p = parse_orepoly(args.poly, args.c)
    except OreParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.k > args.n:
        print(f"error: k={args.k} exceeds n={args.n}", file=sys.stderr)
        return EXIT_USAGE
    res = eq_residual(p, args.n, args.k) if args.k else system_residual(p, args.n)
    print(res.to_string(), file=out)
    return EXIT_FAIL if res else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orelim",
        description="Exact checks of Ore-system LU decompositions and Jacobi identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("catalog", cmd_catalog, "print an n-minor of a named matrix"),
                               ("lu", cmd_lu, "LU-decompose an n-minor of a named matrix")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--name", required=True)
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--q", default=None, help="diagonal value for D_q (a rational or x)")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="run a verification suite, report JSON")
    p.add_argument("--suite", choices=SUITES, default="full")
    p.add_argument("--depth", type=_positive, default=None,
                   help="defaults: " + ", ".join(f"{k} {v}" for k, v in DEFAULT_DEPTH.items()))
    p.add_argument("--c", type=_rational_list, default=DEFAULT_C,
                   help="comma-separated structure constants, e.g. 0,1,2,1/2,-1")
    p.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from reports")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ore-residual", help="residual of the n-th equation (or eq_n^k)")
    p.add_argument("--poly", required=True, help='t-coefficients lowest first, e.g. "1; 2 E^1 H^0"')
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_natural, default=0)
    p.set_defaults(func=cmd_ore_residual)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
