"""Command-line interface.

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 I/O failure.
All numbers are printed as exact integers or "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence as Seq

from . import identities, inversion, partitions, powerseries, stirling
from ._arith import format_rational, parse_rational
from .errors import ConsistencyError, DomainError, UsageError
from .powerseries import Series

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _IOFailure(Exception):
    pass


def _read_json(path: str) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from exc


def _dump(obj: Any) -> str:
    return json.dumps(obj) + "\n"


def _load_series(spec: str, order: int | None, t: str | None) -> Series:
    """A named series at ``order`` or a series JSON file."""
    if spec in powerseries.NAMED_SERIES:
        if order is None:
            raise UsageError(f"named series {spec!r} needs an order")
        return powerseries.named_series(spec, order, t)
    return powerseries.series_from_json(_read_json(spec))


def cmd_stirling(args: argparse.Namespace) -> int:
    n, k = args.n, args.k
    if not 0 <= k <= n:
        raise UsageError(f"need n >= k >= 0, got n={n}, k={k}")
    if args.method == "recurrence":
        print(stirling.stirling_recurrence(args.kind, n, k))
    elif args.method == "gf":
        print(stirling.stirling_via_gf(args.kind, n, k))
    elif args.method == "partition":
        if k < 1:
            raise DomainError("the partition formula needs k >= 1")
        print(stirling.stirling_partition_formula(args.kind, n - k, k))
    elif args.method == "shift":
        if not 1 <= k < n:
            raise DomainError("the shift identity needs 1 <= k < n")
        print(stirling.stirling_shift(args.kind, k, n - k))
    else:
        routes = stirling.stirling_all_routes(args.kind, n, k)
        for value in routes.values():
            print(value)
        agree = len(set(routes.values())) == 1
        print("AGREE" if agree else "DISAGREE")
        if not agree:
            print("routes: " + ", ".join(routes), file=sys.stderr)
            return EXIT_DOMAIN
    return EXIT_OK


def cmd_coeff(args: argparse.Namespace) -> int:
    f = _load_series(args.f, args.order if args.order is not None else args.m, args.t)
    if args.exp is None:
        poly = powerseries.coeff_pow_poly_t(f, args.m)
        sys.stdout.write(_dump({"var": "t", "coeffs": [format_rational(c) for c in poly.coeffs]}))
    else:
        if args.m > f.order:
            raise UsageError(f"m = {args.m} exceeds series order {f.order}")
        print(format_rational(powerseries.series_pow(f, parse_rational(args.exp)).coeffs[args.m]))
    return EXIT_OK


def cmd_reverse(args: argparse.Namespace) -> int:
    alpha = _load_series(args.input, args.order, args.t)
    if args.lagrange is not None:
        n, k = args.lagrange
        print(format_rational(powerseries.series_reverse_lagrange(alpha, n, k)))
        return EXIT_OK
    inv = powerseries.series_reverse_full(alpha)
    if args.check and powerseries.series_compose(alpha, inv) != Series.x(alpha.order):
        raise ConsistencyError("composition with the computed inverse is not the identity")
    sys.stdout.write(_dump(powerseries.series_to_json(inv)))
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    seq = inversion.sequence_from_json(_read_json(args.input))
    N = len(seq)
    if N == 0:
        out = inversion.Sequence(seq.offset, [])
    else:
        f = _load_series(args.f, max(N - 1, 0), args.t)
        if f.order < N - 1:
            raise UsageError(f"series order {f.order} too small for {N} terms")
        kernel = inversion.build_kernel(f, N, args.dir, descriptor=args.f)
        out = inversion.transform_apply(kernel, seq)
    _write_text(args.out, _dump(inversion.sequence_to_json(out)))
    return EXIT_OK


def cmd_selfinverse(args: argparse.Namespace) -> int:
    odd = [parse_rational(p) for p in args.odd.split(",")] if args.odd.strip() else []
    result = inversion.self_inverse_complete(odd, args.order)
    print(result)
    return EXIT_OK


def cmd_partitions(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    if args.count:
        print(partitions.partition_count(args.n))
        return EXIT_OK
    for mv in partitions.enumerate_multiplicity_vectors(args.n):
        print(mv)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 4:
        raise UsageError("--max-n must be >= 4")
    if args.only:
        unknown = set(args.only) - set(identities.IDENTITY_IDS) - set(identities.EXTRA_IDS)
        if unknown:
            raise UsageError(f"unknown identity ids: {', '.join(sorted(unknown))}")
    report = identities.run_suite(args.max_n, args.seed, args.only)
    for ident, row in report.summary().items():
        status = "PASS" if row["fail"] == 0 else "FAIL"
        print(f"{status} {ident} {row['pass']}/{row['total']}")
    for r in report.failures():
        print(f"  failed {r.identity_id} {r.parameters}: {r.lhs} != {r.rhs}", file=sys.stderr)
    print(f"total {report.total} pass {report.passed} fail {report.failed}")
    if args.json:
        _write_text(args.json, json.dumps(report.to_dict(), indent=2) + "\n")
    return EXIT_OK if report.failed == 0 else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invseries", description="Exact power series inversion toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", help="Stirling numbers by one or all routes")
    p.add_argument("--kind", type=int, choices=(1, 2), required=True, help="1: unsigned first kind, 2: second kind")
    p.add_argument("--method", choices=("recurrence", "gf", "partition", "shift", "all"), default="recurrence")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("coeff", help="[x^m] f^t as a polynomial in t, or [x^m] f^e for a given e")
    p.add_argument("--f", required=True, help="named series or path to series JSON")
    p.add_argument("--t", help="parameter for binomial_t")
    p.add_argument("--order", type=int, help="order for a named series (default: m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--exp", help="exact rational exponent; omit for the polynomial in t")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("reverse", help="compositional inverse of a series")
    p.add_argument("--in", dest="input", required=True, help="series JSON path or named series")
    p.add_argument("--order", type=int, help="order for a named series")
    p.add_argument("--t", help="parameter for binomial_t")
    p.add_argument("--check", action="store_true", help="verify alpha(inverse) == x")
    p.add_argument("--lagrange", type=int, nargs=2, metavar=("N", "K"),
                   help="print only [x^N] (inverse)^K by Lagrange inversion")
    p.set_defaults(func=cmd_reverse)

    p = sub.add_parser("transform", help="apply one direction of the f-kernel inversion pair")
    p.add_argument("--f", required=True, help="named series or path to series JSON")
    p.add_argument("--t", help="parameter for binomial_t")
    p.add_argument("--dir", choices=("fwd", "inv"), required=True)
    p.add_argument("--in", dest="input", required=True, help="sequence JSON path")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("selfinverse", help="complete a self-inverse series from its odd coefficients")
    p.add_argument("--odd", required=True, help='comma-separated "a1,a3,a5,..."')
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_selfinverse)

    p = sub.add_parser("partitions", help="multiplicity vectors of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only p(n)")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--only", action="append", metavar="ID")
    p.add_argument("--json", metavar="PATH", help="write the full report as JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Seq[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConsistencyError) as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except _IOFailure as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
