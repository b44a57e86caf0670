"""Command-line front end.

Subcommands: ``verify`` (golden-section check at one vertex), ``scan``
(the same check at every vertex of a patch), ``fib`` (convergent table),
``assess`` (nearest convergent to a given ratio) and ``render`` (SVG
figure).  Exit codes: 0 success or verified, 1 verification failed,
2 usage or parse error, 3 output could not be written.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .construction import build_cluster, make_report, verify_phi
from .exact import HALF_EVEN, TRUNCATE, format_fraction, parse_rational
from .fibonacci import assess_nearest, convergent
from .render import render_svg
from .tessellation import HexIndex, VertexRef, enumerate_vertices

# decimals always print with "."; parse_rational additionally accepts ","
DECIMAL_SEPARATOR = "."


def _vertex_arg(text: str) -> VertexRef:
    try:
        return VertexRef.from_string(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive_rational_arg(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive value, got {text!r}")
    return value


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text, 10)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
        if value < minimum:
            raise argparse.ArgumentTypeError(f"expected an integer >= {minimum}, got {text!r}")
        return value

    return parse


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_verify(args: argparse.Namespace) -> int:
    cluster = build_cluster(args.vertex, args.side)
    report = make_report(cluster, frac_digits=args.digits)
    ok = report.phi_exact_ok and report.equal_lengths_ok
    if args.json:
        _print_json(report.to_json())
        return 0 if ok else 1
    print(f"vertex = {report.vertex}")
    print(f"side = {format_fraction(report.side)}")
    print(f"segments = {len(report.segments)}")
    for segment in report.segments:
        ab_ok, ao_ok = verify_phi(segment)
        if not ab_ok:
            print(f"segment {segment.k}: |AB|^2 == Phi^2 * |AO|^2 fails")
        if not ao_ok:
            print(f"segment {segment.k}: |AO|^2 == Phi^2 * |OB|^2 fails")
    if not report.equal_lengths_ok:
        distinct = len({segment.ab2 for segment in report.segments})
        print(f"segments have {distinct} distinct |AB|^2 values")
    if report.ratio_decimal is not None:
        print(f"ratio = {report.ratio_decimal}")
    if report.fib_assessment is not None:
        nearest = report.fib_assessment
        print(
            f"nearest convergent = F({nearest.n})/F({nearest.n - 1})"
            f" = {format_fraction(nearest.ratio)}"
            f", variance = {nearest.variance_decimal(args.digits)}"
        )
    print(f"PHI-EXACT: {'PASS' if report.phi_exact_ok else 'FAIL'}")
    print(f"EQUAL-LENGTHS: {'PASS' if report.equal_lengths_ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_scan(args: argparse.Namespace) -> int:
    vertices = enumerate_vertices(args.radius)
    failures = []
    results = []
    for vertex in vertices:
        report = make_report(build_cluster(vertex, args.side))
        ok = report.phi_exact_ok and report.equal_lengths_ok
        results.append((vertex, ok))
        if not ok:
            failures.append(vertex)
    if args.json:
        _print_json(
            {
                "radius": args.radius,
                "side": format_fraction(args.side),
                "decimal_separator": DECIMAL_SEPARATOR,
                "vertices": [{"vertex": str(v), "ok": ok} for v, ok in results],
                "total": len(results),
                "failures": [str(v) for v in failures],
                "all_ok": not failures,
            }
        )
    else:
        for vertex, ok in results:
            print(f"{vertex} {'PASS' if ok else 'FAIL'}")
        print(f"vertices = {len(results)}")
        print(f"failures = {len(failures)}")
        print(f"SCAN: {'PASS' if not failures else 'FAIL'}")
    return 0 if not failures else 1


def _cmd_fib(args: argparse.Namespace) -> int:
    rows = [convergent(n) for n in range(2, args.max + 1)]
    if args.json:
        _print_json(
            {
                "digits": args.digits,
                "rounding": args.rounding,
                "decimal_separator": DECIMAL_SEPARATOR,
                "rows": [
                    {
                        "n": row.n,
                        "fn": row.fn,
                        "fn_1": row.fn_1,
                        "ratio": row.ratio_decimal(args.digits, args.rounding),
                        "variance": row.variance_decimal(args.digits, args.rounding),
                    }
                    for row in rows
                ],
            }
        )
        return 0
    print(f"# digits = {args.digits}")
    print(f"# rounding = {args.rounding}")
    print("n\tF_n\tF_n-1\tratio\tvariance")
    for row in rows:
        ratio = row.ratio_decimal(args.digits, args.rounding)
        var = row.variance_decimal(args.digits, args.rounding)
        print(f"{row.n}\t{row.fn}\t{row.fn_1}\t{ratio}\t{var}")
    return 0


def _cmd_assess(args: argparse.Namespace) -> int:
    nearest = assess_nearest(args.ratio)
    distance = abs(nearest.ratio - args.ratio)
    print(f"target = {format_fraction(args.ratio)}")
    print(f"n = {nearest.n}")
    print(f"ratio = {format_fraction(nearest.ratio)}")
    print(f"ratio_decimal = {nearest.ratio_decimal(10, TRUNCATE)}")
    print(f"distance = {format_fraction(distance)}")
    print(f"variance = {nearest.variance_decimal(10, TRUNCATE)}")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    cluster = build_cluster(args.vertex, args.side)
    svg = render_svg(make_report(cluster), cluster)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {args.out} ({len(svg)} bytes)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexphi",
        description="Exact golden-section checks on tangent segments of hexagon circle clusters.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_vertex_and_side(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--vertex",
            type=_vertex_arg,
            default=VertexRef(HexIndex(0, 0), 0),
            metavar="Q,R,C",
            help="tessellation vertex as hexagon q,r and corner c (default 0,0,0)",
        )
        sub.add_argument(
            "--side",
            type=_positive_rational_arg,
            default=Fraction(1),
            metavar="P/Q",
            help="hexagon side length, a positive rational (default 1)",
        )

    verify = subparsers.add_parser("verify", help="check one vertex exactly")
    add_vertex_and_side(verify)
    verify.add_argument("--digits", type=_int_at_least(1), default=10, metavar="D")
    verify.add_argument("--json", action="store_true", help="emit the full report as JSON")
    verify.set_defaults(handler=_cmd_verify)

    scan = subparsers.add_parser("scan", help="check every vertex of a hexagonal patch")
    scan.add_argument("--radius", type=_int_at_least(0), required=True, metavar="N")
    scan.add_argument(
        "--side",
        type=_positive_rational_arg,
        default=Fraction(1),
        metavar="P/Q",
        help="hexagon side length, a positive rational (default 1)",
    )
    scan.add_argument("--json", action="store_true")
    scan.set_defaults(handler=_cmd_scan)

    fib = subparsers.add_parser("fib", help="Fibonacci convergent table with variances")
    fib.add_argument("--max", type=_int_at_least(2), required=True, metavar="N")
    fib.add_argument("--digits", type=_int_at_least(1), default=10, metavar="D")
    fib.add_argument("--rounding", choices=(TRUNCATE, HALF_EVEN), default=TRUNCATE)
    fib.add_argument("--json", action="store_true")
    fib.set_defaults(handler=_cmd_fib)

    assess = subparsers.add_parser("assess", help="nearest convergent to a given ratio")
    assess.add_argument("--ratio", type=_positive_rational_arg, required=True, metavar="X")
    assess.set_defaults(handler=_cmd_assess)

    render = subparsers.add_parser("render", help="write the construction as an SVG figure")
    render.add_argument("--out", required=True, metavar="FILE")
    add_vertex_and_side(render)
    render.set_defaults(handler=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
