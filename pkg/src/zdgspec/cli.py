"""Command-line front end.

Subcommands: spectrum, analyze, divisor-graph, graph, verify, survey.
Exit codes: 0 ok, 1 verification failure, 2 invalid n, 3 oracle cap
exceeded, 4 I/O error. ZDG_ORACLE_CAP overrides the brute-force vertex cap.

Output is deliberately canonical: fixed JSON key order, floats at 12
significant digits, exact integers without a decimal point, so records
diff cleanly and re-serializing a parsed record is byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TextIO

from .analysis import AnalysisReport, analyze_assembly
from .divisor_graph import build_divisor_graph, require_composite, weighted_laplacian
from .eigen import SpectrumMultiset, max_deviation
from .errors import EmptyGraphError, OracleCapError
from .join_spectrum import (
    brute_spectrum,
    oracle_cap,
    prime_power_spectrum,
    reduced_spectrum,
)
from .numtheory import factorize, is_prime
from .zdg_explicit import build_zero_divisor_graph, expected_vertex_count

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INVALID_N = 2
EXIT_CAP = 3
EXIT_IO = 4

CSV_HEADER = (
    "n,vertex_count,mu,lambda,kappa,delta,Delta,"
    "integral,comp_disconn,lam_eq_order,mu_eq_kappa,spectrum"
)


# ---------------------------------------------------------------------------
# canonical formatting


def fmt_number(x: float | int | None) -> str:
    """12 significant digits; integers (and integral floats) without a
    decimal point; None becomes JSON null."""
    if x is None:
        return "null"
    if isinstance(x, int):
        return str(x)
    if x == int(x):
        return str(int(x))
    return format(x, ".12g")


def fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _spectrum_json(spectrum: SpectrumMultiset) -> str:
    items = ",".join(
        '{"value":%s,"multiplicity":%d,"exact":%s}'
        % (fmt_number(e.value), e.multiplicity, fmt_bool(e.exact))
        for e in spectrum.entries
    )
    return "[" + items + "]"


def _spectrum_compact(spectrum: SpectrumMultiset) -> list[str]:
    return [f"{fmt_number(e.value)}:{e.multiplicity}" for e in spectrum.entries]


def record_json(
    report: AnalysisReport,
    spectrum: SpectrumMultiset,
    method: str,
    quotient_flags: bool = False,
) -> str:
    """One canonical JSON record; quotient_flags widens it to every report
    field for survey rows."""
    parts = [
        f'"n":{report.n}',
        f'"vertex_count":{report.vertex_count}',
        f'"spectrum":{_spectrum_json(spectrum)}',
        f'"mu":{fmt_number(report.mu)}',
        f'"lambda":{fmt_number(report.lambda_)}',
        f'"kappa":{report.kappa}',
        f'"delta":{report.delta_min}',
        f'"Delta":{report.Delta_max}',
        f'"laplacian_integral":{fmt_bool(report.laplacian_integral)}',
        f'"complement_disconnected":{fmt_bool(report.complement_disconnected)}',
        f'"lambda_equals_order":{fmt_bool(report.lambda_equals_order)}',
        f'"mu_equals_kappa":{fmt_bool(report.mu_equals_kappa)}',
    ]
    if quotient_flags:
        parts.append(f'"mu_from_quotient":{fmt_bool(report.mu_from_quotient)}')
        parts.append(f'"lambda_from_quotient":{fmt_bool(report.lambda_from_quotient)}')
    parts.append(f'"method":"{method}"')
    return "{" + ",".join(parts) + "}"


def record_csv(report: AnalysisReport, spectrum: SpectrumMultiset) -> str:
    mu = "" if report.mu is None else fmt_number(report.mu)
    cells = [
        str(report.n),
        str(report.vertex_count),
        mu,
        fmt_number(report.lambda_),
        str(report.kappa),
        str(report.delta_min),
        str(report.Delta_max),
        fmt_bool(report.laplacian_integral),
        fmt_bool(report.complement_disconnected),
        fmt_bool(report.lambda_equals_order),
        fmt_bool(report.mu_equals_kappa),
        ";".join(_spectrum_compact(spectrum)),
    ]
    return ",".join(cells)


def record_text(report: AnalysisReport, spectrum: SpectrumMultiset, method: str) -> str:
    mu = "undefined" if report.mu is None else fmt_number(report.mu)
    lines = [
        f"n = {report.n}",
        f"vertex_count = {report.vertex_count}",
        "spectrum = " + " ".join(_spectrum_compact(spectrum)),
        f"mu = {mu}",
        f"lambda = {fmt_number(report.lambda_)}",
        f"kappa = {report.kappa}",
        f"delta = {report.delta_min}",
        f"Delta = {report.Delta_max}",
        f"laplacian_integral = {fmt_bool(report.laplacian_integral)}",
        f"complement_disconnected = {fmt_bool(report.complement_disconnected)}",
        f"lambda_equals_order = {fmt_bool(report.lambda_equals_order)}",
        f"mu_equals_kappa = {fmt_bool(report.mu_equals_kappa)}",
        f"mu_from_quotient = {fmt_bool(report.mu_from_quotient)}",
        f"lambda_from_quotient = {fmt_bool(report.lambda_from_quotient)}",
        f"method = {method}",
    ]
    return "\n".join(lines)


def emit_record(
    report: AnalysisReport,
    spectrum: SpectrumMultiset,
    method: str,
    fmt: str,
    out: TextIO,
) -> None:
    if fmt == "json":
        out.write(record_json(report, spectrum, method) + "\n")
    elif fmt == "csv":
        out.write(CSV_HEADER + "\n" + record_csv(report, spectrum) + "\n")
    else:
        out.write(record_text(report, spectrum, method) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def _composites(n_min: int, n_max: int) -> list[int]:
    return [n for n in range(max(n_min, 4), n_max + 1) if not is_prime(n)]


def _fan_out(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_spectrum(args: argparse.Namespace) -> int:
    require_composite(args.n)
    fact = factorize(args.n)
    method = args.method
    if method == "auto":
        method = "closed-form" if fact.is_prime_power else "reduced"
    if method == "closed-form" and not fact.is_prime_power:
        print(f"closed form needs a prime power, {args.n} is not one", file=sys.stderr)
        return EXIT_INVALID_N
    report, assembly = analyze_assembly(args.n)
    if method == "closed-form":
        ((p, t),) = fact.factors
        spectrum = prime_power_spectrum(p, t)
        label = "closed_form"
    elif method == "brute":
        spectrum = brute_spectrum(args.n, cap=args.cap)
        label = "brute"
    else:
        spectrum = assembly.total
        label = "reduced"
    emit_record(report, spectrum, label, args.format, sys.stdout)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    report, assembly = analyze_assembly(args.n)
    emit_record(report, assembly.total, "reduced", args.format, sys.stdout)
    return EXIT_OK


def cmd_divisor_graph(args: argparse.Namespace) -> int:
    g = build_divisor_graph(args.n)
    out = sys.stdout
    out.write(f"n = {g.n}\n")
    out.write("vertices = " + " ".join(str(d) for d in g.vertices) + "\n")
    out.write("weights = " + " ".join(str(w) for w in g.weights) + "\n")
    out.write("edges:\n")
    for a, b in g.edges():
        out.write(f"{a} {b}\n")
    out.write("L:\n")
    for row in weighted_laplacian(g):
        out.write(" ".join(str(int(v)) for v in row) + "\n")
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    require_composite(args.n)
    z = expected_vertex_count(args.n)
    cap = oracle_cap()
    if z > cap:
        raise OracleCapError(
            f"explicit graph for n={args.n} has {z} vertices, above the cap {cap}"
        )
    g = build_zero_divisor_graph(args.n)
    if args.edges:
        for a, b in g.edges():
            sys.stdout.write(f"{a} {b}\n")
    else:
        sys.stdout.write(f"n = {args.n}\n")
        sys.stdout.write(f"vertices = {g.order}\n")
        sys.stdout.write(f"edges = {g.edge_count}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        print(f"invalid range [{args.n_min}, {args.n_max}]", file=sys.stderr)
        return EXIT_INVALID_N

    def check(n: int) -> tuple[int, str, float]:
        try:
            brute = brute_spectrum(n, cap=args.cap)
        except OracleCapError:
            return n, "skip", 0.0
        total = reduced_spectrum(n).total
        dev = max_deviation(total, brute)
        if dev is None:
            return n, "fail", float("inf")
        tol = 1e-8 * max(1.0, total.max_value)
        return n, ("pass" if dev <= tol else "fail"), dev

    results = _fan_out(check, _composites(args.n_min, args.n_max), args.jobs)
    passed = failed = skipped = 0
    for n, status, dev in results:
        if status == "skip":
            skipped += 1
            print(f"SKIP n={n} (oracle cap)")
        elif status == "pass":
            passed += 1
            print(f"PASS n={n} max_dev={dev:.3e}")
        else:
            failed += 1
            print(f"FAIL n={n} max_dev={dev:.3e}")
    if skipped:
        print(f"skipped {skipped} (oracle cap)")
    print(f"checked {passed + failed}, passed {passed}, failed {failed}")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAIL


def cmd_survey(args: argparse.Namespace) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        print(f"invalid range [{args.n_min}, {args.n_max}]", file=sys.stderr)
        return EXIT_INVALID_N
    rows = _fan_out(
        analyze_assembly, _composites(args.n_min, args.n_max), args.jobs
    )
    lines: list[str] = []
    if args.format == "csv":
        lines.append(CSV_HEADER)
        for report, assembly in rows:
            lines.append(record_csv(report, assembly.total))
    else:
        for report, assembly in rows:
            lines.append(record_json(report, assembly.total, "reduced", True))
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser and entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdgspec",
        description="Laplacian spectra of zero-divisor graphs of Z_n "
        "via the weighted divisor-graph reduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser(
        "spectrum", help="Laplacian spectrum and invariants for one n"
    )
    sp.add_argument("n", type=int)
    sp.add_argument(
        "--method",
        choices=["auto", "reduced", "brute", "closed-form"],
        default="auto",
        help="auto picks the closed form for prime powers, reduced otherwise",
    )
    sp.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sp.add_argument("--cap", type=int, default=None, help="brute-force vertex cap")
    sp.set_defaults(func=cmd_spectrum)

    an = sub.add_parser("analyze", help="full analysis report for one n")
    an.add_argument("n", type=int)
    an.add_argument("--format", choices=["json", "csv", "text"], default="text")
    an.set_defaults(func=cmd_analyze)

    dg = sub.add_parser(
        "divisor-graph",
        help="weighted divisor graph: vertices, weights, edges, Laplacian",
    )
    dg.add_argument("n", type=int)
    dg.set_defaults(func=cmd_divisor_graph)

    gr = sub.add_parser("graph", help="explicit zero-divisor graph (oracle)")
    gr.add_argument("n", type=int)
    gr.add_argument(
        "--edges", action="store_true", help="dump the edge list, one 'x y' per line"
    )
    gr.set_defaults(func=cmd_graph)

    ve = sub.add_parser(
        "verify", help="compare reduced vs brute spectra over a range of n"
    )
    ve.add_argument("n_min", type=int)
    ve.add_argument("n_max", type=int)
    ve.add_argument("--cap", type=int, default=None, help="brute-force vertex cap")
    ve.add_argument("--jobs", type=int, default=1, help="worker threads")
    ve.set_defaults(func=cmd_verify)

    su = sub.add_parser(
        "survey",
        help="one row per composite n",
        description="CSV columns: n, vertex_count, mu, lambda, kappa, delta, "
        "Delta, integral, comp_disconn, lam_eq_order, mu_eq_kappa, spectrum "
        "(semicolon-joined value:multiplicity pairs). JSON rows additionally "
        "carry mu_from_quotient and lambda_from_quotient.",
    )
    su.add_argument("n_min", type=int)
    su.add_argument("n_max", type=int)
    su.add_argument("--out", default=None, help="output path (default stdout)")
    su.add_argument("--format", choices=["csv", "json"], default="csv")
    su.add_argument("--jobs", type=int, default=1, help="worker threads")
    su.set_defaults(func=cmd_survey)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmptyGraphError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID_N
    except OracleCapError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(exc, file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
