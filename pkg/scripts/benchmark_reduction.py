#!/usr/bin/env python3
"""Time the divisor-class reduction against the explicit-matrix oracle.

The reduced path diagonalizes a k x k quotient plus bookkeeping, where k is
the number of proper divisors of n; the oracle diagonalizes the full
(n - phi(n) - 1) x (n - phi(n) - 1) Laplacian.  This script reports both
timings over a range and on a few large highly composite n where only the
reduced path is feasible.
"""

import argparse
import time

from zdgspec.join_spectrum import brute_spectrum, reduced_spectrum
from zdgspec.numtheory import euler_phi, is_prime


def time_once(fn, *args) -> tuple[float, object]:
    start = time.perf_counter()
    value = fn(*args)
    return time.perf_counter() - start, value


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min", type=int, default=4, dest="n_min")
    parser.add_argument("--max", type=int, default=400, dest="n_max")
    parser.add_argument(
        "--stride",
        type=int,
        default=1,
        help="sample every stride-th composite in the range",
    )
    parser.add_argument(
        "--oracle-cap",
        type=int,
        default=1200,
        help="skip the explicit oracle above this many vertices",
    )
    parser.add_argument(
        "--large",
        type=int,
        nargs="*",
        default=[30030, 510510],
        help="additional n to run through the reduced path alone",
    )
    args = parser.parse_args()

    composites = [n for n in range(args.n_min, args.n_max + 1) if not is_prime(n)]
    composites = composites[:: args.stride]

    print(f"{'n':>8} {'|V|':>8} {'k':>4} {'reduced':>12} {'oracle':>12} {'ratio':>8}")
    for n in composites:
        z = n - euler_phi(n) - 1
        t_red, assembly = time_once(reduced_spectrum, n)
        k = len(assembly.contributions)
        if z <= args.oracle_cap:
            t_brute, _ = time_once(brute_spectrum, n)
            ratio = t_brute / t_red if t_red > 0 else float("inf")
            print(
                f"{n:>8} {z:>8} {k:>4} {t_red * 1e3:>10.2f}ms"
                f" {t_brute * 1e3:>10.2f}ms {ratio:>7.1f}x"
            )
        else:
            print(
                f"{n:>8} {z:>8} {k:>4} {t_red * 1e3:>10.2f}ms"
                f" {'(capped)':>12} {'':>8}"
            )

    for n in args.large:
        if is_prime(n):
            continue
        z = n - euler_phi(n) - 1
        t_red, assembly = time_once(reduced_spectrum, n)
        k = len(assembly.contributions)
        print(
            f"{n:>8} {z:>8} {k:>4} {t_red * 1e3:>10.2f}ms"
            f" {'(reduced only)':>14}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
