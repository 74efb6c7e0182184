#!/usr/bin/env python3
"""Census of Laplacian-integral zero-divisor graphs.

Sweeps composite n in a range, decides integrality through the exact
integer characteristic polynomial of the quotient (no floating-point
snapping), and tallies the outcomes by the multiplicative shape of n.
Prime powers and products of two primes are always integral; the
interesting column is everything else.
"""

import argparse
from collections import Counter

from zdgspec.join_spectrum import exact_total_spectrum
from zdgspec.numtheory import factorize, is_prime


def shape(n: int) -> str:
    fact = factorize(n)
    if fact.is_prime_power:
        return "p^t"
    if fact.is_product_of_two_distinct_primes:
        return "pq"
    if len(fact.primes) == 2:
        return "p^a q^b"
    return "3+ primes"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min", type=int, default=4, dest="n_min")
    parser.add_argument("--max", type=int, default=2000, dest="n_max")
    parser.add_argument(
        "--show-spectra",
        action="store_true",
        help="print the spectrum of every integral n found",
    )
    args = parser.parse_args()

    integral = []
    tally: Counter[tuple[str, bool]] = Counter()
    for n in range(args.n_min, args.n_max + 1):
        if is_prime(n):
            continue
        exact = exact_total_spectrum(n)
        tally[(shape(n), exact is not None)] += 1
        if exact is not None:
            integral.append((n, exact))

    print(f"composite n in [{args.n_min}, {args.n_max}]")
    print(f"{'shape':>10} {'integral':>9} {'not':>6}")
    for label in ["p^t", "pq", "p^a q^b", "3+ primes"]:
        yes = tally[(label, True)]
        no = tally[(label, False)]
        if yes or no:
            print(f"{label:>10} {yes:>9} {no:>6}")

    exceptional = [
        (n, s) for n, s in integral if shape(n) not in ("p^t", "pq")
    ]
    print(f"\nintegral outside the two guaranteed families: "
          f"{len(exceptional)}")
    for n, spectrum in exceptional:
        pairs = ", ".join(
            f"{int(v)}^{m}" if m > 1 else f"{int(v)}"
            for v, m in spectrum.pairs()
        )
        print(f"  n={n}: {pairs}")
    if args.show_spectra:
        for n, spectrum in integral:
            pairs = "; ".join(f"{int(v)}:{m}" for v, m in spectrum.pairs())
            print(f"n={n} [{shape(n)}] {pairs}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
