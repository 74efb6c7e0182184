"""Integer arithmetic foundation: factorization, totient, divisors, gcd.

Everything here is exact integer arithmetic on Python ints. Factorization is
deterministic trial division, which is plenty for the desk-scale moduli
(n up to ~10^7) this package targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

gcd = math.gcd


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition of a positive integer.

    ``factors`` is ordered by increasing prime; n == 1 has an empty list.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def smallest_prime(self) -> int:
        if not self.factors:
            raise ValueError("1 has no prime factors")
        return self.factors[0][0]

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    @property
    def is_product_of_two_distinct_primes(self) -> bool:
        return len(self.factors) == 2 and all(e == 1 for _, e in self.factors)

    def divisor_count(self) -> int:
        out = 1
        for _, e in self.factors:
            out *= e + 1
        return out


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).is_prime


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n; phi(1) == 1."""
    out = n
    for p, _ in factorize(n).factors:
        out = out // p * (p - 1)
    return out


def all_divisors(n: int) -> list[int]:
    """All divisors of n >= 1, ascending (1 and n included)."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def proper_divisors(n: int) -> list[int]:
    """Divisors d of n with 1 < d < n, ascending. Requires n >= 2."""
    if n < 2:
        raise ValueError(f"proper_divisors requires n >= 2, got {n}")
    return all_divisors(n)[1:-1]
