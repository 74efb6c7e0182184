"""Derived graph quantities and the number-theoretic characterizations.

Everything here rides on the reduced path: mu and lambda are read off the
assembled spectrum, degree extremes come from the class data (a vertex in
class A_d sees its class neighbors plus all vertices of adjacent classes),
and kappa has a closed form in the factorization of n. The predicates
(complement disconnectedness, lambda = |V|, mu = kappa) are exact number
theory; the numeric spectrum only corroborates them in tests.

Conventions at the degenerate end: Gamma(Z_4) is a single vertex, so mu is
reported as undefined (None) rather than 0, and mu_equals_kappa is False
there and for n = p^2, where the graph is complete and mu = kappa + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisor_graph import require_composite
from .eigen import DEFAULT_COALESCE_TOL
from .join_spectrum import (
    ClassContribution,
    SpectrumAssembly,
    exact_total_spectrum,
    reduced_spectrum,
)
from .numtheory import factorize
from .zdg_explicit import ClassKind

EXTREME_MATCH_RTOL = 1e-8


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    vertex_count: int
    mu: float | None
    lambda_: float
    kappa: int
    delta_min: int
    Delta_max: int
    laplacian_integral: bool
    complement_disconnected: bool
    lambda_equals_order: bool
    mu_equals_kappa: bool
    mu_from_quotient: bool
    lambda_from_quotient: bool


def class_vertex_degree(c: ClassContribution) -> int:
    """Degree of every vertex in one gcd class (equitable, so constant)."""
    inside = c.size - 1 if c.kind is ClassKind.COMPLETE else 0
    return c.neighbor_weight + inside


def degree_extremes(assembly: SpectrumAssembly) -> tuple[int, int]:
    degs = [class_vertex_degree(c) for c in assembly.contributions]
    return min(degs), max(degs)


def edge_count_doubled(assembly: SpectrumAssembly) -> int:
    """Sum of all vertex degrees, i.e. twice the edge count."""
    return sum(c.size * class_vertex_degree(c) for c in assembly.contributions)


def vertex_connectivity(n: int) -> int:
    """Closed form: p - 1 in general, p - 2 for n = p^2 (complete graph)."""
    require_composite(n)
    fact = factorize(n)
    p = fact.smallest_prime
    if len(fact.factors) == 1 and fact.factors[0][1] == 2:
        return p - 2
    return p - 1


def complement_disconnected(n: int) -> bool:
    """The complement of the zero-divisor graph is disconnected exactly for
    n = p*q with distinct primes and for prime powers other than 4."""
    require_composite(n)
    fact = factorize(n)
    if fact.is_product_of_two_distinct_primes:
        return True
    return fact.is_prime_power and n != 4


def lambda_equals_order(n: int) -> bool:
    """The spectral radius attains the vertex count for the same n as
    complement disconnection; the two predicates coincide."""
    return complement_disconnected(n)


def mu_equals_kappa(n: int) -> bool:
    """Algebraic connectivity equals vertex connectivity exactly for
    n = p*q and for prime powers p^t with t >= 3.

    For n = p^2 the graph is complete, where mu = kappa + 1; for n = 4 mu
    is undefined on the single vertex. Both report False.
    """
    require_composite(n)
    fact = factorize(n)
    if fact.is_product_of_two_distinct_primes:
        return True
    return fact.is_prime_power and fact.factors[0][1] >= 3


def algebraic_connectivity(n: int) -> float | None:
    """Second smallest Laplacian eigenvalue; None on the single vertex n=4."""
    return reduced_spectrum(n).total.second_smallest()


def spectral_radius(n: int) -> float:
    return reduced_spectrum(n).total.max_value


def is_laplacian_integral(n: int) -> bool:
    """Exact test through the integer characteristic polynomial.

    Class contributions are integers by construction, so the spectrum is
    integral iff the quotient polynomial factors completely over Z.
    """
    return exact_total_spectrum(n) is not None


def quotient_extremes_check(n: int) -> tuple[bool, bool]:
    """Whether mu and lambda of the whole graph equal the second smallest
    and largest eigenvalue of the quotient matrix C, within 1e-8 relative.

    Always computed; the equalities are guaranteed only when n has at least
    two distinct prime factors (and n != pq for the mu half).
    """
    assembly = reduced_spectrum(n)
    return _quotient_extremes(assembly)


def _quotient_extremes(assembly: SpectrumAssembly) -> tuple[bool, bool]:
    lam = assembly.total.max_value
    lam_ok = _close(lam, assembly.quotient.max_value)
    mu = assembly.total.second_smallest()
    q2 = assembly.quotient.second_smallest()
    mu_ok = mu is not None and q2 is not None and _close(mu, q2)
    return mu_ok, lam_ok


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= EXTREME_MATCH_RTOL * max(1.0, abs(a))


def analyze_assembly(
    n: int, coalesce_tol: float = DEFAULT_COALESCE_TOL
) -> tuple[AnalysisReport, SpectrumAssembly]:
    """Full report for one n plus the assembly it was read from."""
    require_composite(n)
    assembly = reduced_spectrum(n, coalesce_tol)
    delta_min, Delta_max = degree_extremes(assembly)
    mu_ok, lam_ok = _quotient_extremes(assembly)
    report = AnalysisReport(
        n=n,
        vertex_count=assembly.vertex_count,
        mu=assembly.total.second_smallest(),
        lambda_=assembly.total.max_value,
        kappa=vertex_connectivity(n),
        delta_min=delta_min,
        Delta_max=Delta_max,
        laplacian_integral=is_laplacian_integral(n),
        complement_disconnected=complement_disconnected(n),
        lambda_equals_order=lambda_equals_order(n),
        mu_equals_kappa=mu_equals_kappa(n),
        mu_from_quotient=mu_ok,
        lambda_from_quotient=lam_ok,
    )
    return report, assembly


def analyze(n: int, coalesce_tol: float = DEFAULT_COALESCE_TOL) -> AnalysisReport:
    return analyze_assembly(n, coalesce_tol)[0]
