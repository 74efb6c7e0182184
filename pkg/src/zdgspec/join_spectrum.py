"""Laplacian spectrum assembly for the zero-divisor graph of Z_n.

The fast path never touches the n - phi(n) - 1 explicit vertices. The gcd
classes partition them equitably, each class induces a complete or empty
graph, and the whole graph is the generalized join of those pieces over the
proper-divisor quotient. The spectrum then splits into

* per-class contributions: a complete class on w vertices shifted by its
  neighbor weight M contributes M + w with multiplicity w - 1, an empty
  class contributes M with multiplicity w - 1;
* the k eigenvalues of the vertex-weighted quotient Laplacian, exactly one
  of which is 0.

``brute_spectrum`` is the independent oracle: it builds the explicit graph,
takes LAPACK eigenvalues of its Laplacian, and is capped because it scales
with n rather than with the number of divisors.

``prime_power_spectrum`` is the third route: for n = p^t the entire
spectrum in closed form, exact integers, no linear algebra at all.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .divisor_graph import (
    WeightedDivisorGraph,
    build_divisor_graph,
    class_degrees_M,
    require_composite,
    symmetric_form,
    weighted_laplacian,
)
from .eigen import (
    DEFAULT_COALESCE_TOL,
    IntPolynomial,
    SpectrumMultiset,
    char_poly_integer,
    coalesce,
    integer_roots_complete,
    symmetric_eigenvalues,
)
from .errors import OracleCapError
from .numtheory import euler_phi, is_prime
from .zdg_explicit import ClassKind, build_zero_divisor_graph, expected_vertex_count

DEFAULT_ORACLE_CAP = 1200
ORACLE_CAP_ENV = "ZDG_ORACLE_CAP"


def oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ORACLE_CAP
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ORACLE_CAP_ENV} must be positive, got {value}")
    return value


def class_spectrum(kind: ClassKind, size: int) -> SpectrumMultiset:
    """Laplacian spectrum of one class graph: K_size or its complement."""
    if size < 1:
        raise ValueError("class size must be at least 1")
    if kind is ClassKind.COMPLETE and size > 1:
        return SpectrumMultiset.from_pairs([(0, 1), (size, size - 1)])
    return SpectrumMultiset.from_pairs([(0, size)])


@dataclass(frozen=True)
class ClassContribution:
    """Spectral contribution of one gcd class A_d inside the join."""

    divisor: int
    kind: ClassKind
    size: int
    neighbor_weight: int  # sum of the sizes of all adjacent classes

    def pairs(self) -> list[tuple[int, int]]:
        """(eigenvalue, multiplicity) pairs this class adds to the spectrum.

        The class spectrum loses exactly one zero occurrence (not all of
        them) and shifts by the neighbor weight, so a singleton contributes
        nothing and an empty class on w vertices keeps w - 1 zeros.
        """
        out = []
        zeros_to_drop = 1
        for entry in class_spectrum(self.kind, self.size).entries:
            mult = entry.multiplicity
            if entry.value == 0 and zeros_to_drop:
                mult -= zeros_to_drop
                zeros_to_drop = 0
            if mult:
                out.append((int(entry.value) + self.neighbor_weight, mult))
        return out


@dataclass(frozen=True)
class SpectrumAssembly:
    """Reduced-path spectrum together with the pieces it was built from."""

    n: int
    contributions: tuple[ClassContribution, ...]
    quotient: SpectrumMultiset
    total: SpectrumMultiset
    method: str

    @property
    def vertex_count(self) -> int:
        return sum(c.size for c in self.contributions)


def class_contributions(g: WeightedDivisorGraph) -> tuple[ClassContribution, ...]:
    ms = class_degrees_M(g)
    out = []
    for i, d in enumerate(g.vertices):
        kind = ClassKind.COMPLETE if (d * d) % g.n == 0 else ClassKind.NULL
        out.append(ClassContribution(d, kind, g.weights[i], ms[i]))
    return tuple(out)


def reduced_spectrum(
    n: int,
    coalesce_tol: float = DEFAULT_COALESCE_TOL,
    quotient_method: str = "auto",
) -> SpectrumAssembly:
    """Full Laplacian spectrum of the zero-divisor graph via the quotient.

    Runtime is governed by the number of proper divisors k, never by n:
    one k x k symmetric eigenproblem plus integer bookkeeping.
    """
    require_composite(n)
    g = build_divisor_graph(n)
    contribs = class_contributions(g)
    quotient_values = symmetric_eigenvalues(symmetric_form(g), method=quotient_method)
    values = list(quotient_values)
    for c in contribs:
        for value, mult in c.pairs():
            values.extend([float(value)] * mult)
    return SpectrumAssembly(
        n=n,
        contributions=contribs,
        quotient=coalesce(quotient_values, coalesce_tol),
        total=coalesce(values, coalesce_tol),
        method="reduced",
    )


def quotient_char_poly(n: int) -> IntPolynomial:
    """Exact characteristic polynomial of the weighted quotient Laplacian."""
    require_composite(n)
    return char_poly_integer(weighted_laplacian(build_divisor_graph(n)))


def exact_total_spectrum(n: int) -> SpectrumMultiset | None:
    """Exact integer spectrum when one exists, None otherwise.

    Class contributions are integers by construction, so the spectrum is
    integral precisely when the quotient characteristic polynomial factors
    completely over the integers.
    """
    require_composite(n)
    g = build_divisor_graph(n)
    roots, complete = integer_roots_complete(char_poly_integer(weighted_laplacian(g)))
    if not complete:
        return None
    pairs: list[tuple[int, int]] = list(roots.items())
    for c in class_contributions(g):
        pairs.extend(c.pairs())
    return SpectrumMultiset.from_pairs(pairs, exact=True)


def prime_power_spectrum(p: int, t: int) -> SpectrumMultiset:
    """Closed-form spectrum for n = p^t, t >= 2, as exact integers.

    Split on the parity of t; each line is a (value, multiplicity) family
    and the multiplicities always total p^(t-1) - 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t < 2:
        raise ValueError("exponent must be at least 2")
    pairs: list[tuple[int, int]] = [(0, 1)]
    if t == 2:
        if p > 2:
            pairs.append((p - 1, p - 2))
    elif t % 2 == 0:
        m = t // 2
        for i in range(1, m):
            pairs.append((p ** (2 * m - i) - 1, euler_phi(p**i)))
        pairs.append((p**m - 1, euler_phi(p**m) - 1))
        for j in range(1, m):
            pairs.append((p ** (m - j) - 1, euler_phi(p ** (m + j))))
    else:
        m = (t - 1) // 2
        for i in range(1, m + 1):
            pairs.append((p ** (2 * m + 1 - i) - 1, euler_phi(p**i)))
        pairs.append((p**m - 1, euler_phi(p ** (m + 1)) - 1))
        for j in range(1, m):
            pairs.append((p ** (m - j) - 1, euler_phi(p ** (m + 1 + j))))
    return SpectrumMultiset.from_pairs(pairs, exact=True)


def brute_spectrum(
    n: int,
    cap: int | None = None,
    coalesce_tol: float = DEFAULT_COALESCE_TOL,
) -> SpectrumMultiset:
    """Oracle spectrum from the explicit vertex-level graph.

    Refuses to run past the vertex cap (argument, else ZDG_ORACLE_CAP, else
    1200) because the dense eigenproblem is cubic in n - phi(n) - 1.
    """
    require_composite(n)
    limit = oracle_cap() if cap is None else cap
    z = expected_vertex_count(n)
    if z > limit:
        raise OracleCapError(
            f"explicit graph for n={n} has {z} vertices, above the cap {limit}"
        )
    g = build_zero_divisor_graph(n)
    adj = g.adjacency.astype(np.float64)
    lap = np.diag(adj.sum(axis=1)) - adj
    return coalesce(symmetric_eigenvalues(lap), coalesce_tol)


def spectra_close(a: SpectrumMultiset, b: SpectrumMultiset, tol: float) -> bool:
    return spectra_deviation(a, b) <= tol


def spectra_deviation(a: SpectrumMultiset, b: SpectrumMultiset) -> float:
    """Largest positional gap between the two sorted eigenvalue lists.

    Positional comparison is deliberate: it does not depend on both sides
    coalescing near-equal values into the same multiplicity shape.
    """
    xs, ys = a.expand(), b.expand()
    if len(xs) != len(ys):
        return float("inf")
    if not xs:
        return 0.0
    return max(abs(x - y) for x, y in zip(xs, ys))
