"""Dense symmetric eigensolving and exact integer spectral machinery.

Two routes to a spectrum live here and check each other:

* a floating-point route: cyclic Jacobi rotations for small matrices (the
  k x k quotient matrices of the fast path), LAPACK via numpy above
  ``JACOBI_MAX_ORDER`` for the desk-scale oracle matrices, plus multiset
  coalescing with integer snapping;
* an exact route: the characteristic polynomial of an integer matrix by
  fraction-free (Bareiss) elimination over Z[x], and complete extraction of
  its integer roots. Coefficients are Python ints, so nothing overflows.

The join recursion for Laplacian characteristic polynomials
(``join_char_poly``) is exact as well: the rational prefactor of the join
formula always divides out, and a nonzero remainder is reported as an
invariant violation instead of being truncated.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

JACOBI_MAX_ORDER = 64
JACOBI_SWEEP_CAP = 60
JACOBI_OFF_TOL = 1e-12  # relative to the Frobenius norm of the input
DEFAULT_COALESCE_TOL = 1e-8
INTEGER_SNAP_TOL = 1e-6
SYMMETRY_RTOL = 1e-12


# ---------------------------------------------------------------------------
# spectra as multisets


@dataclass(frozen=True)
class SpectrumEntry:
    value: float
    multiplicity: int
    exact: bool


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalues with multiplicities, ascending, with exactness flags."""

    entries: tuple[SpectrumEntry, ...]
    coalesce_tol: float

    @classmethod
    def from_pairs(
        cls,
        pairs: list[tuple[float, int]] | list[tuple[int, int]],
        exact: bool = True,
        coalesce_tol: float = 0.0,
    ) -> "SpectrumMultiset":
        """Build directly from sorted-or-not (value, multiplicity) pairs."""
        merged: dict[float, int] = {}
        for value, mult in pairs:
            if mult:
                merged[value] = merged.get(value, 0) + mult
        entries = tuple(
            SpectrumEntry(float(v), m, exact) for v, m in sorted(merged.items())
        )
        return cls(entries, coalesce_tol)

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def pairs(self) -> list[tuple[float, int]]:
        return [(e.value, e.multiplicity) for e in self.entries]

    def expand(self) -> list[float]:
        out: list[float] = []
        for e in self.entries:
            out.extend([e.value] * e.multiplicity)
        return out

    def value_sum(self) -> float:
        return sum(e.value * e.multiplicity for e in self.entries)

    @property
    def min_value(self) -> float:
        return self.entries[0].value

    @property
    def max_value(self) -> float:
        return self.entries[-1].value

    def second_smallest(self) -> float | None:
        """Second smallest counting multiplicity; None on fewer than 2 values."""
        if self.total_multiplicity < 2:
            return None
        first = self.entries[0]
        if first.multiplicity >= 2:
            return first.value
        return self.entries[1].value

    def zero_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries if e.value == 0.0)

    @property
    def is_integral(self) -> bool:
        return all(e.exact for e in self.entries)


def coalesce(values: list[float], tol: float = DEFAULT_COALESCE_TOL) -> SpectrumMultiset:
    """Group near-equal values into a multiset.

    Successive values chain into one group while each gap stays within
    max(tol, tol*|value|). A group is represented by its mean, snapped to
    the nearest integer (and flagged exact) when within 1e-6 of one.
    """
    if not values:
        return SpectrumMultiset((), tol)
    ordered = sorted(float(v) for v in values)
    entries: list[SpectrumEntry] = []
    group = [ordered[0]]
    for prev, cur in zip(ordered, ordered[1:]):
        if cur - prev <= max(tol, tol * max(abs(prev), abs(cur))):
            group.append(cur)
        else:
            entries.append(_close_group(group))
            group = [cur]
    entries.append(_close_group(group))
    return SpectrumMultiset(tuple(entries), tol)


def _close_group(group: list[float]) -> SpectrumEntry:
    mean = sum(group) / len(group)
    nearest = round(mean)
    if abs(mean - nearest) <= INTEGER_SNAP_TOL:
        return SpectrumEntry(float(nearest), len(group), True)
    return SpectrumEntry(mean, len(group), False)


def max_deviation(a: SpectrumMultiset, b: SpectrumMultiset) -> float | None:
    """Largest per-eigenvalue gap between two coalesced spectra.

    None when the (value, multiplicity) shapes disagree, i.e. different
    entry counts or any multiplicity mismatch.
    """
    if len(a.entries) != len(b.entries):
        return None
    worst = 0.0
    for ea, eb in zip(a.entries, b.entries):
        if ea.multiplicity != eb.multiplicity:
            return None
        worst = max(worst, abs(ea.value - eb.value))
    return worst


# ---------------------------------------------------------------------------
# floating-point eigensolver


def symmetric_eigenvalues(
    m: np.ndarray, tol: float = 1e-9, method: str = "auto"
) -> list[float]:
    """All eigenvalues of a symmetric matrix, ascending.

    Small matrices go through cyclic Jacobi rotations (converged far below
    any reasonable ``tol``); larger ones through LAPACK. ``method`` forces
    one backend ("jacobi" / "lapack") for cross-validation.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix of order >= 1, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    scale = np.abs(a).max()
    if np.abs(a - a.T).max() > SYMMETRY_RTOL * max(scale, 1.0):
        raise ValueError("matrix is not symmetric")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if method == "auto":
        method = "jacobi" if a.shape[0] <= JACOBI_MAX_ORDER else "lapack"
    if method == "jacobi":
        return _jacobi_eigenvalues(a)
    if method == "lapack":
        return [float(v) for v in np.linalg.eigvalsh(a)]
    raise ValueError(f"unknown method {method!r}")


def _jacobi_eigenvalues(a: np.ndarray) -> list[float]:
    """Cyclic Jacobi sweeps until the off-diagonal Frobenius norm falls
    below 1e-12 of the input norm; hard cap of 60 sweeps."""
    a = 0.5 * (a + a.T)  # exact symmetry, averaging any representation noise
    k = a.shape[0]
    if k == 1:
        return [float(a[0, 0])]
    threshold = JACOBI_OFF_TOL * np.linalg.norm(a)
    # rotations on entries below skip cannot push the off-norm over the
    # threshold (k*k of them stay under it) but their column rewrites would
    # keep injecting roundoff, so the iteration would never settle
    skip = threshold / k
    for _ in range(JACOBI_SWEEP_CAP):
        if _off_norm(a) <= threshold:
            break
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app, aqq = a[p, p], a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                newp = c * colp - s * colq
                newq = s * colp + c * colq
                a[:, p] = newp
                a[p, :] = newp
                a[:, q] = newq
                a[q, :] = newq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    else:
        if _off_norm(a) > threshold:
            raise ArithmeticError("Jacobi iteration did not converge in 60 sweeps")
    return sorted(float(v) for v in np.diag(a))


def _off_norm(a: np.ndarray) -> float:
    # summing the off-diagonal squares directly; the subtraction
    # ||A||_F^2 - ||diag||^2 cancels catastrophically near convergence
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


# ---------------------------------------------------------------------------
# exact integer polynomials (ascending coefficient lists internally)


def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _sub(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _trim(out)


def _divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division by a monic divisor; stays in Z."""
    assert den[-1] == 1
    if den == [1]:
        return list(num), [0]
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [0], _trim(rem)
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        coeff = rem[i]
        if coeff:
            quot[i - dd] = coeff
            for j, dj in enumerate(den):
                rem[i - dd + j] -= coeff * dj
    return _trim(quot), _trim(rem)


def _eval(c: list[int], x: int) -> int:
    out = 0
    for coeff in reversed(c):
        out = out * x + coeff
    return out


def _shift_arg(c: list[int], shift: int) -> list[int]:
    """p(x + shift) by Horner over Z[x]."""
    out = [c[-1]]
    for coeff in reversed(c[:-1]):
        out = _mul(out, [shift, 1])
        out[0] += coeff
    return _trim(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial with exact integer coefficients, highest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def _ascending(self) -> list[int]:
        return list(reversed(self.coefficients))

    @classmethod
    def _from_ascending(cls, c: list[int]) -> "IntPolynomial":
        return cls(tuple(reversed(_trim(list(c)))))

    @classmethod
    def from_roots(cls, roots: list[int]) -> "IntPolynomial":
        c = [1]
        for r in roots:
            c = _mul(c, [-r, 1])
        return cls._from_ascending(c)

    def evaluate(self, x: int) -> int:
        return _eval(self._ascending(), x)

    def shifted_argument(self, shift: int) -> "IntPolynomial":
        """p(x + shift); pass a negative shift for p(x - c)."""
        return IntPolynomial._from_ascending(_shift_arg(self._ascending(), shift))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial._from_ascending(_mul(self._ascending(), other._ascending()))

    def divide_exact_linear(self, root: int) -> "IntPolynomial":
        """Exact division by (x - root); raises if the remainder is nonzero."""
        quot, rem = _divmod_monic(self._ascending(), [-root, 1])
        if rem != [0]:
            raise ValueError(f"(x - {root}) does not divide the polynomial exactly")
        return IntPolynomial._from_ascending(quot)


def char_poly_integer(m) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - M) of an integer matrix.

    Fraction-free Gaussian elimination over Z[x]: every pivot of xI - M is a
    leading principal characteristic polynomial, hence monic and nonzero, so
    no pivoting is needed and all interior divisions are exact.
    """
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("expected integer entries")
    k = arr.shape[0]
    a: list[list[list[int]]] = [
        [
            [-int(arr[i, j]), 1] if i == j else [-int(arr[i, j])]
            for j in range(k)
        ]
        for i in range(k)
    ]
    prev: list[int] = [1]
    for r in range(k - 1):
        pivot = a[r][r]
        for i in range(r + 1, k):
            left = a[i][r]
            for j in range(r + 1, k):
                if left == [0] or a[r][j] == [0]:
                    num = _mul(a[i][j], pivot)
                else:
                    num = _sub(_mul(a[i][j], pivot), _mul(left, a[r][j]))
                quot, rem = _divmod_monic(num, prev)
                assert rem == [0], "fraction-free elimination lost exactness"
                a[i][j] = quot
        prev = pivot
    return IntPolynomial._from_ascending(a[k - 1][k - 1])


def integer_roots_complete(p: IntPolynomial) -> tuple[Counter, bool]:
    """Extract every nonnegative integer root with multiplicity.

    Assumes a nonnegative spectrum (Laplacian-type input), so candidates are
    0 and the positive divisors of the trailing nonzero coefficient, capped
    by the root sum (the negated second coefficient). Each hit is deflated
    out by synthetic division; fully_factored reports whether deflation
    reached degree zero.
    """
    c = p._ascending()
    roots: Counter = Counter()
    while len(c) > 1 and c[0] == 0:
        roots[0] += 1
        c = c[1:]
    cand = 1
    while len(c) > 1:
        bound = -c[-2]  # sum of remaining roots when all are nonnegative
        if cand > bound:
            break
        if c[0] % cand == 0 and _eval(c, cand) == 0:
            while _eval(c, cand) == 0:
                roots[cand] += 1
                c, rem = _divmod_monic(c, [-cand, 1])
                assert rem == [0]
                if len(c) == 1:
                    break
        else:
            cand += 1
    return roots, len(c) == 1


def join_char_poly(
    theta1: IntPolynomial, n1: int, theta2: IntPolynomial, n2: int
) -> IntPolynomial:
    """Laplacian characteristic polynomial of the join of two graphs.

    Computes x*(x - n1 - n2) * theta1(x - n2) * theta2(x - n1) divided
    exactly by (x - n1)*(x - n2). Valid Laplacian inputs always divide out;
    a nonzero remainder means the inputs were not Laplacian characteristic
    polynomials of graphs on n1 and n2 vertices.
    """
    if theta1.degree != n1 or theta2.degree != n2:
        raise ValueError("polynomial degree must equal the vertex count")
    shifted1 = theta1.shifted_argument(-n2)
    shifted2 = theta2.shifted_argument(-n1)
    num = IntPolynomial((1, 0)) * IntPolynomial((1, -(n1 + n2))) * shifted1 * shifted2
    try:
        return num.divide_exact_linear(n1).divide_exact_linear(n2)
    except ValueError as exc:
        raise ValueError(
            "join invariant violated: inputs are not Laplacian characteristic "
            "polynomials"
        ) from exc
