"""The weighted graph on the proper divisors of n and its quotient matrices.

Vertices are the proper divisors d_1 < ... < d_k of n; d_i and d_j are
adjacent iff n divides d_i * d_j. Vertex d_i carries the weight
phi(n / d_i), the size of the residue class {x : gcd(x, n) = d_i}. This
graph is the quotient of the zero-divisor graph of Z_n under its class
partition, and two k x k matrices built from it carry the quotient part of
the Laplacian spectrum:

* the vertex-weighted Laplacian (integer entries, zero row sums, generally
  nonsymmetric), and
* its symmetric similar form with -sqrt(m_i * m_j) off the diagonal.

All arrays use ascending divisor order so fixtures are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyGraphError
from .numtheory import euler_phi, is_prime, proper_divisors


@dataclass(frozen=True)
class WeightedDivisorGraph:
    n: int
    vertices: tuple[int, ...]
    weights: tuple[int, ...]
    adjacency: np.ndarray  # (k, k) bool, symmetric, false diagonal

    @property
    def order(self) -> int:
        return len(self.vertices)

    def neighbors(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[i])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ascending (d_i, d_j) divisor pairs."""
        return [
            (self.vertices[i], self.vertices[j])
            for i, j in np.argwhere(np.triu(self.adjacency))
        ]


def require_composite(n: int) -> None:
    if n < 4 or is_prime(n):
        raise EmptyGraphError(f"Z_{n} has no zero divisors")


def build_divisor_graph(n: int) -> WeightedDivisorGraph:
    """Build the weighted divisor graph of a composite n >= 4."""
    require_composite(n)
    divs = proper_divisors(n)
    k = len(divs)
    weights = tuple(euler_phi(n // d) for d in divs)
    adj = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            if (divs[i] * divs[j]) % n == 0:
                adj[i, j] = adj[j, i] = True
    return WeightedDivisorGraph(n, tuple(divs), weights, adj)


def class_degrees_M(g: WeightedDivisorGraph) -> list[int]:
    """Sum of neighbor weights for each vertex (0 for an isolated vertex)."""
    w = np.asarray(g.weights, dtype=np.int64)
    return [int(w[g.adjacency[j]].sum()) for j in range(g.order)]


def weighted_laplacian(g: WeightedDivisorGraph) -> np.ndarray:
    """Vertex-weighted Laplacian: -m_j off the diagonal on edges, neighbor
    weight sums on the diagonal. Integer entries, zero row sums."""
    k = g.order
    lap = np.zeros((k, k), dtype=np.int64)
    w = np.asarray(g.weights, dtype=np.int64)
    for i in range(k):
        lap[i, g.adjacency[i]] = -w[g.adjacency[i]]
    np.fill_diagonal(lap, np.asarray(class_degrees_M(g), dtype=np.int64))
    return lap


def symmetric_form(g: WeightedDivisorGraph) -> np.ndarray:
    """Symmetric matrix similar to the weighted Laplacian.

    Equal to W^{1/2} L W^{-1/2} for W = diag(weights): same diagonal,
    -sqrt(m_i * m_j) on edges. This is the matrix the eigensolver sees.
    """
    k = g.order
    c = np.zeros((k, k), dtype=np.float64)
    for i in range(k):
        for j in range(i + 1, k):
            if g.adjacency[i, j]:
                c[i, j] = c[j, i] = -math.sqrt(g.weights[i] * g.weights[j])
    np.fill_diagonal(c, np.asarray(class_degrees_M(g), dtype=np.float64))
    return c
