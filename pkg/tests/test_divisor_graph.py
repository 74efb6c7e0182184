import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zdgspec.divisor_graph import (
    build_divisor_graph,
    class_degrees_M,
    require_composite,
    symmetric_form,
    weighted_laplacian,
)
from zdgspec.errors import EmptyGraphError
from zdgspec.numtheory import euler_phi, is_prime

composite = st.integers(min_value=4, max_value=2000).filter(lambda n: not is_prime(n))


def test_rejects_primes_and_small_n():
    for n in (2, 3, 5, 7, 97):
        with pytest.raises(EmptyGraphError):
            require_composite(n)
    for n in (0, 1, -4):
        with pytest.raises(EmptyGraphError):
            require_composite(n)


def test_n18_is_the_path_2_9_6_3():
    g = build_divisor_graph(18)
    assert g.vertices == (2, 3, 6, 9)
    assert g.weights == (6, 2, 2, 1)
    assert g.edges() == [(2, 9), (3, 6), (6, 9)]


def test_n12_graph():
    g = build_divisor_graph(12)
    assert g.vertices == (2, 3, 4, 6)
    assert g.weights == (2, 2, 2, 1)
    assert g.edges() == [(2, 6), (3, 4), (4, 6)]


def test_n9_single_vertex():
    g = build_divisor_graph(9)
    assert g.vertices == (3,)
    assert g.weights == (2,)
    assert g.edges() == []
    assert class_degrees_M(g) == [0]


@given(composite)
@settings(max_examples=60, deadline=None)
def test_adjacency_equivalent_predicate(n):
    # n | d_i*d_j is the same relation as (n/d_j) | d_i
    g = build_divisor_graph(n)
    k = len(g.vertices)
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            di, dj = g.vertices[i], g.vertices[j]
            assert g.adjacency[i, j] == ((di % (n // dj)) == 0)


@given(composite)
@settings(max_examples=80, deadline=None)
def test_weights_and_count_identity(n):
    g = build_divisor_graph(n)
    assert all(w == euler_phi(n // d) for d, w in zip(g.vertices, g.weights))
    assert sum(g.weights) == n - euler_phi(n) - 1


@given(composite)
@settings(max_examples=60, deadline=None)
def test_divisor_graph_connected(n):
    g = build_divisor_graph(n)
    k = len(g.vertices)
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in g.neighbors(i):
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    assert len(seen) == k


def test_class_degrees_examples():
    assert class_degrees_M(build_divisor_graph(18)) == [1, 2, 3, 8]
    # n = pq: M values are phi(p), phi(q) at vertices p, q
    assert class_degrees_M(build_divisor_graph(15)) == [2, 4]


def test_weighted_laplacian_n18_matrix():
    g = build_divisor_graph(18)
    expected = np.array(
        [
            [1, 0, 0, -1],
            [0, 2, -2, 0],
            [0, -2, 3, -1],
            [-6, 0, -2, 8],
        ]
    )
    assert np.array_equal(weighted_laplacian(g), expected)


@given(composite)
@settings(max_examples=80, deadline=None)
def test_laplacian_rows_sum_to_zero_exactly(n):
    lap = weighted_laplacian(build_divisor_graph(n))
    assert lap.dtype.kind == "i"
    assert np.array_equal(lap.sum(axis=1), np.zeros(lap.shape[0], dtype=lap.dtype))


def test_symmetric_form_entries_n18():
    c = symmetric_form(build_divisor_graph(18))
    assert c[0, 3] == pytest.approx(-np.sqrt(6.0))
    assert c[3, 0] == c[0, 3]
    assert np.array_equal(np.diag(c), [1, 2, 3, 8])


@given(composite)
@settings(max_examples=50, deadline=None)
def test_symmetric_form_similar_to_laplacian(n):
    # independent oracle: eigenvalues of the nonsymmetric integer Laplacian
    g = build_divisor_graph(n)
    lap_eigs = np.sort(np.linalg.eigvals(weighted_laplacian(g).astype(float)).real)
    c_eigs = np.sort(np.linalg.eigvalsh(symmetric_form(g)))
    assert np.allclose(lap_eigs, c_eigs, atol=1e-9 * max(1.0, abs(c_eigs[-1])))


@given(composite)
@settings(max_examples=50, deadline=None)
def test_similarity_transform_recovers_c(n):
    g = build_divisor_graph(n)
    w = np.array(g.weights, dtype=float)
    lap = weighted_laplacian(g).astype(float)
    transformed = np.diag(np.sqrt(w)) @ lap @ np.diag(1.0 / np.sqrt(w))
    assert np.allclose(transformed, symmetric_form(g), atol=1e-9)
