import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zdgspec.errors import EmptyGraphError
from zdgspec.numtheory import euler_phi, factorize, is_prime
from zdgspec.zdg_explicit import (
    ClassKind,
    build_zero_divisor_graph,
    class_partition,
    degrees,
    expected_vertex_count,
    join_reconstruction,
    verify_equitable,
)

composite = st.integers(min_value=4, max_value=600).filter(lambda n: not is_prime(n))


def test_small_graphs():
    g8 = build_zero_divisor_graph(8)
    assert g8.vertex_labels == (2, 4, 6)
    assert g8.edges() == [(2, 4), (4, 6)]
    assert degrees(g8) == [1, 2, 1]

    g9 = build_zero_divisor_graph(9)
    assert g9.vertex_labels == (3, 6)
    assert g9.edges() == [(3, 6)]

    g4 = build_zero_divisor_graph(4)
    assert g4.vertex_labels == (2,)
    assert g4.edges() == []
    assert degrees(g4) == [0]


def test_rejects_primes():
    with pytest.raises(EmptyGraphError):
        build_zero_divisor_graph(13)
    with pytest.raises(EmptyGraphError):
        class_partition(3)


@given(composite)
@settings(max_examples=80, deadline=None)
def test_vertex_count_identity(n):
    g = build_zero_divisor_graph(n)
    assert g.order == expected_vertex_count(n) == n - euler_phi(n) - 1


@given(composite)
@settings(max_examples=50, deadline=None)
def test_adjacency_matches_definition(n):
    g = build_zero_divisor_graph(n)
    labels = g.vertex_labels
    for i, x in enumerate(labels):
        assert math.gcd(x, n) > 1
        for j, y in enumerate(labels):
            expected = i != j and (x * y) % n == 0
            assert bool(g.adjacency[i, j]) == expected


def test_n18_class_structure():
    part = class_partition(18)
    by_divisor = {c.divisor: c for c in part.classes}
    assert by_divisor[2].members == (2, 4, 8, 10, 14, 16)
    assert by_divisor[3].members == (3, 15)
    assert by_divisor[6].members == (6, 12)
    assert by_divisor[9].members == (9,)
    assert [c.graph_name for c in part.classes] == ["K̄_6", "K̄_2", "K_2", "K_1"]


def test_n12_class_sizes():
    part = class_partition(12)
    assert [c.size for c in part.classes] == [2, 2, 2, 1]
    assert [c.size for c in part.classes] == [
        euler_phi(12 // c.divisor) for c in part.classes
    ]


@given(composite)
@settings(max_examples=60, deadline=None)
def test_partition_invariants(n):
    part = class_partition(n)
    all_members: list[int] = []
    for c in part.classes:
        assert all(math.gcd(x, n) == c.divisor for x in c.members)
        assert c.size == euler_phi(n // c.divisor)
        assert (c.kind is ClassKind.COMPLETE) == ((c.divisor**2) % n == 0)
        all_members.extend(c.members)
    assert sorted(all_members) == [x for x in range(1, n) if math.gcd(x, n) > 1]


@given(composite)
@settings(max_examples=50, deadline=None)
def test_equitable_partition(n):
    g = build_zero_divisor_graph(n)
    part = class_partition(n)
    assert verify_equitable(g, part)


def test_verify_equitable_rejects_mismatched_n():
    g = build_zero_divisor_graph(12)
    part = class_partition(18)
    with pytest.raises(ValueError):
        verify_equitable(g, part)


@given(composite)
@settings(max_examples=40, deadline=None)
def test_join_reconstruction_matches_oracle(n):
    g = build_zero_divisor_graph(n)
    rebuilt = join_reconstruction(n)
    assert rebuilt.vertex_labels == g.vertex_labels
    assert np.array_equal(rebuilt.adjacency, g.adjacency)


@given(composite)
@settings(max_examples=60, deadline=None)
def test_complete_iff_p_squared(n):
    g = build_zero_divisor_graph(n)
    z = g.order
    complete = g.edge_count == z * (z - 1) // 2
    root = math.isqrt(n)
    assert complete == (root * root == n and is_prime(root))


@given(composite)
@settings(max_examples=60, deadline=None)
def test_min_degree_closed_form(n):
    # smallest prime divisor p gives delta = p-1, except p-2 when n = p^2
    degs = degrees(build_zero_divisor_graph(n))
    p = factorize(n).smallest_prime
    root = math.isqrt(n)
    expected = p - 2 if (root * root == n and is_prime(root)) else p - 1
    assert min(degs) == expected
