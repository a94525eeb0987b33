"""Integer partitions: enumeration order, centralizer orders, vertex distributions."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mapchi.partitions import (
    Partition,
    partition_from_distribution,
    partitions_of,
    vertex_distribution_of,
    z_of,
)


def partition_count_oracle(n: int) -> int:
    """Independent p(n) via the bounded-largest-part recurrence."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for largest in range(n + 1):
        table[largest][0] = 1
    for largest in range(1, n + 1):
        for total in range(1, n + 1):
            table[largest][total] = table[largest - 1][total]
            if total >= largest:
                table[largest][total] += table[largest][total - largest]
    return table[n][n]


def test_partition_counts_match_oracle():
    for n in range(15):
        assert len(partitions_of(n)) == partition_count_oracle(n)


def test_partitions_listed_in_descending_reverse_lex():
    for n in range(1, 11):
        parts = partitions_of(n)
        assert parts[0] == Partition((n,))
        assert parts[-1] == Partition((1,) * n)
        for a, b in zip(parts, parts[1:]):
            assert b.rlex_le(a) and a != b


def test_partitions_of_zero():
    assert partitions_of(0) == (Partition(()),)


def test_rlex_compares_by_reversed_part_tuples():
    assert Partition((2, 2)).rlex_le(Partition((3, 1)))
    assert Partition((1, 1, 1)).rlex_le(Partition((2, 1)))
    assert not Partition((4,)).rlex_le(Partition((2, 2)))


def test_z_of_known_values():
    assert z_of(Partition(())) == 1
    assert z_of(Partition((3,))) == 3
    assert z_of(Partition((2, 1, 1))) == 4
    assert z_of(Partition((2, 2))) == 8
    assert z_of(Partition((1, 1, 1))) == 6


def test_class_equation():
    """Sum of n!/z_mu over partitions of n gives n! (conjugacy classes of S_n)."""
    for n in range(1, 10):
        total = sum(Fraction(math.factorial(n), z_of(mu)) for mu in partitions_of(n))
        assert total == math.factorial(n)


def test_vertex_distribution_round_trip():
    for n in range(11):
        for mu in partitions_of(n):
            dist = vertex_distribution_of(mu)
            assert partition_from_distribution(dist) == mu
            assert sum((k + 1) * m for k, m in enumerate(dist)) == mu.weight


def test_vertex_distribution_has_no_trailing_zeros():
    assert vertex_distribution_of(Partition((3, 1, 1))) == (2, 0, 1)
    assert vertex_distribution_of(Partition(())) == ()


def test_partition_validates_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition((-1,))


def test_partition_is_immutable_and_hashable():
    mu = Partition((2, 1))
    with pytest.raises(AttributeError):
        mu.parts = (3,)
    assert len({Partition((2, 1)), Partition((2, 1)), Partition((3,))}) == 2


def test_partition_compares_with_bare_tuples():
    assert Partition((2, 1)) == (2, 1)
    assert Partition(()) == ()


def test_partition_accessors():
    mu = Partition((4, 2, 2, 1))
    assert mu.weight == 9
    assert mu.length == 4
    assert mu.multiplicities() == {4: 1, 2: 2, 1: 1}


@given(st.integers(0, 9))
@settings(max_examples=30)
def test_every_partition_sums_to_n(n):
    for mu in partitions_of(n):
        assert sum(mu.parts) == n
        assert all(a >= b for a, b in zip(mu.parts, mu.parts[1:]))
