#!/usr/bin/env python3
"""
Tests for the partition kit: shapes, dominance, hooks, cores and weak strips
"""

import sys

import pytest

from core.errors import BoundedError, CellError, CoreError, PartitionError, SizeMismatchError
from core.partitions import (
    GREATER, INCOMPARABLE, LEQ, CorePartition, bounded_to_core, compositions_of, conjugate, core_table,
    core_to_bounded, cores_with_weight, dominance_leq, hook_length, is_core, is_horizontal_strip,
    is_weak_horizontal_strip, k_conjugate, make_core, make_partition, make_strict_partition, partitions_of,
)


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


def test_conjugate_is_involutive():
    for n in range(11):
        for la in partitions_of(n):
            assert conjugate(conjugate(la)) == la


def test_dominance_examples():
    assert dominance_leq((1, 1), (2,)) == LEQ
    assert dominance_leq((2,), (1, 1)) == GREATER
    assert dominance_leq((3, 3), (4, 1, 1)) == INCOMPARABLE
    assert dominance_leq((2, 1), (2, 1)) == LEQ


def test_dominance_rejects_size_mismatch():
    with pytest.raises(SizeMismatchError):
        dominance_leq((2,), (1,))


def test_partitions_of_examples():
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions_of(4, max_part=2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(4, strict=True) == [(4,), (3, 1)]
    assert partitions_of(5, odd_parts=True) == [(5,), (3, 1, 1), (1, 1, 1, 1, 1)]
    assert partitions_of(0) == [()]


def test_partitions_of_refines_reverse_dominance():
    for n in range(1, 9):
        order = partitions_of(n)
        for i, la in enumerate(order):
            for mu in order[:i]:
                assert dominance_leq(mu, la) != LEQ or mu == la


def test_partitions_of_rejects_negative():
    with pytest.raises(PartitionError):
        partitions_of(-1)


def test_compositions_count():
    for n in range(1, 8):
        assert len(compositions_of(n)) == 2 ** (n - 1)


def test_partition_validation():
    assert make_partition([3, 1, 1]) == (3, 1, 1)
    with pytest.raises(PartitionError):
        make_partition([1, 2])
    with pytest.raises(PartitionError):
        make_partition([2, 0])
    with pytest.raises(PartitionError):
        make_strict_partition([2, 2])


def test_hook_length_examples():
    assert hook_length((2,), 1, 1) == 2
    assert hook_length((2, 1, 1), 1, 1) == 4
    assert hook_length((3, 1), 1, 2) == 2


def test_hook_length_outside_shape():
    with pytest.raises(CellError):
        hook_length((2, 1), 2, 2)


def test_is_core_examples():
    assert is_core((2,), 3)
    assert not is_core((1, 1, 1), 3)
    assert is_core((), 5)
    with pytest.raises(CoreError):
        is_core((1,), 1)


def test_core_to_bounded_examples():
    assert core_to_bounded(make_core((3, 1), 2)) == (2, 1)
    assert core_to_bounded(make_core((2, 1, 1), 2)) == (1, 1, 1)
    assert core_to_bounded(make_core((1,), 2)) == (1,)


def test_core_to_bounded_rejects_non_core():
    with pytest.raises(CoreError):
        core_to_bounded(CorePartition((1, 1, 1), 2, 3))
    with pytest.raises(CoreError):
        make_core((3,), 2)


def test_bounded_to_core_examples():
    assert bounded_to_core((2, 1), 2).shape == (3, 1)
    assert bounded_to_core((1, 1, 1), 2).shape == (2, 1, 1)
    assert bounded_to_core((2, 2), 2).shape == (4, 2)
    assert bounded_to_core((1, 1, 1, 1), 2).shape == (2, 2, 1, 1)
    for k in range(1, 5):
        for n in range(k + 1):
            for la in partitions_of(n, max_part=k):
                assert bounded_to_core(la, k).shape == la


def test_bounded_to_core_rejects_large_parts():
    with pytest.raises(BoundedError):
        bounded_to_core((3,), 2)


def test_core_bijection_round_trip_and_count():
    for k in range(1, 5):
        for n in range(11):
            bounded = partitions_of(n, max_part=k)
            assert len(cores_with_weight(k, n)) == len(bounded)
            for la in bounded:
                core = bounded_to_core(la, k)
                assert is_core(core.shape, k + 1)
                assert core.bounded_weight == n
                assert core_to_bounded(core) == la


def test_core_levels_grow_by_one():
    table = core_table(3, 8)
    for weight, level in enumerate(table.levels[:9]):
        for core in level:
            assert sum(table.to_bounded[core]) == weight


def test_k_conjugate_examples():
    assert k_conjugate((2, 1), 2) == (1, 1, 1)
    assert k_conjugate((2,), 2) == (1, 1)
    assert k_conjugate((3, 1), 4) == (2, 1, 1)


def test_k_conjugate_is_involutive():
    for k in range(1, 5):
        for n in range(11):
            for la in partitions_of(n, max_part=k):
                mu = k_conjugate(la, k)
                assert sum(mu) == n
                assert all(part <= k for part in mu)
                assert k_conjugate(mu, k) == la


def test_weak_horizontal_strip_examples():
    assert is_weak_horizontal_strip((2,), (2, 1), 2, 1)
    assert not is_weak_horizontal_strip((1, 1), (2, 1), 2, 1)
    assert is_weak_horizontal_strip((2, 1), (2, 1), 2, 0)
    assert not is_weak_horizontal_strip((2,), (1, 1), 2, 0)


def test_weak_strip_reduces_to_classical_for_large_k():
    for n in range(9):
        for mu in partitions_of(n):
            k = max(n, 1)
            for m in range(n + 1):
                for la in partitions_of(m):
                    expected = is_horizontal_strip(la, mu)
                    assert is_weak_horizontal_strip(la, mu, k, n - m) == expected


def test_weak_strip_rejects_unbounded():
    with pytest.raises(BoundedError):
        is_weak_horizontal_strip((3,), (3, 1), 2, 1)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
