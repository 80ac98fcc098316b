from itertools import combinations
from math import comb

import pytest

from gpoly import catalog
from gpoly.partitions import (
    bell_numbers,
    coarsening_count,
    coarsening_table,
    integer_pair_partitions,
    integer_partitions,
    is_pair_partition,
    pair_type_of_vertex_partition,
    partition_type,
    rgs_array,
    set_partitions,
)

# OEIS A000110, typed in independently of the Bell-triangle code
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597]
# OEIS A000041
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_bell_triangle():
    assert bell_numbers(12) == BELL


@pytest.mark.parametrize("k", range(1, 9))
def test_set_partition_counts_and_order(k):
    parts = list(set_partitions(k))
    assert len(parts) == BELL[k]
    assert len(set(parts)) == len(parts)
    assert parts[0] == (tuple(range(k)),)
    assert parts[-1] == tuple((v,) for v in range(k))


def test_set_partitions_eleven():
    assert sum(1 for _ in set_partitions(11)) == 678570


@pytest.mark.parametrize("k", range(1, 10))
def test_rgs_array_matches_generator(k):
    arr = rgs_array(k)
    assert arr.shape == (BELL[k], k)
    for row, pi in zip(arr, set_partitions(k)):
        labels = [0] * k
        for b, block in enumerate(pi):
            for v in block:
                labels[v] = b
        assert list(row) == labels


def test_rgs_array_prefix():
    arr = rgs_array(5, (0, 1))
    assert all(list(r[:2]) == [0, 1] for r in arr)
    assert len(arr) == sum(1 for pi in set_partitions(5) if len(pi[0]) >= 1 and 1 not in pi[0])


def test_integer_partitions():
    for n, count in enumerate(PARTITION_COUNTS):
        assert len(integer_partitions(n)) == count
    assert integer_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_pair_partitions():
    assert integer_pair_partitions(1, 1) == [((1, 1),), ((1, 0),)]
    assert integer_pair_partitions(2, 1) == [((2, 1),), ((2, 0),), ((1, 1), (1, 0)), ((1, 0), (1, 0))]
    for a in range(1, 6):
        for b in range(0, 4):
            found = integer_pair_partitions(a, b)
            assert len(set(found)) == len(found)
            assert all(is_pair_partition(p, a, b) for p in found)


def _brute_pair_partition_count(a, b):
    # multisets of pairs (ai >= 1, bi >= 0) with sum ai = a, sum bi <= b
    count = 0
    for tau in integer_partitions(a):
        seen = set()

        def rec(i, left, acc):
            if i == len(tau):
                seen.add(tuple(sorted(acc, reverse=True)))
                return
            for bi in range(left + 1):
                rec(i + 1, left - bi, acc + [(tau[i], bi)])

        rec(0, b, [])
        count += len(seen)
    return count


@pytest.mark.parametrize("a, b", [(3, 2), (4, 3), (5, 1)])
def test_pair_partition_count_brute(a, b):
    assert len(integer_pair_partitions(a, b)) == _brute_pair_partition_count(a, b)


def test_pair_type():
    g = catalog.triangle()
    assert pair_type_of_vertex_partition(g, ((0, 1, 2),)) == ((3, 3),)
    assert pair_type_of_vertex_partition(g, ((0, 2), (1,))) == ((2, 1), (1, 0))
    with pytest.raises(ValueError):
        pair_type_of_vertex_partition(g, ((0, 1),))
    assert partition_type(((0, 2), (1,), (3, 4, 5))) == (3, 2, 1)


def test_coarsening_counts():
    assert coarsening_table((1, 1, 1)) == {(3,): 1, (2, 1): 3, (1, 1, 1): 1}
    assert coarsening_count((2, 1, 1), (3, 1)) == 2
    assert coarsening_count((2, 1, 1), (2, 2)) == 1
    assert coarsening_count((2, 2), (3, 1)) == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_coarsening_rows_sum_to_bell(n):
    for tau in integer_partitions(n):
        table = coarsening_table(tau)
        assert sum(table.values()) == BELL[len(tau)]
        assert table[tau] == 1
        assert table[(n,)] == 1


def test_coarsening_from_singletons():
    # two blocks of distinct sizes (n-j, j) out of n singletons: choose the j-block
    for n in range(5, 9):
        assert coarsening_count((1,) * n, (n - 1, 1)) == n
        assert coarsening_count((1,) * n, (n - 2, 2)) == comb(n, 2)
    assert coarsening_count((1, 1, 1, 1), (2, 2)) == 3
