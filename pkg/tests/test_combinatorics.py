import math

import pytest

from luinv import (
    CycleType,
    Partition,
    centralizer_order,
    cycle_type_to_partition,
    cycle_types_of,
    partition_to_cycle_type,
    partitions_of,
)


def _partition_count(m: int) -> int:
    """Independent count: DP over largest part."""
    table = [[0] * (m + 1) for _ in range(m + 1)]
    for largest in range(m + 1):
        table[0][largest] = 1
    for n in range(1, m + 1):
        for largest in range(1, m + 1):
            table[n][largest] = table[n][largest - 1]
            if n >= largest:
                table[n][largest] += table[n - largest][largest]
    return table[m][m]


def test_partitions_of_small():
    assert [p.parts for p in partitions_of(0)] == [()]
    assert [p.parts for p in partitions_of(1)] == [(1,)]
    assert [p.parts for p in partitions_of(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_partitions_reverse_lex_order():
    for m in range(2, 9):
        parts = [p.parts for p in partitions_of(m)]
        assert parts == sorted(parts, reverse=True)
        assert parts[0] == (m,)
        assert parts[-1] == (1,) * m


@pytest.mark.parametrize("m", range(0, 31))
def test_partition_count_matches_recursive(m):
    assert len(partitions_of(m)) == _partition_count(m)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_cycle_type_bijection_examples():
    assert partition_to_cycle_type(Partition((1, 1, 1))).counts == (3, 0, 0)
    assert partition_to_cycle_type(Partition((3,))).counts == (0, 0, 1)
    a = partition_to_cycle_type(Partition((2, 1, 1)))
    assert a.counts == (2, 1, 0, 0)
    assert cycle_type_to_partition(a).parts == (2, 1, 1)


@pytest.mark.parametrize("m", range(0, 11))
def test_bijection_roundtrip(m):
    for lam in partitions_of(m):
        assert cycle_type_to_partition(partition_to_cycle_type(lam)) == lam
    for a in cycle_types_of(m):
        assert partition_to_cycle_type(cycle_type_to_partition(a)) == a


def test_cycle_type_validation():
    with pytest.raises(ValueError):
        CycleType((1, 1))  # 1*1 + 2*1 = 3 != 2
    with pytest.raises(ValueError):
        CycleType((-1, 1))


def test_centralizer_examples():
    m = 5
    identity = CycleType((m,) + (0,) * (m - 1))
    assert centralizer_order(identity) == math.factorial(m)
    full_cycle = CycleType((0,) * (m - 1) + (1,))
    assert centralizer_order(full_cycle) == m
    assert [centralizer_order(a) for a in cycle_types_of(2)] == [2, 2]
    assert [centralizer_order(a) for a in cycle_types_of(3)] == [3, 2, 6]


@pytest.mark.parametrize("m", range(0, 11))
def test_class_sizes_partition_group(m):
    total = sum(math.factorial(m) // centralizer_order(a) for a in cycle_types_of(m))
    assert total == math.factorial(m)
    for a in cycle_types_of(m):
        assert math.factorial(m) % centralizer_order(a) == 0
