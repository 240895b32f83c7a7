import pytest

from theta_orbits.errors import ParameterError
from theta_orbits.partitions.partition import (
    Level,
    LieType,
    Partition,
    collapse,
    dominance_leq,
    is_valid_for,
    orbit_dim,
    partitions_of,
    transpose,
    valid_partitions,
)


def _types_up_to(limit):
    for m in range(1, limit + 1):
        yield LieType.orthogonal(m)
        if m % 2 == 0:
            yield LieType.symplectic(m)


def test_partition_of_sorts_and_drops_zeros():
    assert Partition.of(1, 3, 0, 2, 1).rows == (3, 2, 1, 1)
    assert Partition.from_counts([(2, 2), (1, 3)]).rows == (2, 2, 1, 1, 1)


def test_partition_rejects_increasing_rows():
    with pytest.raises(ValueError):
        Partition(rows=(1, 2))


def test_transpose_is_an_involution():
    for total in range(9):
        for p in partitions_of(total):
            assert transpose(transpose(p)) == p
            assert transpose(p).total() == total


def test_partition_counts():
    assert [len(list(partitions_of(k))) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize("lie_type", list(_types_up_to(12)), ids=str)
def test_collapse_is_the_largest_valid_partition_below(lie_type):
    valid = list(valid_partitions(lie_type))
    for p in partitions_of(lie_type.m):
        result = collapse(p, lie_type)
        assert is_valid_for(result, lie_type)
        assert dominance_leq(result, p)
        below = [v for v in valid if dominance_leq(v, p)]
        assert all(dominance_leq(v, result) for v in below)


def test_collapse_fixes_valid_partitions():
    so8 = LieType.orthogonal(8)
    for p in valid_partitions(so8):
        assert collapse(p, so8) == p


def test_collapse_examples():
    assert collapse(Partition.of(2, 1, 1), LieType.orthogonal(4)) == Partition.of(1, 1, 1, 1)
    assert collapse(Partition.of(3, 1), LieType.symplectic(4)) == Partition.of(2, 2)
    assert collapse(Partition.of(4), LieType.orthogonal(4)) == Partition.of(3, 1)


def test_collapse_rejects_wrong_total():
    with pytest.raises(ParameterError):
        collapse(Partition.of(3, 1), LieType.orthogonal(6))


@pytest.mark.parametrize(
    "rows, lie_type, expected",
    [
        ((2, 2, 2, 2, 1, 1), LieType.orthogonal(10), 20),
        ((5,), LieType.orthogonal(5), 8),
        ((9, 1), LieType.orthogonal(10), 40),
        ((4,), LieType.symplectic(4), 8),
        ((2, 2), LieType.symplectic(4), 6),
        ((1, 1, 1, 1), LieType.symplectic(4), 0),
    ],
)
def test_orbit_dim(rows, lie_type, expected):
    assert orbit_dim(Partition(rows=rows), lie_type) == expected


def test_orbit_dim_at_k_level_halves():
    assert orbit_dim(Partition.of(2, 2, 2, 2, 1, 1), LieType.orthogonal(10), Level.K) == 10


def test_orbit_dim_rejects_invalid_jordan_type():
    with pytest.raises(ParameterError):
        orbit_dim(Partition.of(2, 1, 1), LieType.orthogonal(4))


def test_lie_type_parity():
    assert LieType.orthogonal(7).letter == "B"
    assert LieType.orthogonal(8).letter == "D"
    with pytest.raises(ValueError):
        LieType(letter="C", m=5)
