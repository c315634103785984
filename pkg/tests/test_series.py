from fractions import Fraction

import pytest

from luinv import (
    GeneratorCounts,
    IntegralityError,
    PowerSeries,
    count_subgroup_classes,
    euler_exponents,
    expand_euler_product,
    free_generator_count,
    hilbert_series,
    partitions_of,
    stable_dimension,
)
from luinv.series import _euler_exponents_via_log, one


def test_hilbert_bipartite_is_partition_series():
    series = hilbert_series(2, 6)
    assert series.coeffs == (1, 1, 2, 3, 5, 7, 11)


def test_hilbert_quadratic_coefficient():
    for k in range(1, 7):
        assert hilbert_series(k, 3)[2] == 2 ** (k - 1)


def test_hilbert_single_subsystem():
    assert hilbert_series(1, 7).coeffs == (1,) * 8


def test_hilbert_matches_dimensions():
    series = hilbert_series(4, 5)
    for m in range(6):
        assert series[m] == stable_dimension(4, m)
    assert series[0] == 1


def test_euler_partition_series_single_generator_per_degree():
    counts = euler_exponents(hilbert_series(2, 10))
    assert counts.u == (1,) * 10


def test_euler_constant_series():
    assert euler_exponents(one(5)).u == (0,) * 5


def test_euler_rank_two_frozen():
    # Stripped by hand from 1 + t + 4t^2 + 11t^3 + 43t^4.
    counts = euler_exponents(hilbert_series(3, 4))
    assert counts.u == (1, 3, 7, 26)


def test_euler_requires_unit_constant_term():
    with pytest.raises(ValueError):
        euler_exponents(PowerSeries(2, (2, 1, 1)))


def test_euler_rejects_non_integral_exponent():
    bad = PowerSeries(2, (1, Fraction(1, 2), 0))
    with pytest.raises(IntegralityError, match="u_1"):
        euler_exponents(bad)


def test_euler_rejects_negative_exponent():
    bad = PowerSeries(2, (1, 1, 0))  # stripping leaves -t^2
    with pytest.raises(IntegralityError, match="u_2"):
        euler_exponents(bad)


def test_generator_counts_validation():
    with pytest.raises(IntegralityError):
        GeneratorCounts((1, -1))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_euler_roundtrip(k):
    series = hilbert_series(k, 6)
    counts = euler_exponents(series, k)
    assert expand_euler_product(counts, 6).coeffs == series.coeffs


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_log_route_agrees_with_stripping(k):
    series = hilbert_series(k, 6)
    assert _euler_exponents_via_log(series) == euler_exponents(series).u


def test_free_generator_count_examples():
    for d in range(1, 8):
        assert free_generator_count(2, d) == 1
    assert free_generator_count(3, 1) == 1
    assert free_generator_count(3, 2) == 3


def test_free_generator_count_matches_census():
    for d in range(1, 5):
        assert free_generator_count(3, d) == count_subgroup_classes(2, d)
    for d in range(1, 4):
        assert free_generator_count(4, d) == count_subgroup_classes(3, d)


def test_free_generator_count_matches_census_degree_five():
    assert free_generator_count(3, 5) == count_subgroup_classes(2, 5) == 97


def test_series_arithmetic():
    s = PowerSeries(3, (1, 2, 0, 1))
    t = PowerSeries(3, (1, 0, 1, 0))
    assert (s + t).coeffs == (2, 2, 1, 1)
    assert (s * t).coeffs == (1, 2, 1, 3)
    with pytest.raises(ValueError):
        s * PowerSeries(2, (1, 0, 0))
    geom = PowerSeries(4, (1, 1, 1, 1, 1))
    # log(1/(1-t)) = t + t^2/2 + t^3/3 + ...
    assert geom.log().coeffs == (
        0,
        1,
        Fraction(1, 2),
        Fraction(1, 3),
        Fraction(1, 4),
    )
    with pytest.raises(ValueError):
        PowerSeries(1, (0, 1)).log()


def test_partition_count_sanity():
    # p(10) = 42 pins both the series and the enumeration.
    assert hilbert_series(2, 10)[10] == 42 == len(partitions_of(10))
