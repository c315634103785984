"""Dimension formulas for spaces of local-unitary invariant polynomials.

All gradings use the half-degree m: a degree-m element is a real polynomial
of degree m in the state coefficients and m in their conjugates, i.e. of
real degree 2m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .characters import (
    conjugation_character,
    inner_product,
    irreducible_character,
    pointwise_power,
    pointwise_product,
    pointwise_sum,
    trivial_character,
)
from .combinatorics import centralizer_order, cycle_types_of, partitions_of
from .errors import IntegralityError


@dataclass(frozen=True)
class DimensionQuery:
    """A request for the invariant-space dimension of a k-subsystem space.

    When local_dims is given it lists all k subsystem dimensions, the last
    one playing the role of the environment; otherwise every subsystem is
    taken large enough for the dimension to have stabilized.
    """

    k: int
    m: int
    local_dims: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.k < 1 or self.m < 0:
            raise ValueError("need k >= 1 and m >= 0")
        if self.local_dims is not None:
            if len(self.local_dims) != self.k:
                raise ValueError("local_dims must list one dimension per subsystem")
            if any(n < 1 for n in self.local_dims):
                raise ValueError("local dimensions must be positive")

    def resolve(self) -> int:
        if self.local_dims is None:
            return stable_dimension(self.k, self.m)
        if self.local_dims[-1] < self.m:
            raise ValueError(
                "the last (environment) dimension must be at least m for the "
                "restricted formula to apply"
            )
        return restricted_dimension(self.local_dims[:-1], self.m)


def stable_dimension(k: int, m: int) -> int:
    """Dimension of the degree-m invariant space once all local dimensions
    are at least m: sum over cycle types a of z(a)^(k-2).

    For k = 1 the terms are exact rationals whose sum is asserted integral.
    """
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    total = Fraction(0)
    for a in cycle_types_of(m):
        total += Fraction(centralizer_order(a)) ** (k - 2)
    if total.denominator != 1:
        raise IntegralityError(f"stable dimension not integral: {total}")
    return int(total)


def stable_dimension_via_characters(k: int, m: int) -> int:
    """Same dimension through (chi_(m), (sum over lam of chi_lam^2)^(k-1))."""
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    conj = conjugation_character(m)
    value = inner_product(trivial_character(m), pointwise_power(conj, k - 1))
    if value.denominator != 1:
        raise IntegralityError(f"character formula gave non-integer: {value}")
    return int(value)


def restricted_dimension(bounded_dims: Sequence[int], m: int) -> int:
    """Invariant-space dimension when only the listed subsystem dimensions
    are bounded and one further (environment) subsystem has dimension >= m:

        (chi_(m), prod_i sum over lam with at most n_i rows of chi_lam^2)

    The partition cutoff counts rows, since the corresponding Schur functor
    vanishes exactly when the partition has more rows than the local
    dimension.
    """
    if m < 0 or any(n < 1 for n in bounded_dims):
        raise ValueError("need m >= 0 and positive dimensions")
    product = trivial_character(m)
    for n in bounded_dims:
        truncated = None
        for lam in partitions_of(m):
            if len(lam) > n:
                continue
            sq = pointwise_power(irreducible_character(lam), 2)
            truncated = sq if truncated is None else pointwise_sum(truncated, sq)
        assert truncated is not None  # the empty partition always fits
        product = pointwise_product(product, truncated)
    value = inner_product(trivial_character(m), product)
    if value.denominator != 1:
        raise IntegralityError(f"restricted dimension not integral: {value}")
    return int(value)


def mixed_dimension(k: int, m: int) -> int:
    """Dimension of the degree-m mixed-state invariant space of k subsystems;
    equals the pure-state stable dimension with one extra subsystem."""
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    return stable_dimension(k + 1, m)
