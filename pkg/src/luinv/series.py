"""Truncated formal power series with exact coefficients, the Hilbert
series of the invariant algebra, and Euler-product inversion.

No floating point enters this module: the integrality of the extracted
exponents is the claim under test, so every coefficient is an int or a
Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dimensions import stable_dimension
from .errors import IntegralityError

Rational = int | Fraction


@dataclass(frozen=True)
class PowerSeries:
    """A series known exactly modulo t^(order+1)."""

    order: int
    coeffs: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficients")

    def __getitem__(self, n: int) -> Rational:
        return self.coeffs[n]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return PowerSeries(n, tuple(_normalize(c) for c in out))

    def log(self) -> "PowerSeries":
        """Formal logarithm; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        c = self.coeffs
        ell: list[Rational] = [Fraction(0)] * (n + 1)
        for i in range(1, n + 1):
            acc = Fraction(i) * c[i]
            for j in range(1, i):
                acc -= j * ell[j] * c[i - j]
            ell[i] = acc / i
        return PowerSeries(n, tuple(_normalize(x) for x in ell))

    def _check(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise ValueError("truncation orders differ")


def _normalize(x: Rational) -> Rational:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class GeneratorCounts:
    """Exponents u_1..u_N of an Euler product (1-t^d)^(-u_d).

    For the Hilbert series of the k-subsystem invariant algebra, u_d is the
    number of conjugacy classes of index-d subgroups of the free group on
    k-1 generators; k is carried along when known.
    """

    u: tuple[int, ...]
    k: int | None = None

    def __post_init__(self) -> None:
        for d, value in enumerate(self.u, start=1):
            if not isinstance(value, int) or value < 0:
                raise IntegralityError(
                    f"exponent u_{d} = {value} is not a nonnegative integer"
                )

    def __getitem__(self, d: int) -> int:
        """u_d, 1-based."""
        if d < 1:
            raise IndexError("exponents are indexed from 1")
        return self.u[d - 1]


def one(order: int) -> PowerSeries:
    return PowerSeries(order, (1,) + (0,) * order)


def hilbert_series(k: int, order: int) -> PowerSeries:
    """Generating series of the stabilized invariant dimensions of k
    subsystems, in the half-degree grading."""
    if k < 1 or order < 0:
        raise ValueError("need k >= 1 and order >= 0")
    return PowerSeries(order, tuple(stable_dimension(k, m) for m in range(order + 1)))


def _binomial_factor(d: int, exponent: int, order: int) -> PowerSeries:
    """(1 - t^d)^exponent truncated; exponent may be any integer."""
    coeffs = [Fraction(0)] * (order + 1)
    for j in range(0, order // d + 1):
        if exponent >= 0:
            if j > exponent:
                break
            coeffs[j * d] = (-1) ** j * math.comb(exponent, j)
        else:
            coeffs[j * d] = math.comb(-exponent + j - 1, j)
    return PowerSeries(order, tuple(_normalize(c) for c in coeffs))


def euler_exponents(s: PowerSeries, k: int | None = None) -> GeneratorCounts:
    """Solve s(t) = prod over d of (1-t^d)^(-u_d) for the exponents.

    Iterative stripping: after dividing out the factors for e < d, the
    coefficient of t^d is u_d.  Non-integral or negative exponents raise
    IntegralityError naming the offending degree.
    """
    if s.coeffs[0] != 1:
        raise ValueError("Euler products require constant term 1")
    order = s.order
    running = s
    exponents: list[int] = []
    for d in range(1, order + 1):
        u = running.coeffs[d]
        if isinstance(u, Fraction) and u.denominator != 1:
            raise IntegralityError(f"exponent u_{d} = {u} is not an integer")
        u = int(u)
        if u < 0:
            raise IntegralityError(f"exponent u_{d} = {u} is negative")
        exponents.append(u)
        if u:
            running = running * _binomial_factor(d, u, order)
    return GeneratorCounts(tuple(exponents), k)


def _euler_exponents_via_log(s: PowerSeries) -> tuple[int, ...]:
    """Second route to the same exponents, through log s.

    n * [t^n] log s = sum over divisors d of n of d * u_d, solved for u_d
    by subtracting proper-divisor contributions degree by degree.
    """
    if s.coeffs[0] != 1:
        raise ValueError("Euler products require constant term 1")
    logs = s.log()
    u: list[int] = []
    for n in range(1, s.order + 1):
        acc = Fraction(n) * logs.coeffs[n]
        for d in range(1, n):
            if n % d == 0:
                acc -= d * u[d - 1]
        value = acc / n
        if value.denominator != 1:
            raise IntegralityError(f"exponent u_{n} = {value} is not an integer")
        u.append(int(value))
    return tuple(u)


def expand_euler_product(counts: GeneratorCounts, order: int) -> PowerSeries:
    """prod over d of (1-t^d)^(-u_d), truncated; inverse of euler_exponents."""
    result = one(order)
    for d, u in enumerate(counts.u, start=1):
        if d > order:
            break
        if u:
            result = result * _binomial_factor(d, -u, order)
    return result


def free_generator_count(k: int, d: int) -> int:
    """Number of conjugacy classes of index-d subgroups of the free group
    on k-1 generators, extracted from the Hilbert series."""
    if k < 2 or d < 1:
        raise ValueError("need k >= 2 and d >= 1")
    return euler_exponents(hilbert_series(k, d), k)[d]
