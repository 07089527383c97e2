"""Arithmetic in Z[sqrt(D)] and its fundamental unit.

The unit is the least T + U*sqrt(D) > 1 with T^2 - D*U^2 = +-1, i.e. the
fundamental unit of the order Z[sqrt(D)] -- deliberately not the maximal
order, so e.g. D = 13 gives (18, 5) with norm -1 rather than (3+sqrt(13))/2.
Computed from the continued fraction of sqrt(D): the convergent just before
the period closes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath


@dataclass(frozen=True)
class QuadraticInteger:
    """a + b*sqrt(D) with integer a, b."""

    a: int
    b: int
    D: int

    def __mul__(self, other: "QuadraticInteger") -> "QuadraticInteger":
        if self.D != other.D:
            raise ValueError("mixed radicands")
        return QuadraticInteger(
            self.a * other.a + self.b * other.b * self.D,
            self.a * other.b + self.b * other.a,
            self.D,
        )

    def conj(self) -> "QuadraticInteger":
        return QuadraticInteger(self.a, -self.b, self.D)

    def norm(self) -> int:
        return self.a * self.a - self.D * self.b * self.b


def mul(x: QuadraticInteger, y: QuadraticInteger) -> QuadraticInteger:
    return x * y


def norm(x: QuadraticInteger) -> int:
    return x.norm()


@dataclass(frozen=True)
class FundamentalUnit:
    D: int
    T: int
    U: int
    norm: int  # T^2 - D*U^2, +1 or -1
    cf_period: int

    def as_quadratic(self) -> QuadraticInteger:
        return QuadraticInteger(self.T, self.U, self.D)

    def log_value(self, prec: int = 96) -> float:
        """log(T + U*sqrt(D)); safe for units far beyond float range."""
        with mpmath.workprec(prec):
            v = mpmath.log(mpmath.mpf(self.T) + mpmath.mpf(self.U) * mpmath.sqrt(self.D))
            return float(v)


def _check_radicand(D: int) -> None:
    if D < 2:
        raise ValueError(f"D must be >= 2, got {D}")
    r = math.isqrt(D)
    if r * r == D:
        raise ValueError(f"D must be nonsquare, got {D} = {r}^2")


def fundamental_unit(D: int) -> FundamentalUnit:
    """Minimal unit > 1 of Z[sqrt(D)] via the continued fraction of sqrt(D)."""
    _check_radicand(D)
    a0 = math.isqrt(D)
    m, d, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    steps = 0
    while True:
        steps += 1
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        if d == 1:
            # period closes here; (p, q) is the convergent before 2*a0
            break
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    nrm = p * p - D * q * q
    assert nrm in (1, -1), (D, p, q, nrm)
    assert nrm == (-1) ** steps
    return FundamentalUnit(D=D, T=p, U=q, norm=nrm, cf_period=steps)


def plus_one_unit(D: int) -> tuple[int, int]:
    """Least (T', U') with T'^2 - D*U'^2 = +1: the unit itself or its square."""
    fu = fundamental_unit(D)
    if fu.norm == 1:
        return fu.T, fu.U
    return fu.T * fu.T + D * fu.U * fu.U, 2 * fu.T * fu.U


def unit_upper_bound(D: int) -> float:
    """log-space upper bound for the fundamental unit: log eps < sqrt(D)*(log 4D + 2)."""
    _check_radicand(D)
    return math.sqrt(D) * (math.log(4 * D) + 2.0)
