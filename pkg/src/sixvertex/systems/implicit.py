"""Series defined implicitly by t = sum_n a_n R^(n+1)."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable

from ..series import TruncSeries, reversion


def thm1_kernel(n: int) -> Fraction:
    """(1/(n+1)) C(2n, n)^2."""
    return Fraction(comb(2 * n, n) ** 2, n + 1)


def thm2_kernel(n: int) -> Fraction:
    """(1/(n+1)) C(2n, n) C(3n, n)."""
    return Fraction(comb(2 * n, n) * comb(3 * n, n), n + 1)


def t_of_R(kernel: Callable[[int], Fraction], order: int) -> TruncSeries:
    return TruncSeries([0] + [kernel(n) for n in range(order - 1)], order)


def implicit_R(kernel: Callable[[int], Fraction], order: int) -> TruncSeries:
    """The series R(t) with zero constant term solving t = sum_n kernel(n) R^(n+1)."""
    return reversion(t_of_R(kernel, order))


def _from_R(R: TruncSeries, c: int, N: int) -> TruncSeries:
    # (t - c t^2 - R) / (c t^2)
    t = TruncSeries.gen(R.order)
    numerator = t - t * t * c - R
    return (numerator.shift(-2) / c).truncate(N)


def thm1_R(N: int) -> TruncSeries:
    return implicit_R(thm1_kernel, N)


def thm2_R(N: int) -> TruncSeries:
    return implicit_R(thm2_kernel, N)


def thm1_G(N: int) -> TruncSeries:
    """Rooted planar Eulerian orientations by edges: G = (t - 2t^2 - R) / (4t^2)."""
    if N < 1:
        raise ValueError("N must be positive")
    R = thm1_R(N + 2)
    return (_from_R(R, 2, N) / 2).truncate(N)


def thm2_Q1(N: int) -> TruncSeries:
    """Quartic rooted Eulerian orientations by vertices: Q(t,1) = (t - 3t^2 - R) / (3t^2)."""
    if N < 1:
        raise ValueError("N must be positive")
    return _from_R(thm2_R(N + 2), 3, N)
