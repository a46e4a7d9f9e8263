"""Factorials, double factorials, falling factorials, and unsigned Stirling
numbers of the first kind, memoized for the identity sweeps.

Conventions: (-1)!! = 0!! = 1, (x)_0 = 1, and s(j, i) is the unsigned
first-kind triangle (cycle counts), so the falling factorial expands as
(q)_j = sum_i (-1)^(j-i) s(j, i) q^i.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import ParameterError

__all__ = [
    "factorial",
    "double_factorial",
    "falling_factorial",
    "stirling_first_unsigned",
]


@lru_cache(maxsize=None)
def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)..., with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ParameterError(f"double factorial undefined for {n}")
    if n <= 1:
        return 1
    return n * double_factorial(n - 2)


def falling_factorial(x: int, j: int) -> int:
    """(x)_j = x(x-1)...(x-j+1), with (x)_0 = 1.  Defined for any integer x."""
    if j < 0:
        raise ParameterError("falling factorial needs j >= 0")
    value = 1
    for k in range(j):
        value *= x - k
    return value


@lru_cache(maxsize=None)
def stirling_first_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of n elements
    with k cycles.  Recurrence s(n, k) = s(n-1, k-1) + (n-1) s(n-1, k)."""
    if n < 0 or k < 0:
        raise ParameterError("Stirling numbers need nonnegative arguments")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return stirling_first_unsigned(n - 1, k - 1) + (n - 1) * stirling_first_unsigned(
        n - 1, k
    )
