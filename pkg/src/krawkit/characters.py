"""Characters of the exterior-power representations of SO(2m) at involutions.

An order-2 element of the maximal torus of SO(2m) is a block rotation with j
angles equal to pi and m-j equal to 0.  The character of the p-th exterior
power at such an element has a combinatorial expansion whose inner sum runs
over all size-l subsets of the m rotation blocks, each contributing the
product of its cosines (-1 on the first j blocks, +1 elsewhere):

    chi_p = sum_{l = p mod 2} 2^l C(m-l, (p-l)/2) sum_{|S|=l} prod cos

The subset sums are enumerated literally, so this module is an independent
oracle for the identity chi_p = K_p^{2m}(2j); it is deliberately not routed
through the polynomial evaluator.  Degrees p in (m, 2m] use the duality
chi_{2m-p} = chi_p.  Enumeration is capped at m = 20.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import EnumerationLimitError, IdentityViolationError, ParameterError

ENUMERATION_LIMIT = 20


@lru_cache(maxsize=None)
def _cosine_subset_sum(m: int, size: int, j: int) -> int:
    """Sum of prod(cos) over all size-`size` subsets of the m blocks, where
    cos = -1 on blocks 0..j-1 and +1 on the rest."""
    total = 0
    for subset in combinations(range(m), size):
        negatives = bisect_left(subset, j)
        total += -1 if negatives & 1 else 1
    return total


def _check_args(m: int, j: int) -> None:
    if m < 0:
        raise ParameterError("m must be nonnegative")
    if m > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"subset enumeration supports m <= {ENUMERATION_LIMIT}, got {m}"
        )
    if not 0 <= j <= m:
        raise ParameterError(f"block count out of range: j={j} not in [0, {m}]")


def exterior_character(m: int, p: int, j: int) -> int:
    """Character of the p-th exterior power of SO(2m) at the involution with
    j blocks rotated by pi.  Equals K_p^{2m}(2j)."""
    _check_args(m, j)
    if not 0 <= p <= 2 * m:
        raise ParameterError(f"degree out of range: p={p} not in [0, {2 * m}]")
    if p > m:
        p = 2 * m - p
    total = 0
    for size in range(p & 1, min(p, m) + 1, 2):
        weight = comb(m - size, (p - size) // 2)
        if weight:
            total += (1 << size) * weight * _cosine_subset_sum(m, size, j)
    return total


def split_middle_character(m: int, j: int) -> tuple[int, int]:
    """The two irreducible halves of the middle exterior power, degree m.

    At an involution every sine factor vanishes, so the two halves are equal
    and each is chi_m / 2; chi_m is asserted even.
    """
    _check_args(m, j)
    if not 1 <= j <= m:
        raise ParameterError("split characters are taken at involutions, j >= 1")
    chi = exterior_character(m, m, j)
    if chi & 1:
        raise IdentityViolationError(f"middle character chi = {chi} is odd")
    half = chi >> 1
    return half, half


def exterior_algebra_character(m: int, j: int) -> int:
    """Character of the whole exterior algebra, sum of chi_p over p = 0..2m.

    Equals 4^m at the identity (j = 0) and 0 at every involution (j >= 1).
    """
    _check_args(m, j)
    return sum(exterior_character(m, p, j) for p in range(2 * m + 1))
