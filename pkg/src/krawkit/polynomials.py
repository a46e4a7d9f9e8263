"""Exact evaluation of binary Krawtchouk polynomials.

The degree-p binary Krawtchouk polynomial of order n is

    K_p^n(x) = sum_{i=0}^{p} (-1)^i C(x, i) C(n-x, p-i)

with the generalized binomial C(x, i) = x(x-1)...(x-i+1)/i!, so K_p^n(j) is
an integer for every integer j.  Everything here is exact: values are Python
ints, divisions happen in Fraction and are asserted integral.

Closed forms at the arguments 0, 1, 2, n and n/2, the three classical
symmetry relations, and full value tables are provided alongside the direct
sum so that each can cross-check the others.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import IdentityViolationError, ParameterError, as_integer


def binomial(x: int, k: int) -> int:
    """Generalized binomial coefficient C(x, k) via falling factorials.

    Defined for any integer x: C(x, k) = x(x-1)...(x-k+1)/k! for k >= 0, and 0
    for k < 0.  Negative x therefore yields signed values, e.g. C(-1, 3) = -1.
    """
    if k < 0:
        return 0
    if x >= 0:
        return math.comb(x, k) if k <= x else 0
    # C(x, k) = (-1)^k C(k - x - 1, k) for x < 0
    value = math.comb(k - x - 1, k)
    return -value if k & 1 else value


@lru_cache(maxsize=None)
def _kraw_raw(n: int, p: int, x: int) -> int:
    """The defining sum, with no range checks on the degree."""
    total = 0
    for i in range(p + 1):
        term = binomial(x, i) * binomial(n - x, p - i)
        total += -term if i & 1 else term
    return total


def krawtchouk(n: int, p: int, x: int) -> int:
    """K_p^n(x) for any integer x, by the defining sum."""
    if not 0 <= p <= n:
        raise ParameterError(f"degree out of range: p={p} not in [0, {n}]")
    return _kraw_raw(n, p, x)


def krawtchouk_in_range(n: int, p: int, j: int) -> int:
    """K_p^n(j) under the convention that values vanish for j < 0 or j > n.

    Identity machinery sums over index windows that can step outside [0, n];
    the convention used there treats those values as 0.  The degree p is not
    range-checked: for 0 <= j <= n the defining sum already vanishes when
    p > n, which the convention relies on.
    """
    if j < 0 or j > n:
        return 0
    return _kraw_raw(n, p, j)


def krawtchouk_closed(n: int, p: int, at: str) -> int:
    """Closed forms K_p^n(0) = C(n,p), K_p^n(1) = (1-2p/n)C(n,p),
    K_p^n(n) = (-1)^p C(n,p).

    `at` selects the argument: "zero", "one" or "n".  The "one" case is
    evaluated in exact rationals and asserted integral.
    """
    if not 0 <= p <= n:
        raise ParameterError(f"degree out of range: p={p} not in [0, {n}]")
    c = math.comb(n, p)
    if at == "zero":
        return c
    if at == "one":
        if n < 1:
            raise ParameterError("argument 1 requires order n >= 1")
        return as_integer((1 - Fraction(2 * p, n)) * c, "closed form at 1")
    if at == "n":
        return -c if p & 1 else c
    raise ParameterError(f"unknown evaluation point {at!r}")


def krawtchouk_at_two(n: int, p: int) -> int:
    """K_p^n(2) = C(n-2, p) - 2 C(n-2, p-1) + C(n-2, p-2)."""
    if n < 2:
        raise ParameterError("argument 2 requires order n >= 2")
    if not 0 <= p <= n:
        raise ParameterError(f"degree out of range: p={p} not in [0, {n}]")
    return binomial(n - 2, p) - 2 * binomial(n - 2, p - 1) + binomial(n - 2, p - 2)


def krawtchouk_half(n: int, k: int) -> int:
    """K_k^n(n/2) for even n: 0 for odd k, (-1)^(k/2) C(n/2, k/2) for even k."""
    if n < 0 or n % 2:
        raise ParameterError(f"order must be even, got {n}")
    if not 0 <= k <= n:
        raise ParameterError(f"degree out of range: k={k} not in [0, {n}]")
    if k & 1:
        return 0
    value = math.comb(n // 2, k // 2)
    return -value if (k // 2) & 1 else value


def krawtchouk_via_symmetry(n: int, k: int, j: int, relation: str) -> int:
    """Compute K_k^n(j) from its symmetric partner.

    relation:
      "reflect"   K_k^n(n-k) = K_{n-k}^n(k); requires j = n - k.
      "sign_flip" K_k^n(j) = (-1)^j K_{n-k}^n(j).
      "cross"     C(n,j) K_k^n(j) = C(n,k) K_j^n(k), solved in exact
                  rationals and asserted integral.
    """
    if not 0 <= k <= n or not 0 <= j <= n:
        raise ParameterError("degree and argument must lie in [0, n]")
    if relation == "reflect":
        if j != n - k:
            raise ParameterError("reflect applies at the argument j = n - k only")
        return _kraw_raw(n, n - k, k)
    if relation == "sign_flip":
        value = _kraw_raw(n, n - k, j)
        return -value if j & 1 else value
    if relation == "cross":
        value = Fraction(math.comb(n, k) * _kraw_raw(n, j, k), math.comb(n, j))
        return as_integer(value, "symmetry transport")
    raise ParameterError(f"unknown symmetry relation {relation!r}")


@dataclass(frozen=True)
class KrawtchoukTable:
    """Immutable (n+1) x (n+1) grid with entry (p, j) = K_p^n(j)."""

    order: int
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        p, j = key
        return self.values[p][j]

    def row(self, p: int) -> tuple[int, ...]:
        return self.values[p]


def build_table(n: int) -> KrawtchoukTable:
    """Tabulate K_p^n(j) for 0 <= p, j <= n and check the grid invariants:
    first row all ones, second row n-2j, first column C(n,p), zero column
    sums for j >= 1 and zero row sums for odd p."""
    if n < 0:
        raise ParameterError("order must be nonnegative")
    values = tuple(
        tuple(_kraw_raw(n, p, j) for j in range(n + 1)) for p in range(n + 1)
    )
    table = KrawtchoukTable(n, values)
    _check_table(table)
    return table


def _check_table(table: KrawtchoukTable) -> None:
    n = table.order
    v = table.values
    for j in range(n + 1):
        if v[0][j] != 1:
            raise IdentityViolationError(f"row 0 of K_{n} is not constant 1")
        if n >= 1 and v[1][j] != n - 2 * j:
            raise IdentityViolationError(f"row 1 of K_{n} is not n-2j")
        if j >= 1 and sum(v[p][j] for p in range(n + 1)) != 0:
            raise IdentityViolationError(f"column {j} of K_{n} does not sum to 0")
    for p in range(n + 1):
        if v[p][0] != math.comb(n, p):
            raise IdentityViolationError(f"column 0 of K_{n} is not C(n,p)")
        if p & 1 and sum(v[p]) != 0:
            raise IdentityViolationError(f"odd row {p} of K_{n} does not sum to 0")
