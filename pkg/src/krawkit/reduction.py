"""Order-halving reductions for binary Krawtchouk values.

The workhorse identity expresses a value of even order at an even argument
through values of half the order:

    K_p^{2m}(2j) = sum_{l = p mod 2, l <= p} 2^l C(m-l, (p-l)/2) K_l^m(j)

Iterating it nu = min(r, s) times gives the multi-step form

    K_p^{2^r m}(2^s j) = sum over descending same-parity chains
        p >= p_1 >= ... >= p_nu >= 0 of
        2^(p_1+...+p_nu) prod_k C(2^(r-k) m - p_k, (p_(k-1)-p_k)/2)
        * K_(p_nu) of order 2^f(s,r) m at argument 2^f(r,s) j

with p_0 = p and f(s, r) = r - s for s <= r, else 0.  This module evaluates
both, the even/odd parity splits, a degree-halving transpose, the cancelling
double sum over all degrees, and produces full term-by-term traces of the
multi-step form for the explain mode.

Chain enumeration bounds: the summand vanishes unless every p_k stays within

    p_k <= min(p_(k-1), mu(2^(r-k) m), 2^(r-k+1) m - p_(k-1))

where mu(M) is the largest integer <= M of the chain's parity (a nonzero term
forces p_k <= 2^(r-k) m all the way down, since an in-range leaf of smaller
order vanishes for degrees above the order).  Pruned runs enumerate only that
window; they must produce the same total as the unpruned runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import IdentityViolationError, ParameterError, as_integer
from .polynomials import _kraw_raw, binomial, krawtchouk_in_range

DEFAULT_TERM_CAP = 10**6


def _term_cap() -> int:
    raw = os.environ.get("KRAWKIT_TERM_CAP")
    if raw is None:
        return DEFAULT_TERM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ParameterError(f"bad KRAWKIT_TERM_CAP: {raw!r}") from exc
    if cap < 0:
        raise ParameterError("KRAWKIT_TERM_CAP must be nonnegative")
    return cap


def residual_exponent(s: int, r: int) -> int:
    """f(s, r): the power of two left on the order after min(r, s) halvings;
    r - s when s <= r, otherwise 0."""
    if r < 1 or s < 1:
        raise ParameterError("exponents must be >= 1")
    return r - s if s <= r else 0


def term_cutoff(p: int, m: int) -> int:
    """Largest summation index with a nonzero term in the halving identity:
    min(p, mu, 2m - p) with mu = m if p and m share parity, else m - 1."""
    if not 0 <= p <= 2 * m:
        raise ParameterError(f"degree out of range: p={p} not in [0, {2 * m}]")
    mu = m if (p - m) % 2 == 0 else m - 1
    return min(p, mu, 2 * m - p)


def halve_order(m: int, p: int, j: int) -> int:
    """K_p^{2m}(2j) as a combination of order-m values K_l^m(j).

    Any integer j is accepted; out-of-range values follow the vanishing
    convention, making the result 0 there (both sides vanish).
    """
    if m < 1:
        raise ParameterError("half-order m must be >= 1")
    if not 0 <= p <= 2 * m:
        raise ParameterError(f"degree out of range: p={p} not in [0, {2 * m}]")
    total = 0
    for l in range(p & 1, p + 1, 2):
        c = binomial(m - l, (p - l) // 2)
        if c:
            total += (1 << l) * c * krawtchouk_in_range(m, l, j)
    return total


def halve_order_truncated(m: int, p: int, j: int) -> int:
    """The halving sum cut at term_cutoff(p, m); dropped terms are all zero."""
    if m < 1:
        raise ParameterError("half-order m must be >= 1")
    cutoff = term_cutoff(p, m)
    total = 0
    for l in range(p & 1, cutoff + 1, 2):
        total += (1 << l) * binomial(m - l, (p - l) // 2) * krawtchouk_in_range(m, l, j)
    return total


def halve_order_split(m: int, q: int, parity: str, j: int) -> int:
    """Parity-split halving: K_{2q}^{2m}(2j) = sum_k 4^k C(m-2k, q-k) K_{2k}^m(j)
    and K_{2q+1}^{2m}(2j) = 2 sum_k 4^k C(m-2k-1, q-k) K_{2k+1}^m(j)."""
    if m < 1 or q < 0:
        raise ParameterError("need m >= 1 and q >= 0")
    if parity == "even":
        if q > m:
            raise ParameterError(f"even split needs q <= m, got q={q}, m={m}")
        return sum(
            4**k * binomial(m - 2 * k, q - k) * krawtchouk_in_range(m, 2 * k, j)
            for k in range(q + 1)
        )
    if parity == "odd":
        if q > m - 1:
            raise ParameterError(f"odd split needs q <= m-1, got q={q}, m={m}")
        return 2 * sum(
            4**k * binomial(m - 2 * k - 1, q - k) * krawtchouk_in_range(m, 2 * k + 1, j)
            for k in range(q + 1)
        )
    raise ParameterError(f"unknown parity {parity!r}")


def halve_degree(m: int, j: int, p: int) -> int:
    """K_{2j}^{2m}(p) through a halving of the degree instead of the argument:

        K_{2j}^{2m}(p) = C(2m,2j)/(C(2m,p) C(m,j))
                         * sum_{l = p mod 2} 2^l C(m-l, (p-l)/2) C(m,l) K_j^m(l)

    evaluated in exact rationals and asserted integral.
    """
    if m < 1:
        raise ParameterError("half-order m must be >= 1")
    if not 0 <= j <= m or not 0 <= p <= m:
        raise ParameterError("degree-halving needs 0 <= j, p <= m")
    acc = 0
    for l in range(p & 1, p + 1, 2):
        acc += (1 << l) * comb(m - l, (p - l) // 2) * comb(m, l) * _kraw_raw(m, j, l)
    value = Fraction(comb(2 * m, 2 * j) * acc, comb(2 * m, p) * comb(m, j))
    return as_integer(value, "degree halving")


def cancellation_sum(m: int, j: int) -> int:
    """The double sum of the halving expansion over every degree p = 0..2m,
    evaluated literally; it collapses to 2^m sum_l K_l^m(j) and vanishes for
    1 <= j <= m.  The collapsed form is asserted; the literal value returned.
    """
    if m < 1:
        raise ParameterError("m must be >= 1")
    if not 1 <= j <= m:
        raise ParameterError(f"argument out of range: j={j} not in [1, {m}]")
    double = 0
    for p in range(2 * m + 1):
        for l in range(p & 1, p + 1, 2):
            c = binomial(m - l, (p - l) // 2)
            if c:
                double += (1 << l) * c * krawtchouk_in_range(m, l, j)
    collapsed = (1 << m) * sum(_kraw_raw(m, l, j) for l in range(m + 1))
    if double != collapsed:
        raise IdentityViolationError(
            f"cancellation sum {double} != collapsed form {collapsed} at m={m}, j={j}"
        )
    return double


@dataclass(frozen=True)
class ReductionTerm:
    """One summand of the multi-step reduction: indices (p_1 >= ... >= p_nu),
    the power 2^(p_1+...+p_nu), the product of chain binomials, and the leaf
    Krawtchouk value the chain ends on."""

    chain: tuple[int, ...]
    power: int
    coefficient: int
    leaf: int

    @property
    def value(self) -> int:
        return (self.coefficient << self.power) * self.leaf


@dataclass(frozen=True)
class ReductionTrace:
    """Record of one multi-step reduction: every term (up to the cap, in
    lexicographic chain order), the term count, and the exact total."""

    m: int
    p: int
    r: int
    s: int
    j: int
    pruned: bool
    leaf_order: int
    leaf_argument: int
    terms: tuple[ReductionTerm, ...]
    term_count: int
    total: int

    @property
    def empty(self) -> bool:
        """True when the chain enumeration produced no terms at all."""
        return self.term_count == 0


def _check_multi_args(m: int, p: int, r: int, s: int, j: int, strict: bool) -> int:
    if m < 1:
        raise ParameterError("base order m must be >= 1")
    if r < 1 or s < 1:
        raise ParameterError("exponents r, s must be >= 1")
    order = m << r
    if not 0 <= p <= order:
        raise ParameterError(f"degree out of range: p={p} not in [0, {order}]")
    if j < 0 or (j << s) > order:
        raise ParameterError(f"argument out of range: 2^{s} * {j} not in [0, {order}]")
    nu = min(r, s)
    if strict and p < 2 * (nu - 1):
        raise ParameterError(f"strict mode needs p >= {2 * (nu - 1)}, got {p}")
    return nu


def _chain_bound(prev: int, half: int, pruned: bool) -> int:
    if not pruned:
        return prev
    mu = half if (prev - half) % 2 == 0 else half - 1
    return min(prev, mu, 2 * half - prev)


def power_reduce(
    m: int,
    p: int,
    r: int,
    s: int,
    j: int,
    pruned: bool = False,
    strict: bool = False,
    term_cap: int | None = None,
) -> ReductionTrace:
    """Evaluate K_p^{2^r m}(2^s j) by the multi-step reduction, keeping the
    full term list (lexicographic in the chain) up to `term_cap`; beyond the
    cap only the count and the running total are kept.

    Unpruned runs enumerate the whole descending-chain simplex literally;
    pruned runs restrict each level to its nonzero window and must yield the
    same total.
    """
    nu = _check_multi_args(m, p, r, s, j, strict)
    cap = _term_cap() if term_cap is None else term_cap
    halves = [m << (r - k) for k in range(1, nu + 1)]
    leaf_order = m << residual_exponent(s, r)
    leaf_arg = j << residual_exponent(r, s)
    parity = p & 1
    leaf_values = {
        a: krawtchouk_in_range(leaf_order, a, leaf_arg) for a in range(parity, p + 1, 2)
    }

    terms: list[ReductionTerm] = []
    count = 0
    total = 0

    def descend(level: int, prev: int, power: int, coeff: int, chain: tuple[int, ...]):
        nonlocal count, total
        if level == nu:
            leaf = leaf_values[prev]
            total += (coeff << power) * leaf
            if count < cap:
                terms.append(ReductionTerm(chain, power, coeff, leaf))
            count += 1
            return
        half = halves[level]
        hi = _chain_bound(prev, half, pruned)
        for a in range(parity, hi + 1, 2):
            c = binomial(half - a, (prev - a) // 2)
            descend(level + 1, a, power + a, coeff * c, chain + (a,))

    descend(0, p, 0, 1, ())
    return ReductionTrace(
        m=m,
        p=p,
        r=r,
        s=s,
        j=j,
        pruned=pruned,
        leaf_order=leaf_order,
        leaf_argument=leaf_arg,
        terms=tuple(terms),
        term_count=count,
        total=total,
    )


def power_reduce_total(
    m: int, p: int, r: int, s: int, j: int, pruned: bool = False
) -> int:
    """Total of the multi-step reduction without building a trace.

    Subtrees whose accumulated coefficient is exactly zero are skipped (they
    contribute nothing); the value is identical to power_reduce(...).total.
    """
    nu = _check_multi_args(m, p, r, s, j, strict=False)
    halves = [m << (r - k) for k in range(1, nu + 1)]
    leaf_order = m << residual_exponent(s, r)
    leaf_arg = j << residual_exponent(r, s)
    parity = p & 1
    leaf_values = [0] * (p + 1)
    for a in range(parity, p + 1, 2):
        leaf_values[a] = krawtchouk_in_range(leaf_order, a, leaf_arg)

    last = nu - 1

    def descend(level: int, prev: int, power: int, coeff: int) -> int:
        half = halves[level]
        hi = _chain_bound(prev, half, pruned)
        subtotal = 0
        if level == last:
            for a in range(parity, hi + 1, 2):
                leaf = leaf_values[a]
                if leaf:
                    c = binomial(half - a, (prev - a) // 2)
                    if c:
                        subtotal += (c << (power + a)) * leaf
            return coeff * subtotal
        nxt = level + 1
        for a in range(parity, hi + 1, 2):
            c = binomial(half - a, (prev - a) // 2)
            if c:
                subtotal += descend(nxt, a, power + a, c)
        return coeff * subtotal

    return descend(0, p, 0, 1)
