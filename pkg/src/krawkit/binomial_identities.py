"""Binomial-coefficient identities obtained by specializing the Krawtchouk
reductions at argument zero.

Doubling sums for C(2m, 2q) and C(2m, 2q+1), chain expansions for C(2^r m, p),
rational Pochhammer sums for C(2m+a, 2q+b) / C(m, q) with a, b in {0, 1},
their Stirling-number expansion, and closed forms for products of consecutive
odd or even integers.  All rational sums are evaluated exactly and asserted
integral only at the final value.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import ParameterError, as_integer
from .factorials import double_factorial, falling_factorial, stirling_first_unsigned
from .polynomials import binomial
from .reduction import residual_exponent


def double_binomial(m: int, q: int, parity: str, form: str = "first") -> int:
    """C(2m, 2q) or C(2m, 2q+1) by one of two equivalent doubling sums.

    even/first   sum_j 4^j C(m-2j, q-j) C(m, 2j)
    even/second  sum_j 4^j C(m, q+j) C(q+j, 2j)
    odd/first    2 sum_j 4^j C(m-2j-1, q-j) C(m, 2j+1)
    odd/second   2 sum_j 4^j C(m, q+j+1) C(q+j+1, 2j+1)

    The odd case needs q < m.
    """
    if not 0 <= q <= m:
        raise ParameterError(f"need 0 <= q <= m, got q={q}, m={m}")
    if form not in ("first", "second"):
        raise ParameterError(f"unknown form {form!r}")
    if parity == "even":
        if form == "first":
            return sum(
                4**j * binomial(m - 2 * j, q - j) * comb(m, 2 * j)
                for j in range(q + 1)
            )
        return sum(comb(m, q + j) * comb(q + j, 2 * j) * 4**j for j in range(q + 1))
    if parity == "odd":
        if q >= m:
            raise ParameterError(f"odd doubling needs q < m, got q={q}, m={m}")
        if form == "first":
            return 2 * sum(
                4**j * binomial(m - 2 * j - 1, q - j) * comb(m, 2 * j + 1)
                for j in range(q + 1)
            )
        return 2 * sum(
            comb(m, q + j + 1) * comb(q + j + 1, 2 * j + 1) * 4**j
            for j in range(q + 1)
        )
    raise ParameterError(f"unknown parity {parity!r}")


def power_reduce_binomial(m: int, p: int, r: int, s: int) -> int:
    """C(2^r m, p) by the multi-step chain expansion (the argument-zero case
    of the Krawtchouk reduction, where the leaf values are binomials)."""
    if m < 1 or r < 1 or s < 1:
        raise ParameterError("need m >= 1 and r, s >= 1")
    order = m << r
    if not 0 <= p <= order:
        raise ParameterError(f"degree out of range: p={p} not in [0, {order}]")
    nu = min(r, s)
    halves = [m << (r - k) for k in range(1, nu + 1)]
    leaf_order = m << residual_exponent(s, r)
    parity = p & 1

    def descend(level: int, prev: int, power: int) -> int:
        if level == nu:
            return (1 << power) * binomial(leaf_order, prev)
        half = halves[level]
        subtotal = 0
        for a in range(parity, prev + 1, 2):
            c = binomial(half - a, (prev - a) // 2)
            if c:
                subtotal += c * descend(level + 1, a, power + a)
        return subtotal

    return descend(0, p, 0)


def power_reduce_binomial_single(m: int, p: int, r: int) -> int:
    """The collapsed single-sum form of the chain expansion at s = 1:
    C(2^r m, p) = sum_{l = p mod 2} 2^l C(2^(r-1) m - l, (p-l)/2) C(2^(r-1) m, l)."""
    if m < 1 or r < 1:
        raise ParameterError("need m >= 1 and r >= 1")
    order = m << r
    if not 0 <= p <= order:
        raise ParameterError(f"degree out of range: p={p} not in [0, {order}]")
    half = m << (r - 1)
    return sum(
        (1 << l) * binomial(half - l, (p - l) // 2) * binomial(half, l)
        for l in range(p & 1, p + 1, 2)
    )


def _pochhammer_sum(q: int, second: int, even_double: bool) -> Fraction:
    """sum_j 2^j / (j! (2j -+ 1)!!) (q)_j (second)_j, the shared rational core."""
    total = Fraction(0)
    for j in range(q + 1):
        dfac = double_factorial(2 * j - 1) if even_double else double_factorial(2 * j + 1)
        total += Fraction(
            2**j * falling_factorial(q, j) * falling_factorial(second, j),
            factorial(j) * dfac,
        )
    return total


def pochhammer_binomial(m: int, q: int, top: int = 0, bottom: int = 0) -> int:
    """C(2m + top, 2q + bottom) for top, bottom in {0, 1}, through the exact
    rational Pochhammer sums:

        C(2m, 2q)     = C(m,q) sum_j 2^j/(j!(2j-1)!!) (q)_j (m-q)_j
        C(2m, 2q+1)   = 2(m-q) C(m,q) sum_j 2^j/(j!(2j+1)!!) (q)_j (m-q-1)_j
        C(2m+1, 2q)   = (2q+1) C(m,q) sum_j 2^j/(j!(2j+1)!!) (q)_j (m-q)_j
        C(2m+1, 2q+1) = (2(m-q)+1) C(m,q) sum_j 2^j/(j!(2j+1)!!) (q)_j (m-q)_j

    The (2m, 2q+1) case needs q < m; the others need q <= m.  Integrality is
    asserted on the final product only.
    """
    if top not in (0, 1) or bottom not in (0, 1):
        raise ParameterError("parity offsets must be 0 or 1")
    if m < 0 or q < 0:
        raise ParameterError("need m, q >= 0")
    if (top, bottom) == (0, 1):
        if q >= m:
            raise ParameterError(f"C(2m, 2q+1) form needs q < m, got q={q}, m={m}")
    elif q > m:
        raise ParameterError(f"need q <= m, got q={q}, m={m}")
    c = comb(m, q)
    if (top, bottom) == (0, 0):
        value = c * _pochhammer_sum(q, m - q, even_double=True)
    elif (top, bottom) == (0, 1):
        value = 2 * (m - q) * c * _pochhammer_sum(q, m - q - 1, even_double=False)
    elif (top, bottom) == (1, 0):
        value = (2 * q + 1) * c * _pochhammer_sum(q, m - q, even_double=False)
    else:
        value = (2 * (m - q) + 1) * c * _pochhammer_sum(q, m - q, even_double=False)
    return as_integer(value, f"Pochhammer binomial ({top},{bottom})")


def stirling_binomial(m: int, q: int) -> int:
    """C(2m, 2q) with the falling factorials expanded through unsigned
    first-kind Stirling numbers:

        C(2m, 2q) = C(m,q) sum_j 2^j/(j!(2j-1)!!)
                    sum_{k,l} (-1)^(k+l) s(j,k) s(j,l) q^k (m-q)^l
    """
    if not 0 <= q <= m:
        raise ParameterError(f"need 0 <= q <= m, got q={q}, m={m}")
    total = Fraction(0)
    d = m - q
    for j in range(q + 1):
        inner = 0
        for k in range(j + 1):
            sk = stirling_first_unsigned(j, k)
            if not sk:
                continue
            for l in range(j + 1):
                sl = stirling_first_unsigned(j, l)
                if not sl:
                    continue
                term = sk * sl * q**k * d**l
                inner += -term if (k + l) & 1 else term
        total += Fraction(2**j * inner, factorial(j) * double_factorial(2 * j - 1))
    return as_integer(comb(m, q) * total, "Stirling binomial")


def falling_factorial_stirling(q: int, j: int) -> int:
    """(q)_j recovered from the unsigned Stirling expansion
    sum_i (-1)^(j-i) s(j,i) q^i; cross-checks the adopted sign convention."""
    total = 0
    for i in range(j + 1):
        term = stirling_first_unsigned(j, i) * q**i
        total += -term if (j - i) & 1 else term
    return total


def consecutive_odd_product(q: int, m: int) -> int:
    """prod_{j=q}^{m-1} (2j+1), the product of m-q consecutive odd numbers,
    recovered from the Pochhammer sum:

        N = (2(m-q)-1)!! sum_j 2^j/(j!(2j-1)!!) (q)_j (m-q)_j
    """
    if not 0 <= q <= m - 1:
        raise ParameterError(f"need 0 <= q <= m-1, got q={q}, m={m}")
    value = double_factorial(2 * (m - q) - 1) * _pochhammer_sum(q, m - q, even_double=True)
    return as_integer(value, "consecutive odd product")


def consecutive_even_product(q: int, m: int) -> int:
    """prod_{j=q}^{m-1} (2j), via M = (2m-1)! / ((2q-1)! N) with N the odd
    product.  The q = 0 product contains the factor 0 and is 0."""
    if not 0 <= q <= m - 1:
        raise ParameterError(f"need 0 <= q <= m-1, got q={q}, m={m}")
    if q == 0:
        return 0
    n = consecutive_odd_product(q, m)
    value = Fraction(factorial(2 * m - 1), factorial(2 * q - 1) * n)
    return as_integer(value, "consecutive even product")
