"""Central binomial coefficients c_m = C(2m, m) by several independent
routes, plus the mixed sums linking them to Krawtchouk values K_{2t}^{2q}(q).

Recursive routes never consume their own output: they read a shared
SequenceCache that is filled exclusively by the direct route, so every
identity is checked against independent ground truth.  Rational prefactors
such as (4q-1)/(2q^2) are kept in their written shape and integrality is
asserted once, on the final value.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from .errors import IdentityViolationError, ParameterError, as_integer
from .factorials import double_factorial, falling_factorial, stirling_first_unsigned
from .polynomials import _kraw_raw


class SequenceCache:
    """Append-only store of central binomials, Catalan and Motzkin numbers,
    all filled by their direct definitions.  Safe for concurrent readers;
    writers extend under a lock."""

    def __init__(self):
        self._central: list[int] = [1]
        self._catalan: list[int] = [1]
        self._motzkin: list[int] = [1]
        self._lock = threading.Lock()

    def central(self, m: int) -> int:
        if m < 0:
            raise ParameterError("index must be nonnegative")
        if m >= len(self._central):
            with self._lock:
                for i in range(len(self._central), m + 1):
                    c = comb(2 * i, i)
                    quotient, remainder = divmod(c, i + 1)
                    if remainder:
                        raise IdentityViolationError(f"(n+1) does not divide c_n at {i}")
                    self._central.append(c)
                    self._catalan.append(quotient)
        return self._central[m]

    def catalan(self, n: int) -> int:
        self.central(n)
        return self._catalan[n]

    def motzkin(self, n: int) -> int:
        if n < 0:
            raise ParameterError("index must be nonnegative")
        if n >= len(self._motzkin):
            self.catalan(n // 2)
            with self._lock:
                for i in range(len(self._motzkin), n + 1):
                    self._motzkin.append(
                        sum(comb(i, 2 * k) * self._catalan[k] for k in range(i // 2 + 1))
                    )
        return self._motzkin[n]


CACHE = SequenceCache()


def central_direct(m: int) -> int:
    """c_m = C(2m, m)."""
    if m < 0:
        raise ParameterError("index must be nonnegative")
    return comb(2 * m, m)


def central_sum(m: int, form: str = "binomial") -> int:
    """c_m as the parity-constrained halving sum at degree p = m.

    form "binomial":  sum_{l = m mod 2} 2^l C(m-l, (m-l)/2) C(m, l)
    form "factorial": m! sum_{l = m mod 2} 2^l / (l! ((m-l)/2)!^2)
    form "split":     the same factorial sum with l = 2j (+1) substituted,
                      using double factorials.
    """
    if m < 0:
        raise ParameterError("index must be nonnegative")
    if form == "binomial":
        return sum(
            (1 << l) * comb(m - l, (m - l) // 2) * comb(m, l)
            for l in range(m & 1, m + 1, 2)
        )
    if form == "factorial":
        total = Fraction(0)
        for l in range(m & 1, m + 1, 2):
            half = (m - l) // 2
            total += Fraction(1 << l, factorial(l) * factorial(half) ** 2)
        return as_integer(factorial(m) * total, "central factorial sum")
    if form == "split":
        q, odd = divmod(m, 2)
        total = Fraction(0)
        for j in range(q + 1):
            dfac = double_factorial(2 * j + 1) if odd else double_factorial(2 * j - 1)
            total += Fraction(1 << j, factorial(j) * dfac * factorial(q - j) ** 2)
        scale = 2 * factorial(m) if odd else factorial(m)
        return as_integer(scale * total, "central split sum")
    raise ParameterError(f"unknown form {form!r}")


def central_half_recursion(q: int, parity: str, cache: SequenceCache = CACHE) -> int:
    """c_{2q} = sum_j 4^j C(2q, 2j) c_{q-j} and
    c_{2q+1} = 2 sum_j 4^j C(2q+1, 2j+1) c_{q-j}, consuming c_0..c_q."""
    if q < 0:
        raise ParameterError("index must be nonnegative")
    if parity == "even":
        return sum(4**j * comb(2 * q, 2 * j) * cache.central(q - j) for j in range(q + 1))
    if parity == "odd":
        return 2 * sum(
            4**j * comb(2 * q + 1, 2 * j + 1) * cache.central(q - j) for j in range(q + 1)
        )
    raise ParameterError(f"unknown parity {parity!r}")


def central_double(q: int, form: str = "pochhammer", cache: SequenceCache = CACHE) -> int:
    """c_{2q} from c_q alone: c_{2q} = c_q sum_j 2^j/(j!(2j-1)!!) (q)_j^2.

    form "stirling" expands (q)_j^2 through unsigned first-kind Stirling
    numbers as sum_{k,l} (-1)^(k+l) s(j,k) s(j,l) q^(k+l).
    """
    if q < 0:
        raise ParameterError("index must be nonnegative")
    total = Fraction(0)
    for j in range(q + 1):
        if form == "pochhammer":
            numer = falling_factorial(q, j) ** 2
        elif form == "stirling":
            numer = 0
            for k in range(j + 1):
                sk = stirling_first_unsigned(j, k)
                if not sk:
                    continue
                for l in range(j + 1):
                    sl = stirling_first_unsigned(j, l)
                    if not sl:
                        continue
                    term = sk * sl * q ** (k + l)
                    numer += -term if (k + l) & 1 else term
        else:
            raise ParameterError(f"unknown form {form!r}")
        total += Fraction((1 << j) * numer, factorial(j) * double_factorial(2 * j - 1))
    return as_integer(cache.central(q) * total, "central doubling")


def central_alt_recursion(q: int, parity: str, cache: SequenceCache = CACHE) -> int:
    """The weighted recursions with rational prefactors:

    c_{2q}   = (4q-1)/(2q^2)      sum_{j=1}^q 4^j j      C(2q, 2j)     c_{q-j}
    c_{2q+1} = 2(4q+1)/(2q+1)^2   sum_{j=0}^q 4^j (2j+1) C(2q+1, 2j+1) c_{q-j}

    The even case starts at j = 1 (so c_{2q} uses only c_0..c_{q-1}) and
    needs q >= 1.
    """
    if parity == "even":
        if q < 1:
            raise ParameterError("even weighted recursion needs q >= 1")
        acc = sum(
            4**j * j * comb(2 * q, 2 * j) * cache.central(q - j) for j in range(1, q + 1)
        )
        return as_integer(Fraction(4 * q - 1, 2 * q * q) * acc, "weighted even recursion")
    if parity == "odd":
        if q < 0:
            raise ParameterError("index must be nonnegative")
        acc = sum(
            4**j * (2 * j + 1) * comb(2 * q + 1, 2 * j + 1) * cache.central(q - j)
            for j in range(q + 1)
        )
        prefactor = Fraction(2 * (4 * q + 1), (2 * q + 1) ** 2)
        return as_integer(prefactor * acc, "weighted odd recursion")
    raise ParameterError(f"unknown parity {parity!r}")


def central_self_recursion(q: int, flavor: str, cache: SequenceCache = CACHE) -> int:
    """c_q from c_0..c_{q-1}, by equating the plain and weighted recursions
    and isolating the j = 0 term:

    even_binomials: c_q = sum_{j=1}^q 4^j C(2q, 2j) {(4q-1) j / (2q^2) - 1} c_{q-j}
    odd_binomials:  c_q = sum_{j=1}^q 4^j C(2q+1, 2j+1)
                          [(4q+1)(2j+1) - (2q+1)^2] / (4q^2 (2q+1)) c_{q-j}
    """
    if q < 1:
        raise ParameterError("self recursion needs q >= 1")
    total = Fraction(0)
    if flavor == "even_binomials":
        for j in range(1, q + 1):
            coeff = Fraction((4 * q - 1) * j, 2 * q * q) - 1
            total += 4**j * comb(2 * q, 2 * j) * coeff * cache.central(q - j)
    elif flavor == "odd_binomials":
        den = 4 * q * q * (2 * q + 1)
        for j in range(1, q + 1):
            coeff = Fraction((4 * q + 1) * (2 * j + 1) - (2 * q + 1) ** 2, den)
            total += 4**j * comb(2 * q + 1, 2 * j + 1) * coeff * cache.central(q - j)
    else:
        raise ParameterError(f"unknown flavor {flavor!r}")
    return as_integer(total, f"self recursion ({flavor})")


def central_self_recursion_printed(
    q: int, flavor: str, cache: SequenceCache = CACHE
) -> Fraction:
    """The self recursions exactly as printed in their source, with the
    miscopied coefficient denominators (2q^2 + 1 in the even form, 2q^2 and a
    plain j in the odd one).  Returned as an exact rational: the printed even
    form is not even integral.  Kept verbatim so the misprint is reproducible;
    see central_self_recursion for the forms that verify.
    """
    if q < 1:
        raise ParameterError("self recursion needs q >= 1")
    total = Fraction(0)
    if flavor == "even_binomials":
        for j in range(1, q + 1):
            coeff = Fraction((4 * q - 1) * j, 2 * q * q + 1) - 1
            total += 4**j * comb(2 * q, 2 * j) * coeff * cache.central(q - j)
    elif flavor == "odd_binomials":
        for j in range(1, q + 1):
            coeff = Fraction((4 * q + 1) * j, 2 * q * q) - 1
            total += 4**j * comb(2 * q + 1, 2 * j + 1) * coeff * cache.central(q - j)
    else:
        raise ParameterError(f"unknown flavor {flavor!r}")
    return total


def central_krawtchouk_raw(q: int, cache: SequenceCache = CACHE) -> int:
    """The signed mixed sum over K_{2t}^{2q}(q):

    q even:  sum_{t=1}^q 4^t c_{q-t} K_{2t}^{2q}(q)          (expected 0)
    q odd:  -sum_{t=1}^q 2^(2t-1) c_{q-t} K_{2t}^{2q}(q)     (expected c_q)
    """
    if q < 1:
        raise ParameterError("need q >= 1")
    n = 2 * q
    if q % 2 == 0:
        return sum(4**t * cache.central(q - t) * _kraw_raw(n, 2 * t, q) for t in range(1, q + 1))
    return -sum(
        (1 << (2 * t - 1)) * cache.central(q - t) * _kraw_raw(n, 2 * t, q)
        for t in range(1, q + 1)
    )


def central_krawtchouk_sum(q: int, cache: SequenceCache = CACHE) -> int:
    """The mixed Krawtchouk sum with its identity asserted: 0 for even q,
    c_q for odd q."""
    value = central_krawtchouk_raw(q, cache)
    expected = 0 if q % 2 == 0 else cache.central(q)
    if value != expected:
        raise IdentityViolationError(
            f"Krawtchouk central sum at q={q}: got {value}, expected {expected}"
        )
    return value
