from fractions import Fraction
from math import comb

import pytest

from krawkit.central import (
    CACHE,
    SequenceCache,
    central_alt_recursion,
    central_direct,
    central_double,
    central_half_recursion,
    central_krawtchouk_raw,
    central_krawtchouk_sum,
    central_self_recursion,
    central_self_recursion_printed,
    central_sum,
)
from krawkit.errors import ParameterError
from krawkit.reference import CENTRAL_BINOMIALS


def test_direct_values():
    assert [central_direct(m) for m in range(13)] == list(CENTRAL_BINOMIALS)


def test_cache_links_central_and_catalan():
    cache = SequenceCache()
    for n in range(50):
        assert cache.central(n) == (n + 1) * cache.catalan(n)


def test_central_sum_forms():
    assert central_sum(4) == 70
    assert central_sum(1) == 2
    assert central_sum(9) == 48620
    for m in range(40):
        direct = central_direct(m)
        assert central_sum(m, "binomial") == direct
        assert central_sum(m, "factorial") == direct
        assert central_sum(m, "split") == direct
    with pytest.raises(ParameterError):
        central_sum(3, "other")


def test_half_recursion():
    assert central_half_recursion(4, "even") == 12870
    assert central_half_recursion(0, "even") == 1
    assert central_half_recursion(4, "odd") == 48620
    for q in range(30):
        assert central_half_recursion(q, "even") == central_direct(2 * q)
        assert central_half_recursion(q, "odd") == central_direct(2 * q + 1)


def test_doubling():
    assert central_double(2) == 70
    assert central_double(0) == 1
    assert central_double(4) == 12870
    for q in range(25):
        assert central_double(q) == central_direct(2 * q)
        assert central_double(q, "stirling") == central_direct(2 * q)


def test_weighted_recursion():
    assert central_alt_recursion(4, "even") == 12870
    assert central_alt_recursion(2, "even") == 70
    assert central_alt_recursion(2, "odd") == 252
    for q in range(1, 30):
        assert central_alt_recursion(q, "even") == central_direct(2 * q)
        assert central_alt_recursion(q, "odd") == central_direct(2 * q + 1)
    with pytest.raises(ParameterError):
        central_alt_recursion(0, "even")


def test_weighted_recursion_worked_prefactor():
    inner = sum(4**j * j * comb(8, 2 * j) * central_direct(4 - j) for j in range(1, 5))
    assert inner == 27456
    assert Fraction(15, 32) * 27456 == 12870


def test_self_recursion_values():
    assert central_self_recursion(2, "even_binomials") == 6
    assert central_self_recursion(3, "even_binomials") == 20
    assert central_self_recursion(2, "odd_binomials") == 6
    for q in range(1, 40):
        assert central_self_recursion(q, "even_binomials") == central_direct(q)
        assert central_self_recursion(q, "odd_binomials") == central_direct(q)


def test_self_recursion_even_per_term_values():
    # q = 3 splits into -140 + 320/3 + 160/3 = 20
    q = 3
    terms = []
    for j in range(1, q + 1):
        coeff = Fraction((4 * q - 1) * j, 2 * q * q) - 1
        terms.append(4**j * comb(2 * q, 2 * j) * coeff * central_direct(q - j))
    assert terms == [Fraction(-140), Fraction(320, 3), Fraction(160, 3)]
    assert sum(terms) == 20


def test_self_recursion_odd_per_term_values():
    # q = 2 splits into 2 + 4 = 6
    q = 2
    den = 4 * q * q * (2 * q + 1)
    terms = [
        4**j
        * comb(2 * q + 1, 2 * j + 1)
        * Fraction((4 * q + 1) * (2 * j + 1) - (2 * q + 1) ** 2, den)
        * central_direct(q - j)
        for j in range(1, q + 1)
    ]
    assert terms == [Fraction(2), Fraction(4)]


def test_printed_self_recursions_fail():
    assert central_self_recursion_printed(2, "even_binomials") == Fraction(-16, 9)
    assert central_self_recursion_printed(2, "odd_binomials") == 30
    for q in (1, 2, 3, 4):
        assert central_self_recursion_printed(q, "even_binomials") != central_direct(q)
        assert central_self_recursion_printed(q, "odd_binomials") != central_direct(q)


def test_krawtchouk_sum():
    assert central_krawtchouk_sum(3) == 20 == comb(6, 3)
    assert central_krawtchouk_sum(4) == 0
    assert central_krawtchouk_sum(1) == 2
    for q in range(1, 25):
        expected = 0 if q % 2 == 0 else central_direct(q)
        assert central_krawtchouk_sum(q) == expected


def test_krawtchouk_raw_odd_is_not_double_index():
    # reading the odd-case left side as c_{2q} fails immediately
    assert central_krawtchouk_raw(1) == 2
    assert CACHE.central(2) == 6
    with pytest.raises(ParameterError):
        central_krawtchouk_raw(0)
