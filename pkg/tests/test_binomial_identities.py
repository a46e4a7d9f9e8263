from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krawkit.binomial_identities import (
    consecutive_even_product,
    consecutive_odd_product,
    double_binomial,
    falling_factorial_stirling,
    pochhammer_binomial,
    power_reduce_binomial,
    power_reduce_binomial_single,
    stirling_binomial,
)
from krawkit.errors import ParameterError


def test_double_binomial_examples():
    assert double_binomial(4, 2, "even", "first") == 70
    assert double_binomial(4, 1, "odd", "first") == 56
    assert double_binomial(5, 0, "even", "first") == 1
    assert double_binomial(5, 0, "even", "second") == 1


def test_double_binomial_forms_agree():
    for m in range(13):
        for q in range(m + 1):
            assert double_binomial(m, q, "even", "first") == comb(2 * m, 2 * q)
            assert double_binomial(m, q, "even", "second") == comb(2 * m, 2 * q)
            if q < m:
                assert double_binomial(m, q, "odd", "first") == comb(2 * m, 2 * q + 1)
                assert double_binomial(m, q, "odd", "second") == comb(2 * m, 2 * q + 1)


def test_double_binomial_odd_needs_q_below_m():
    with pytest.raises(ParameterError):
        double_binomial(4, 4, "odd", "first")


def test_power_reduce_binomial():
    assert power_reduce_binomial(1, 4, 3, 1) == 70
    assert power_reduce_binomial(3, 6, 2, 2) == 924
    for m in (1, 2, 3):
        for r in (1, 2, 3):
            for s in (1, 2, 3):
                order = m << r
                for p in range(order + 1):
                    assert power_reduce_binomial(m, p, r, s) == comb(order, p)
    assert power_reduce_binomial(5, 0, 2, 3) == 1


def test_power_reduce_binomial_single_sum():
    for m in (1, 2, 5):
        for r in (1, 2, 3):
            order = m << r
            for p in range(order + 1):
                assert power_reduce_binomial_single(m, p, r) == comb(order, p)


def test_pochhammer_binomial_examples():
    assert pochhammer_binomial(4, 2) == 70
    assert pochhammer_binomial(2, 1, 1, 0) == 10
    assert pochhammer_binomial(7, 0) == 1
    with pytest.raises(ParameterError):
        pochhammer_binomial(4, 4, 0, 1)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 30), st.data())
def test_pochhammer_binomial_all_variants(m, data):
    q = data.draw(st.integers(0, m))
    assert pochhammer_binomial(m, q, 0, 0) == comb(2 * m, 2 * q)
    assert pochhammer_binomial(m, q, 1, 0) == comb(2 * m + 1, 2 * q)
    assert pochhammer_binomial(m, q, 1, 1) == comb(2 * m + 1, 2 * q + 1)
    if q < m:
        assert pochhammer_binomial(m, q, 0, 1) == comb(2 * m, 2 * q + 1)


def test_stirling_binomial():
    assert stirling_binomial(4, 2) == 70
    assert stirling_binomial(6, 0) == 1
    for m in range(11):
        for q in range(m + 1):
            assert stirling_binomial(m, q) == comb(2 * m, 2 * q)


def test_falling_factorial_stirling():
    for q in range(13):
        for j in range(13):
            expected = 1
            for i in range(j):
                expected *= q - i
            assert falling_factorial_stirling(q, j) == expected


def test_consecutive_products_worked_example():
    assert consecutive_odd_product(6, 11) == 1322685
    assert consecutive_even_product(6, 11) == 967680
    assert 1322685 * 967680 == factorial(21) // factorial(11)


def test_consecutive_products_single_factor():
    for m in range(2, 20):
        assert consecutive_odd_product(m - 1, m) == 2 * m - 1
        assert consecutive_even_product(m - 1, m) == 2 * m - 2


def test_consecutive_products_match_direct():
    for m in range(1, 25):
        for q in range(m):
            odd = even = 1
            for j in range(q, m):
                odd *= 2 * j + 1
                even *= 2 * j
            assert consecutive_odd_product(q, m) == odd
            assert consecutive_even_product(q, m) == even
    with pytest.raises(ParameterError):
        consecutive_odd_product(5, 5)
