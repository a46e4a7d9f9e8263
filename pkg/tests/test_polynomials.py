from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krawkit import reference
from krawkit.errors import IdentityViolationError, ParameterError
from krawkit.polynomials import (
    KrawtchoukTable,
    _check_table,
    binomial,
    build_table,
    krawtchouk,
    krawtchouk_at_two,
    krawtchouk_closed,
    krawtchouk_half,
    krawtchouk_in_range,
    krawtchouk_via_symmetry,
)


def test_binomial_small_values():
    assert binomial(4, 2) == 6
    assert binomial(48, 16) == 2254848913647
    assert binomial(-1, 3) == -1
    assert binomial(0, 0) == 1
    assert binomial(5, -1) == 0
    assert binomial(3, 7) == 0


def test_binomial_negative_upper_matches_falling_factorial():
    for x in range(-8, 9):
        for k in range(0, 9):
            product = 1
            for i in range(k):
                product *= x - i
            expected = Fraction(product, 1)
            for i in range(2, k + 1):
                expected /= i
            assert expected.denominator == 1
            assert binomial(x, k) == expected.numerator


def test_krawtchouk_worked_value():
    # C(4,0)C(4,2) - C(4,1)C(4,1) + C(4,2)C(4,0) = 6 - 16 + 6
    assert krawtchouk(8, 2, 4) == -4


def test_krawtchouk_degree_zero_and_one():
    for n in range(1, 12):
        for x in range(-3, n + 4):
            assert krawtchouk(n, 0, x) == 1
            assert krawtchouk(n, 1, x) == n - 2 * x


def test_krawtchouk_degree_out_of_range():
    with pytest.raises(ParameterError):
        krawtchouk(4, 5, 1)
    with pytest.raises(ParameterError):
        krawtchouk(4, -1, 1)


def test_krawtchouk_in_range_convention():
    assert krawtchouk_in_range(4, 2, -1) == 0
    assert krawtchouk_in_range(4, 2, 5) == 0
    assert krawtchouk_in_range(4, 2, 2) == krawtchouk(4, 2, 2)
    # degree above the order vanishes at in-range integer arguments
    assert krawtchouk_in_range(2, 4, 1) == 0


def test_closed_forms():
    assert krawtchouk_closed(4, 1, "zero") == 4
    assert krawtchouk_closed(4, 1, "one") == 2
    assert krawtchouk_closed(4, 1, "n") == -4
    assert krawtchouk_closed(6, 3, "zero") == 20
    for n in range(1, 20):
        for p in range(n + 1):
            assert krawtchouk_closed(n, p, "zero") == krawtchouk(n, p, 0)
            assert krawtchouk_closed(n, p, "one") == krawtchouk(n, p, 1)
            assert krawtchouk_closed(n, p, "n") == krawtchouk(n, p, n)
    with pytest.raises(ParameterError):
        krawtchouk_closed(4, 1, "two")


def test_argument_two():
    assert krawtchouk_at_two(8, 4) == -10
    assert krawtchouk_at_two(4, 2) == -2
    for n in range(2, 40):
        for p in range(n + 1):
            assert krawtchouk_at_two(n, p) == krawtchouk(n, p, 2)
    # at the central degree the value is c_m / (1 - 2m)
    for m in range(1, 12):
        expected = Fraction(comb(2 * m, m), 1 - 2 * m)
        assert expected.denominator == 1
        assert krawtchouk_at_two(2 * m, m) == expected.numerator


def test_half_argument():
    assert krawtchouk_half(8, 4) == 6
    assert krawtchouk_half(6, 3) == 0
    assert krawtchouk_half(4, 2) == -2
    for n in range(0, 40, 2):
        for k in range(n + 1):
            assert krawtchouk_half(n, k) == krawtchouk(n, k, n // 2)
    with pytest.raises(ParameterError):
        krawtchouk_half(5, 2)


def test_symmetry_relations():
    assert krawtchouk_via_symmetry(8, 2, 4, "sign_flip") == -4
    assert krawtchouk_via_symmetry(7, 3, 4, "reflect") == 3
    assert krawtchouk_via_symmetry(5, 3, 0, "cross") == comb(5, 3)
    with pytest.raises(ParameterError):
        krawtchouk_via_symmetry(7, 3, 2, "reflect")
    with pytest.raises(ParameterError):
        krawtchouk_via_symmetry(7, 3, 2, "mirror")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 40), st.data())
def test_symmetry_properties(n, data):
    k = data.draw(st.integers(0, n))
    j = data.draw(st.integers(0, n))
    assert comb(n, j) * krawtchouk(n, k, j) == comb(n, k) * krawtchouk(n, j, k)
    flip = krawtchouk(n, n - k, j)
    assert krawtchouk(n, k, j) == (-flip if j % 2 else flip)
    assert krawtchouk(n, k, n - k) == krawtchouk(n, n - k, k)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 32), st.data())
def test_column_and_row_sums(n, data):
    j = data.draw(st.integers(1, n))
    assert sum(krawtchouk(n, p, j) for p in range(n + 1)) == 0
    p = data.draw(st.integers(0, (n - 1) // 2)) * 2 + 1
    assert sum(krawtchouk(n, p, x) for x in range(n + 1)) == 0


def test_build_table_examples():
    assert build_table(2).values == ((1, 1, 1), (2, 0, -2), (1, -1, 1))
    assert build_table(1).values == ((1, 1), (1, -1))
    assert build_table(4).row(2) == (6, 0, -2, 0, 6)
    assert build_table(0).values == ((1,),)
    with pytest.raises(ParameterError):
        build_table(-1)


@pytest.mark.parametrize("n", sorted(reference.VALUE_TABLES))
def test_tables_match_reference(n):
    assert build_table(n).values == reference.VALUE_TABLES[n]


def test_reference_misprint_is_recorded():
    # the one printed deviation breaks the exact grid, which is why the
    # reference stores the exact value
    (n, p, j), printed = next(iter(reference.PRINTED_DEVIATIONS.items()))
    assert printed != krawtchouk(n, p, j)
    assert krawtchouk(6, 5, 4) == -2


def test_table_invariant_checker_rejects_corrupt_grid():
    table = build_table(3)
    corrupt = tuple(
        tuple(v + (1 if (p, j) == (2, 1) else 0) for j, v in enumerate(row))
        for p, row in enumerate(table.values)
    )
    with pytest.raises(IdentityViolationError):
        _check_table(KrawtchoukTable(3, corrupt))


def test_table_getitem():
    table = build_table(8)
    assert table[4, 2] == -10
    assert table[2, 4] == -4
