from math import factorial

import pytest

from krawkit.errors import ParameterError
from krawkit.factorials import (
    double_factorial,
    falling_factorial,
    stirling_first_unsigned,
)


def test_double_factorial_conventions():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(1) == 1
    assert double_factorial(5) == 15
    assert double_factorial(6) == 48
    assert double_factorial(9) == 945
    with pytest.raises(ParameterError):
        double_factorial(-2)


def test_factorial_splits():
    for j in range(60):
        assert factorial(2 * j) == 2**j * factorial(j) * double_factorial(2 * j - 1)
        assert factorial(2 * j + 1) == 2**j * factorial(j) * double_factorial(2 * j + 1)


def test_falling_factorial():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(3, 5) == 0
    assert falling_factorial(-1, 3) == -6
    with pytest.raises(ParameterError):
        falling_factorial(4, -1)


def test_stirling_values():
    assert stirling_first_unsigned(0, 0) == 1
    assert stirling_first_unsigned(3, 0) == 0
    assert stirling_first_unsigned(4, 2) == 11
    assert stirling_first_unsigned(5, 3) == 35
    assert stirling_first_unsigned(4, 5) == 0


def test_stirling_row_sums_are_factorials():
    for n in range(10):
        assert sum(stirling_first_unsigned(n, k) for k in range(n + 1)) == factorial(n)


def test_stirling_expands_falling_factorial():
    for q in range(10):
        for j in range(10):
            total = 0
            for i in range(j + 1):
                term = stirling_first_unsigned(j, i) * q**i
                total += -term if (j - i) % 2 else term
            assert total == falling_factorial(q, j)
