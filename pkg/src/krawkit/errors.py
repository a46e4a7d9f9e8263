"""Exception hierarchy.

ParameterError covers caller mistakes (bad ranges, unsupported selectors) and
maps to CLI exit code 2.  InvariantViolationError covers conditions that the
library guarantees can never happen (a rational that must be integral is not,
an identity asserted inside an evaluator breaks) and maps to exit code 3.
"""

from __future__ import annotations

from fractions import Fraction


class KrawkitError(Exception):
    pass


class ParameterError(KrawkitError, ValueError):
    """A precondition on user-supplied parameters is violated."""


class EnumerationLimitError(ParameterError):
    """A subset-enumeration oracle was asked to exceed its supported size."""


class UnsupportedClaimError(ParameterError):
    """A congruence predictor was asked for a regime it does not state."""


class InvariantViolationError(KrawkitError, ArithmeticError):
    """An internal invariant failed; indicates a bug, not a usage error."""


class NonIntegralResultError(InvariantViolationError):
    """A rational that must reduce to an integer did not."""


class IdentityViolationError(InvariantViolationError):
    """An identity asserted inside an evaluator does not hold."""


def as_integer(value: Fraction, context: str) -> int:
    """Collapse an exact rational to an int, or raise NonIntegralResultError."""
    if value.denominator != 1:
        raise NonIntegralResultError(f"{context}: non-integral value {value}")
    return value.numerator
