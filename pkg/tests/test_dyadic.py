from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krawkit.dyadic import (
    CongruenceClaim,
    binomial_valuation,
    factorial_valuation,
    predict_extended_congruence,
    predict_kronecker_congruence,
    predict_near_power_congruence,
    predict_scaled_congruence,
    predict_valuation_congruence,
    scaled_binomial,
    valuation_law_report,
    verify_claim,
)
from krawkit.errors import ParameterError, UnsupportedClaimError


def nu2(value):
    count = 0
    while value % 2 == 0 and value:
        value >>= 1
        count += 1
    return count


def test_factorial_valuation_values():
    assert factorial_valuation(8) == 7
    assert factorial_valuation(1) == 0
    assert factorial_valuation(6) == 4
    assert factorial_valuation(0) == 0
    for k in range(200):
        assert factorial_valuation(k) == nu2(factorial(k))


def test_factorial_valuation_power_of_two():
    for t in range(1, 12):
        assert factorial_valuation(1 << t) == (1 << t) - 1


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_valuation_recurrences(k):
    assert factorial_valuation(2 * k) == factorial_valuation(k) + k
    assert factorial_valuation(2 * k) == factorial_valuation(2 * k + 1)


def test_binomial_valuation():
    assert binomial_valuation(8, 3) == 3
    assert binomial_valuation(9, 0) == 0
    assert binomial_valuation(8, 3) == nu2(comb(8, 3))
    for m in range(60):
        for q in range(m + 1):
            assert binomial_valuation(m, q) == nu2(comb(m, q))


def test_valuation_laws():
    report = valuation_law_report(8, 3, 3)
    assert report == {"a": True, "b": True, "c": True, "d": True}
    assert factorial_valuation(24) == factorial_valuation(3) + 21
    assert factorial_valuation(17) == factorial_valuation(15) + 4
    for k in range(0, 300):
        assert all(valuation_law_report(k, 1 + k % 6, 2 * (k % 20) + 1).values())


def test_claim_normalization():
    claim = CongruenceClaim("scaled-binomial", (("m", 3), ("q", 1), ("r", 1), ("offset", 0)), 8, 7)
    assert claim.param("m") == 3
    with pytest.raises(ParameterError):
        CongruenceClaim("scaled-binomial", (), 6, 1)
    with pytest.raises(ParameterError):
        CongruenceClaim("scaled-binomial", (), 8, 9)


def test_scaled_congruence_worked_examples():
    # C(48,16) = C(2^4*3, 2^4*1): residues 3, 7, 15 mod 4, 8, 16
    assert scaled_binomial(3, 1, 4, 0) == comb(48, 16)
    assert predict_scaled_congruence(3, 1, 4, 0, 4).residue == 3
    assert predict_scaled_congruence(3, 1, 4, 0, 8).residue == 7
    assert predict_scaled_congruence(3, 1, 4, 0, 16).residue == 15
    # C(56,17) = C(2^3*7, 2^3*2 + 1): 0 mod 8 and 8 mod 16
    assert comb(56, 17) == 97997533741800
    assert predict_scaled_congruence(7, 2, 3, 1, 8).residue == 0
    assert predict_scaled_congruence(7, 2, 3, 1, 16).residue == 8
    for claim in (
        predict_scaled_congruence(3, 1, 4, 0, 4),
        predict_scaled_congruence(3, 1, 4, 0, 8),
        predict_scaled_congruence(3, 1, 4, 0, 16),
        predict_scaled_congruence(7, 2, 3, 1, 8),
        predict_scaled_congruence(7, 2, 3, 1, 16),
    ):
        assert verify_claim(claim)


def test_scaled_congruence_refuses_unstated_regimes():
    with pytest.raises(UnsupportedClaimError):
        predict_scaled_congruence(3, 1, 4, 1, 8)  # offset 1 needs r <= 3
    with pytest.raises(UnsupportedClaimError):
        predict_scaled_congruence(3, 1, 2, 1, 16)  # moduli 4 and 8 only at r=2
    with pytest.raises(UnsupportedClaimError):
        predict_scaled_congruence(3, 1, 1, 0, 32)


def test_valuation_congruence_examples():
    first, second = predict_valuation_congruence(8, 3, 1, 0)
    assert (first.modulus, first.residue) == (8, 0)
    assert (second.modulus, second.residue) == (16, 8)
    assert comb(16, 6) % 8 == 0 and comb(16, 6) % 16 == 56 % 16
    first, second = predict_valuation_congruence(8, 3, 2, 1)
    assert second.modulus == 32 and second.residue == 0
    assert verify_claim(first) and verify_claim(second)
    with pytest.raises(ParameterError):
        predict_valuation_congruence(8, 0, 1, 0)


def test_kronecker_congruence():
    for m in range(1, 30):
        for q in range(m + 1):
            for r in (1, 2, 3):
                for s in (0, 1):
                    for t in (0, 1):
                        claim = predict_kronecker_congruence(m, q, r, s, t)
                        assert verify_claim(claim), (m, q, r, s, t)


def test_near_power_congruence():
    first, second = predict_near_power_congruence(1, 2, "base")
    assert comb(8, 2) == 28 and 28 % 4 == 0 and 28 % 8 == comb(4, 1) % 8
    assert verify_claim(first) and verify_claim(second)
    first, second = predict_near_power_congruence(2, 3, "m-plus-1")
    assert first.param("m") == 9 and first.param("q") == 3
    assert verify_claim(first) and verify_claim(second)
    # t = 1 degenerates to the Lucas-type base case
    first, second = predict_near_power_congruence(3, 1, "base")
    assert (first.modulus, second.modulus) == (1, 2)
    assert verify_claim(first) and verify_claim(second)
    with pytest.raises(ParameterError):
        predict_near_power_congruence(1, 1, "q-minus-1")


def test_near_power_displayed_valuation_fails_at_t_two():
    # the displayed valuation t-1 = 1 does not hold: C(10, 2) = 45 is odd
    assert comb(10, 2) % 2 == 1
    first, _ = predict_near_power_congruence(1, 2, "m-plus-1")
    assert first.modulus == 1  # true valuation 0, claim degenerates
    assert verify_claim(first)


def test_extended_congruence():
    claim = predict_extended_congruence(5, 3, 0, 32)
    assert verify_claim(claim) and claim.residue == comb(10, 6) % 32
    claim = predict_extended_congruence(7, 3, 1, 16)
    assert verify_claim(claim) and claim.residue == comb(14, 7) % 16
    assert verify_claim(predict_extended_congruence(6, 0, 0, 64))
    with pytest.raises(ParameterError):
        predict_extended_congruence(4, 2, 0)  # q = 2, m-q = 2, both = 2 mod 3
    with pytest.raises(ParameterError):
        predict_extended_congruence(5, 2, 1)  # q = 2, m-q-1 = 2
    with pytest.raises(UnsupportedClaimError):
        predict_extended_congruence(5, 3, 0, 16)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 40), st.data())
def test_scaled_claims_verify(m, data):
    q = data.draw(st.integers(0, m))
    r = data.draw(st.integers(1, 4))
    modulus = data.draw(st.sampled_from([2, 4, 8, 16]))
    assert verify_claim(predict_scaled_congruence(m, q, r, 0, modulus))
