"""2-adic valuations of factorials and binomials, and congruence predictors
for binomials of the form C(2^r m, 2^r q) and C(2^r m, 2^r q + 1) modulo
powers of two.

The valuation of k! is eps(k) = sum_i floor(k / 2^i); the valuation of
C(m, q) is eps(m) - eps(q) - eps(m-q).  Predictors return CongruenceClaim
records (left-side descriptor, modulus, predicted residue) that a verifier
checks against the exact binomial.  Claims are only emitted for the parameter
regimes actually stated; anything else raises UnsupportedClaimError rather
than extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ParameterError, UnsupportedClaimError, as_integer

_NEAR_POWER_VARIANTS = ("m-plus-1", "m-plus-1-q-minus-1", "q-minus-1", "base")


@dataclass(frozen=True)
class CongruenceClaim:
    """A residue prediction awaiting exact verification.

    subject names the left-side expression family; params pins its integer
    parameters; the claim is `left == residue (mod modulus)` with the residue
    normalized to [0, modulus).
    """

    subject: str
    params: tuple[tuple[str, int], ...]
    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1 or self.modulus & (self.modulus - 1):
            raise ParameterError(f"modulus must be a power of two: {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ParameterError("residue must be normalized to [0, modulus)")

    def param(self, name: str) -> int:
        return dict(self.params)[name]


def _scaled_claim(m: int, q: int, r: int, offset: int, modulus: int, residue: int) -> CongruenceClaim:
    return CongruenceClaim(
        subject="scaled-binomial",
        params=(("m", m), ("q", q), ("r", r), ("offset", offset)),
        modulus=modulus,
        residue=residue % modulus,
    )


def scaled_binomial(m: int, q: int, r: int, offset: int) -> int:
    """The left side C(2^r m, 2^r q + offset) of the scaled claims."""
    return comb(m << r, (q << r) + offset)


def verify_claim(claim: CongruenceClaim) -> bool:
    """Check a scaled-binomial claim against the exact value."""
    if claim.subject != "scaled-binomial":
        raise ParameterError(f"unknown claim subject {claim.subject!r}")
    p = dict(claim.params)
    left = scaled_binomial(p["m"], p["q"], p["r"], p["offset"])
    return left % claim.modulus == claim.residue


@lru_cache(maxsize=None)
def factorial_valuation(k: int) -> int:
    """eps(k): the 2-adic valuation of k!, by the floor-sum formula."""
    if k < 0:
        raise ParameterError("k must be nonnegative")
    total = 0
    while k:
        k >>= 1
        total += k
    return total


def binomial_valuation(m: int, q: int) -> int:
    """eps(m) - eps(q) - eps(m-q), the 2-adic valuation of C(m, q)."""
    if not 0 <= q <= m:
        raise ParameterError(f"need 0 <= q <= m, got q={q}, m={m}")
    return factorial_valuation(m) - factorial_valuation(q) - factorial_valuation(m - q)


def valuation_law_report(k: int, r: int, m_odd: int) -> dict[str, bool]:
    """Pass/fail report for the basic laws of the factorial valuation:

    a: eps(k) <= k-1 for k >= 1, equality exactly at powers of two
    b: eps(2^r m) = eps(m) + (2^r - 1) m for odd m
    c: eps(2^r + 1) = eps(2^r - 1) + r
    d: eps(2k) = eps(2k+1), eps nondecreasing, and eps(k+2) >= eps(k) + 1
    """
    if k < 0 or r < 1 or m_odd < 1 or m_odd % 2 == 0:
        raise ParameterError("need k >= 0, r >= 1 and m_odd odd positive")
    e = factorial_valuation
    report = {}
    if k >= 1:
        is_pow2 = k & (k - 1) == 0
        report["a"] = e(k) <= k - 1 and (e(k) == k - 1) == is_pow2
    else:
        report["a"] = True
    report["b"] = e(m_odd << r) == e(m_odd) + ((1 << r) - 1) * m_odd
    report["c"] = e((1 << r) + 1) == e((1 << r) - 1) + r
    report["d"] = (
        e(2 * k) == e(2 * k + 1)
        and e(k) <= e(k + 1)
        and e(k + 2) >= e(k) + 1
    )
    return report


def predict_scaled_congruence(
    m: int, q: int, r: int, offset: int, modulus: int
) -> CongruenceClaim:
    """Residue of C(2^r m, 2^r q + offset) mod 2, 4, 8 or 16.

    offset 0, any r >= 1:
        mod 2, 4:           C(m, q)
        mod 8:              C(m, q) (1 + 2 q (m-q))   (also mod 16 when r = 1)
        mod 16, r >= 2:     C(m, q) (1 + 10 q (m-q))
    offset 1, 1 <= r <= 3:
        mod 2^r:            0
        mod 2^(r+1):        2^r (m-q) C(m, q)
    """
    if not 0 <= q <= m:
        raise ParameterError(f"need 0 <= q <= m, got q={q}, m={m}")
    if r < 1:
        raise ParameterError("need r >= 1")
    if modulus not in (2, 4, 8, 16):
        raise UnsupportedClaimError(f"modulus {modulus} not covered")
    c = comb(m, q)
    if offset == 0:
        if modulus in (2, 4):
            residue = c
        elif modulus == 8 or (modulus == 16 and r == 1):
            residue = c * (1 + 2 * q * (m - q))
        else:  # modulus 16, r >= 2
            residue = c * (1 + 10 * q * (m - q))
        return _scaled_claim(m, q, r, 0, modulus, residue)
    if offset == 1:
        if not 1 <= r <= 3:
            raise UnsupportedClaimError("offset-1 claims are stated for r <= 3 only")
        if modulus == 1 << r:
            return _scaled_claim(m, q, r, 1, modulus, 0)
        if modulus == 1 << (r + 1):
            return _scaled_claim(m, q, r, 1, modulus, (1 << r) * (m - q) * c)
        raise UnsupportedClaimError(
            f"offset-1 claims at r={r} cover moduli {1 << r} and {1 << (r + 1)} only"
        )
    raise ParameterError("offset must be 0 or 1")


def predict_valuation_congruence(
    m: int, q: int, r: int, offset: int
) -> tuple[CongruenceClaim, CongruenceClaim]:
    """Claims driven by e = eps(m, q), the valuation of C(m, q):

    offset 0: C(2^r m, 2^r q)     == 0       mod 2^e
                                  == C(m, q) mod 2^(e+1)
    offset 1: C(2^r m, 2^r q + 1) == C(m, q) mod 2^e
                                  == 0       mod 2^(e+r)
    """
    if not 1 <= q <= m:
        raise ParameterError(f"need 1 <= q <= m, got q={q}, m={m}")
    if r < 1:
        raise ParameterError("need r >= 1")
    e = binomial_valuation(m, q)
    c = comb(m, q)
    if offset == 0:
        return (
            _scaled_claim(m, q, r, 0, 1 << e, 0),
            _scaled_claim(m, q, r, 0, 1 << (e + 1), c),
        )
    if offset == 1:
        return (
            _scaled_claim(m, q, r, 1, 1 << e, c),
            _scaled_claim(m, q, r, 1, 1 << (e + r), 0),
        )
    raise ParameterError("offset must be 0 or 1")


def predict_kronecker_congruence(
    m: int, q: int, r: int, s: int, t: int
) -> CongruenceClaim:
    """The consolidated form C(2^r m, 2^r q + s) == C(m, q) (1 - delta(s, t))
    mod 2^(eps(m,q) + t), for s, t in {0, 1}."""
    if s not in (0, 1) or t not in (0, 1):
        raise ParameterError("s and t must be 0 or 1")
    if not 0 <= q <= m:
        raise ParameterError(f"need 0 <= q <= m, got q={q}, m={m}")
    if r < 1:
        raise ParameterError("need r >= 1")
    e = binomial_valuation(m, q)
    residue = 0 if s == t else comb(m, q)
    return _scaled_claim(m, q, r, s, 1 << (e + t), residue)


def predict_near_power_congruence(
    r: int, t: int, variant: str
) -> tuple[CongruenceClaim, CongruenceClaim]:
    """Claims at the near-power pairs built from m_t = 2^t, q_t = 2^(t-1) - 1.

    variant selects (m, q):
        "m-plus-1"            (m_t + 1, q_t)      valuation t - 1 for t >= 3
        "m-plus-1-q-minus-1"  (m_t + 1, q_t - 1)  valuation t - 1 for t >= 3
        "q-minus-1"           (m_t,     q_t - 1)  valuation t - 1 for t >= 3
        "base"                (m_t,     q_t)      valuation t     for t >= 2

    Claims are 0 mod 2^v and C(m, q) mod 2^(v+1) with v the valuation of
    C(m, q); where the displayed valuation applies it is asserted to match.
    Small t degenerates: the base pair at t = 1 has valuation 0 (reducing to
    the Lucas-type case), and the shifted pairs at t = 2 have valuation 0,
    not 1 (C(10, 2) = 45 is odd), so the true valuation is used there.
    """
    if r < 1 or t < 1:
        raise ParameterError("need r >= 1 and t >= 1")
    if variant not in _NEAR_POWER_VARIANTS:
        raise ParameterError(f"unknown variant {variant!r}")
    mt = 1 << t
    qt = (1 << (t - 1)) - 1
    if variant == "m-plus-1":
        m, q, expected = mt + 1, qt, t - 1 if t >= 3 else None
    elif variant == "m-plus-1-q-minus-1":
        m, q, expected = mt + 1, qt - 1, t - 1 if t >= 3 else None
    elif variant == "q-minus-1":
        m, q, expected = mt, qt - 1, t - 1 if t >= 3 else None
    else:
        m, q, expected = mt, qt, t if t >= 2 else None
    if q < 0:
        raise ParameterError(f"variant {variant!r} needs t >= 2")
    e = binomial_valuation(m, q)
    if expected is not None and e != expected:
        raise ParameterError(
            f"valuation of C({m},{q}) is {e}, expected {expected}"
        )
    return (
        _scaled_claim(m, q, r, 0, 1 << e, 0),
        _scaled_claim(m, q, r, 0, 1 << (e + 1), comb(m, q)),
    )


def predict_extended_congruence(
    m: int, q: int, offset: int, modulus: int | None = None
) -> CongruenceClaim:
    """Higher-modulus congruences available under divisibility-by-3 side
    conditions (r = 1 scale only):

    offset 0, if q or m-q is == 0,1 mod 3:
        C(2m, 2q) == C(m,q) {1 + 2q(m-q) + (2/3) q(q-1)(m-q)(m-q-1)} mod 32, 64
    offset 1, if 3 | q or 3 | (m-q-1):
        C(2m, 2q+1) == 2(m-q) C(m,q) {1 + (2/3) q(m-q-1)} mod 16, 32

    The braces are evaluated in exact rationals; the side condition is exactly
    what makes them integral.
    """
    if not 0 <= q <= m:
        raise ParameterError(f"need 0 <= q <= m, got q={q}, m={m}")
    d = m - q
    if offset == 0:
        if modulus is None:
            modulus = 64
        if modulus not in (32, 64):
            raise UnsupportedClaimError("even extended claims cover mod 32 and 64")
        if not (q % 3 in (0, 1) or d % 3 in (0, 1)):
            raise ParameterError("needs q or m-q congruent to 0 or 1 mod 3")
        brace = 1 + 2 * q * d + Fraction(2, 3) * q * (q - 1) * d * (d - 1)
        residue = comb(m, q) * as_integer(brace, "extended even brace")
        return _scaled_claim(m, q, 1, 0, modulus, residue)
    if offset == 1:
        if modulus is None:
            modulus = 32
        if modulus not in (16, 32):
            raise UnsupportedClaimError("odd extended claims cover mod 16 and 32")
        if not (q % 3 == 0 or (d - 1) % 3 == 0):
            raise ParameterError("needs 3 | q or 3 | (m-q-1)")
        brace = 1 + Fraction(2, 3) * q * (d - 1)
        residue = 2 * d * comb(m, q) * as_integer(brace, "extended odd brace")
        return _scaled_claim(m, q, 1, 1, modulus, residue)
    raise ParameterError("offset must be 0 or 1")
