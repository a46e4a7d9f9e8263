"""Catalan numbers C_n by independent routes, their congruences modulo small
powers of two, the Mersenne parity law, the mod-4 classification, and the
Motzkin binomial-transform cross-check.

Every recursive route reads earlier values from the direct-filled
SequenceCache, so routes are checked against ground truth rather than
against themselves.  Congruence predictions are CongruenceClaim records whose
left side carries its integer cofactor explicitly (cofactors like n(2n-1) are
not invertible modulo powers of two, so no modular division is attempted).

Two printed identities from the literature are reproduced verbatim in
*_printed helpers because they fail as printed (an index shift and a dropped
factor 2); the corrected forms are the default routes and are swept against
the direct values.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .central import CACHE, SequenceCache
from .dyadic import CongruenceClaim
from .errors import ParameterError, UnsupportedClaimError, as_integer

ROUTES = (
    "direct",
    "ratio",
    "difference",
    "halving",
    "weighted",
    "touchard",
    "callan",
    "hurtado",
    "amdeberhan",
)

CONGRUENCE_FAMILIES = ("touchard", "halving", "callan", "callan-printed")


def catalan(n: int, route: str = "direct", cache: SequenceCache = CACHE) -> int:
    """C_n by the selected route; every route agrees with direct."""
    if n < 0:
        raise ParameterError("index must be nonnegative")
    try:
        fn = _ROUTE_FUNCTIONS[route]
    except KeyError:
        raise ParameterError(f"unknown route {route!r}") from None
    return fn(n, cache)


def _direct(n: int, cache: SequenceCache) -> int:
    """C_n = (2n)!/(n!(n+1)!) = C(2n, n)/(n+1), exactness asserted in the cache."""
    return cache.catalan(n)


def _ratio(n: int, cache: SequenceCache) -> int:
    """C_n = 2(2n-1)/(n+1) C_{n-1}."""
    if n == 0:
        return 1
    value = Fraction(2 * (2 * n - 1), n + 1) * cache.catalan(n - 1)
    return as_integer(value, "ratio route")


def _difference(n: int, cache: SequenceCache) -> int:
    """C_n = C(2n, n) - C(2n, n+1)."""
    return comb(2 * n, n) - comb(2 * n, n + 1)


def _halving(n: int, cache: SequenceCache) -> int:
    """Index-halving recursion:

    C_{2t}   = 1/(2t+1) sum_k 4^k (t-k+1) C(2t, 2k)     C_{t-k}
    C_{2t+1} = 1/(t+1)  sum_k 4^k (t-k+1) C(2t+1, 2k+1) C_{t-k}
    """
    t, odd = divmod(n, 2)
    if odd:
        acc = sum(
            4**k * (t - k + 1) * comb(2 * t + 1, 2 * k + 1) * cache.catalan(t - k)
            for k in range(t + 1)
        )
        return as_integer(Fraction(acc, t + 1), "halving route (odd)")
    acc = sum(
        4**k * (t - k + 1) * comb(2 * t, 2 * k) * cache.catalan(t - k)
        for k in range(t + 1)
    )
    return as_integer(Fraction(acc, 2 * t + 1), "halving route (even)")


def _weighted(n: int, cache: SequenceCache) -> int:
    """Weighted index-halving recursion:

    C_{2t}   = (4t-1)/((2t+1) 2t^2)    sum_{k>=1} 4^k k (t-k+1) C(2t, 2k) C_{t-k}
    C_{2t+1} = (4t+1)/((t+1)(2t+1)^2)  sum_{k>=0} 4^k (2k+1)(t-k+1) C(2t+1, 2k+1) C_{t-k}

    The even case needs t >= 1 (its sum starts at k = 1).
    """
    t, odd = divmod(n, 2)
    if odd:
        acc = sum(
            4**k * (2 * k + 1) * (t - k + 1) * comb(2 * t + 1, 2 * k + 1) * cache.catalan(t - k)
            for k in range(t + 1)
        )
        prefactor = Fraction(4 * t + 1, (t + 1) * (2 * t + 1) ** 2)
        return as_integer(prefactor * acc, "weighted route (odd)")
    if t < 1:
        raise ParameterError("weighted route needs index >= 1 when even")
    acc = sum(
        4**k * k * (t - k + 1) * comb(2 * t, 2 * k) * cache.catalan(t - k)
        for k in range(1, t + 1)
    )
    prefactor = Fraction(4 * t - 1, (2 * t + 1) * 2 * t * t)
    return as_integer(prefactor * acc, "weighted route (even)")


def _touchard(n: int, cache: SequenceCache) -> int:
    """Touchard's identity: C_n = sum_k 2^(n-1-2k) C(n-1, 2k) C_k for n >= 1."""
    if n == 0:
        return 1
    return sum(
        (1 << (n - 1 - 2 * k)) * comb(n - 1, 2 * k) * cache.catalan(k)
        for k in range((n - 1) // 2 + 1)
    )


def _callan(n: int, cache: SequenceCache) -> int:
    """Callan's weighted variant of Touchard's identity, for n >= 2:
    C_n = (n+2)/(n(n-1)) sum_{k>=1} 2^(n-2k) k C(n, 2k) C_k."""
    if n < 2:
        raise ParameterError("the Callan route needs n >= 2")
    acc = sum(
        (1 << (n - 2 * k)) * k * comb(n, 2 * k) * cache.catalan(k)
        for k in range(1, n // 2 + 1)
    )
    return as_integer(Fraction((n + 2) * acc, n * (n - 1)), "Callan route")


def _hurtado(n: int, cache: SequenceCache) -> int:
    """The Hurtado-Noy recursion, for n >= 2:
    C_n = (n+2) sum_k 2^(n-2k-2)/(k+2) C(n-2, 2k) C_k."""
    if n <= 1:
        return 1
    total = Fraction(0)
    for k in range((n - 2) // 2 + 1):
        total += Fraction((1 << (n - 2 * k - 2)) * comb(n - 2, 2 * k), k + 2) * cache.catalan(k)
    return as_integer((n + 2) * total, "Hurtado-Noy route")


def hurtado_printed(n: int, cache: SequenceCache = CACHE) -> Fraction:
    """The Hurtado-Noy recursion exactly as printed in its secondary source,
    with 2^(n-2k-1) miscopied as 2^(n-2k); the value comes out doubled.  Kept
    verbatim for the misprint demonstration; _hurtado is the verified form."""
    if n <= 1:
        raise ParameterError("printed form applies from n = 2")
    total = Fraction(0)
    for k in range((n - 2) // 2 + 1):
        total += Fraction((1 << (n - 1 - 2 * k)) * comb(n - 2, 2 * k), k + 2) * cache.catalan(k)
    return (n + 2) * total


def _amdeberhan(n: int, cache: SequenceCache) -> int:
    """Amdeberhan's identity, for n >= 2:
    C_n = (n+2)/(2(n-1)) sum_k (2k+1)/(k+2) 2^(n-1-2k) C(n-1, 2k+1) C_k."""
    if n <= 1:
        return 1
    total = Fraction(0)
    for k in range((n - 2) // 2 + 1):
        total += (
            Fraction((2 * k + 1) * (1 << (n - 1 - 2 * k)) * comb(n - 1, 2 * k + 1), k + 2)
            * cache.catalan(k)
        )
    return as_integer(Fraction(n + 2, 2 * (n - 1)) * total, "Amdeberhan route")


def amdeberhan_printed(n: int, cache: SequenceCache = CACHE) -> Fraction:
    """Amdeberhan's identity as printed, with C_n on the left where the right
    side actually sums to C_{n+1}.  Kept verbatim for the misprint
    demonstration; _amdeberhan is the verified form."""
    if n < 1:
        raise ParameterError("printed form applies from n = 1")
    total = Fraction(0)
    for k in range((n - 1) // 2 + 1):
        total += (
            Fraction((2 * k + 1) * (1 << (n - 2 * k)) * comb(n, 2 * k + 1), k + 2)
            * cache.catalan(k)
        )
    return Fraction(n + 3, 2 * n) * total


_ROUTE_FUNCTIONS = {
    "direct": _direct,
    "ratio": _ratio,
    "difference": _difference,
    "halving": _halving,
    "weighted": _weighted,
    "touchard": _touchard,
    "callan": _callan,
    "hurtado": _hurtado,
    "amdeberhan": _amdeberhan,
}


def catalan_residues(limit: int, modulus: int) -> list[int]:
    """C_n mod modulus for n = 0..limit, streamed through the exact ratio
    recursion and anchored to the direct value at every power of two."""
    if limit < 0:
        raise ParameterError("limit must be nonnegative")
    if modulus < 2:
        raise ParameterError("modulus must be >= 2")
    residues = [1 % modulus]
    value = 1
    for n in range(1, limit + 1):
        quotient, remainder = divmod(value * 2 * (2 * n - 1), n + 1)
        if remainder:
            raise ParameterError(f"ratio recursion broke at n={n}")
        value = quotient
        if n & (n - 1) == 0:
            direct = comb(2 * n, n) // (n + 1)
            if direct != value:
                raise ParameterError(f"stream diverged from direct value at n={n}")
        residues.append(value % modulus)
    return residues


def _congruence_rule(
    n: int, parity: str, modulus: int, family: str, C
) -> tuple[int, int, int]:
    """(cofactor, target index, predicted value) for the chosen family.

    C is a getter for Catalan values (exact or reduced mod a multiple of
    `modulus`); the prediction is C-linear so residues suffice.
    """
    if n < 1:
        raise ParameterError("congruence rules apply from n = 1")
    even = parity == "even"
    if not even and parity != "odd":
        raise ParameterError(f"unknown parity {parity!r}")
    target = 2 * n if even else 2 * n + 1
    if family == "touchard":
        if modulus not in (2, 4, 8, 16):
            raise UnsupportedClaimError(f"modulus {modulus} not covered")
        if even:
            if modulus == 2:
                return 1, target, 0
            if modulus == 4:
                return 1, target, 2 * C(n - 1)
            if modulus == 8:
                return 1, target, 2 * (2 * n - 1) * C(n - 1)
            second = 8 * comb(2 * n - 1, 3) * C(n - 2) if n >= 2 else 0
            return 1, target, 2 * (2 * n - 1) * C(n - 1) + second
        if modulus in (2, 4):
            return 1, target, C(n)
        if modulus == 8:
            return 1, target, C(n) - 4 * n * C(n - 1)
        return 1, target, C(n) + 4 * n * (2 * n - 1) * C(n - 1)
    if family == "halving":
        if modulus not in (2, 4, 8, 16):
            raise UnsupportedClaimError(f"modulus {modulus} not covered")
        if even:
            if modulus == 2:
                return 1, target, (n + 1) * C(n)
            cofactor = 2 * n + 1
            if modulus == 4:
                return cofactor, target, (n + 1) * C(n)
            if modulus == 8:
                return cofactor, target, (n + 1) * C(n) - 4 * n * n * C(n - 1)
            return cofactor, target, (n + 1) * C(n) + 4 * n * n * (2 * n - 1) * C(n - 1)
        cofactor = n + 1
        if modulus == 2:
            return cofactor, target, (n + 1) * C(n)
        if modulus == 4:
            return cofactor, target, (n + 1) * (2 * n + 1) * C(n)
        return (
            cofactor,
            target,
            (n + 1) * (2 * n + 1) * C(n) + 4 * n * comb(2 * n + 1, 3) * C(n - 1),
        )
    if family == "callan":
        if even:
            if modulus == 2:
                return n, target, 0
            if modulus in (4, 8):
                return n * (2 * n - 1), target, n * (n + 1) * C(n)
            if modulus == 16:
                predicted = (n + 1) * (
                    4 * n * (n - 1) * (2 * n - 1) * C(n - 1) + n * C(n)
                )
                return n * (2 * n - 1), target, predicted
            raise UnsupportedClaimError(f"modulus {modulus} not covered")
        if modulus == 2:
            return n, target, n * C(n)
        if modulus == 4:
            return n * (2 * n + 1), target, 3 * n * C(n)
        if modulus in (8, 16):
            # corrected expansion; the printed one is under "callan-printed"
            predicted = (2 * n + 3) * (
                n * (2 * n + 1) * C(n) + 4 * (n - 1) * comb(2 * n + 1, 3) * C(n - 1)
            )
            return n * (2 * n + 1), target, predicted
        raise UnsupportedClaimError(f"modulus {modulus} not covered")
    if family == "callan-printed":
        if even or modulus not in (8, 16):
            raise UnsupportedClaimError(
                "the printed Callan expansion differs only for odd targets mod 8/16"
            )
        predicted = 4 * (n - 1) * comb(2 * n + 1, 3) * C(n - 1) - (4 * n * n + 3) * n * C(n)
        return n * (2 * n + 1), target, predicted
    raise UnsupportedClaimError(f"unknown family {family!r}")


def catalan_congruence(
    n: int, parity: str, modulus: int, family: str, cache: SequenceCache = CACHE
) -> CongruenceClaim:
    """Predicted residue of cofactor * C_target modulo a power of two, where
    target is 2n (parity "even") or 2n+1 ("odd").

    Families: "touchard" (cofactor 1), "halving" (cofactors 2n+1 / n+1),
    "callan" (cofactors n / n(2n-1) / n(2n+1)), and "callan-printed" (the
    misprinted odd mod-8/16 expansion, kept for the misprint demonstration).
    """
    cofactor, target, predicted = _congruence_rule(n, parity, modulus, family, cache.catalan)
    return CongruenceClaim(
        subject="catalan-cofactor",
        params=(
            ("n", n),
            ("parity", 0 if parity == "even" else 1),
            ("cofactor", cofactor),
            ("target", target),
            ("family", CONGRUENCE_FAMILIES.index(family)),
        ),
        modulus=modulus,
        residue=predicted % modulus,
    )


def verify_catalan_claim(claim: CongruenceClaim, cache: SequenceCache = CACHE) -> bool:
    """Check a catalan-cofactor claim against exact values."""
    if claim.subject != "catalan-cofactor":
        raise ParameterError(f"unknown claim subject {claim.subject!r}")
    p = dict(claim.params)
    left = p["cofactor"] * cache.catalan(p["target"])
    return left % claim.modulus == claim.residue


def catalan_power_congruence(k: int, l: int, j: int, c_l_mod2: int | None = None) -> int:
    """C_{2^k l + j} mod 2 predicted from the block position j: 0 for
    1 <= j < 2^k - 1, and C_l mod 2 at j = 2^k - 1.

    c_l_mod2 may supply a precomputed parity of C_l (sweeps stream one); when
    omitted it is taken from the direct value.
    """
    if k < 1 or l < 1:
        raise ParameterError("need k, l >= 1")
    if not 1 <= j <= (1 << k) - 1:
        raise ParameterError(f"need 1 <= j <= 2^{k} - 1")
    if j < (1 << k) - 1:
        return 0
    if c_l_mod2 is None:
        c_l_mod2 = (comb(2 * l, l) // (l + 1)) % 2
    return c_l_mod2 % 2


def mersenne_parity(n: int) -> str:
    """"odd" exactly when n = 2^a - 1 for some a >= 0, else "even"."""
    if n < 0:
        raise ParameterError("index must be nonnegative")
    return "odd" if n & (n + 1) == 0 else "even"


def mod4_class(n: int) -> int:
    """The structural class of C_n mod 4: 1 when n+1 is a power of two
    (n = 2^a - 1), 2 when n+1 has exactly two binary ones (n = 2^a + 2^b - 1
    with a > b >= 0), else 0; residue 3 never occurs."""
    if n < 0:
        raise ParameterError("index must be nonnegative")
    ones = bin(n + 1).count("1")
    if ones == 1:
        return 1
    if ones == 2:
        return 2
    return 0


def motzkin(n: int, cache: SequenceCache = CACHE) -> int:
    """M_n = sum_k C(n, 2k) C_k."""
    return cache.motzkin(n)


def motzkin_inverse_check(n: int, cache: SequenceCache = CACHE) -> bool:
    """Whether C_{n+1} = sum_k C(n, k) M_k holds at n."""
    if n < 0:
        raise ParameterError("index must be nonnegative")
    total = sum(comb(n, k) * cache.motzkin(k) for k in range(n + 1))
    return total == cache.catalan(n + 1)
