"""Identity-verification registry and sweep runner.

Every identity the library implements is registered as a Check: a stable id,
a home suite, and a generator that sweeps a parameter box yielding one record
per point (params, left value, right value).  The runner turns records into
IdentityReport lines (jsonl), merges them in registration order regardless of
worker count, and reduces them to per-identity summaries.

Checks in the "paper-typos" suite are expected-fail demonstrations: they
reproduce identities exactly as printed in their sources, whose misprints the
exact sweeps expose.  The suite passes when each printed form does fail (and
each corrected counterpart passes); everywhere else a single failing point is
a verification failure.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Iterator

from . import binomial_identities as bi
from . import catalan_numbers as cat
from . import central as cen
from . import characters as ch
from . import dyadic as dy
from . import polynomials as kw
from . import reduction as red
from . import reference
from .errors import ParameterError

Record = tuple  # (params, lhs, rhs) or (params, lhs, rhs, status)

SUITES = (
    "table1",
    "thm-2.2",
    "thm-3.1",
    "sec4-binomials",
    "sec4-congruences",
    "sec5-central",
    "sec6-catalan",
    "paper-typos",
)

SKIPPED = "skipped-precondition"


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check at one parameter point."""

    identity: str
    suite: str
    params: dict
    lhs: str
    rhs: str
    status: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "identity": self.identity,
                "suite": self.suite,
                "params": self.params,
                "lhs": self.lhs,
                "rhs": self.rhs,
                "status": self.status,
            },
            separators=(",", ":"),
        )


@dataclass(frozen=True)
class SweepSpec:
    """A sweep request: one registered identity plus bound overrides."""

    identity: str
    bounds: tuple[tuple[str, int], ...] = ()


@dataclass(frozen=True)
class Check:
    identity: str
    suite: str
    summary: str
    run: Callable[[dict], Iterator[Record]]
    expect_fail: bool = False


@dataclass
class CheckResult:
    identity: str
    suite: str
    expect_fail: bool
    points: int = 0
    fails: int = 0
    skips: int = 0
    first_fail: dict | None = None

    @property
    def ok(self) -> bool:
        if self.expect_fail:
            return self.fails > 0
        return self.fails == 0


CHECKS: list[Check] = []


def check(identity: str, suite: str, summary: str, expect_fail: bool = False):
    if suite not in SUITES:
        raise ParameterError(f"unknown suite {suite!r}")
    def register(fn):
        CHECKS.append(Check(identity, suite, summary, fn, expect_fail))
        return fn
    return register


def _bv(bounds: dict, key: str, default: int) -> int:
    value = bounds.get(key)
    return default if value is None else value


# ----------------------------------------------------------------- table1

@check("table-entries", "table1", "value grids for orders 0..8 match the reference entries")
def _table_entries(bounds):
    for n, grid in reference.VALUE_TABLES.items():
        table = kw.build_table(n)
        for p in range(n + 1):
            for j in range(n + 1):
                yield {"n": n, "p": p, "j": j}, table[p, j], grid[p][j]


# ----------------------------------------------------------------- thm-2.2

@check("kraw-halving", "thm-2.2", "order halving K_p^{2m}(2j) equals the direct value")
def _kraw_halving(bounds):
    m_max = _bv(bounds, "m_max", 16)
    for m in range(1, m_max + 1):
        for p in range(2 * m + 1):
            for j in range(m + 1):
                yield {"m": m, "p": p, "j": j}, red.halve_order(m, p, j), kw._kraw_raw(2 * m, p, 2 * j)


@check("kraw-halving-even-split", "thm-2.2", "even parity split agrees with the halving sum")
def _kraw_halving_even(bounds):
    m_max = _bv(bounds, "m_max", 16)
    for m in range(1, m_max + 1):
        for q in range(m + 1):
            for j in range(m + 1):
                yield (
                    {"m": m, "q": q, "j": j},
                    red.halve_order_split(m, q, "even", j),
                    red.halve_order(m, 2 * q, j),
                )


@check("kraw-halving-odd-split", "thm-2.2", "odd parity split agrees with the halving sum")
def _kraw_halving_odd(bounds):
    m_max = _bv(bounds, "m_max", 16)
    for m in range(1, m_max + 1):
        for q in range(m):
            for j in range(m + 1):
                yield (
                    {"m": m, "q": q, "j": j},
                    red.halve_order_split(m, q, "odd", j),
                    red.halve_order(m, 2 * q + 1, j),
                )


@check("kraw-halving-cutoff", "thm-2.2", "terms beyond the cutoff index contribute nothing")
def _kraw_cutoff(bounds):
    m_max = _bv(bounds, "m_max", 16)
    for m in range(1, m_max + 1):
        for p in range(2 * m + 1):
            for j in range(m + 1):
                yield (
                    {"m": m, "p": p, "j": j},
                    red.halve_order_truncated(m, p, j),
                    red.halve_order(m, p, j),
                )


@check("kraw-degree-halving", "thm-2.2", "degree halving K_{2j}^{2m}(p) equals the direct value")
def _kraw_degree_halving(bounds):
    m_max = _bv(bounds, "m_max", 16)
    for m in range(1, m_max + 1):
        for j in range(m + 1):
            for p in range(m + 1):
                yield {"m": m, "j": j, "p": p}, red.halve_degree(m, j, p), kw._kraw_raw(2 * m, 2 * j, p)


@check("kraw-cancellation", "thm-2.2", "the all-degree double sum cancels to zero")
def _kraw_cancellation(bounds):
    m_max = _bv(bounds, "m_max", 16)
    for m in range(1, m_max + 1):
        for j in range(1, m + 1):
            yield {"m": m, "j": j}, red.cancellation_sum(m, j), 0


@check("kraw-symmetry-cross", "thm-2.2", "C(n,j) K_k^n(j) = C(n,k) K_j^n(k)")
def _kraw_sym_cross(bounds):
    n_max = _bv(bounds, "sym_n", 32)
    for n in range(n_max + 1):
        for k in range(n + 1):
            for j in range(n + 1):
                yield (
                    {"n": n, "k": k, "j": j},
                    comb(n, j) * kw._kraw_raw(n, k, j),
                    comb(n, k) * kw._kraw_raw(n, j, k),
                )


@check("kraw-symmetry-reflect", "thm-2.2", "K_k^n(n-k) = K_{n-k}^n(k)")
def _kraw_sym_reflect(bounds):
    n_max = _bv(bounds, "sym_n", 32)
    for n in range(n_max + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, kw._kraw_raw(n, k, n - k), kw._kraw_raw(n, n - k, k)


@check("kraw-symmetry-sign", "thm-2.2", "K_k^n(j) = (-1)^j K_{n-k}^n(j)")
def _kraw_sym_sign(bounds):
    n_max = _bv(bounds, "sym_n", 32)
    for n in range(n_max + 1):
        for k in range(n + 1):
            for j in range(n + 1):
                flip = kw._kraw_raw(n, n - k, j)
                yield (
                    {"n": n, "k": k, "j": j},
                    kw._kraw_raw(n, k, j),
                    -flip if j & 1 else flip,
                )


@check("kraw-column-sum", "thm-2.2", "columns j >= 1 of the value grid sum to zero")
def _kraw_column_sum(bounds):
    n_max = _bv(bounds, "sym_n", 32)
    for n in range(1, n_max + 1):
        for j in range(1, n + 1):
            yield {"n": n, "j": j}, sum(kw._kraw_raw(n, p, j) for p in range(n + 1)), 0


@check("kraw-odd-row-sum", "thm-2.2", "odd-degree rows of the value grid sum to zero")
def _kraw_row_sum(bounds):
    n_max = _bv(bounds, "sym_n", 32)
    for n in range(1, n_max + 1):
        for p in range(1, n + 1, 2):
            yield {"n": n, "p": p}, sum(kw._kraw_raw(n, p, j) for j in range(n + 1)), 0


@check("kraw-closed-points", "thm-2.2", "closed forms at arguments 0, 1 and n match the direct sum")
def _kraw_closed(bounds):
    n_max = _bv(bounds, "sym_n", 32)
    for n in range(n_max + 1):
        for p in range(n + 1):
            yield {"n": n, "p": p, "at": 0}, kw.krawtchouk_closed(n, p, "zero"), kw._kraw_raw(n, p, 0)
            if n >= 1:
                yield {"n": n, "p": p, "at": 1}, kw.krawtchouk_closed(n, p, "one"), kw._kraw_raw(n, p, 1)
            yield {"n": n, "p": p, "at": n}, kw.krawtchouk_closed(n, p, "n"), kw._kraw_raw(n, p, n)


@check("kraw-argument-two", "thm-2.2", "three-binomial closed form at argument 2")
def _kraw_at_two(bounds):
    n_max = _bv(bounds, "edge_n", 64)
    for n in range(2, n_max + 1):
        for p in range(n + 1):
            yield {"n": n, "p": p}, kw.krawtchouk_at_two(n, p), kw._kraw_raw(n, p, 2)


@check("kraw-half-argument", "thm-2.2", "closed form at the half-order argument")
def _kraw_half(bounds):
    n_max = _bv(bounds, "edge_n", 64)
    for n in range(0, n_max + 1, 2):
        for k in range(n + 1):
            yield {"n": n, "k": k}, kw.krawtchouk_half(n, k), kw._kraw_raw(n, k, n // 2)


@check("exterior-character", "thm-2.2", "subset-enumerated characters equal K_p^{2m}(2j)")
def _exterior_character(bounds):
    m_max = _bv(bounds, "char_m", 10)
    for m in range(1, m_max + 1):
        for p in range(2 * m + 1):
            for j in range(m + 1):
                yield {"m": m, "p": p, "j": j}, ch.exterior_character(m, p, j), kw._kraw_raw(2 * m, p, 2 * j)


@check("exterior-character-split", "thm-2.2", "middle-degree character splits into equal even halves")
def _exterior_split(bounds):
    m_max = _bv(bounds, "char_m", 10)
    for m in range(1, m_max + 1):
        for j in range(1, m + 1):
            plus, minus = ch.split_middle_character(m, j)
            yield {"m": m, "j": j}, plus + minus, ch.exterior_character(m, m, j)


@check("exterior-algebra-vanishing", "thm-2.2", "whole exterior algebra character vanishes at involutions")
def _exterior_vanishing(bounds):
    m_max = _bv(bounds, "char_m", 10)
    for m in range(1, m_max + 1):
        for j in range(1, m + 1):
            yield {"m": m, "j": j}, ch.exterior_algebra_character(m, j), 0


# ----------------------------------------------------------------- thm-3.1

def _multi_box(bounds):
    m_max = _bv(bounds, "multi_m", 5)
    rs_max = _bv(bounds, "rs_max", 4)
    for m in (1, 3, 5):
        if m > m_max:
            continue
        for r in range(1, rs_max + 1):
            for s in range(1, rs_max + 1):
                yield m, r, s


@check("multi-reduction-unpruned", "thm-3.1", "multi-step chain totals equal the direct values")
def _multi_unpruned(bounds):
    for m, r, s in _multi_box(bounds):
        nu = min(r, s)
        order = m << r
        for j in range((order >> s) + 1):
            for p in range(max(0, 2 * (nu - 1)), order + 1):
                yield (
                    {"m": m, "r": r, "s": s, "j": j, "p": p},
                    red.power_reduce_total(m, p, r, s, j),
                    kw._kraw_raw(order, p, j << s),
                )


@check("multi-reduction-pruned", "thm-3.1", "window-bounded chain totals equal the direct values")
def _multi_pruned(bounds):
    for m, r, s in _multi_box(bounds):
        nu = min(r, s)
        order = m << r
        for j in range((order >> s) + 1):
            for p in range(max(0, 2 * (nu - 1)), order + 1):
                yield (
                    {"m": m, "r": r, "s": s, "j": j, "p": p},
                    red.power_reduce_total(m, p, r, s, j, pruned=True),
                    kw._kraw_raw(order, p, j << s),
                )


@check("multi-reduction-below-bound", "thm-3.1", "chain totals stay exact below the stated degree bound")
def _multi_below_bound(bounds):
    for m in (1, 3):
        for r in range(2, 4):
            for s in range(2, 4):
                nu = min(r, s)
                order = m << r
                for j in range((order >> s) + 1):
                    for p in range(0, min(2 * (nu - 1), order + 1)):
                        yield (
                            {"m": m, "r": r, "s": s, "j": j, "p": p},
                            red.power_reduce_total(m, p, r, s, j),
                            kw._kraw_raw(order, p, j << s),
                        )


@check("multi-reduction-collapse", "thm-3.1", "one-step chains collapse to the halving sum")
def _multi_collapse(bounds):
    for m in range(1, 7):
        for p in range(2 * m + 1):
            for j in range(m + 1):
                trace = red.power_reduce(m, p, 1, 1, j)
                yield {"m": m, "p": p, "j": j}, trace.total, red.halve_order(m, p, j)


@check("multi-reduction-iterated", "thm-3.1", "two-step chains equal the halving sum applied twice")
def _multi_iterated(bounds):
    for m in range(1, 7):
        for j in range(1, m + 1, 2):
            for p in range(4 * m + 1):
                parity = p & 1
                twice = 0
                for l in range(parity, p + 1, 2):
                    outer = kw.binomial(2 * m - l, (p - l) // 2)
                    if not outer:
                        continue
                    for k in range(parity, l + 1, 2):
                        inner = kw.binomial(m - k, (l - k) // 2)
                        if inner:
                            twice += (1 << (k + l)) * outer * inner * kw.krawtchouk_in_range(m, k, j)
                yield {"m": m, "p": p, "j": j}, red.power_reduce_total(m, p, 2, 2, j), twice


@check("multi-reduction-worked", "thm-3.1", "the two worked chain reductions reproduce their values")
def _multi_worked(bounds):
    unpruned = red.power_reduce(2, 4, 2, 2, 1)
    pruned = red.power_reduce(2, 4, 2, 2, 1, pruned=True)
    yield {"case": 0, "pruned": 0}, unpruned.total, 6
    yield {"case": 0, "pruned": 1}, pruned.total, 6
    direct = kw._kraw_raw(48, 6, 40)
    unpruned = red.power_reduce(3, 6, 4, 3, 5)
    pruned = red.power_reduce(3, 6, 4, 3, 5, pruned=True)
    yield {"case": 1, "pruned": 0}, unpruned.total, direct
    yield {"case": 1, "pruned": 1}, pruned.total, direct
    yield {"case": 1, "pruned": 0, "terms": 1}, unpruned.term_count, 20


# ----------------------------------------------------------- sec4-binomials

@check("binom-doubling", "sec4-binomials", "both doubling sums reproduce C(2m, 2q) and C(2m, 2q+1)")
def _binom_doubling(bounds):
    m_max = _bv(bounds, "binom_m", 40)
    for m in range(m_max + 1):
        for q in range(m + 1):
            for form in ("first", "second"):
                yield (
                    {"m": m, "q": q, "parity": 0, "form": ("first", "second").index(form)},
                    bi.double_binomial(m, q, "even", form),
                    comb(2 * m, 2 * q),
                )
                if q < m:
                    yield (
                        {"m": m, "q": q, "parity": 1, "form": ("first", "second").index(form)},
                        bi.double_binomial(m, q, "odd", form),
                        comb(2 * m, 2 * q + 1),
                    )


@check("binom-power-chains", "sec4-binomials", "chain expansions reproduce C(2^r m, p)")
def _binom_power(bounds):
    for m in (1, 3):
        for r in range(1, 4):
            for s in range(1, 4):
                order = m << r
                for p in range(order + 1):
                    yield (
                        {"m": m, "r": r, "s": s, "p": p},
                        bi.power_reduce_binomial(m, p, r, s),
                        comb(order, p),
                    )


@check("binom-power-single", "sec4-binomials", "the s=1 chain expansion collapses to a single sum")
def _binom_power_single(bounds):
    for m in (1, 2, 3, 5):
        for r in range(1, 4):
            order = m << r
            for p in range(order + 1):
                yield (
                    {"m": m, "r": r, "p": p},
                    bi.power_reduce_binomial_single(m, p, r),
                    bi.power_reduce_binomial(m, p, r, 1),
                )


@check("binom-pochhammer", "sec4-binomials", "rational Pochhammer sums reproduce C(2m+a, 2q+b)")
def _binom_pochhammer(bounds):
    m_max = _bv(bounds, "binom_m", 40)
    for m in range(m_max + 1):
        for q in range(m + 1):
            for top in (0, 1):
                for bottom in (0, 1):
                    if (top, bottom) == (0, 1) and q >= m:
                        continue
                    yield (
                        {"m": m, "q": q, "top": top, "bottom": bottom},
                        bi.pochhammer_binomial(m, q, top, bottom),
                        comb(2 * m + top, 2 * q + bottom),
                    )


@check("binom-stirling", "sec4-binomials", "the Stirling expansion reproduces C(2m, 2q)")
def _binom_stirling(bounds):
    m_max = _bv(bounds, "binom_m", 40)
    for m in range(m_max + 1):
        for q in range(m + 1):
            yield {"m": m, "q": q}, bi.stirling_binomial(m, q), comb(2 * m, 2 * q)


@check("falling-factorial-stirling", "sec4-binomials", "unsigned Stirling expansion of the falling factorial")
def _falling_stirling(bounds):
    for q in range(13):
        for j in range(13):
            yield (
                {"q": q, "j": j},
                bi.falling_factorial_stirling(q, j),
                red.binomial(q, j) * factorial(j),
            )


@check("factorial-split", "sec4-binomials", "(2j)! and (2j+1)! split into power, factorial and double factorial")
def _factorial_split(bounds):
    from .factorials import double_factorial

    j_max = _bv(bounds, "fact_j", 200)
    for j in range(j_max + 1):
        base = (1 << j) * factorial(j)
        yield {"j": j, "parity": 0}, factorial(2 * j), base * double_factorial(2 * j - 1)
        yield {"j": j, "parity": 1}, factorial(2 * j + 1), base * double_factorial(2 * j + 1)


@check("consecutive-products", "sec4-binomials", "products of consecutive odd/even numbers from the Pochhammer sum")
def _consecutive(bounds):
    m_max = _bv(bounds, "binom_m", 40)
    for m in range(1, m_max + 1):
        for q in range(m):
            n_val = bi.consecutive_odd_product(q, m)
            m_val = bi.consecutive_even_product(q, m)
            odd_prod = 1
            even_prod = 1
            for j in range(q, m):
                odd_prod *= 2 * j + 1
                even_prod *= 2 * j
            yield {"m": m, "q": q, "kind": 0}, n_val, odd_prod
            yield {"m": m, "q": q, "kind": 1}, m_val, even_prod
            if q >= 1:
                yield (
                    {"m": m, "q": q, "kind": 2},
                    n_val * m_val,
                    factorial(2 * m - 1) // factorial(2 * q - 1),
                )


@check("consecutive-worked", "sec4-binomials", "the worked five-factor products 13*15*...*21 and 12*14*...*20")
def _consecutive_worked(bounds):
    yield {"q": 6, "m": 11, "kind": 0}, bi.consecutive_odd_product(6, 11), reference.CONSECUTIVE_ODD_13_TO_21
    yield {"q": 6, "m": 11, "kind": 1}, bi.consecutive_even_product(6, 11), reference.CONSECUTIVE_EVEN_12_TO_20


# --------------------------------------------------------- sec4-congruences

@lru_cache(maxsize=None)
def _scaled_rows(m: int, r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exact rows C(2^r m, 2^r q) and C(2^r m, 2^r q + 1) for q = 0..m,
    built incrementally (much faster than one comb() per entry)."""
    n = m << r
    step = 1 << r
    even = []
    odd = []
    b = 1
    k = 0
    for q in range(m + 1):
        if q:
            num = 1
            den = 1
            for i in range(1, step + 1):
                num *= n - k - i + 1
                den *= k + i
            b = b * num // den
            k += step
        even.append(b)
        odd.append(b * (n - k) // (k + 1))
    if even[-1] != 1:
        raise ParameterError(f"incremental binomial row broke at m={m}, r={r}")
    return tuple(even), tuple(odd)


@check("cong-scaled-even", "sec4-congruences", "C(2^r m, 2^r q) residues mod 2, 4, 8, 16")
def _cong_scaled_even(bounds):
    m_max = _bv(bounds, "cong_m", 64)
    r_max = _bv(bounds, "cong_r", 6)
    for m in range(m_max + 1):
        for r in range(1, r_max + 1):
            even, _ = _scaled_rows(m, r)
            for q in range(m + 1):
                for modulus in (2, 4, 8, 16):
                    claim = dy.predict_scaled_congruence(m, q, r, 0, modulus)
                    yield (
                        {"m": m, "q": q, "r": r, "mod": modulus},
                        even[q] % modulus,
                        claim.residue,
                    )


@check("cong-scaled-odd", "sec4-congruences", "C(2^r m, 2^r q + 1) residues mod 2^r and 2^(r+1), r <= 3")
def _cong_scaled_odd(bounds):
    m_max = _bv(bounds, "cong_m", 64)
    r_max = min(3, _bv(bounds, "cong_r", 6))
    for m in range(m_max + 1):
        for r in range(1, r_max + 1):
            _, odd = _scaled_rows(m, r)
            for q in range(m + 1):
                for modulus in (1 << r, 1 << (r + 1)):
                    claim = dy.predict_scaled_congruence(m, q, r, 1, modulus)
                    yield (
                        {"m": m, "q": q, "r": r, "mod": modulus},
                        odd[q] % modulus,
                        claim.residue,
                    )


@check("cong-valuation", "sec4-congruences", "valuation-driven residues of the scaled binomials")
def _cong_valuation(bounds):
    m_max = _bv(bounds, "cong_m", 64)
    r_max = _bv(bounds, "cong_r", 6)
    for m in range(1, m_max + 1):
        for r in range(1, r_max + 1):
            even, odd = _scaled_rows(m, r)
            for q in range(1, m + 1):
                for offset, row in ((0, even), (1, odd)):
                    for claim in dy.predict_valuation_congruence(m, q, r, offset):
                        yield (
                            {"m": m, "q": q, "r": r, "offset": offset, "mod": claim.modulus},
                            row[q] % claim.modulus,
                            claim.residue,
                        )


@check("cong-kronecker", "sec4-congruences", "the consolidated Kronecker-delta congruence")
def _cong_kronecker(bounds):
    m_max = _bv(bounds, "cong_m", 64)
    r_max = min(4, _bv(bounds, "cong_r", 6))
    for m in range(1, m_max + 1):
        for r in range(1, r_max + 1):
            even, odd = _scaled_rows(m, r)
            for q in range(m + 1):
                for s in (0, 1):
                    row = odd if s else even
                    for t in (0, 1):
                        claim = dy.predict_kronecker_congruence(m, q, r, s, t)
                        yield (
                            {"m": m, "q": q, "r": r, "s": s, "t": t},
                            row[q] % claim.modulus,
                            claim.residue,
                        )


@check("cong-near-power", "sec4-congruences", "claims at the pairs built from 2^t and 2^(t-1)-1")
def _cong_near_power(bounds):
    r_max = _bv(bounds, "cong_r", 6)
    t_max = _bv(bounds, "cong_t", 6)
    for t in range(1, t_max + 1):
        for r in range(1, r_max + 1):
            for variant in dy._NEAR_POWER_VARIANTS:
                if t == 1 and "q-minus-1" in variant:
                    continue
                for claim in dy.predict_near_power_congruence(r, t, variant):
                    m = claim.param("m")
                    q = claim.param("q")
                    even, _ = _scaled_rows(m, r)
                    yield (
                        {"t": t, "r": r, "variant": dy._NEAR_POWER_VARIANTS.index(variant), "mod": claim.modulus},
                        even[q] % claim.modulus,
                        claim.residue,
                    )


@check("cong-extended", "sec4-congruences", "conditional congruences mod 32/64 and 16/32")
def _cong_extended(bounds):
    m_max = _bv(bounds, "cong_m", 64)
    for m in range(m_max + 1):
        even, odd = _scaled_rows(m, 1)
        for q in range(m + 1):
            d = m - q
            if q % 3 in (0, 1) or d % 3 in (0, 1):
                for modulus in (32, 64):
                    claim = dy.predict_extended_congruence(m, q, 0, modulus)
                    yield (
                        {"m": m, "q": q, "offset": 0, "mod": modulus},
                        even[q] % modulus,
                        claim.residue,
                    )
            if q % 3 == 0 or (d - 1) % 3 == 0:
                for modulus in (16, 32):
                    claim = dy.predict_extended_congruence(m, q, 1, modulus)
                    yield (
                        {"m": m, "q": q, "offset": 1, "mod": modulus},
                        odd[q] % modulus,
                        claim.residue,
                    )


@check("cong-lucas-base", "sec4-congruences", "C(2m,2q) == C(m,q) and C(2m,2q+1) == 0 mod 2")
def _cong_lucas(bounds):
    m_max = _bv(bounds, "lucas_m", 300)
    for m in range(m_max + 1):
        even, odd = _scaled_rows(m, 1)
        for q in range(m + 1):
            yield {"m": m, "q": q, "offset": 0}, even[q] % 2, comb(m, q) % 2
            yield {"m": m, "q": q, "offset": 1}, odd[q] % 2, 0


@check("valuation-factorial", "sec4-congruences", "k! = 2^eps(k) * odd, exactly")
def _valuation_factorial(bounds):
    k_max = _bv(bounds, "val_k", 500)
    for k in range(k_max + 1):
        f = factorial(k)
        nu = 0
        while f % 2 == 0:
            f >>= 1
            nu += 1
        yield {"k": k}, dy.factorial_valuation(k), nu


@check("valuation-recurrence", "sec4-congruences", "eps(2k) = eps(k) + k and eps(2k) = eps(2k+1)")
def _valuation_recurrence(bounds):
    k_max = _bv(bounds, "val_rec_k", 10_000)
    for k in range(k_max + 1):
        yield {"k": k, "law": 0}, dy.factorial_valuation(2 * k), dy.factorial_valuation(k) + k
        yield {"k": k, "law": 1}, dy.factorial_valuation(2 * k), dy.factorial_valuation(2 * k + 1)


@check("valuation-binomial", "sec4-congruences", "eps(m) - eps(q) - eps(m-q) is the valuation of C(m,q)")
def _valuation_binomial(bounds):
    m_max = _bv(bounds, "lucas_m", 300)
    for m in range(m_max + 1):
        for q in range(m + 1):
            c = comb(m, q)
            nu = 0
            while c % 2 == 0:
                c >>= 1
                nu += 1
            yield {"m": m, "q": q}, dy.binomial_valuation(m, q), nu


@check("valuation-laws", "sec4-congruences", "monotonicity and closed-form laws of the factorial valuation")
def _valuation_laws(bounds):
    k_max = _bv(bounds, "val_law_k", 1024)
    for k in range(k_max + 1):
        report = dy.valuation_law_report(k, 1 + k % 8, 2 * (k % 50) + 1)
        yield {"k": k}, sum(report.values()), len(report)


# ------------------------------------------------------------- sec5-central

@check("central-sum", "sec5-central", "the degree-m halving sums reproduce c_m in all three forms")
def _central_sum(bounds):
    m_max = _bv(bounds, "central_max", 400)
    for m in range(m_max + 1):
        direct = cen.CACHE.central(m)
        for form in ("binomial", "factorial", "split"):
            yield (
                {"m": m, "form": ("binomial", "factorial", "split").index(form)},
                cen.central_sum(m, form),
                direct,
            )


@check("central-half-recursion", "sec5-central", "c_{2q} and c_{2q+1} from c_0..c_q")
def _central_half(bounds):
    q_max = _bv(bounds, "central_max", 400) // 2
    for q in range(q_max + 1):
        yield {"q": q, "parity": 0}, cen.central_half_recursion(q, "even"), cen.CACHE.central(2 * q)
        yield {"q": q, "parity": 1}, cen.central_half_recursion(q, "odd"), cen.CACHE.central(2 * q + 1)


@check("central-doubling", "sec5-central", "c_{2q} from c_q through the Pochhammer sum")
def _central_doubling(bounds):
    q_max = _bv(bounds, "central_max", 400) // 2
    for q in range(q_max + 1):
        yield {"q": q}, cen.central_double(q), cen.CACHE.central(2 * q)


@check("central-doubling-stirling", "sec5-central", "the Stirling expansion of the doubling sum")
def _central_doubling_stirling(bounds):
    q_max = _bv(bounds, "stirling_q", 60)
    for q in range(q_max + 1):
        yield {"q": q}, cen.central_double(q, "stirling"), cen.CACHE.central(2 * q)


@check("central-weighted", "sec5-central", "the weighted recursions with rational prefactors")
def _central_weighted(bounds):
    q_max = _bv(bounds, "central_max", 400) // 2
    for q in range(q_max + 1):
        if q >= 1:
            yield {"q": q, "parity": 0}, cen.central_alt_recursion(q, "even"), cen.CACHE.central(2 * q)
        yield {"q": q, "parity": 1}, cen.central_alt_recursion(q, "odd"), cen.CACHE.central(2 * q + 1)


@check("central-self-recursion", "sec5-central", "c_q from all previous values, two flavors")
def _central_self(bounds):
    q_max = _bv(bounds, "central_max", 400)
    for q in range(1, q_max + 1):
        yield {"q": q, "flavor": 0}, cen.central_self_recursion(q, "even_binomials"), cen.CACHE.central(q)
        yield {"q": q, "flavor": 1}, cen.central_self_recursion(q, "odd_binomials"), cen.CACHE.central(q)


@check("central-kraw-even", "sec5-central", "the mixed Krawtchouk sum vanishes at even q")
def _central_kraw_even(bounds):
    q_max = _bv(bounds, "kraw_q", 60)
    for q in range(2, q_max + 1, 2):
        yield {"q": q}, cen.central_krawtchouk_raw(q), 0


@check("central-kraw-odd", "sec5-central", "the mixed Krawtchouk sum recovers c_q at odd q")
def _central_kraw_odd(bounds):
    q_max = _bv(bounds, "kraw_q", 60)
    for q in range(1, q_max + 1, 2):
        yield {"q": q}, cen.central_krawtchouk_raw(q), cen.CACHE.central(q)


@check("central-worked", "sec5-central", "the worked c_8 evaluations, including the 15/32 prefactor")
def _central_worked(bounds):
    yield {"case": 0}, cen.central_half_recursion(4, "even"), 12870
    weighted_sum = sum(4**j * j * comb(8, 2 * j) * cen.CACHE.central(4 - j) for j in range(1, 5))
    yield {"case": 1}, weighted_sum, 27456
    yield {"case": 2}, cen.central_alt_recursion(4, "even"), 12870
    yield {"case": 3}, 15 * 27456 // 32, 12870


# ------------------------------------------------------------- sec6-catalan

_ROUTE_STARTS = {"weighted": 1, "callan": 2}


@check("catalan-routes", "sec6-catalan", "every evaluation route agrees with the direct value")
def _catalan_routes(bounds):
    n_max = _bv(bounds, "catalan_max", 400)
    for route in cat.ROUTES:
        if route == "direct":
            continue
        for n in range(_ROUTE_STARTS.get(route, 0), n_max + 1):
            yield (
                {"route": cat.ROUTES.index(route), "n": n},
                cat.catalan(n, route),
                cen.CACHE.catalan(n),
            )


@check("catalan-central-link", "sec6-catalan", "c_n = (n+1) C_n")
def _catalan_link(bounds):
    n_max = _bv(bounds, "catalan_max", 400)
    for n in range(n_max + 1):
        yield {"n": n}, cen.CACHE.central(n), (n + 1) * cen.CACHE.catalan(n)


def _residue_getter(table):
    def get(i):
        return table[i]
    return get


@check("catalan-touchard-congruence", "sec6-catalan", "residues of C_{2n} and C_{2n+1} mod 2..16")
def _catalan_touchard_cong(bounds):
    n_max = _bv(bounds, "cong_n", 4096)
    table = cat.catalan_residues(2 * n_max + 1, 1 << 16)
    get = _residue_getter(table)
    for n in range(1, n_max + 1):
        for parity in ("even", "odd"):
            for modulus in (2, 4, 8, 16):
                cofactor, target, predicted = cat._congruence_rule(n, parity, modulus, "touchard", get)
                yield (
                    {"n": n, "parity": 0 if parity == "even" else 1, "mod": modulus},
                    cofactor * table[target] % modulus,
                    predicted % modulus,
                )


@check("catalan-halving-congruence", "sec6-catalan", "cofactored residues from the index-halving recursion")
def _catalan_halving_cong(bounds):
    n_max = _bv(bounds, "cong_n", 4096)
    table = cat.catalan_residues(2 * n_max + 1, 1 << 16)
    get = _residue_getter(table)
    for n in range(1, n_max + 1):
        for parity in ("even", "odd"):
            for modulus in (2, 4, 8, 16):
                cofactor, target, predicted = cat._congruence_rule(n, parity, modulus, "halving", get)
                yield (
                    {"n": n, "parity": 0 if parity == "even" else 1, "mod": modulus},
                    cofactor * table[target] % modulus,
                    predicted % modulus,
                )


@check("catalan-callan-congruence", "sec6-catalan", "cofactored residues from the weighted variant")
def _catalan_callan_cong(bounds):
    n_max = _bv(bounds, "cong_n", 4096)
    table = cat.catalan_residues(2 * n_max + 1, 1 << 16)
    get = _residue_getter(table)
    for n in range(1, n_max + 1):
        for modulus in (2, 4, 8, 16):
            cofactor, target, predicted = cat._congruence_rule(n, "even", modulus, "callan", get)
            yield (
                {"n": n, "parity": 0, "mod": modulus},
                cofactor * table[target] % modulus,
                predicted % modulus,
            )
        for modulus in (2, 4):
            cofactor, target, predicted = cat._congruence_rule(n, "odd", modulus, "callan", get)
            yield (
                {"n": n, "parity": 1, "mod": modulus},
                cofactor * table[target] % modulus,
                predicted % modulus,
            )


@check("catalan-callan-odd-expanded", "sec6-catalan", "re-derived odd weighted-variant residues mod 8/16")
def _catalan_callan_expanded(bounds):
    n_max = _bv(bounds, "cong_n", 4096)
    table = cat.catalan_residues(2 * n_max + 1, 1 << 16)
    get = _residue_getter(table)
    for n in range(1, n_max + 1):
        for modulus in (8, 16):
            cofactor, target, predicted = cat._congruence_rule(n, "odd", modulus, "callan", get)
            yield (
                {"n": n, "mod": modulus},
                cofactor * table[target] % modulus,
                predicted % modulus,
            )


@check("catalan-power-congruence", "sec6-catalan", "parity of C at indices 2^k l + j")
def _catalan_power_cong(bounds):
    limit = _bv(bounds, "parity_n", 1 << 14)
    parity = cat.catalan_residues(limit, 2)
    k = 1
    while (1 << k) + 1 <= limit:
        block = 1 << k
        l = 1
        while block * l + 1 <= limit:
            for j in range(1, min(block - 1, limit - block * l) + 1):
                predicted = cat.catalan_power_congruence(k, l, j, c_l_mod2=parity[l])
                yield {"k": k, "l": l, "j": j}, parity[block * l + j], predicted
            l += 1
        k += 1


@check("catalan-mersenne-parity", "sec6-catalan", "C_n is odd exactly at n = 2^a - 1")
def _catalan_mersenne(bounds):
    limit = _bv(bounds, "parity_n", 1 << 14)
    parity = cat.catalan_residues(limit, 2)
    for n in range(limit + 1):
        predicted = 1 if cat.mersenne_parity(n) == "odd" else 0
        yield {"n": n}, parity[n], predicted


@check("catalan-mod4-class", "sec6-catalan", "the structural mod-4 classification matches the residues")
def _catalan_mod4(bounds):
    n_max = _bv(bounds, "cong_n", 4096)
    residues = cat.catalan_residues(n_max, 4)
    for n in range(n_max + 1):
        yield {"n": n}, residues[n], cat.mod4_class(n)


@check("motzkin-inverse", "sec6-catalan", "the binomial transform of Motzkin numbers returns C_{n+1}")
def _motzkin_inverse(bounds):
    n_max = _bv(bounds, "motzkin_n", 300)
    for n in range(n_max + 1):
        lhs = sum(comb(n, k) * cen.CACHE.motzkin(k) for k in range(n + 1))
        yield {"n": n}, lhs, cen.CACHE.catalan(n + 1)


# ------------------------------------------------------------- paper-typos

@check(
    "table-printed-entry",
    "paper-typos",
    "the printed order-6 grid entry (5,4) disagrees with every exact route",
    expect_fail=True,
)
def _typo_table(bounds):
    for (n, p, j), printed in reference.PRINTED_DEVIATIONS.items():
        yield {"n": n, "p": p, "j": j}, printed, kw._kraw_raw(n, p, j)


@check(
    "self-recursion-even-printed",
    "paper-typos",
    "the printed even self recursion (denominator 2q^2+1) fails",
    expect_fail=True,
)
def _typo_self_even(bounds):
    for q in range(1, 21):
        yield {"q": q}, cen.central_self_recursion_printed(q, "even_binomials"), cen.CACHE.central(q)


@check(
    "self-recursion-odd-printed",
    "paper-typos",
    "the printed odd self recursion (plain j over 2q^2) fails",
    expect_fail=True,
)
def _typo_self_odd(bounds):
    for q in range(1, 21):
        yield {"q": q}, cen.central_self_recursion_printed(q, "odd_binomials"), cen.CACHE.central(q)


@check(
    "self-recursion-even-corrected",
    "paper-typos",
    "the corrected even self recursion verifies",
)
def _typo_self_even_fixed(bounds):
    q_max = _bv(bounds, "typo_q", 200)
    for q in range(1, q_max + 1):
        yield {"q": q}, cen.central_self_recursion(q, "even_binomials"), cen.CACHE.central(q)


@check(
    "self-recursion-odd-corrected",
    "paper-typos",
    "the corrected odd self recursion verifies",
)
def _typo_self_odd_fixed(bounds):
    q_max = _bv(bounds, "typo_q", 200)
    for q in range(1, q_max + 1):
        yield {"q": q}, cen.central_self_recursion(q, "odd_binomials"), cen.CACHE.central(q)


@check(
    "central-kraw-odd-printed",
    "paper-typos",
    "reading the odd mixed Krawtchouk sum as c_{2q} fails",
    expect_fail=True,
)
def _typo_kraw_odd(bounds):
    for q in range(1, 20, 2):
        yield {"q": q}, cen.central_krawtchouk_raw(q), cen.CACHE.central(2 * q)


@check(
    "central-kraw-odd-corrected",
    "paper-typos",
    "the odd mixed Krawtchouk sum recovers c_q",
)
def _typo_kraw_odd_fixed(bounds):
    q_max = _bv(bounds, "kraw_q", 60)
    for q in range(1, q_max, 2):
        yield {"q": q}, cen.central_krawtchouk_raw(q), cen.CACHE.central(q)


@check(
    "hurtado-printed",
    "paper-typos",
    "the printed Hurtado-Noy power of two doubles the value",
    expect_fail=True,
)
def _typo_hurtado(bounds):
    for n in range(2, 21):
        yield {"n": n}, cat.hurtado_printed(n), cen.CACHE.catalan(n)


@check(
    "amdeberhan-printed",
    "paper-typos",
    "the printed Amdeberhan left side is shifted by one index",
    expect_fail=True,
)
def _typo_amdeberhan(bounds):
    for n in range(1, 21):
        yield {"n": n}, cat.amdeberhan_printed(n), cen.CACHE.catalan(n)


@check(
    "callan-odd-printed",
    "paper-typos",
    "the printed odd weighted-variant congruence mod 8/16 fails",
    expect_fail=True,
)
def _typo_callan(bounds):
    for n in range(1, 65):
        for modulus in (8, 16):
            claim = cat.catalan_congruence(n, "odd", modulus, "callan-printed")
            left = claim.param("cofactor") * cen.CACHE.catalan(claim.param("target"))
            yield {"n": n, "mod": modulus}, left % modulus, claim.residue


@check(
    "near-power-printed",
    "paper-typos",
    "the displayed near-power valuation t-1 overreaches at t = 2",
    expect_fail=True,
)
def _typo_near_power(bounds):
    # the shifted pairs at t = 2 have odd binomials, e.g. C(10, 2) = 45
    for r in range(1, 4):
        for m, q in ((5, 1), (5, 0), (4, 0)):
            yield {"m": m, "q": q, "r": r}, comb(m << r, q << r) % 2, 0


# -------------------------------------------------------------- the runner


def checks_for(suite: str) -> list[Check]:
    if suite == "all":
        return list(CHECKS)
    if suite not in SUITES:
        raise ParameterError(f"unknown suite {suite!r}; known: {', '.join(SUITES + ('all',))}")
    return [c for c in CHECKS if c.suite == suite]


def check_by_identity(identity: str) -> Check:
    for c in CHECKS:
        if c.identity == identity:
            return c
    raise ParameterError(f"unknown identity {identity!r}")


def _run_one(chk: Check, bounds: dict, keep_lines: bool) -> tuple[CheckResult, list[str]]:
    result = CheckResult(chk.identity, chk.suite, chk.expect_fail)
    lines: list[str] = []
    for record in chk.run(bounds):
        params, lhs, rhs = record[0], record[1], record[2]
        status = record[3] if len(record) > 3 else ("pass" if lhs == rhs else "fail")
        result.points += 1
        if status == "fail":
            result.fails += 1
            if result.first_fail is None:
                result.first_fail = dict(params)
        elif status == SKIPPED:
            result.skips += 1
        if keep_lines:
            lines.append(
                IdentityReport(
                    chk.identity, chk.suite, dict(params), str(lhs), str(rhs), status
                ).to_json()
            )
    return result, lines


def default_thread_count() -> int:
    raw = os.environ.get("KRAWKIT_THREADS")
    if raw is not None:
        try:
            count = int(raw)
        except ValueError as exc:
            raise ParameterError(f"bad KRAWKIT_THREADS: {raw!r}") from exc
        if count < 1:
            raise ParameterError("KRAWKIT_THREADS must be >= 1")
        return count
    return os.cpu_count() or 1


def run_checks(
    checks: Iterable[Check],
    bounds: dict | None = None,
    threads: int | None = None,
    sink=None,
) -> list[CheckResult]:
    """Run checks, write jsonl lines to sink (if given) in registration
    order, and return one CheckResult per check."""
    bounds = bounds or {}
    ordered = list(checks)
    keep = sink is not None
    threads = default_thread_count() if threads is None else threads
    results: list[CheckResult] = []
    if threads <= 1 or len(ordered) <= 1:
        for chk in ordered:
            result, lines = _run_one(chk, bounds, keep)
            if keep:
                for line in lines:
                    sink.write(line + "\n")
            results.append(result)
        return results
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_one, chk, bounds, keep) for chk in ordered]
        for future in futures:
            result, lines = future.result()
            if keep:
                for line in lines:
                    sink.write(line + "\n")
            results.append(result)
    return results


def run_sweep(spec: SweepSpec, threads: int | None = None, sink=None) -> CheckResult:
    chk = check_by_identity(spec.identity)
    return run_checks([chk], dict(spec.bounds), threads=threads, sink=sink)[0]


def exit_code(results: Iterable[CheckResult]) -> int:
    """0 when every check met its expectation: no fails outside the typo
    demonstrations, and every expected-fail check actually failed."""
    return 0 if all(r.ok for r in results) else 1
