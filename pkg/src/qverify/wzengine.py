"""The two q-WZ pairs behind the main theorems and their telescoping sums.

Both pairs satisfy ``F(m, k-1) - F(m, k) = G(m+1, k) - G(m, k)``. Terms outside
their natural range (a negative count under ``1/(q^2;q^2)_M`` or a vanishing
q-binomial) are the zero rational function, so the telescoping algebra can
treat them as additive identities.
"""

import enum
from functools import lru_cache

from .congruence import RatFunc, qpow, rf_make
from .polyring import ONE, MPoly
from .qkit import SignedMonomial, q_binomial, q_integer, q_pochhammer

ZERO_RF = RatFunc._raw(MPoly(0), ONE)


class WZPairId(enum.Enum):
    SEC2 = "sec2"
    SEC3 = "sec3"


@lru_cache(maxsize=None)
def poch_odd(m):
    """(q; q^2)_m"""
    return q_pochhammer(SignedMonomial(1, 1), 2, m)


@lru_cache(maxsize=None)
def poch_even(m):
    """(q^2; q^2)_m"""
    return q_pochhammer(SignedMonomial(1, 2), 2, m)


@lru_cache(maxsize=None)
def poch_q(m):
    """(q; q)_m"""
    return q_pochhammer(SignedMonomial(1, 1), 1, m)


def _sign(e):
    return -1 if e % 2 else 1


def _sec2_F(m, k):
    if k > m:
        return ZERO_RF
    num = (q_integer(4 * m + 1) * poch_odd(m) ** 2 * poch_odd(m + k)).shift((m - k) ** 2)
    den = poch_even(m) ** 2 * poch_even(m - k) * poch_odd(k) ** 2
    return rf_make(num * _sign(m + k), den)


def _sec2_G(m, k):
    if m == 0 or k > m:
        return ZERO_RF
    num = (poch_odd(m) ** 2 * poch_odd(m + k - 1)).shift((m - k) ** 2)
    den = (ONE - MPoly.monomial(1)) * poch_even(m - 1) ** 2 * poch_even(m - k) * poch_odd(k) ** 2
    return rf_make(num * _sign(m + k), den)


def _sec3_F(m, k):
    if m < k:
        return ZERO_RF
    binom = q_binomial(2 * m - 2 * k, m)
    if not binom:
        return ZERO_RF
    num = q_integer(3 * m - 2 * k + 1) * binom * poch_odd(m) * poch_odd(m - k)
    den = poch_q(m) * poch_even(m - k)
    return rf_make(num * _sign(m), den)


def _sec3_G(m, k):
    if m < k or m == 0:
        return ZERO_RF
    binom = q_binomial(2 * m - 2 * k, m - 1)
    if not binom:
        return ZERO_RF
    num = q_integer(m) * binom * poch_odd(m) * poch_odd(m - k)
    den = poch_q(m) * poch_even(m - k)
    return rf_make(num * _sign(m + 1), den) * qpow(m + 1 - 2 * k)


@lru_cache(maxsize=4096)
def wz_F(pair, m, k):
    if m < 0 or k < 0:
        raise ValueError("wz_F needs m, k >= 0")
    pair = WZPairId(pair)
    return _sec2_F(m, k) if pair is WZPairId.SEC2 else _sec3_F(m, k)


@lru_cache(maxsize=4096)
def wz_G(pair, m, k):
    if m < 0 or k < 0:
        raise ValueError("wz_G needs m, k >= 0")
    pair = WZPairId(pair)
    return _sec2_G(m, k) if pair is WZPairId.SEC2 else _sec3_G(m, k)


def wz_relation_check(pair, m, k):
    """``F(m, k-1) - F(m, k) == G(m+1, k) - G(m, k)`` exactly."""
    if m < 0 or k < 1:
        raise ValueError("relation check needs m >= 0 and k >= 1")
    lhs = wz_F(pair, m, k - 1) - wz_F(pair, m, k)
    rhs = wz_G(pair, m + 1, k) - wz_G(pair, m, k)
    return lhs == rhs


def _sum(terms):
    total = ZERO_RF
    for t in terms:
        total = total + t
    return total


def _check_odd(n):
    if n < 3 or n % 2 == 0:
        raise ValueError(f"telescoping needs odd n >= 3, got {n}")


def telescoping_report(pair, n):
    """Each telescoped identity for the pair at ``n``, by name."""
    _check_odd(n)
    pair = WZPairId(pair)
    h = (n - 1) // 2
    if pair is WZPairId.SEC2:
        lhs = _sum(wz_F(pair, m, 0) for m in range(h + 1)) - wz_F(pair, h, h)
        rhs = _sum(wz_G(pair, h + 1, k) for k in range(1, h + 1))
        return {"sum F(m,0) - F(h,h) = sum G(h+1,k)": lhs == rhs}
    left = _sum(wz_F(pair, m, 0) for m in range(n))
    full = _sum(wz_G(pair, n, k) for k in range(1, n))
    truncated = _sum(wz_G(pair, n, k) for k in range(1, h + 2))
    product_lhs, product_rhs = _sec3_product_form(n)
    return {
        "sum F(m,0) = sum_{k<n} G(n,k)": left == full,
        "sum_{k<n} G(n,k) = sum_{k<=(n+1)/2} G(n,k)": full == truncated,
        "product form: left side": product_lhs == left,
        "product form: right side": product_rhs == truncated,
    }


def telescoping_check(pair, n):
    return all(telescoping_report(pair, n).values())


def _sec3_product_form(n):
    """Both sides of the telescoped SEC3 identity rewritten via
    [2m, m] = (q;q^2)_m (-q;q)_m^2 / (q^2;q^2)_m."""
    minus_q = q_pochhammer(SignedMonomial(-1, 1), 1, n - 1)
    lhs = _sum(
        rf_make(q_integer(3 * m + 1) * poch_odd(m) ** 3 * _sign(m), poch_q(m) ** 3)
        for m in range(n))
    inner = _sum(
        rf_make(q_binomial(2 * n - 2 * k, n - 1) * poch_odd(n - k), poch_even(n - k))
        * qpow(n + 1 - 2 * k)
        for k in range(1, (n + 1) // 2 + 1))
    prefactor = rf_make(q_integer(n) * q_binomial(2 * n - 1, n - 1), minus_q)
    return lhs, prefactor * inner


def boundary_check(pair, n):
    """SEC2: F(m, (n-1)/2) = 0 for m < (n-1)/2.  SEC3: F(m, n-1) = 0 for m <= n-1."""
    _check_odd(n)
    pair = WZPairId(pair)
    if pair is WZPairId.SEC2:
        h = (n - 1) // 2
        return all(wz_F(pair, m, h).is_zero() for m in range(h))
    return all(wz_F(pair, m, n - 1).is_zero() for m in range(n))


def tail_vanishing_check(n):
    """SEC3: G(n, k) = 0 for (n+1)/2 < k <= n-1."""
    _check_odd(n)
    return all(wz_G(WZPairId.SEC3, n, k).is_zero()
               for k in range((n + 1) // 2 + 1, n))
