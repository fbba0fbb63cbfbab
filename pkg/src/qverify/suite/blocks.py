"""Reusable q-side quantities shared by many statements.

Sums are accumulated term by term with the ratio between consecutive terms,
so no Pochhammer product is recomputed from scratch. Prefix sums are cached
because several statements share the same left-hand sides.
"""

from functools import lru_cache

from gmpy2 import mpq

from ..congruence import RatFunc, qpow, rf_make
from ..polyring import A, B, ONE, ZERO, MPoly
from ..qkit import SignedMonomial, q_binomial, q_integer, q_pochhammer
from ..wzengine import poch_even, poch_odd, poch_q

ZERO_RF = RatFunc._raw(ZERO, ONE)


def mono(e, j=0, l=0, c=1):
    return MPoly.monomial(e, j, l, c)


def one_minus(e, j=0, l=0):
    """1 - q^e a^j b^l"""
    return ONE - mono(e, j, l)


def sign(e):
    return -1 if e % 2 else 1


def rf(num, den=ONE):
    return rf_make(num, den)


def rf_sum(terms):
    total = ZERO_RF
    for t in terms:
        total = total + t
    return total


def twelfth_factor(n, denom):
    """(n^2 - 1)(1 - q)^2 / denom as a polynomial with rational content."""
    return (ONE - mono(1)) ** 2 * mpq(n * n - 1, denom)


def minus_q_poch(m):
    """(-q; q)_m"""
    return q_pochhammer(SignedMonomial(-1, 1), 1, m)


def rf_qpoch(e, step, count):
    """(q^e; q^step)_count for any integer e, as a rational function."""
    total = RatFunc._raw(ONE, ONE)
    for j in range(count):
        f = e + step * j
        if f >= 0:
            total = total * RatFunc._raw(one_minus(f), ONE)
        else:
            total = total * rf(mono(-f) - ONE, mono(-f))
    return total


class _Prefix:
    """Cache of prefix sums that extends on demand."""

    def __init__(self, first, ratio):
        self._first, self._ratio = first, ratio
        self._sums = []
        self._term = None

    def __call__(self, limit):
        sums = self._sums
        if not sums:
            self._term = self._first()
            sums.append(self._term)
        while len(sums) <= limit:
            k = len(sums)
            self._term = self._term * self._ratio(k)
            sums.append(sums[-1] + self._term)
        return sums[limit]


def _ratio_4k(k):
    # t_k / t_{k-1} for (-1)^k q^{k^2} [4k+1] (q;q^2)_k^3 / (q^2;q^2)_k^3
    num = mono(2 * k - 1, c=-1) * q_integer(4 * k + 1) * one_minus(2 * k - 1) ** 3
    den = q_integer(4 * k - 3) * one_minus(2 * k) ** 3
    return rf(num, den)


def _ratio_3k(k):
    # t_k / t_{k-1} for (-1)^k [3k+1] (q;q^2)_k^3 / (q;q)_k^3
    num = -q_integer(3 * k + 1) * one_minus(2 * k - 1) ** 3
    den = q_integer(3 * k - 2) * one_minus(k) ** 3
    return rf(num, den)


def _ratio_sq(k):
    # (q;q^2)_k^2 q^{2k} / (q^2;q^2)_k^2
    return rf(mono(2) * one_minus(2 * k - 1) ** 2, one_minus(2 * k) ** 2)


def _ratio_central(k):
    # q^k [2k, k] / (-q;q)_k, using
    # [2k, k] / [2k-2, k-1] = (1-q^{2k})(1-q^{2k-1}) / (1-q^k)^2
    num = mono(1) * one_minus(2 * k) * one_minus(2 * k - 1)
    den = one_minus(k) ** 2 * (ONE + mono(k))
    return rf(num, den)


def _one():
    return RatFunc._raw(ONE, ONE)


lhs_4k = _Prefix(_one, _ratio_4k)
lhs_3k_prefix = _Prefix(_one, _ratio_3k)
sq_ratio_sum = _Prefix(_one, _ratio_sq)
central_minus_q_prefix = _Prefix(_one, _ratio_central)


def lhs_3k(n):
    """sum_{k=0}^{n-1} (-1)^k [3k+1] (q;q^2)_k^3 / (q;q)_k^3"""
    return lhs_3k_prefix(n - 1)


def central_minus_q_sum(n):
    """sum_{k=0}^{n-1} q^k [2k, k] / (-q;q)_k"""
    return central_minus_q_prefix(n - 1)


@lru_cache(maxsize=None)
def correction_sum(n):
    """sum_{k=1}^{(n-1)/2} q^k (q^2;q^2)_k / ([2k][2k-1] (q;q^2)_k)"""
    terms = (rf(mono(k) * poch_even(k),
                q_integer(2 * k) * q_integer(2 * k - 1) * poch_odd(k))
             for k in range(1, (n - 1) // 2 + 1))
    return rf_sum(terms)


@lru_cache(maxsize=None)
def build_rhs_common(n):
    """Shared right side of both main theorems at odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("build_rhs_common needs odd n >= 1")
    qn = q_integer(n)
    h = (n - 1) // 2
    inner = mono(n * (n - 1) // 2) * qn + twelfth_factor(n, 24) * qn ** 3
    head = qpow((1 - n * n) // 4) * RatFunc._raw(inner * sign(h), ONE)
    return head + RatFunc._raw(qn ** 3, ONE) * correction_sum(n)


def signed_qint_rhs(n):
    """[n] q^{(n-1)^2/4} (-1)^{(n-1)/2}"""
    h = (n - 1) // 2
    return RatFunc._raw(q_integer(n).shift(h * h) * sign(h), ONE)


# -- parametric --------------------------------------------------------------

def _ratio_equiv(k):
    o, e = 2 * k - 1, 2 * k
    num = (q_integer(4 * k + 1) * one_minus(o, 1) * (A - mono(o)) * (B - mono(o))
           * one_minus(o))
    den = q_integer(4 * k - 3) * one_minus(e, 1) * (A - mono(e)) * one_minus(e, 0, 1) * one_minus(e)
    return rf(num, den)


def _ratio_param_4k(k):
    o, e = 2 * k - 1, 2 * k
    num = mono(o, c=-1) * q_integer(4 * k + 1) * one_minus(o, 1) * (A - mono(o)) * one_minus(o)
    den = q_integer(4 * k - 3) * one_minus(e, 1) * (A - mono(e)) * one_minus(e)
    return rf(num, den)


def _ratio_param_3k(k):
    o = 2 * k - 1
    num = -q_integer(3 * k + 1) * one_minus(o, 1) * (A - mono(o)) * one_minus(o)
    den = q_integer(3 * k - 2) * one_minus(k, 1) * (A - mono(k)) * one_minus(k)
    return rf(num, den)


def _ratio_thm53(k):
    e = 2 * k
    return rf(A * one_minus(2 * k - 1) ** 2, one_minus(e, 1) * (A - mono(e)))


equiv_sum = _Prefix(_one, _ratio_equiv)
param_4k = _Prefix(_one, _ratio_param_4k)
param_3k_prefix = _Prefix(_one, _ratio_param_3k)
thm53_sum = _Prefix(_one, _ratio_thm53)


def param_3k(n):
    return param_3k_prefix(n - 1)


def thm53_expression(n):
    h = (n - 1) // 2
    qn = RatFunc._raw(q_integer(n), ONE)
    w = rf((ONE - A * mono(n)) * (A - mono(n)), (ONE - A) ** 2)
    lead = RatFunc._raw(mono(h * h, c=sign(h)), ONE) * qn
    return lead + lead * w - w * qn * thm53_sum(h)


__all__ = [
    "build_rhs_common", "correction_sum", "equiv_sum", "sq_ratio_sum",
    "lhs_3k", "lhs_4k", "minus_q_poch", "param_3k", "param_4k",
    "poch_even", "poch_odd", "poch_q", "q_binomial", "q_integer",
    "rf_qpoch", "central_minus_q_sum", "thm53_expression", "signed_qint_rhs",
]
