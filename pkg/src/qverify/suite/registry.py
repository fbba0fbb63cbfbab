"""Registry of verifiable statements.

Each statement expands, for one parameter value (and variant), into a list of
claims. A claim is a pair of lazily built sides plus how to compare them: a
polynomial modulus kind, a p-adic exponent, or ``None`` for exact equality.
The first claim is the headline one; the rest are the intermediate steps that
the headline depends on (per-k instances, exact rewritings, riders).
"""

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Optional, Union

from gmpy2 import mpq

from ..congruence import ModulusKind, RatFunc, qpow
from ..ntheory import is_prime
from ..polyring import ONE
from ..qkit import euler_number
from ..wzengine import WZPairId, telescoping_check, wz_F, wz_G
from ..wzengine import _sec3_product_form
from .blocks import (build_rhs_common, correction_sum, equiv_sum, sq_ratio_sum,
                     lhs_3k, lhs_4k, minus_q_poch, mono, one_minus, param_3k,
                     param_4k, poch_even, poch_odd, q_binomial, q_integer, rf,
                     rf_qpoch, rf_sum, sign, central_minus_q_sum, thm53_expression,
                     twelfth_factor, signed_qint_rhs)


class StatementKind(enum.Enum):
    Q_CONGRUENCE = "q-congruence"
    Q_IDENTITY = "q-identity"
    Q_PARAMETRIC = "q-parametric"
    PADIC = "p-adic"


@dataclass(frozen=True)
class Domain:
    """Odd integers n >= minimum, or primes p >= minimum."""
    param: str
    minimum: int

    def contains(self, value):
        if not isinstance(value, int) or value < self.minimum:
            return False
        if self.param == "n":
            return value % 2 == 1
        return is_prime(value)

    @property
    def description(self):
        if self.param == "n":
            return f"n odd >= {self.minimum}"
        return "p prime > 3" if self.minimum == 5 else f"p prime >= {self.minimum}"


ODD_N = Domain("n", 1)
ODD_N3 = Domain("n", 3)
ODD_PRIME = Domain("p", 3)
PRIME_GT3 = Domain("p", 5)

N_VARIANTS = ("N=(n-1)/2", "N=n-1")
M_VARIANTS = ("m=(p-1)/2", "m=p-1")

Modulus = Union[ModulusKind, int, None]


@dataclass(frozen=True)
class Claim:
    label: str
    lhs: Callable[[], object]
    rhs: Callable[[], object]
    modulus: Modulus


@dataclass(frozen=True)
class Statement:
    id: str
    title: str
    kind: StatementKind
    domain: Domain
    claims: Callable[[int, Optional[str]], list] = field(repr=False)
    modulus_kind: Optional[ModulusKind] = None
    padic_exponent: Optional[int] = None
    variants: tuple = ()

    @property
    def param(self):
        return self.domain.param

    @property
    def modulus_label(self):
        if self.kind is StatementKind.PADIC:
            return f"p^{self.padic_exponent}" if self.padic_exponent > 1 else "p"
        if self.modulus_kind is None:
            return "exact"
        return self.modulus_kind.value

    def expand(self, value, variant=None):
        return self.claims(value, variant)

    def lhs_builder(self, value, variant=None):
        return self.expand(value, variant)[0].lhs()

    def rhs_builder(self, value, variant=None):
        return self.expand(value, variant)[0].rhs()


_REGISTRY = {}


def _register(sid, title, kind, domain, modulus=None, exponent=None, variants=()):
    def wrap(fn):
        if sid in _REGISTRY:
            raise ValueError(f"duplicate statement id {sid}")
        _REGISTRY[sid] = Statement(sid, title, kind, domain, fn, modulus,
                                   exponent, tuple(variants))
        return fn
    return wrap


def list_statements():
    return list(_REGISTRY.values())


def get_statement(sid):
    return _REGISTRY.get(sid)


def _upper(n, variant):
    return n - 1 if variant == "N=n-1" else (n - 1) // 2


def _const(value):
    return lambda: value


QC, QI, QP, PA = (StatementKind.Q_CONGRUENCE, StatementKind.Q_IDENTITY,
                  StatementKind.Q_PARAMETRIC, StatementKind.PADIC)
MK = ModulusKind


# -- headline q-congruences --------------------------------------------------

@_register("eq-q-vanhamme-intro", "[4k+1] series to (n-1)/2 vs [n] q^{(n-1)^2/4} (-1)^{(n-1)/2}",
           QC, ODD_N3, MK.N_PHI2)
def _(n, variant):
    return [Claim("main", lambda: lhs_4k((n - 1) // 2), lambda: signed_qint_rhs(n), MK.N_PHI2)]


@_register("thm1-half", "[4k+1] series to (n-1)/2 vs the common right side", QC, ODD_N, MK.N_PHI3)
def _(n, variant):
    return [Claim("main", lambda: lhs_4k((n - 1) // 2), lambda: build_rhs_common(n), MK.N_PHI3)]


@_register("thm1-full", "[4k+1] series to n-1 vs the common right side", QC, ODD_N, MK.N_PHI3)
def _(n, variant):
    return [Claim("main", lambda: lhs_4k(n - 1), lambda: build_rhs_common(n), MK.N_PHI3)]


@_register("thm2", "[3k+1] series to n-1 vs the common right side", QC, ODD_N, MK.N_PHI3)
def _(n, variant):
    return [Claim("main", lambda: lhs_3k(n), lambda: build_rhs_common(n), MK.N_PHI3)]


@_register("eq-q-div3", "[3k+1] series to n-1 vs [n] q^{(n-1)^2/4} (-1)^{(n-1)/2}",
           QC, ODD_N, MK.N_PHI2)
def _(n, variant):
    return [Claim("main", lambda: lhs_3k(n), lambda: signed_qint_rhs(n), MK.N_PHI2)]


# -- lemmas ------------------------------------------------------------------

@_register("lem-q-wolstenholme", "[2n-1, n-1] vs (-1)^{n-1} q^{C(n,2)} + (n^2-1)(1-q)^2/12 [n]^2",
           QC, ODD_N, MK.PHI3)
def _(n, variant):
    def rhs():
        return RatFunc._raw(mono(n * (n - 1) // 2, c=sign(n - 1))
                            + twelfth_factor(n, 12) * q_integer(n) ** 2, ONE)
    return [Claim("main", lambda: RatFunc._raw(q_binomial(2 * n - 1, n - 1), ONE), rhs, MK.PHI3)]


def _morley_rhs(n):
    h = (n - 1) // 2
    inner = minus_q_poch(n - 1) ** 2 - twelfth_factor(n, 24) * q_integer(n) ** 2
    return qpow((1 - n * n) // 4) * RatFunc._raw(inner * sign(h), ONE)


@_register("lem-q-morley", "[n-1, (n-1)/2] in base q^2 vs the Morley-type expression",
           QC, ODD_N, MK.PHI3)
def _(n, variant):
    lhs = lambda: RatFunc._raw(q_binomial(n - 1, (n - 1) // 2, 2), ONE)  # noqa: E731
    return [Claim("main", lhs, lambda: _morley_rhs(n), MK.PHI3)]


@_register("lem-q-fermat", "(-q;q)_{n-1} vs 1", QC, ODD_N, MK.PHI)
def _(n, variant):
    return [Claim("main", lambda: RatFunc._raw(minus_q_poch(n - 1), ONE), _const(1), MK.PHI)]


# -- proof-internal steps for the [4k+1] theorem --------------------------------

@_register("eq-equiv-parametric", "a,b-parametric [4k+1] sum to (n-1)/2 vs sum to n-1",
           QP, ODD_N, MK.PARAM_A)
def _(n, variant):
    return [Claim("main", lambda: equiv_sum((n - 1) // 2), lambda: equiv_sum(n - 1), MK.PARAM_A)]


@_register("eq-equiv2", "[4k+1] series to (n-1)/2 vs to n-1 mod Phi_n^4, both sides 0 mod [n]",
           QC, ODD_N, MK.PHI4)
def _(n, variant):
    half, full = (lambda: lhs_4k((n - 1) // 2)), (lambda: lhs_4k(n - 1))
    return [
        Claim("half == full", half, full, MK.PHI4),
        Claim("half == 0 mod [n]", half, _const(0), MK.N_ONLY),
        Claim("full == 0 mod [n]", full, _const(0), MK.N_ONLY),
    ]


def _gppk_product(n, k):
    h = (n - 1) // 2
    num = (one_minus(n) ** 3 * poch_odd(h) ** 3
           * _poch_poly(n + 2, k - 1)).shift(((n + 1) // 2 - k) ** 2) * sign((n + 1) // 2 + k)
    den = one_minus(1) * poch_even(h) ** 2 * poch_even((n + 1) // 2 - k) * poch_odd(k) ** 2
    return rf(num, den)


def _poch_poly(e, count, step=2):
    """(q^e; q^step)_count for e >= 0 as a polynomial."""
    out = ONE
    for j in range(count):
        out = out * one_minus(e + step * j)
    return out


def _gppk_middle(n, k):
    num = mono(k) * one_minus(n) ** 3 * poch_even(k - 1)
    return rf(num, one_minus(1) * one_minus(2 * k - 1) * poch_odd(k))


def _gppk_final(n, k):
    num = mono(k) * q_integer(n) ** 3 * poch_even(k)
    return rf(num, q_integer(2 * k) * q_integer(2 * k - 1) * poch_odd(k))


@_register("eq-gppk-new", "G((n+1)/2, k) vs q^k [n]^3 (q^2;q^2)_k / ([2k][2k-1](q;q^2)_k), every k",
           QC, ODD_N3, MK.N_PHI3)
def _(n, variant):
    m = (n + 1) // 2
    claims = []
    for k in range(1, (n - 1) // 2 + 1):
        g = (lambda k=k: wz_G(WZPairId.SEC2, m, k))
        claims += [
            Claim(f"k={k}: G == final mod [n]Phi^3", g, lambda k=k: _gppk_final(n, k), MK.N_PHI3),
            Claim(f"k={k}: G == product form", g, lambda k=k: _gppk_product(n, k), None),
            Claim(f"k={k}: G == middle mod Phi^4", g, lambda k=k: _gppk_middle(n, k), MK.PHI4),
            Claim(f"k={k}: middle == final", lambda k=k: _gppk_middle(n, k),
                  lambda k=k: _gppk_final(n, k), None),
        ]
    return claims


def _abcd_tail(n, inner):
    h = (n - 1) // 2
    return qpow((1 - n * n) // 4) * inner * sign(h)


@_register("eq-abcd", "F((n-1)/2, (n-1)/2) vs the Wolstenholme/Morley reduction",
           QC, ODD_N, MK.N_PHI3)
def _(n, variant):
    h = (n - 1) // 2
    qn = q_integer(n)
    c = twelfth_factor(n, 24)
    top = mono(n * (n - 1) // 2)
    x = lambda: wz_F(WZPairId.SEC2, h, h)  # noqa: E731

    def product():
        num = qn * q_binomial(2 * n - 1, n - 1) * q_binomial(n - 1, h, 2)
        return rf(num, minus_q_poch(n - 1) ** 2)

    def middle():
        bracket = 2 - rf(top, minus_q_poch(n - 1) ** 2)
        inner = RatFunc._raw(top * qn, ONE) + bracket * RatFunc._raw(c * qn ** 3, ONE)
        return _abcd_tail(n, inner)

    def final():
        return _abcd_tail(n, RatFunc._raw(top * qn + c * qn ** 3, ONE))

    return [
        Claim("F == final", x, final, MK.N_PHI3),
        Claim("F == binomial product", x, product, None),
        Claim("F == middle", x, middle, MK.N_PHI3),
        Claim("middle == final", middle, final, MK.N_PHI3),
    ]


@_register("sec2-aux-1", "(q^2;q^2)_{(n+1)/2-k} reduced mod Phi_n, every k", QC, ODD_N3, MK.PHI)
def _(n, variant):
    h = (n - 1) // 2
    ph = RatFunc._raw(poch_even(h), ONE)
    claims = []
    for k in range(1, h + 1):
        left = (lambda k=k: RatFunc._raw(poch_even(h + 1 - k), ONE))
        shifted = (lambda k=k: ph / rf_qpoch(n + 3 - 2 * k, 2, k - 1))
        reduced = (lambda k=k: ph / rf_qpoch(3 - 2 * k, 2, k - 1))
        final = (lambda k=k: ph * rf(mono((k - 1) ** 2, c=sign(k - 1)), poch_odd(k - 1)))
        claims += [
            Claim(f"k={k}: left == final", left, final, MK.PHI),
            Claim(f"k={k}: left == shifted", left, shifted, None),
            Claim(f"k={k}: shifted == reduced", shifted, reduced, MK.PHI),
            Claim(f"k={k}: reduced == final", reduced, final, None),
        ]
    return claims


@_register("sec2-aux-2", "(q;q^2)_{(n-1)/2} / (q^2;q^2)_{(n-1)/2} vs (-1)^{(n-1)/2} q^{(n-1)^2/4}",
           QC, ODD_N3, MK.PHI)
def _(n, variant):
    h = (n - 1) // 2
    left = lambda: rf(poch_odd(h), poch_even(h))  # noqa: E731

    def product(shift):
        out = RatFunc._raw(ONE, ONE)
        for j in range(1, h + 1):
            out = out * RatFunc._raw(one_minus(2 * j - 1), ONE) / rf_qpoch(shift - 2 * j + 1, 1, 1)
        return out

    final = lambda: RatFunc._raw(mono(h * h, c=sign(h)), ONE)  # noqa: E731
    return [
        Claim("left == final", left, final, MK.PHI),
        Claim("left == product", left, lambda: product(n), None),
        Claim("product == reduced", lambda: product(n), lambda: product(0), MK.PHI),
        Claim("reduced == final", lambda: product(0), final, None),
    ]


# -- proof-internal steps for the [3k+1] theorem --------------------------------

@lru_cache(maxsize=64)
def _ratio_chain(n, k):
    h = (n - 1) // 2
    pn, pn1 = one_minus(n), one_minus(n - 1)
    left = rf(poch_odd(n - k), poch_even(n - k))
    line1 = (rf(pn * poch_odd(h) * _poch_poly(n + 2, h - k),
                pn1 * poch_even((n - 3) // 2) * _poch_poly(n + 1, h + 1 - k)))
    line2 = rf(pn * poch_odd(h) * poch_even(h - k),
               pn1 * poch_even((n - 3) // 2) * poch_odd(h + 1 - k))
    line3 = rf(pn * _poch_poly(n + 2 - 2 * k, k - 1), pn1 * _poch_poly(n + 1 - 2 * k, k - 1))
    line4 = (RatFunc._raw(pn, ONE) * rf_qpoch(2 - 2 * k, 2, k - 1)
             / (rf_qpoch(-1, 1, 1) * rf_qpoch(1 - 2 * k, 2, k - 1)))
    final = rf(-mono(k) * pn * poch_even(k - 1), poch_odd(k))
    return left, line1, line2, line3, line4, final


@_register("sec3-aux-ratio", "(q;q^2)_{n-k} / (q^2;q^2)_{n-k} reduced mod Phi_n^2, every k",
           QC, ODD_N3, MK.PHI2)
def _(n, variant):
    claims = []
    for k in range(1, (n - 1) // 2 + 1):
        pick = (lambda i, k=k: lambda: _ratio_chain(n, k)[i])
        claims += [
            Claim(f"k={k}: left == final", pick(0), pick(5), MK.PHI2),
            Claim(f"k={k}: left == line 1", pick(0), pick(1), None),
            Claim(f"k={k}: line 1 == line 2", pick(1), pick(2), MK.PHI2),
            Claim(f"k={k}: line 2 == line 3", pick(2), pick(3), None),
            Claim(f"k={k}: line 3 == line 4", pick(3), pick(4), MK.PHI2),
            Claim(f"k={k}: line 4 == final", pick(4), pick(5), None),
        ]
    return claims


def _binom_product(n, k):
    num = ONE
    den = ONE
    for j in range(1, n - 2 * k + 2):
        num = num * one_minus(n + j)
        den = den * one_minus(j)
    return rf(num, den)


@_register("sec3-aux-binom", "[2n-2k+1, n] vs 1, every k", QC, ODD_N3, MK.PHI)
def _(n, variant):
    claims = []
    for k in range(1, (n - 1) // 2 + 1):
        b = (lambda k=k: RatFunc._raw(q_binomial(2 * n - 2 * k + 1, n), ONE))
        claims += [
            Claim(f"k={k}: binomial == 1", b, _const(1), MK.PHI),
            Claim(f"k={k}: binomial == product", b, lambda k=k: _binom_product(n, k), None),
        ]
    return claims


def _twonk_term(n, k):
    return rf(q_binomial(2 * n - 2 * k, n - 1) * poch_odd(n - k), poch_even(n - k)) * qpow(n + 1 - 2 * k)


@_register("eq-2nk", "truncated G-sum of the [3k+1] pair vs the Morley/correction expression",
           QC, ODD_N3, MK.PHI3)
def _(n, variant):
    h = (n - 1) // 2

    def left():
        return rf_sum(_twonk_term(n, k) for k in range(1, h + 2))

    def split():
        return rf(poch_odd(h), poch_even(h)) + rf_sum(_twonk_term(n, k) for k in range(1, h + 1))

    def rewritten():
        head = rf(q_binomial(n - 1, h, 2), minus_q_poch(n - 1))
        tail = rf_sum(
            rf(q_binomial(2 * n - 2 * k + 1, n) * one_minus(n) * poch_odd(n - k),
               one_minus(2 * n - 2 * k + 1) * poch_even(n - k)) * qpow(n + 1 - 2 * k)
            for k in range(1, h + 1))
        return head + tail

    def final():
        inner = minus_q_poch(n - 1) - twelfth_factor(n, 24) * q_integer(n) ** 2
        head = qpow((1 - n * n) // 4) * RatFunc._raw(inner * sign(h), ONE)
        return head + RatFunc._raw(q_integer(n) ** 2, ONE) * correction_sum(n)

    return [
        Claim("left == final", left, final, MK.PHI3),
        Claim("left == split", left, split, None),
        Claim("left == rewritten", left, rewritten, None),
        Claim("rewritten == final", rewritten, final, MK.PHI3),
    ]


@_register("eq-2nk-2", "[2n-1, n-1] / (-q;q)_{n-1} vs the Wolstenholme reduction",
           QC, ODD_N3, MK.PHI3)
def _(n, variant):
    mq = minus_q_poch(n - 1)
    lhs = lambda: rf(q_binomial(2 * n - 1, n - 1), mq)  # noqa: E731

    def rhs():
        return (rf(mono(n * (n - 1) // 2, c=sign(n - 1)), mq)
                + RatFunc._raw(twelfth_factor(n, 12) * q_integer(n) ** 2, ONE))

    return [Claim("main", lhs, rhs, MK.PHI3)]


@_register("identity-fn03n+1", "telescoped identity of the [3k+1] pair in product form",
           QI, ODD_N3)
def _(n, variant):
    return [
        Claim("product form", lambda: _sec3_product_form(n)[0],
              lambda: _sec3_product_form(n)[1], None),
        Claim("telescoping report", lambda: telescoping_check(WZPairId.SEC3, n), _const(True), None),
    ]


# -- consequences and conjectures -----------------------------------------------

@_register("eq-q4k-3k-sec4", "[4k+1] series to N vs [3k+1] series to n-1", QC, ODD_N, MK.N_PHI3,
           variants=N_VARIANTS)
def _(n, variant):
    return [Claim("main", lambda: lhs_4k(_upper(n, variant)), lambda: lhs_3k(n), MK.N_PHI3)]


@_register("conj-parametric", "a-parametric [4k+1] sum to N vs a-parametric [3k+1] sum to n-1",
           QP, ODD_N, MK.PARAM_A, variants=N_VARIANTS)
def _(n, variant):
    return [Claim("main", lambda: param_4k(_upper(n, variant)), lambda: param_3k(n), MK.PARAM_A)]


@_register("thm53-expression", "a-parametric [4k+1] sum to N vs the three-term expression",
           QP, ODD_N, MK.PARAM_A, variants=N_VARIANTS)
def _(n, variant):
    return [Claim("main", lambda: param_4k(_upper(n, variant)),
                  lambda: thm53_expression(n), MK.PARAM_A)]


def _wei_rhs(n):
    qn = q_integer(n)
    factor = RatFunc._raw(qn + twelfth_factor(n, 24) * qn ** 3, ONE) * qpow((1 - n) // 2)
    return factor * sq_ratio_sum((n - 1) // 2)


@_register("eq-wei", "[4k+1] series to N vs q^{(1-n)/2}([n] + c[n]^3) times the squared sum",
           QC, ODD_N, MK.N_PHI3, variants=N_VARIANTS)
def _(n, variant):
    return [Claim("main", lambda: lhs_4k(_upper(n, variant)), lambda: _wei_rhs(n), MK.N_PHI3)]


def _sq_rhs(n):
    h = (n - 1) // 2
    return RatFunc._raw(mono((n * n - 1) // 4, c=sign(h)), ONE)


@_register("eq-guozeng", "sum (q;q^2)_k^2 q^{2k} / (q^2;q^2)_k^2 to (n-1)/2 vs (-1)^{(n-1)/2} q^{(n^2-1)/4}",
           QC, ODD_N, MK.PHI2)
def _(n, variant):
    return [Claim("main", lambda: sq_ratio_sum((n - 1) // 2), lambda: _sq_rhs(n), MK.PHI2)]


@_register("eq-q4k-3k-2", "q^{(n-1)/2} times [4k+1] series to N vs [n] times the squared sum plus c[n]^3 term",
           QC, ODD_N, MK.N_PHI3, variants=N_VARIANTS)
def _(n, variant):
    qn = q_integer(n)

    def rhs():
        extra = RatFunc._raw(twelfth_factor(n, 24) * qn ** 3, ONE) * _sq_rhs(n)
        return RatFunc._raw(qn, ONE) * sq_ratio_sum((n - 1) // 2) + extra

    lhs = lambda: qpow((n - 1) // 2) * lhs_4k(_upper(n, variant))  # noqa: E731
    return [Claim("main", lhs, rhs, MK.N_PHI3)]


@_register("cor-one", "squared sum to (n-1)/2 vs the Euler-type refinement", QC, ODD_N, MK.PHI3)
def _(n, variant):
    h = (n - 1) // 2

    def rhs():
        c = RatFunc._raw(twelfth_factor(n, 24) * q_integer(n) ** 2 * sign(h), ONE)
        bracket = qpow(-h * h) - qpow((n * n - 1) // 4)
        tail = qpow(h) * RatFunc._raw(q_integer(n) ** 2, ONE) * correction_sum(n)
        return _sq_rhs(n) + c * bracket + tail

    return [Claim("main", lambda: sq_ratio_sum(h), rhs, MK.PHI3)]


@_register("eq-q-tauraso", "sum q^k [2k, k] / (-q;q)_k to n-1 vs (-1)^{(n-1)/2} q^{(n^2-1)/4}",
           QC, ODD_N, MK.PHI2)
def _(n, variant):
    return [Claim("main", lambda: central_minus_q_sum(n), lambda: _sq_rhs(n), MK.PHI2)]


@_register("conj-2", "sum q^k [2k, k] / (-q;q)_k vs the squared sum, both to n-1",
           QC, ODD_N, MK.PHI3)
def _(n, variant):
    return [Claim("main", lambda: central_minus_q_sum(n), lambda: sq_ratio_sum(n - 1), MK.PHI3)]


# -- classical p-adic side -----------------------------------------------------

def _m_upper(p, variant):
    return p - 1 if variant == "m=p-1" else (p - 1) // 2


def _series_4k(m):
    total, r = mpq(0), mpq(1)
    for k in range(m + 1):
        if k:
            r *= mpq(2 * k - 1, 2 * k)
        total += (-1) ** k * (4 * k + 1) * r ** 3
    return total


def _series_3k(m):
    total, r = mpq(0), mpq(1)
    for k in range(m + 1):
        if k:
            r *= mpq(2 * k - 1, 2 * k)
        total += (-1) ** k * (3 * k + 1) * r ** 3 * 8 ** k
    return total


def _series_central(m, power, base):
    """sum_{k<=m} C(2k,k)^power / base^k"""
    return sum((mpq(comb(2 * k, k) ** power, base ** k) for k in range(m + 1)), mpq(0))


def _sgn(p):
    return sign((p - 1) // 2)


@_register("cl-vanhamme", "sum (-1)^k (4k+1) ((1/2)_k/k!)^3 to m vs p(-1)^{(p-1)/2}",
           PA, ODD_PRIME, exponent=3, variants=M_VARIANTS)
def _(p, variant):
    return [Claim("main", lambda: _series_4k(_m_upper(p, variant)), lambda: p * _sgn(p), 3)]


@_register("cl-sun-p4", "sum (-1)^k (4k+1) ((1/2)_k/k!)^3 to m vs p(-1)^{(p-1)/2} + p^3 E_{p-3}",
           PA, PRIME_GT3, exponent=4, variants=M_VARIANTS)
def _(p, variant):
    return [Claim("main", lambda: _series_4k(_m_upper(p, variant)),
                  lambda: p * _sgn(p) + p ** 3 * euler_number(p - 3), 4)]


@_register("cl-gz-div3", "sum (-1)^k (3k+1) ((1/2)_k/k!)^3 8^k to (p-1)/2 vs p(-1)^{(p-1)/2}",
           PA, ODD_PRIME, exponent=3)
def _(p, variant):
    return [Claim("main", lambda: _series_3k((p - 1) // 2), lambda: p * _sgn(p), 3)]


@_register("cl-cxh", "sum (-1)^k (3k+1) ((1/2)_k/k!)^3 8^k to p-1 vs p(-1)^{(p-1)/2} + p^3 E_{p-3}",
           PA, PRIME_GT3, exponent=4)
def _(p, variant):
    return [Claim("main", lambda: _series_3k(p - 1),
                  lambda: p * _sgn(p) + p ** 3 * euler_number(p - 3), 4)]


@_register("cl-sun-3-1", "sum 4^k / (k(2k-1) C(2k,k)) to (p-1)/2 vs 2 E_{p-3}",
           PA, ODD_PRIME, exponent=1)
def _(p, variant):
    def lhs():
        return sum((mpq(4 ** k, k * (2 * k - 1) * comb(2 * k, k)) for k in range(1, (p - 1) // 2 + 1)),
                   mpq(0))
    return [Claim("main", lhs, lambda: 2 * euler_number(p - 3), 1)]


@_register("cl-sun-combin", "sum (-1)^k (4k+1) ((1/2)_k/k!)^3 to m vs the 8^k (3k+1) sum to p-1",
           PA, PRIME_GT3, exponent=4, variants=M_VARIANTS)
def _(p, variant):
    return [Claim("main", lambda: _series_4k(_m_upper(p, variant)), lambda: _series_3k(p - 1), 4)]


@_register("cl-sun-2", "sum C(2k,k)/2^k to p-1 vs (-1)^{(p-1)/2} - p^2 E_{p-3}",
           PA, PRIME_GT3, exponent=3)
def _(p, variant):
    return [Claim("main", lambda: _series_central(p - 1, 1, 2),
                  lambda: _sgn(p) - p ** 2 * euler_number(p - 3), 3)]


@_register("cl-sun-3", "sum C(2k,k)^2/16^k to (p-1)/2 vs (-1)^{(p-1)/2} + p^2 E_{p-3}",
           PA, PRIME_GT3, exponent=3)
def _(p, variant):
    return [Claim("main", lambda: _series_central((p - 1) // 2, 2, 16),
                  lambda: _sgn(p) + p ** 2 * euler_number(p - 3), 3)]


@_register("cl-sun-4", "sum C(2k,k)^2/16^k to p-1 vs (-1)^{(p-1)/2} - p^2 E_{p-3}",
           PA, PRIME_GT3, exponent=3)
def _(p, variant):
    return [Claim("main", lambda: _series_central(p - 1, 2, 16),
                  lambda: _sgn(p) - p ** 2 * euler_number(p - 3), 3)]


@_register("cl-sun2-4", "sum C(2k,k)/2^k vs sum C(2k,k)^2/16^k, both to p-1",
           PA, ODD_PRIME, exponent=3)
def _(p, variant):
    return [Claim("main", lambda: _series_central(p - 1, 1, 2),
                  lambda: _series_central(p - 1, 2, 16), 3)]


__all__ = ["Claim", "Domain", "Statement", "StatementKind", "get_statement",
           "list_statements"]
