"""Reduced rational functions and congruence predicates.

``A == B (mod P)`` means that P divides the numerator of the reduced form of
A - B. Numerators carry all rational content, denominators are integral and
content-free, so moduli with integer coefficients can be tested directly.
"""

import enum
from dataclasses import dataclass, field

from . import qkit
from .ntheory import is_prime
from .polyring import (ONE, ZERO, MPoly, coefficient, cyclotomic, divides,
                       exact_div, poly_eval, poly_gcd)
from .polyring.mpoly import _coerce


class ZeroDenominator(ZeroDivisionError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class TrivialModulus(ValueError):
    """The requested modulus is a unit, so every congruence holds."""


class NonInvertibleDenominator(ValueError):
    """The difference has a denominator divisible by the prime."""


class RatFunc:
    """Reduced quotient ``num / den`` of polynomials in q, a, b."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=ONE):
        r = rf_make(_poly(num), _poly(den))
        self.num, self.den, self._hash = r.num, r.den, None

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den == ONE

    def __eq__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return _add(self, -other)

    def __rsub__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return _add(other, -self)

    def __mul__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return _mul(self, _inverse(other))

    def __rtruediv__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return _mul(other, _inverse(self))

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("exponent must be an int")
        if e < 0:
            return _inverse(self) ** (-e)
        # Powers of a reduced fraction are reduced.
        return RatFunc._raw(self.num ** e, self.den ** e)

    def subs(self, q=None, a=None, b=None):
        den = self.den.subs(q, a, b)
        if not den:
            raise ZeroDenominator("denominator vanishes under substitution")
        return rf_make(self.num.subs(q, a, b), den)

    def evaluate(self, q=0, a=0, b=0):
        d = poly_eval(self.den, q, a, b)
        if not d:
            raise ZeroDenominator("denominator vanishes at this point")
        return poly_eval(self.num, q, a, b) / d

    def __repr__(self):
        if self.den == ONE:
            return f"RatFunc({self.num})"
        return f"RatFunc(({self.num}) / ({self.den}))"


def _poly(x):
    p = _coerce(x)
    if p is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to a polynomial")
    return p


def _rf(x):
    if isinstance(x, RatFunc):
        return x
    p = _coerce(x)
    if p is NotImplemented:
        return p
    return RatFunc._raw(p, ONE)


def rf_make(num, den):
    """Reduced, normalised representative of ``num / den``."""
    if not den:
        raise ZeroDenominator("zero denominator")
    if not num:
        return RatFunc._raw(ZERO, ONE)
    if den.is_constant():
        return RatFunc._raw(num / den.constant_term(), ONE)
    g = poly_gcd(num, den)
    if g != ONE:
        num = exact_div(num, g)
        den = exact_div(den, g)
    unit, den = den.primitive()
    if unit != 1:
        num = num / unit
    return RatFunc._raw(num, den)


def _add(x, y):
    if not x.num:
        return y
    if not y.num:
        return x
    if x.den == y.den:
        if x.den == ONE:
            return RatFunc._raw(x.num + y.num, ONE)
        return rf_make(x.num + y.num, x.den)
    if x.den == ONE:
        return RatFunc._raw(x.num * y.den + y.num, y.den)
    if y.den == ONE:
        return RatFunc._raw(y.num * x.den + x.num, x.den)
    g = poly_gcd(x.den, y.den)
    if g == ONE:
        return RatFunc._raw(x.num * y.den + y.num * x.den, x.den * y.den)
    d1 = exact_div(x.den, g)
    d2 = exact_div(y.den, g)
    t = x.num * d2 + y.num * d1
    if not t:
        return RatFunc._raw(ZERO, ONE)
    g2 = poly_gcd(t, g)
    if g2 != ONE:
        t = exact_div(t, g2)
        g = exact_div(g, g2)
    return RatFunc._raw(t, g * d1 * d2)


def _mul(x, y):
    if not x.num or not y.num:
        return RatFunc._raw(ZERO, ONE)
    xn, xd, yn, yd = x.num, x.den, y.num, y.den
    if yd != ONE:
        g = poly_gcd(xn, yd)
        if g != ONE:
            xn, yd = exact_div(xn, g), exact_div(yd, g)
    if xd != ONE:
        g = poly_gcd(yn, xd)
        if g != ONE:
            yn, xd = exact_div(yn, g), exact_div(xd, g)
    return RatFunc._raw(xn * yn, xd * yd)


def _inverse(x):
    if not x.num:
        raise DivisionByZero("division by the zero rational function")
    unit, pp = x.num.primitive()
    return RatFunc._raw(x.den / unit, pp)


_OPS = {
    "+": lambda x, y: x + y, "-": lambda x, y: x - y,
    "*": lambda x, y: x * y, "/": lambda x, y: x / y,
    "−": lambda x, y: x - y, "×": lambda x, y: x * y, "÷": lambda x, y: x / y,
}


def rf_arith(x, y, op):
    """Exact field arithmetic; ``op`` is one of ``+ - * /`` (or ``− × ÷``)."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    return fn(_rf(x), _rf(y))


def qpow(e):
    """q**e as a rational function; negative exponents go to the denominator."""
    if e >= 0:
        return RatFunc._raw(MPoly.monomial(e), ONE)
    return RatFunc._raw(ONE, MPoly.monomial(-e))


# -- moduli ------------------------------------------------------------------

@dataclass(frozen=True)
class Modulus:
    poly: MPoly
    description: str = ""

    def __post_init__(self):
        if self.poly.is_constant():
            raise ValueError("a modulus must be a non-constant polynomial")

    @property
    def degree(self):
        return self.poly.degree("q")


@dataclass(frozen=True)
class PadicModulus:
    p: int
    exponent: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.exponent < 1:
            raise ValueError("exponent must be positive")

    @property
    def value(self):
        return self.p ** self.exponent

    @property
    def description(self):
        return f"p^{self.exponent}" if self.exponent > 1 else "p"


class ModulusKind(enum.Enum):
    PHI = "Φ_n(q)"
    PHI2 = "Φ_n(q)²"
    PHI3 = "Φ_n(q)³"
    PHI4 = "Φ_n(q)⁴"
    N_ONLY = "[n]"
    N_PHI2 = "[n]Φ_n(q)²"
    N_PHI3 = "[n]Φ_n(q)³"
    PARAM_A = "[n]Φ_n(q)(1−aqⁿ)(a−qⁿ)"


def modulus_build(kind, n):
    """The polynomial modulus of the given kind for odd ``n``."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"modulus needs an odd positive n, got {n}")
    if n == 1:
        raise TrivialModulus(f"{kind.value} is trivial at n = 1")
    kind = ModulusKind(kind)
    phi = cyclotomic(n)
    qn = qkit.q_integer(n)
    if kind is ModulusKind.PHI:
        poly = phi
    elif kind is ModulusKind.PHI2:
        poly = phi ** 2
    elif kind is ModulusKind.PHI3:
        poly = phi ** 3
    elif kind is ModulusKind.PHI4:
        poly = phi ** 4
    elif kind is ModulusKind.N_ONLY:
        poly = qn
    elif kind is ModulusKind.N_PHI2:
        poly = qn * phi ** 2
    elif kind is ModulusKind.N_PHI3:
        poly = qn * phi ** 3
    else:
        a = MPoly.monomial(0, 1)
        qn_mono = MPoly.monomial(n)
        poly = qn * phi * (1 - a * qn_mono) * (a - qn_mono)
    return Modulus(poly, kind.value)


@dataclass
class CongruenceResult:
    holds: bool
    warnings: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


def congruent_mod(x, y, modulus):
    """Test ``x == y (mod modulus)``; a denominator sharing a factor with the
    modulus is reported as a warning, not a failure."""
    d = _rf(x) - _rf(y)
    warnings = []
    holds = True if not d.num else divides(modulus.poly, d.num)
    if not d.den.is_constant():
        g = poly_gcd(d.den, modulus.poly)
        if g != ONE:
            warnings.append(
                f"NonCoprimeDenominator: denominator shares a degree-{g.degree('q')} "
                f"factor with {modulus.description}")
    return CongruenceResult(holds, warnings)


def padic_congruent(x, y, modulus):
    """True iff p**e divides the reduced numerator of ``x - y``."""
    d = coefficient(x) - coefficient(y)
    if not d:
        return True
    if d.denominator % modulus.p == 0:
        raise NonInvertibleDenominator(
            f"denominator {d.denominator} is divisible by {modulus.p}")
    return d.numerator % modulus.value == 0


__all__ = [
    "CongruenceResult", "DivisionByZero", "Modulus", "ModulusKind",
    "NonInvertibleDenominator", "PadicModulus", "RatFunc", "TrivialModulus",
    "ZeroDenominator", "congruent_mod", "modulus_build", "padic_congruent",
    "qpow", "rf_arith", "rf_make",
]
