"""Sparse polynomials in q, a, b over the rationals."""

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

import gmpy2
from gmpy2 import mpq, mpz

from . import _dense

VARIABLES = ("q", "a", "b")

# Below this many coefficient products, schoolbook multiplication wins.
_SCHOOLBOOK_LIMIT = 2048
_SPARSE_DIVISOR_TERMS = 12


class NotDivisible(ArithmeticError):
    """The divisor does not divide the dividend exactly."""


class ExponentOverflow(OverflowError):
    """A result would exceed the configured :class:`ExponentBudget`."""


@dataclass(frozen=True)
class ExponentBudget:
    max_degree_q: int = 1 << 22
    max_degree_a: int = 1 << 16
    max_degree_b: int = 1 << 16

    def __post_init__(self):
        for name in ("max_degree_q", "max_degree_a", "max_degree_b"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def check(self, degrees):
        limits = (self.max_degree_q, self.max_degree_a, self.max_degree_b)
        for var, deg, limit in zip(VARIABLES, degrees, limits):
            if deg > limit:
                raise ExponentOverflow(
                    f"degree {deg} in {var} exceeds budget {limit}")


_budget = ExponentBudget()


def get_exponent_budget():
    return _budget


def set_exponent_budget(budget):
    """Install a new budget and return the previous one."""
    global _budget
    previous, _budget = _budget, budget
    return previous


def coefficient(x):
    """Coerce ``x`` to an exact rational (gmpy2 ``mpq``, always reduced)."""
    if isinstance(x, (int, mpz)):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(Fraction(x))
    if type(x) is type(mpq()):
        return x
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


def _grlex(key):
    return (key[0] + key[1] + key[2], key)


def _var_index(var):
    if isinstance(var, str):
        return VARIABLES.index(var)
    return var


class MPoly:
    """Immutable sparse polynomial ``sum c * q**i * a**j * b**l``.

    Terms are kept in a dict keyed by exponent triples ``(i, j, l)``; zero
    coefficients are never stored, so equal polynomials have equal dicts.
    """

    __slots__ = ("_t", "_hash", "_degs")

    def __init__(self, terms=None):
        t = {}
        if terms is None:
            pass
        elif isinstance(terms, MPoly):
            t = dict(terms._t)
        elif isinstance(terms, dict):
            for key, c in terms.items():
                key = _check_key(key)
                c = coefficient(c)
                if c:
                    t[key] = t.get(key, 0) + c
        else:
            c = coefficient(terms)
            if c:
                t[(0, 0, 0)] = c
        self._t = {k: v for k, v in t.items() if v}
        self._hash = None
        self._degs = None

    @classmethod
    def _raw(cls, t):
        p = object.__new__(cls)
        p._t = t
        p._hash = None
        p._degs = None
        return p

    @classmethod
    def monomial(cls, i=0, j=0, l=0, c=1):
        c = coefficient(c)
        return cls._raw({(i, j, l): c} if c else {})

    # -- inspection ------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._t)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and (0, 0, 0) in self._t)

    def is_monomial(self):
        return len(self._t) == 1

    def constant_term(self):
        return self._t.get((0, 0, 0), mpq(0))

    def degrees(self):
        """Per-variable degrees ``(deg_q, deg_a, deg_b)``; ``-1`` for zero."""
        if self._degs is None:
            if not self._t:
                self._degs = (-1, -1, -1)
            else:
                ks = self._t.keys()
                self._degs = (max(k[0] for k in ks), max(k[1] for k in ks),
                              max(k[2] for k in ks))
        return self._degs

    def degree(self, var="q"):
        return self.degrees()[_var_index(var)]

    def min_exponents(self):
        if not self._t:
            return (0, 0, 0)
        ks = self._t.keys()
        return (min(k[0] for k in ks), min(k[1] for k in ks),
                min(k[2] for k in ks))

    def variables(self):
        """Indices of the variables that actually occur."""
        degs = self.degrees()
        return tuple(i for i in range(3) if degs[i] > 0)

    def total_degree(self):
        return max((sum(k) for k in self._t), default=-1)

    def leading_term(self):
        """``(exponents, coefficient)`` of the graded-lex largest term."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        key = max(self._t, key=_grlex)
        return key, self._t[key]

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self._t.items(), key=lambda kv: _grlex(kv[0]),
                      reverse=True)

    def content(self):
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self._t:
            return mpq(0)
        g = mpz(0)
        l = mpz(1)
        for c in self._t.values():
            g = gmpy2.gcd(g, c.numerator)
            l = gmpy2.lcm(l, c.denominator)
        return mpq(g, l)

    def primitive(self):
        """Split as ``unit * pp`` with pp integral, content-free and with a
        positive graded-lex leading coefficient. Returns ``(unit, pp)``."""
        if not self._t:
            return mpq(0), self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        if c == 1:
            return c, self
        return c, self._scale(1 / c)

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._t == other._t
        try:
            other = MPoly(other)
        except TypeError:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self):
        return MPoly._raw({k: -c for k, c in self._t.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(self._t) < len(other._t):
            small, big = self._t, other._t
        else:
            small, big = other._t, self._t
        t = dict(big)
        for k, c in small.items():
            s = t.get(k)
            if s is None:
                t[k] = c
            else:
                s = s + c
                if s:
                    t[k] = s
                else:
                    del t[k]
        return MPoly._raw(t)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            return _mul(self, other)
        try:
            c = coefficient(other)
        except TypeError:
            return NotImplemented
        return self._scale(c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if other.is_constant() and other:
                return self._scale(1 / other.constant_term())
            return NotImplemented
        c = coefficient(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self._scale(1 / c)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        if e == 0:
            return ONE
        if len(self._t) == 1:
            (k, c), = self._t.items()
            key = (k[0] * e, k[1] * e, k[2] * e)
            _budget.check(key)
            return MPoly._raw({key: c ** e})
        result = ONE
        base = self
        while True:
            if e & 1:
                result = result * base
            e >>= 1
            if not e:
                return result
            base = base * base

    def _scale(self, c):
        if not c:
            return ZERO
        if c == 1:
            return self
        return MPoly._raw({k: v * c for k, v in self._t.items()})

    def shift(self, i=0, j=0, l=0):
        """Multiply by the monomial ``q**i a**j b**l``."""
        if not (i or j or l):
            return self
        _budget.check(tuple(d + s for d, s in zip(self.degrees(), (i, j, l))))
        return MPoly._raw({(k[0] + i, k[1] + j, k[2] + l): c
                           for k, c in self._t.items()})

    def subs(self, q=None, a=None, b=None):
        """Substitute rationals or polynomials for any of the variables."""
        vals = [q, a, b]
        if all(v is None for v in vals):
            return self
        gens = (Q, A, B)
        vals = [gens[i] if v is None else _coerce_strict(v)
                for i, v in enumerate(vals)]
        caches = ({0: ONE}, {0: ONE}, {0: ONE})

        def power(i, e):
            cache = caches[i]
            if e not in cache:
                cache[e] = vals[i] ** e
            return cache[e]

        result = ZERO
        for k, c in self._t.items():
            result = result + power(0, k[0]) * power(1, k[1]) * power(2, k[2]) * c
        return result

    def __call__(self, q=None, a=None, b=None):
        return self.subs(q, a, b)

    # -- conversions -----------------------------------------------------

    def to_records(self):
        """``[[num, den, e_q, e_a, e_b], ...]`` in descending graded-lex order."""
        return [[int(c.numerator), int(c.denominator), k[0], k[1], k[2]]
                for k, c in self.sorted_terms()]

    @classmethod
    def from_records(cls, records):
        t = {}
        for num, den, i, j, l in records:
            if den <= 0:
                raise ValueError("record denominators must be positive")
            key = _check_key((i, j, l))
            if key in t:
                raise ValueError(f"duplicate exponent {key}")
            c = mpq(num, den)
            if c:
                t[key] = c
        return cls._raw(t)

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(VARIABLES, k) if e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _check_key(key):
    key = tuple(int(e) for e in key)
    if len(key) == 1:
        key = (key[0], 0, 0)
    if len(key) != 3 or min(key) < 0:
        raise ValueError(f"exponents must be three nonnegative ints, got {key}")
    return key


def _coerce(x):
    if isinstance(x, MPoly):
        return x
    try:
        return MPoly(x)
    except TypeError:
        return NotImplemented


def _coerce_strict(x):
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to MPoly")
    return y


ZERO = MPoly._raw({})
ONE = MPoly._raw({(0, 0, 0): mpq(1)})
Q = MPoly._raw({(1, 0, 0): mpq(1)})
A = MPoly._raw({(0, 1, 0): mpq(1)})
B = MPoly._raw({(0, 0, 1): mpq(1)})


# -- integer views -----------------------------------------------------------

def int_form(p):
    """``(terms, den)`` with integer ``terms`` such that ``p = terms / den``."""
    den = mpz(1)
    for c in p._t.values():
        d = c.denominator
        if d != 1:
            den = gmpy2.lcm(den, d)
    if den == 1:
        return {k: c.numerator for k, c in p._t.items()}, den
    return {k: c.numerator * (den // c.denominator) for k, c in p._t.items()}, den


def from_int_terms(t, den=1):
    if den == 1:
        return MPoly._raw({k: mpq(c) for k, c in t.items() if c})
    return MPoly._raw({k: mpq(c, den) for k, c in t.items() if c})


def _max_abs(t):
    return max((abs(c) for c in t.values()), default=mpz(0))


def _degrees_of(t):
    ks = t.keys()
    return (max(k[0] for k in ks), max(k[1] for k in ks), max(k[2] for k in ks))


def _min_of(t):
    ks = t.keys()
    return (min(k[0] for k in ks), min(k[1] for k in ks), min(k[2] for k in ks))


def _strip(t):
    m = _min_of(t)
    if m == (0, 0, 0):
        return t, m
    return {(k[0] - m[0], k[1] - m[1], k[2] - m[2]): c for k, c in t.items()}, m


def int_mul(ta, tb):
    """Product of two integer term dicts (no zero entries)."""
    if not ta or not tb:
        return {}
    if len(ta) * len(tb) <= _SCHOOLBOOK_LIMIT or min(len(ta), len(tb)) <= 2:
        return _schoolbook(ta, tb)
    ta, ma = _strip(ta)
    tb, mb = _strip(tb)
    da, db = _degrees_of(ta), _degrees_of(tb)
    bq = da[0] + db[0] + 1
    ba = da[1] + db[1] + 1
    nbits = (_dense.bits(_max_abs(ta)) + _dense.bits(_max_abs(tb))
             + _dense.bits(min(len(ta), len(tb))) + 1)
    nb = _dense.nbytes_for(nbits)
    va = _pack_terms(ta, bq, ba, nb)
    vb = _pack_terms(tb, bq, ba, nb)
    out = _unpack_terms(va * vb, nb, bq, ba)
    s = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
    if s != (0, 0, 0):
        out = {(k[0] + s[0], k[1] + s[1], k[2] + s[2]): c for k, c in out.items()}
    return out


def _schoolbook(ta, tb):
    if len(ta) > len(tb):
        ta, tb = tb, ta
    out = {}
    get = out.get
    for (i, j, l), c in ta.items():
        for (i2, j2, l2), c2 in tb.items():
            k = (i + i2, j + j2, l + l2)
            out[k] = get(k, 0) + c * c2
    return {k: c for k, c in out.items() if c}


def _pack_terms(t, bq, ba, nb):
    items = [(k[0] + bq * (k[1] + ba * k[2]), c) for k, c in t.items()]
    length = max(i for i, _ in items) + 1
    return _dense.pack(items, length, nb)


def _unpack_terms(value, nb, bq, ba):
    out = {}
    for idx, c in _dense.unpack(value, nb).items():
        rest, i = divmod(idx, bq)
        l, j = divmod(rest, ba)
        out[(i, j, l)] = mpz(c)
    return out


def _mul(x, y):
    if not x._t or not y._t:
        return ZERO
    degs = tuple(p + r for p, r in zip(x.degrees(), y.degrees()))
    _budget.check(degs)
    if len(x._t) == 1 or len(y._t) == 1:
        if len(x._t) != 1:
            x, y = y, x
        (k, c), = x._t.items()
        return MPoly._raw({(k[0] + k2[0], k[1] + k2[1], k[2] + k2[2]): c * c2
                           for k2, c2 in y._t.items()})
    if len(x._t) * len(y._t) <= _SCHOOLBOOK_LIMIT:
        out = {}
        get = out.get
        small, big = (x._t, y._t) if len(x._t) <= len(y._t) else (y._t, x._t)
        for (i, j, l), c in small.items():
            for (i2, j2, l2), c2 in big.items():
                k = (i + i2, j + j2, l + l2)
                out[k] = get(k, 0) + c * c2
        return MPoly._raw({k: c for k, c in out.items() if c})
    ta, da = int_form(x)
    tb, db = int_form(y)
    return from_int_terms(int_mul(ta, tb), da * db)


# -- exact division ----------------------------------------------------------

def int_exact_div(ta, tb):
    """Exact quotient of integer term dicts, or ``None`` if ``tb`` does not
    divide ``ta`` in Q[q, a, b]. The quotient may have rational coefficients,
    returned as ``(terms, den)``."""
    if not tb:
        raise ZeroDivisionError("division by the zero polynomial")
    if not ta:
        return {}, mpz(1)
    ta, ma = _strip(ta)
    tb, mb = _strip(tb)
    shift = tuple(p - r for p, r in zip(ma, mb))
    if min(shift) < 0:
        return None
    da, db = _degrees_of(ta), _degrees_of(tb)
    if any(y > x for x, y in zip(da, db)):
        return None
    # Gauss: divide by the primitive part, then fold the content back in.
    g = mpz(0)
    for c in tb.values():
        g = gmpy2.gcd(g, c)
    lead = tb[max(tb, key=_grlex)]
    if lead < 0:
        g = -g
    if g != 1:
        tb = {k: c // g for k, c in tb.items()}
    if len(tb) == 1:
        (kb, cb), = tb.items()
        quot = {(k[0] - kb[0], k[1] - kb[1], k[2] - kb[2]): c for k, c in ta.items()}
        if any(min(k) < 0 for k in quot):
            return None
        num, den = quot, cb * g
    else:
        if len(tb) <= _SPARSE_DIVISOR_TERMS and da[1] == 0 and da[2] == 0:
            num = _univariate_sparse_div(ta, tb)
        else:
            num = _kronecker_div(ta, tb, da)
        if num is None:
            return None
        den = g
    if den < 0:
        den = -den
        num = {k: -c for k, c in num.items()}
    if shift != (0, 0, 0):
        num = {(k[0] + shift[0], k[1] + shift[1], k[2] + shift[2]): c
               for k, c in num.items()}
    return num, den


def _univariate_sparse_div(ta, tb):
    n = max(k[0] for k in ta)
    m = max(k[0] for k in tb)
    lc = tb[(m, 0, 0)]
    rest = [(k[0], c) for k, c in tb.items() if k[0] != m]
    rem = [mpz(0)] * (n + 1)
    for k, c in ta.items():
        rem[k[0]] = c
    quot = {}
    for i in range(n - m, -1, -1):
        c = rem[i + m]
        if not c:
            continue
        qc, r = divmod(c, lc)
        if r:
            return None
        quot[(i, 0, 0)] = qc
        for e, bc in rest:
            rem[i + e] -= qc * bc
    if any(rem[:m]):
        return None
    return quot


def _kronecker_div(ta, tb, da):
    bq = da[0] + 1
    ba = da[1] + 1
    na, nbits_b = _dense.bits(_max_abs(ta)), _dense.bits(_max_abs(tb))
    # Factor-coefficient bound (Gelfond) makes the last attempt conclusive.
    norm2 = sum(c * c for c in ta.values())
    final = (sum(da) + (_dense.bits(norm2) + 1) // 2
             + sum(_dense.bits(d + 1) for d in da) + 8)
    nbits = max(na, nbits_b) + 16
    while True:
        nbits = min(nbits, max(final, na, nbits_b) + 1)
        nb = _dense.nbytes_for(nbits)
        va = _pack_terms(ta, bq, ba, nb)
        vb = _pack_terms(tb, bq, ba, nb)
        qv, r = gmpy2.t_divmod(va, vb)
        if r:
            return None
        cand = _unpack_terms(qv, nb, bq, ba)
        if cand and int_mul(tb, cand) == ta:
            return cand
        if nbits > final:
            return None
        nbits *= 2


def exact_div(a, b):
    """Return ``a / b`` when ``b`` divides ``a`` exactly over Q; otherwise
    raise :class:`NotDivisible`."""
    if not b._t:
        raise ZeroDivisionError("division by the zero polynomial")
    if b.is_constant():
        return a._scale(1 / b.constant_term())
    ta, dena = int_form(a)
    tb, denb = int_form(b)
    res = int_exact_div(ta, tb)
    if res is None:
        raise NotDivisible(f"{_short(b)} does not divide {_short(a)}")
    num, den = res
    quotient = from_int_terms(num, den * dena)
    return quotient._scale(mpq(denb)) if denb != 1 else quotient


def divides(b, a):
    """True iff ``b`` divides ``a`` exactly (``b`` nonzero)."""
    if not b._t:
        raise ZeroDivisionError("division by the zero polynomial")
    if b.is_constant() or not a._t:
        return True
    return int_exact_div(int_form(a)[0], int_form(b)[0]) is not None


def _short(p, limit=60):
    s = str(p)
    return s if len(s) <= limit else s[:limit] + "..."


def poly_eval(p, at_q=0, at_a=0, at_b=0):
    """Exact value of ``p`` at rational ``(q, a, b)``."""
    xs = (coefficient(at_q), coefficient(at_a), coefficient(at_b))
    caches = ({}, {}, {})

    def power(i, e):
        c = caches[i]
        if e not in c:
            c[e] = xs[i] ** e
        return c[e]

    total = mpq(0)
    for k, c in p._t.items():
        total += c * power(0, k[0]) * power(1, k[1]) * power(2, k[2])
    return total
