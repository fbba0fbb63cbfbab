"""Polynomial GCD over Q[q, a, b].

The fast path is the heuristic GCD of Char, Geddes and Gonnet extended
recursively to several variables: evaluate one variable at ``xi = 2**k``,
take the GCD of the images, rebuild the candidate from balanced ``xi``-adic
digits, and keep it only if it divides both inputs. With
``xi >= 2*min(|f|, |g|) + 2`` a candidate that divides both inputs is the GCD.
When the heuristic gives up, a subresultant PRS (recursive, via the
content/primitive-part split) produces the answer.
"""

import gmpy2
from gmpy2 import mpz

from . import _dense
from .mpoly import (ONE, MPoly, _grlex, _max_abs, _strip, from_int_terms,
                    int_exact_div, int_form)

_HEU_ATTEMPTS = 6


def poly_gcd(x, y, method="auto"):
    """GCD normalised to integer, content-free coefficients with a positive
    graded-lex leading coefficient.

    ``method`` is ``"auto"`` (heuristic with PRS fallback), ``"heuristic"``
    (returns ``None`` if the heuristic fails) or ``"prs"``.
    """
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    if not x:
        return y.primitive()[1]
    if not y:
        return x.primitive()[1]
    tx = _primitive_int(int_form(x)[0])
    ty = _primitive_int(int_form(y)[0])
    g = int_gcd(tx, ty, method)
    if g is None:
        return None
    return from_int_terms(g)


def normalize(p):
    """Content-free integral representative with positive leading coefficient."""
    return p.primitive()[1]


def _content(t):
    g = mpz(0)
    for c in t.values():
        g = gmpy2.gcd(g, c)
        if g == 1:
            break
    return g


def _primitive_int(t):
    g = _content(t)
    if t[max(t, key=_grlex)] < 0:
        g = -g
    if g == 1:
        return t
    return {k: c // g for k, c in t.items()}


def int_gcd(f, g, method="auto"):
    """Normalised GCD of two nonzero primitive integer term dicts."""
    f, mf = _strip(f)
    g, mg = _strip(g)
    m = tuple(min(a, b) for a, b in zip(mf, mg))
    h = _gcd_core(f, g, method)
    if h is None:
        return None
    if m != (0, 0, 0):
        h = {(k[0] + m[0], k[1] + m[1], k[2] + m[2]): c for k, c in h.items()}
    return _primitive_int(h)


def _vars_of(t):
    seen = [False, False, False]
    for k in t:
        for i in range(3):
            if k[i]:
                seen[i] = True
    return [i for i in range(3) if seen[i]]


def _gcd_core(f, g, method):
    """GCD of monomial-free primitive integer polynomials."""
    vf, vg = _vars_of(f), _vars_of(g)
    if not vf or not vg:
        return {(0, 0, 0): mpz(1)}
    if f == g:
        return f
    # A variable missing from one side can only enter through content.
    only_f = [v for v in vf if v not in vg]
    only_g = [v for v in vg if v not in vf]
    if only_f:
        return _gcd_via_coefficients(f, only_f, g, method)
    if only_g:
        return _gcd_via_coefficients(g, only_g, f, method)
    if method in ("auto", "heuristic"):
        h = _heu_primitive(f, g, sorted(vf, reverse=True))
        if h is not None or method == "heuristic":
            return h
    return _prs_gcd(f, g)


def _gcd_via_coefficients(f, extra, g, method):
    groups = {}
    for k, c in f.items():
        key = tuple(0 if i in extra else k[i] for i in range(3))
        sub = tuple(k[i] if i in extra else 0 for i in range(3))
        groups.setdefault(sub, {})[key] = c
    h = g
    for part in sorted(groups.values(), key=len):
        part = _primitive_int(part)
        h = int_gcd(part, h, method)
        if h is None:
            return None
        if len(h) == 1 and (0, 0, 0) in h:
            break
    return h


# -- heuristic ---------------------------------------------------------------

def _eval_var(t, v, k):
    """Substitute ``2**k`` for variable ``v``."""
    groups = {}
    for key, c in t.items():
        rest = key[:v] + (0,) + key[v + 1:]
        groups.setdefault(rest, {})[key[v]] = c
    out = {}
    for rest, coeffs in groups.items():
        dense = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            dense[e] = c
        val = _dense.eval_pow2(dense, k)
        if val:
            out[rest] = val
    return out


def _interpolate(t, v, k):
    nb = k // 8
    out = {}
    for key, c in t.items():
        for e, d in _dense.unpack(c, nb).items():
            out[key[:v] + (e,) + key[v + 1:]] = mpz(d)
    return out


def _heu_full(f, g, variables):
    """Full GCD over Z (content included) or ``None``."""
    if not variables:
        return {(0, 0, 0): gmpy2.gcd(f[(0, 0, 0)], g[(0, 0, 0)])}
    cf, cg = _content(f), _content(g)
    c = gmpy2.gcd(cf, cg)
    if cf != 1:
        f = {key: x // cf for key, x in f.items()}
    if cg != 1:
        g = {key: x // cg for key, x in g.items()}
    h = _heu_primitive(f, g, variables)
    if h is None:
        return None
    if c != 1:
        h = {key: x * c for key, x in h.items()}
    return h


def _heu_primitive(f, g, variables):
    v, rest = variables[0], variables[1:]
    bound = 2 * min(_max_abs(f), _max_abs(g)) + 2
    k = 8 * (_dense.bits(bound) // 8 + 1)
    deg_limit = min(max(key[v] for key in f), max(key[v] for key in g))
    for _ in range(_HEU_ATTEMPTS):
        ff = _eval_var(f, v, k)
        gg = _eval_var(g, v, k)
        if ff and gg:
            inner = _heu_full(ff, gg, [u for u in rest if _uses(ff, u) or _uses(gg, u)])
            if inner is not None:
                cand = _interpolate(inner, v, k)
                if cand and max(key[v] for key in cand) <= deg_limit:
                    cand = _primitive_int(cand)
                    if (int_exact_div(f, cand) is not None
                            and int_exact_div(g, cand) is not None):
                        return cand
        k = 8 * ((k * 3) // 16 + 1) + 8
    return None


def _uses(t, v):
    return any(key[v] for key in t)


# -- subresultant PRS --------------------------------------------------------

def _split(p, v):
    """View ``p`` as a list of coefficients (MPoly in the other variables)."""
    coeffs = {}
    for key, c in p._t.items():
        rest = key[:v] + (0,) + key[v + 1:]
        coeffs.setdefault(key[v], {})[rest] = c
    n = max(coeffs)
    return [MPoly._raw(coeffs[i]) if i in coeffs else MPoly._raw({})
            for i in range(n + 1)]


def _join(cs, v):
    t = {}
    for e, c in enumerate(cs):
        for key, x in c._t.items():
            t[key[:v] + (e,) + key[v + 1:]] = x
    return MPoly._raw(t)


def _trim(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _exact(a, b):
    from .mpoly import exact_div
    return exact_div(a, b)


def _prem(f, g):
    """Pseudo-remainder of coefficient lists (degree f >= degree g)."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    delta = len(f) - len(g) + 1
    # Bring the scaling up front so each elimination step stays exact.
    while len(r) - 1 >= dg and r:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [c * lc for c in r]
        for i, gc in enumerate(g):
            if gc:
                r[i + shift] = r[i + shift] - lr * gc
        r.pop()
        _trim(r)
        delta -= 1
    if delta > 0:
        s = lc ** delta
        r = [c * s for c in r]
    return r


def _content_of(cs):
    from functools import reduce
    nonzero = [c for c in cs if c]
    return reduce(lambda x, y: poly_gcd(x, y, "prs"), nonzero)


def _prs_gcd(f, g):
    """Subresultant PRS over Z[other variables], main variable first present."""
    pf, pg = from_int_terms(f), from_int_terms(g)
    vs = _vars_of(f)
    v = vs[0]
    F, G = _split(pf, v), _split(pg, v)
    cF, cG = _content_of(F), _content_of(G)
    c = poly_gcd(cF, cG, "prs")
    F = [_exact(x, cF) for x in F]
    G = [_exact(x, cG) for x in G]
    if len(F) < len(G):
        F, G = G, F
    h = ONE
    gl = ONE
    while True:
        delta = len(F) - len(G)
        R = _trim(_prem(F, G))
        if not R:
            break
        if len(R) == 1:
            G = R
            break
        divisor = gl * h ** delta
        F, G = G, [_exact(x, divisor) for x in R]
        gl = F[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = gl
        else:
            h = _exact(gl ** delta, h ** (delta - 1))
    if len(G) == 1:
        result = c
    else:
        cG = _content_of(G)
        result = c * _join([_exact(x, cG) for x in G], v)
    return _primitive_int(int_form(result)[0])
