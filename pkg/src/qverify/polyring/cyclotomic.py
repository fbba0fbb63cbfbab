"""Cyclotomic polynomials Phi_n(q)."""

from gmpy2 import mpq

from ..ntheory import divisors, mobius
from .mpoly import MPoly

# Plain dict: reads are lock-free and a racing insert stores an identical value.
_cache = {}


def cyclotomic(n):
    """Phi_n(q), the n-th cyclotomic polynomial, as a polynomial in q."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = _cache.get(n)
    if p is None:
        p = _cache.setdefault(n, _build(n))
    return p


def _build(n):
    ups = [d for d in divisors(n) if mobius(n // d) == 1]
    downs = [d for d in divisors(n) if mobius(n // d) == -1]
    coeffs = [1]
    for d in ups:
        # multiply by q^d - 1
        new = [0] * (len(coeffs) + d)
        for i, c in enumerate(coeffs):
            new[i + d] += c
            new[i] -= c
        coeffs = new
    for d in downs:
        coeffs = _divide_by_binomial(coeffs, d)
    return MPoly._raw({(i, 0, 0): mpq(c) for i, c in enumerate(coeffs) if c})


def _divide_by_binomial(p, d):
    """Exact quotient of ``p`` by ``q^d - 1`` on dense coefficient lists."""
    top = len(p) - 1
    qdeg = top - d
    quot = [0] * (qdeg + 1)
    for j in range(qdeg, -1, -1):
        quot[j] = p[j + d] + (quot[j + d] if j + d <= qdeg else 0)
    for j in range(d):
        if p[j] != -(quot[j] if j <= qdeg else 0):
            raise ArithmeticError(f"q^{d} - 1 does not divide the product")
    return quot
