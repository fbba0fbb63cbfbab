"""q-integers, q-shifted factorials, Gaussian binomials, Euler numbers and the
classical ratios the sums are built from."""

from dataclasses import dataclass
from math import comb

from gmpy2 import mpq, mpz

from .polyring import ONE, ZERO, MPoly


class OddIndex(ValueError):
    """Euler numbers are only tabulated at even indices."""


@dataclass(frozen=True)
class SignedMonomial:
    """``sign * q**e_q * a**e_a * b**e_b`` with ``sign`` in {+1, -1}."""
    sign: int = 1
    e_q: int = 0
    e_a: int = 0
    e_b: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if min(self.e_q, self.e_a, self.e_b) < 0:
            raise ValueError("exponents must be nonnegative")

    def as_poly(self):
        return MPoly.monomial(self.e_q, self.e_a, self.e_b, self.sign)


def q_integer(n):
    """[n] = 1 + q + ... + q^(n-1); [0] = 0."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    one = mpq(1)
    return MPoly._raw({(i, 0, 0): one for i in range(n)})


def q_pochhammer(base, step_exponent, count):
    """prod_{j<count} (1 - base * q**(j*step_exponent)) for a signed monomial base."""
    if count < 0:
        raise ValueError("q_pochhammer needs count >= 0")
    if step_exponent < 1:
        raise ValueError("step_exponent must be positive")
    result = ONE
    for j in range(count):
        factor = ONE - MPoly.monomial(base.e_q + j * step_exponent, base.e_a,
                                      base.e_b, base.sign)
        result = result * factor
    return result


def q_binomial(M, N, step_exponent=1):
    """Gaussian binomial [M, N] in base q**step_exponent; zero outside 0 <= N <= M."""
    if not 0 <= N <= M:
        return ZERO
    s = step_exponent
    N = min(N, M - N)
    # [M-N+j, j] for j = 0..N, each step multiplies by (1 - q^{s(M-N+j)})
    # and divides exactly by (1 - q^{sj}); intermediates stay polynomial.
    coeffs = [1]
    for j in range(1, N + 1):
        up = s * (M - N + j)
        new = coeffs + [0] * up
        for i, c in enumerate(coeffs):
            new[i + up] -= c
        coeffs = _divide_one_minus(new, s * j)
    return MPoly._raw({(i, 0, 0): mpq(c) for i, c in enumerate(coeffs) if c})


def _divide_one_minus(p, d):
    """Exact quotient of a dense list by ``1 - q^d``."""
    qdeg = len(p) - 1 - d
    quot = [0] * (qdeg + 1)
    for i in range(qdeg + 1):
        quot[i] = p[i] + (quot[i - d] if i >= d else 0)
    return quot


_euler = [mpz(1)]  # E_0, E_2, E_4, ... ; extended monotonically


def euler_number(m):
    """Euler (secant) number E_m: E_0 = 1, sum_j C(m, 2j) E_{2j} = 0 for m >= 2."""
    if m < 0:
        raise ValueError("Euler numbers need m >= 0")
    if m % 2:
        raise OddIndex(f"E_{m}: odd index")
    idx = m // 2
    table = _euler
    while len(table) <= idx:
        n = 2 * len(table)
        value = -sum(comb(n, 2 * j) * table[j] for j in range(len(table)))
        if len(table) == n // 2:
            table.append(mpz(value))
    return int(table[idx])


def rising_half_cubed_ratio(k):
    """(1/2)_k / k! as an exact rational."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    r = mpq(1)
    for j in range(1, k + 1):
        r *= mpq(2 * j - 1, 2 * j)
    return r


def central_binomial(k):
    if k < 0:
        raise ValueError("k must be nonnegative")
    return comb(2 * k, k)
