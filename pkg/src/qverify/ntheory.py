"""Small integer helpers: primality, divisors, Moebius, totient."""

from math import isqrt


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n):
    """Prime factorisation as ``{p: e}`` by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n):
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n):
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n):
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def primes_in(lo, hi):
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]
