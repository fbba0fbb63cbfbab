"""Kronecker packing of integer coefficient vectors into GMP integers.

A dense vector ``c[0..L)`` is identified with the integer ``sum c[i] * 2**(k*i)``.
Products and exact quotients of polynomials then reduce to one big-integer
operation each, which GMP does far faster than any Python-level loop.
"""

from gmpy2 import mpz

_SMALL = 24


def bits(x):
    """Bit length of ``abs(x)``."""
    return int(mpz(x).bit_length())


def pack(items, length, nbytes):
    """Pack ``{index: int}`` with ``abs(c) < 2**(8*nbytes-1)`` into an mpz."""
    pos = bytearray(length * nbytes)
    neg = None
    for i, c in items:
        off = i * nbytes
        if c > 0:
            pos[off:off + nbytes] = int(c).to_bytes(nbytes, "little")
        elif c < 0:
            if neg is None:
                neg = bytearray(length * nbytes)
            neg[off:off + nbytes] = int(-c).to_bytes(nbytes, "little")
    value = mpz(int.from_bytes(pos, "little"))
    if neg is not None:
        value -= mpz(int.from_bytes(neg, "little"))
    return value


def unpack(value, nbytes):
    """Inverse of :func:`pack` using balanced digits; returns ``{index: int}``."""
    if value == 0:
        return {}
    k = 8 * nbytes
    length = (int(abs(value).bit_length()) + k) // k + 1
    half_chunk = b"\x00" * (nbytes - 1) + b"\x80"
    offset = int.from_bytes(half_chunk * length, "little")
    raw = int(value + offset).to_bytes(length * nbytes, "little")
    half = 1 << (k - 1)
    out = {}
    fb = int.from_bytes
    view = memoryview(raw)
    for i in range(length):
        d = fb(view[i * nbytes:(i + 1) * nbytes], "little") - half
        if d:
            out[i] = d
    return out


def eval_pow2(dense, k):
    """``sum dense[i] * 2**(k*i)`` for coefficients of arbitrary size."""
    n = len(dense)
    if n <= _SMALL:
        acc = mpz(0)
        for c in reversed(dense):
            acc = (acc << k) + c
        return acc
    mid = n // 2
    return eval_pow2(dense[:mid], k) + (eval_pow2(dense[mid:], k) << (k * mid))


def nbytes_for(nbits):
    """Bytes per digit so that signed values of ``nbits`` magnitude bits fit."""
    return nbits // 8 + 1
