"""Exact dense linear algebra over prime fields, on int64 arrays.

The modulus must stay below 2**31 so that products of two reduced entries fit
in int64 without overflow.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

MAX_MODULUS = 1 << 31


def _check_modulus(p: int) -> None:
    if not 2 <= p < MAX_MODULUS:
        raise DomainError(f"modulus {p} out of supported range")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def rank_mod(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p, by Gaussian elimination."""
    _check_modulus(p)
    m = np.array(a, dtype=np.int64, copy=True) % p
    rows, cols = m.shape if m.ndim == 2 else (0, 0)
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        nz = np.nonzero(m[r + 1 :, c])[0]
        if nz.size:
            m[r + 1 + nz] = (m[r + 1 + nz] - m[r + 1 + nz, c : c + 1] * m[r]) % p
        r += 1
        if r == rows:
            break
    return r


def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form over F_p and the pivot column indices."""
    _check_modulus(p)
    m = np.array(a, dtype=np.int64, copy=True) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = [i for i in range(rows) if i != r and m[i, c]]
        for i in others:
            m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[: len(pivots)], tuple(pivots)


def in_row_space(vec: np.ndarray, rref: np.ndarray, pivots: tuple[int, ...], p: int) -> bool:
    """Membership of a vector in the row space given by an RREF basis."""
    v = np.array(vec, dtype=np.int64, copy=True) % p
    for row, c in zip(rref, pivots):
        if v[c]:
            v = (v - v[c] * row) % p
    return not v.any()
