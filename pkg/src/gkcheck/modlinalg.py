"""Dense exact linear algebra over small prime fields.

Matrices are numpy int64 arrays with entries reduced mod p; p is always
small enough (< 2^16) that products never overflow int64.
"""

from __future__ import annotations

import numpy as np


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def smallest_prime_greater_than(bound: int) -> int:
    p = bound + 1
    while not is_prime(p):
        p += 1
    return p


def row_reduce(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of ``mat`` over GF(p).

    Returns the reduced matrix and the list of pivot columns; pivoting is
    first-nonzero, so the result is deterministic.
    """
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * pow(int(m[r, c]), p - 2, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(mat: np.ndarray, p: int) -> int:
    return len(row_reduce(mat, p)[1])


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right kernel {x : mat @ x = 0 mod p}, one vector per row."""
    reduced, pivots = row_reduce(mat, p)
    cols = reduced.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(pivots):
            basis[k, c] = (-reduced[r, f]) % p
    return basis
