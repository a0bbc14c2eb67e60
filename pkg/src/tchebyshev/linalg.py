"""Exact linear algebra over the rationals.

Small dense kernels only: row reduction with `fractions.Fraction`, plus a
modular rank used as a certificate of full rank.  Nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

# 2^31 - 1: products of two residues stay below 2^62, safe in int64.
_PRIME = 2_147_483_647


def rref(rows: Sequence[Sequence[int | Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank_exact(rows: Sequence[Sequence[int | Fraction]]) -> int:
    return len(rref(rows)[1])


def rank_mod_p(rows: Sequence[Sequence[int]], p: int = _PRIME) -> int:
    """Rank of an integer matrix over GF(p); never exceeds the rational rank."""
    a = np.array([[int(v) % p for v in row] for row in rows], dtype=np.int64)
    if a.size == 0:
        return 0
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - (col[:, None] * a[r][None, :]) % p) % p
        r += 1
        if r == nrows:
            break
    return r


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix.

    Full rank modulo a prime certifies full rational rank; only a deficient
    modular rank falls back to exact rational elimination.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    full = min(len(rows), len(rows[0]))
    if rank_mod_p(rows) == full:
        return full
    return rank_exact(rows)


def inverse(square: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    n = len(square)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(square)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]
