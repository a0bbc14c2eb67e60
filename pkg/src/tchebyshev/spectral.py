"""Eigenvectors of the second-kind transform U on each homogeneous degree.

The word basis of degree n is ordered lexicographically with a < b.  An
eigenvector is built from 1 by a sequence of the operators Pyr(u) = M(u, 1)
and L(u) = (a - b) u; the sequence is stored outermost first, so the
construction ("Pyr", "L") is Pyr(L(1)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from math import comb

import numpy as np

from . import linalg
from .abpoly import AbPoly, all_ab_words, e
from .qsym import mix_M
from .transforms import tcheb_U


def pyr(u: AbPoly) -> AbPoly:
    return mix_M(u, AbPoly.one())


def ell(u: AbPoly) -> AbPoly:
    return e * u


@dataclass(frozen=True)
class EigenVector:
    vector: AbPoly
    eigenvalue: int
    construction: tuple[str, ...]


def eigenbasis(n: int) -> list[EigenVector]:
    """All 2^n vectors w(1) for words w over {Pyr, L} of length n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cache: dict[tuple[str, ...], AbPoly] = {(): AbPoly.one()}
    for k in range(1, n + 1):
        for ops in product(("Pyr", "L"), repeat=k):
            inner = cache[ops[1:]]
            cache[ops] = pyr(inner) if ops[0] == "Pyr" else ell(inner)
    return [
        EigenVector(cache[ops], 2 ** (ops.count("Pyr") + 1), ops)
        for ops in product(("Pyr", "L"), repeat=n)
    ]


def u_matrix(n: int) -> list[list[int]]:
    """Column j holds the coefficients of U(word_j) in the word basis."""
    words = all_ab_words(n)
    cols = [tcheb_U(AbPoly.word(w)) for w in words]
    return [[col.coeff(r) for col in cols] for r in words]


def _vector(u: AbPoly, words: list[str]) -> list[int]:
    return [u.coeff(w) for w in words]


def _matvec_all(mat: list[list[int]], vecs: list[list[int]]) -> list[list[int]]:
    bound = max((abs(x) for row in mat for x in row), default=0)
    vbound = max((abs(x) for v in vecs for x in v), default=0)
    dtype = np.int64 if bound * vbound * max(len(mat), 1) < 2**62 else object
    A = np.array(mat, dtype=dtype)
    V = np.array(vecs, dtype=dtype).T
    return [[int(x) for x in col] for col in (A @ V).T]


@dataclass
class SpectrumReport:
    degree: int
    ok: bool
    multiplicities: dict[int, int]
    expected_multiplicities: dict[int, int]
    rank: int
    trace: int
    expected_trace: int
    direct_sum_rank: int
    failures: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "ok": self.ok,
            "multiplicities": {str(k): v for k, v in sorted(self.multiplicities.items())},
            "rank": self.rank,
            "trace": self.trace,
            "direct_sum_rank": self.direct_sum_rank,
            "failures": self.failures,
        }


def verify_spectrum(n: int, max_degree: int = 8) -> SpectrumReport:
    """Check U v = lambda v for the whole eigenbasis of degree n, plus
    independence, the binomial multiplicities, the trace, and that Pyr and L
    applied to the degree-n words span degree n + 1."""
    if n < 0 or n > max_degree:
        raise ValueError(f"degree must lie in 0..{max_degree}")
    words = all_ab_words(n)
    basis = eigenbasis(n)
    mat = u_matrix(n)
    failures = []

    vecs = [_vector(v.vector, words) for v in basis]
    images = _matvec_all(mat, vecs)
    for ev, vec, img in zip(basis, vecs, images):
        if img != [ev.eigenvalue * x for x in vec]:
            failures.append(f"{'.'.join(ev.construction) or '1'} is not an eigenvector")

    rank = linalg.rank(vecs)
    if rank != 2**n:
        failures.append(f"eigenbasis rank {rank} != {2**n}")

    mult = dict(Counter(ev.eigenvalue for ev in basis))
    expected = {2 ** (i + 1): comb(n, i) for i in range(n + 1)}
    if mult != expected:
        failures.append(f"multiplicities {mult} != {expected}")

    trace = sum(mat[i][i] for i in range(len(mat)))
    if trace != 2 * 3**n:
        failures.append(f"trace {trace} != {2 * 3**n}")

    up_words = all_ab_words(n + 1)
    lifted = [_vector(op(AbPoly.word(w)), up_words) for w in words for op in (pyr, ell)]
    ds_rank = linalg.rank(lifted)
    if ds_rank != 2 ** (n + 1):
        failures.append(f"Pyr + L span rank {ds_rank} != {2 ** (n + 1)}")

    return SpectrumReport(n, not failures, mult, expected, rank, trace, 2 * 3**n, ds_rank, failures)
