"""Quasisymmetric functions of types A and B in the monomial basis.

A QSym element maps compositions (tuples of positive integers) to integer
coefficients; the empty composition is the unit.  A BQSym element maps pairs
(p, alpha) to coefficients, standing for s^p M_alpha.
"""

from __future__ import annotations

import re
from collections import defaultdict
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Mapping

from .abpoly import AbPoly, ab_index, from_eb, to_eb
from .errors import NonPositiveDegree, PolyParseError, RankZeroInput
from .poset import Poset
from .transforms import Character, chain_map_first, chain_map_second, tcheb_U

Composition = tuple[int, ...]


class _Sparse:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict = defaultdict(int)
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, v in items:
                acc[self._check_key(k)] += v
        self._terms = {k: v for k, v in acc.items() if v}

    @staticmethod
    def _check_key(k):
        raise NotImplementedError

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key) -> int:
        return self._terms.get(key, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        if isinstance(k, int):
            return type(self)({key: k * v for key, v in self._terms.items()})
        return NotImplemented

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def _render(self, sort_key, fmt) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, key in enumerate(sorted(self._terms, key=sort_key)):
            v = self._terms[key]
            body = f"{abs(v)}*{fmt(key)}"
            if i == 0:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if v > 0 else '-'} {body}")
        return " ".join(parts)


def _comp(k) -> Composition:
    k = tuple(int(x) for x in k)
    if any(x < 1 for x in k):
        raise ValueError(f"composition parts must be positive: {k}")
    return k


def _fmt_comp(alpha: Composition) -> str:
    return "M[" + ",".join(map(str, alpha)) + "]"


def _comp_order(alpha: Composition):
    # weight, then length, then lexicographic: M[2] before M[1,1]
    return (sum(alpha), len(alpha), alpha)


class QSymElem(_Sparse):
    """Sparse integer combination of monomial quasisymmetric functions."""

    __slots__ = ()

    @staticmethod
    def _check_key(k):
        return _comp(k)

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def M(cls, *alpha: int, coeff: int = 1):
        return cls({tuple(alpha): coeff})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if type(other) is not QSymElem:
            return NotImplemented
        return qsym_product(self, other)

    def __str__(self):
        return self._render(_comp_order, _fmt_comp)

    def degree(self) -> int:
        return max((sum(k) for k in self._terms), default=-1)

    @classmethod
    def parse(cls, text: str) -> "QSymElem":
        out = cls()
        for coeff, p, alpha in _parse_terms(text):
            if p:
                raise PolyParseError(f"s is not allowed in a QSym element: {text!r}")
            out = out + cls({alpha: coeff})
        return out


class BQSymElem(_Sparse):
    """Sparse integer combination of s^p M_alpha."""

    __slots__ = ()

    @staticmethod
    def _check_key(k):
        p, alpha = k
        if int(p) < 0:
            raise ValueError("s-exponent must be non-negative")
        return int(p), _comp(alpha)

    @classmethod
    def one(cls):
        return cls({(0, ()): 1})

    @classmethod
    def from_qsym(cls, f: QSymElem, p: int = 0):
        return cls({(p, alpha): v for alpha, v in f.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if type(other) is not BQSymElem:
            return NotImplemented
        return bqsym_product(self, other)

    def __str__(self):
        def fmt(key):
            p, alpha = key
            return (f"s^{p}*" if p else "") + _fmt_comp(alpha)

        return self._render(lambda k: (k[0] + sum(k[1]), -k[0], _comp_order(k[1])), fmt)

    @classmethod
    def parse(cls, text: str) -> "BQSymElem":
        out = cls()
        for coeff, p, alpha in _parse_terms(text):
            out = out + cls({(p, alpha): coeff})
        return out


_TERM = re.compile(
    r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?"
    r"(?:s\^(\d+)\s*(?:\*\s*)?)?"
    r"(?:M\[\s*([\d,\s]*)\])?\s*"
)


def _parse_terms(text: str) -> list[tuple[int, int, Composition]]:
    src = text.strip()
    if src == "0":
        return []
    pos, out = 0, []
    while pos < len(src):
        m = _TERM.match(src, pos)
        if (not m or m.end() == pos or (out and not m.group(1))
                or (m.group(3) is None and m.group(4) is None)):
            raise PolyParseError(f"cannot parse {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        p = int(m.group(3)) if m.group(3) else 0
        body = (m.group(4) or "").strip()
        try:
            alpha = _comp(x for x in body.split(",")) if body else ()
        except ValueError as exc:
            raise PolyParseError(str(exc)) from None
        out.append((sign * coeff, p, alpha))
        pos = m.end()
    if not out:
        raise PolyParseError("empty expression")
    return out


# -- products and coproducts -------------------------------------------------------


@lru_cache(maxsize=None)
def quasi_shuffle(alpha: Composition, beta: Composition) -> tuple[tuple[Composition, int], ...]:
    """M_alpha M_beta as (composition, coefficient) pairs."""
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    acc: dict[Composition, int] = defaultdict(int)
    x, y = alpha[0], beta[0]
    for g, k in quasi_shuffle(alpha[1:], beta):
        acc[(x, *g)] += k
    for g, k in quasi_shuffle(alpha, beta[1:]):
        acc[(y, *g)] += k
    for g, k in quasi_shuffle(alpha[1:], beta[1:]):
        acc[(x + y, *g)] += k
    return tuple(acc.items())


def qsym_product(f: QSymElem, g: QSymElem) -> QSymElem:
    acc: dict[Composition, int] = defaultdict(int)
    for alpha, x in f.items():
        for beta, y in g.items():
            for gamma_, k in quasi_shuffle(alpha, beta):
                acc[gamma_] += x * y * k
    return QSymElem(acc)


def qsym_product_truncated(f: QSymElem, g: QSymElem, m: int | None = None) -> QSymElem:
    """The product computed as honest polynomials in t_1..t_m.

    Monomials of weight w are faithful in w variables; by default m is the
    total weight plus one.  The result is read back from the coefficients of
    the monomials t_1^g1 ... t_k^gk.
    """
    if m is None:
        m = max(f.degree(), 0) + max(g.degree(), 0) + 1

    def expand(h: QSymElem) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = defaultdict(int)
        for alpha, v in h.items():
            for pos in combinations(range(m), len(alpha)):
                exp = [0] * m
                for i, part in zip(pos, alpha):
                    exp[i] = part
                out[tuple(exp)] += v
        return out

    pf, pg = expand(f), expand(g)
    prod_: dict[tuple[int, ...], int] = defaultdict(int)
    for ea, va in pf.items():
        for eb_, vb in pg.items():
            prod_[tuple(x + y for x, y in zip(ea, eb_))] += va * vb
    out = {}
    for exp, v in prod_.items():
        nz = [x for x in exp if x]
        if list(exp[: len(nz)]) == nz and v:
            out[tuple(nz)] = v
    return QSymElem(out)


def qsym_coproduct(f: QSymElem) -> list[tuple[QSymElem, QSymElem]]:
    """Deconcatenation."""
    out = []
    for alpha, v in f.items():
        for i in range(len(alpha) + 1):
            out.append((QSymElem({alpha[:i]: v}), QSymElem({alpha[i:]: 1})))
    return out


def qsym_counit(f: QSymElem) -> int:
    return f.coeff(())


def bqsym_product(f: BQSymElem, g: BQSymElem) -> BQSymElem:
    acc: dict[tuple[int, Composition], int] = defaultdict(int)
    for (p, alpha), x in f.items():
        for (q, beta), y in g.items():
            for gamma_, k in quasi_shuffle(alpha, beta):
                acc[(p + q, gamma_)] += x * y * k
    return BQSymElem(acc)


def bqsym_coproduct(f: BQSymElem) -> list[tuple[BQSymElem, QSymElem]]:
    """Deconcatenate the composition; s^p stays in the left factor."""
    out = []
    for (p, alpha), v in f.items():
        for i in range(len(alpha) + 1):
            out.append((BQSymElem({(p, alpha[:i]): v}), QSymElem({alpha[i:]: 1})))
    return out


def bqsym_counit(f: BQSymElem) -> int:
    return f.coeff((0, ()))


def tensor_normal(expr: Iterable[tuple]) -> dict[tuple, int]:
    """Normal form of a tensor of sparse elements: key tuple -> coefficient."""
    acc: dict[tuple, int] = defaultdict(int)
    for factors in expr:
        for combo in product(*(list(f.items()) for f in factors)):
            coeff = 1
            for _, v in combo:
                coeff *= v
            acc[tuple(k for k, _ in combo)] += coeff
    return {k: v for k, v in acc.items() if v}


# -- the isomorphisms gamma and gamma_B -------------------------------------------------


def _runs(ebword: str) -> list[int]:
    """Lengths of the e-runs separated by b's."""
    return [len(r) for r in ebword.split("b")]


def gamma(u: AbPoly) -> QSymElem:
    """(a-b)^(p1-1) b (a-b)^(p2-1) ... b (a-b)^(pk-1) -> M_(p1,...,pk)."""
    acc: dict[Composition, int] = defaultdict(int)
    for w, v in to_eb(u).items():
        acc[tuple(q + 1 for q in _runs(w))] += v
    return QSymElem(acc)


def gamma_inv(f: QSymElem) -> AbPoly:
    acc: dict[str, int] = {}
    for alpha, v in f.items():
        if not alpha:
            raise NonPositiveDegree("the unit of QSym has no preimage under gamma")
        acc["b".join("e" * (p - 1) for p in alpha)] = v
    return from_eb(acc)


def gamma_B(u: AbPoly) -> BQSymElem:
    """(a-b)^p b (a-b)^(p1-1) ... b (a-b)^(pk-1) -> s^p M_(p1,...,pk)."""
    acc: dict[tuple[int, Composition], int] = defaultdict(int)
    for w, v in to_eb(u).items():
        runs = _runs(w)
        acc[(runs[0], tuple(q + 1 for q in runs[1:]))] += v
    return BQSymElem(acc)


def gamma_B_inv(f: BQSymElem) -> AbPoly:
    acc: dict[str, int] = {}
    for (p, alpha), v in f.items():
        acc["e" * p + "".join("b" + "e" * (q - 1) for q in alpha)] = v
    return from_eb(acc)


# -- poset invariants -------------------------------------------------------------------


def F(P: Poset) -> QSymElem:
    """The quasisymmetric function of P; F of the one-element poset is 1."""
    if P.rho == 0:
        return QSymElem.one()
    return gamma(ab_index(P))


def F_by_chains(P: Poset) -> QSymElem:
    """F(P) read off the multichain limit: each chain contributes M of its rank jumps."""
    acc: dict[Composition, int] = defaultdict(int)
    if P.rho == 0:
        return QSymElem.one()
    for ch in P.chains():
        ranks = [P.rank[x] for x in ch]
        acc[tuple(y - x for x, y in zip(ranks, ranks[1:]))] += 1
    return QSymElem(acc)


def F_B(P: Poset) -> BQSymElem:
    if P.rho < 1:
        raise RankZeroInput("F_B needs a poset of rank >= 1")
    return gamma_B(ab_index(P))


def F_B_by_intervals(P: Poset) -> BQSymElem:
    """sum over 0 < x <= 1 of s^(rho(x) - 1) F([x, 1])."""
    if P.rho < 1:
        raise RankZeroInput("F_B needs a poset of rank >= 1")
    out = BQSymElem()
    for x in P.elements:
        if x != P.bottom:
            out = out + BQSymElem.from_qsym(F(P.interval(x, P.top)), P.rank[x] - 1)
    return out


# -- mixing operators -------------------------------------------------------------------


def mix_M(u: AbPoly, v: AbPoly) -> AbPoly:
    """Psi(P x Q) = M(Psi(P), Psi(Q))."""
    return gamma_inv(gamma(u) * gamma(v))


def mix_N(u: AbPoly, v: AbPoly) -> AbPoly:
    """Psi(P diamond Q) = N(Psi(P), Psi(Q))."""
    return gamma_B_inv(gamma_B(u) * gamma_B(v))


def mix_N_star(u: AbPoly, v: AbPoly) -> AbPoly:
    return mix_N(u.star(), v.star()).star()


# -- transforms moved to QSym and BQSym ------------------------------------------------------


def _conjugate(f: QSymElem, op) -> QSymElem:
    unit = f.coeff(())
    rest = QSymElem({k: v for k, v in f.items() if k})
    out = gamma(op(gamma_inv(rest))) if rest else QSymElem()
    return out + QSymElem({(): unit})


def U_qsym(f: QSymElem) -> QSymElem:
    """gamma U gamma^-1, fixing the unit."""
    return _conjugate(f, tcheb_U)


def gtilde_qsym(G: Character, f: QSymElem) -> QSymElem:
    """gamma gtilde gamma^-1, fixing the unit."""
    return _conjugate(f, lambda u: chain_map_second(G, u))


def g_bqsym(G: Character, f: BQSymElem) -> BQSymElem:
    """gamma_B g gamma_B^-1."""
    return gamma_B(chain_map_first(G, gamma_B_inv(f)))
