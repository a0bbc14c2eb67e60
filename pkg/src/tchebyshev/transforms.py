"""Tchebyshev transforms, their companion operators, characters and chain maps.

Every transform here has the shape

    sum over k >= 1 and over Delta^k(u) of  w1(u_(1)) b w2(u_(2)) b ... b wk(u_(k))

where each factor is a scalar weight times (a - b)^(deg).  `split_sum`
evaluates that shape on a single word: cutting a word at a set of positions
deletes those letters, so the output word has b at the cuts and e = a - b
everywhere else.  Results are collected in the eb-basis and converted back to
the ab-basis once.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .abpoly import (
    AbPoly,
    CdPoly,
    _C_word,
    a,
    b,
    c,
    coproduct,
    d,
    e,
    from_eb,
    kappa,
    map_H_star,
    nu,
    to_cd,
)
from .errors import BadParameter

WordWeight = Callable[[str], int]


def _A_word(w: str) -> int:
    return 0 if "b" in w else 1


def _all_b(w: str) -> int:
    return 0 if "a" in w else 1


def _zero(w: str) -> int:
    return 0


@lru_cache(maxsize=200_000)
def _split_word(w: str, first: WordWeight, mid: WordWeight, last: WordWeight,
                single: WordWeight) -> tuple[tuple[str, int], ...]:
    n = len(w)

    @lru_cache(maxsize=None)
    def tail(start: int, is_first: bool) -> dict[str, int]:
        out: dict[str, int] = defaultdict(int)
        closing = (single if is_first else last)(w[start:])
        if closing:
            out["e" * (n - start)] += closing
        opening = first if is_first else mid
        for j in range(start, n):
            k = opening(w[start:j])
            if not k:
                continue
            prefix = "e" * (j - start) + "b"
            for s, cs in tail(j + 1, False).items():
                out[prefix + s] += k * cs
        return {s: v for s, v in out.items() if v}

    return tuple(tail(0, True).items())


def split_sum(u: AbPoly, first: WordWeight, mid: WordWeight, last: WordWeight,
              single: WordWeight) -> AbPoly:
    """Sum over all cuttings of each word of u.

    A cutting into k pieces p1 .. pk is weighted ``single(p1)`` when k = 1
    and ``first(p1) * mid(p2) * ... * mid(p_{k-1}) * last(pk)`` otherwise.
    """
    acc: dict[str, int] = defaultdict(int)
    for w, cw in u.items():
        for s, cs in _split_word(w, first, mid, last, single):
            acc[s] += cw * cs
    return from_eb(acc)


# -- first kind --------------------------------------------------------------


def tcheb_T(u: AbPoly) -> AbPoly:
    """T(u) = sum nu(u_(1)) b nu(u_(2)) b ... b kappa(u_(k))."""
    return split_sum(u, _C_word, _C_word, _A_word, _A_word)


@lru_cache(maxsize=None)
def _T_functional_word(w: str) -> AbPoly:
    u = AbPoly.word(w)
    out = kappa(u)
    for left, right in coproduct(u):
        out = out + nu(left) * b * tcheb_T_functional(right)
    return out


def tcheb_T_functional(u: AbPoly) -> AbPoly:
    """T through the identity T(u) = kappa(u) + sum nu(u_(1)) b T(u_(2))."""
    out = AbPoly.zero()
    for w, cw in u.items():
        out = out + _T_functional_word(w) * cw
    return out


def sigma(u: AbPoly) -> AbPoly:
    """sigma(u) = sum kappa(u_(1)) b T(u_(2))."""
    return split_sum(u, _A_word, _C_word, _A_word, _zero)


def pi(u: AbPoly) -> AbPoly:
    return 2 * b * tcheb_T(u) + 2 * e * sigma(u)


@lru_cache(maxsize=None)
def _T_sigma_word(w: str) -> tuple[AbPoly, AbPoly]:
    if not w:
        return AbPoly.one(), AbPoly.zero()
    t, s = _T_sigma_word(w[1:])
    if w[0] == "a":
        return c * t + e * s, b * t + e * s
    return 2 * b * t + e * s, b * t


def tcheb_T_recursive(u: AbPoly) -> AbPoly:
    """T by the joint recursion with sigma on the first letter."""
    return _linear(u, lambda w: _T_sigma_word(w)[0])


def sigma_recursive(u: AbPoly) -> AbPoly:
    return _linear(u, lambda w: _T_sigma_word(w)[1])


def _linear(u, on_word):
    out = None
    for w, cw in u.items():
        term = on_word(w) * cw
        out = term if out is None else out + term
    return type(u).zero() if out is None else out


# -- the cd-side recursion ---------------------------------------------------------

_c = CdPoly.word("c")
_d = CdPoly.word("d")


@lru_cache(maxsize=None)
def _T_pi_cd_word(v: str) -> tuple[CdPoly, CdPoly]:
    # values of T(v a) and pi(v a) for a cd-word v
    if not v:
        return _c, 2 * _d
    t, p = _T_pi_cd_word(v[1:])
    if v[0] == "c":
        return _c * t + p, 2 * _d * t + _c * p
    return 2 * _d * t + _c * p, 2 * _c * _d * t + 2 * _d * p


def tcheb_cd(v: CdPoly) -> CdPoly:
    """T(v a) for a cd-polynomial v, computed entirely in the cd-basis."""
    return _linear(v, lambda w: _T_pi_cd_word(w)[0])


def pi_cd(v: CdPoly) -> CdPoly:
    """pi(v a) for a cd-polynomial v."""
    return _linear(v, lambda w: _T_pi_cd_word(w)[1])


# -- second kind --------------------------------------------------------------------


def tcheb_U(u: AbPoly) -> AbPoly:
    """U(u) = sum nu(u_(1)) b nu(u_(2)) b ... b nu(u_(k))."""
    return split_sum(u, _C_word, _C_word, _C_word, _C_word)


def tcheb_U_via_T(u: AbPoly) -> AbPoly:
    """U(u) = H*(T(u a))."""
    return map_H_star(tcheb_T(u * a))


# -- characters ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Character:
    """A linear functional on Z<a,b>, given by its values on words."""

    name: str
    on_word: WordWeight = field(repr=False)

    def __call__(self, u: AbPoly) -> int:
        return sum(cw * self.on_word(w) for w, cw in u.items())

    def hat(self, u: AbPoly) -> AbPoly:
        """G(u) (a - b)^deg, degree-wise."""
        acc: dict[str, int] = defaultdict(int)
        for w, cw in u.items():
            acc["e" * len(w)] += cw * self.on_word(w)
        return from_eb(acc)


def _memo(fn: WordWeight) -> WordWeight:
    return lru_cache(maxsize=None)(fn)


_CONST_ONE = Character("const-one", _A_word)
_CARDINALITY = Character("cardinality", _C_word)


def char_const_one() -> Character:
    """The character with value 1 on every ab-index; on words it is A."""
    return _CONST_ONE


def char_cardinality() -> Character:
    """G(Psi(P)) = |P|, i.e. the map C."""
    return _CARDINALITY


def _signed_word(t: int) -> WordWeight:
    # G(u) = A(u) + t^(deg u + 1) B(u) + sum t^(deg u_(1) + 1) B(u_(1)) A(u_(2)),
    # with B(u) = eval(u, 0, 1).  On Psi(P) the middle sum runs over 0 < x < 1,
    # B(Psi([0,x])) = (-1)^rho(x) mu(0,x), and A of any ab-index is 1.
    def value(w: str) -> int:
        n = len(w)
        total = _A_word(w) + t ** (n + 1) * _all_b(w)
        for i in range(n):
            if _all_b(w[:i]) and _A_word(w[i + 1:]):
                total += t ** (i + 1)
        return total

    return _memo(value)


_ZASLAVSKY = Character("zaslavsky", _signed_word(1))


def char_zaslavsky() -> Character:
    """G(Psi(P)) = sum over x of (-1)^rho(x) mu(0, x)."""
    return _ZASLAVSKY


@lru_cache(maxsize=None)
def char_r_signed(r: int) -> Character:
    """G(Psi(P)) = sum over x of (1 - r)^rho(x) mu(0, x), for an integer r."""
    if not isinstance(r, int):
        raise BadParameter("r must be an integer")
    return Character(f"{r}-signed", _signed_word(r - 1))


def builtin_characters() -> list[Character]:
    return [char_const_one(), char_cardinality(), char_zaslavsky(), char_r_signed(3)]


# -- chain maps ------------------------------------------------------------------------


def chain_map_first(G: Character, u: AbPoly) -> AbPoly:
    """g(u) = sum kappa(u_(1)) b ghat(u_(2)) b ... b ghat(u_(k))."""
    return split_sum(u, _A_word, G.on_word, G.on_word, _A_word)


def chain_map_second(G: Character, u: AbPoly) -> AbPoly:
    """gtilde(u) = sum ghat(u_(1)) b ghat(u_(2)) b ... b ghat(u_(k))."""
    g = G.on_word
    return split_sum(u, g, g, g, g)


def g_hat(G: Character, u: AbPoly) -> AbPoly:
    return G.hat(u)


def eta(u: AbPoly) -> AbPoly:
    """eta(u) = Z(u) (a - b)^deg u with Z the Zaslavsky character."""
    return _ZASLAVSKY.hat(u)


# -- Tchebyshev polynomials ----------------------------------------------------------------


def _cd_to_x(v: CdPoly) -> list[Fraction]:
    """Commutative substitution c -> x, d -> (x^2 - 1)/2; coefficient list, low first."""

    def mul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, pi_ in enumerate(p):
            for j, qj in enumerate(q):
                out[i + j] += pi_ * qj
        return out

    total = [Fraction(0)]
    for w, cw in v.items():
        term = [Fraction(cw)]
        for ch in w:
            term = mul(term, [Fraction(0), Fraction(1)] if ch == "c" else
                       [Fraction(-1, 2), Fraction(0), Fraction(1, 2)])
        if len(term) > len(total):
            total += [Fraction(0)] * (len(term) - len(total))
        for i, t in enumerate(term):
            total[i] += t
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total


def _as_int_poly(p: list[Fraction]) -> list[int]:
    if any(x.denominator != 1 for x in p):
        raise ValueError(f"non-integral polynomial {p}")
    return [int(x) for x in p]


def classical_chebyshev(n: int) -> tuple[list[int], list[int]]:
    """(T_n, U_{n-1}) from T_{k+1} = 2x T_k - T_{k-1} and the same for U."""
    if n < 1:
        raise BadParameter("n must be >= 1")

    def step(p, q):
        nxt = [0] + [2 * x for x in p]
        for i, x in enumerate(q):
            nxt[i] -= x
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt.pop()
        return nxt

    t_prev, t_cur = [1], [0, 1]
    u_prev, u_cur = [1], [0, 2]
    for _ in range(n - 1):
        t_prev, t_cur = t_cur, step(t_cur, t_prev)
        u_prev, u_cur = u_cur, step(u_cur, u_prev)
    return t_cur, u_prev


def tcheb_polynomial_check(n: int) -> tuple[list[int], list[int]]:
    """The pair (T_n, U_{n-1}) obtained from the transforms, as coefficient
    lists with the constant term first.

    T_n comes from the cd-index of T(c^(n-1) a) and U_{n-1} from half the
    cd-index of U(c^(n-1)), both after c -> x, d -> (x^2 - 1)/2.
    """
    if n < 1:
        raise BadParameter("n must be >= 1")
    cpow = c ** (n - 1)
    t_n = _cd_to_x(to_cd(tcheb_T(cpow * a)))
    u_n = [x / 2 for x in _cd_to_x(to_cd(tcheb_U(cpow)))]
    return _as_int_poly(t_n), _as_int_poly(u_n)


__all__ = [
    "Character",
    "builtin_characters",
    "chain_map_first",
    "chain_map_second",
    "char_cardinality",
    "char_const_one",
    "char_r_signed",
    "char_zaslavsky",
    "classical_chebyshev",
    "eta",
    "g_hat",
    "pi",
    "pi_cd",
    "sigma",
    "sigma_recursive",
    "split_sum",
    "tcheb_T",
    "tcheb_T_functional",
    "tcheb_T_recursive",
    "tcheb_U",
    "tcheb_U_via_T",
    "tcheb_cd",
    "tcheb_polynomial_check",
]
