"""Sparse integer polynomials in the free algebras Z<a,b> and Z<c,d>.

Words are plain strings over the alphabet, the empty string being the unit.
Coefficients are Python integers, so there is no overflow to detect.

Many maps in this package are naturally written in the letters e = a - b and
b.  `to_eb` and `from_eb` convert between the ab-basis and that basis; the eb
dictionaries they exchange are internal scratch values, never `AbPoly`.
"""

from __future__ import annotations

import re
import random
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence

from . import linalg
from .errors import NotCdExpressible, PolyParseError, RankZeroInput

if TYPE_CHECKING:
    from .poset import Poset

Tensor = list[tuple["NCPoly", ...]]


class NCPoly:
    """Sparse noncommutative polynomial over a fixed alphabet."""

    alphabet = ""
    weights: Mapping[str, int] = {}
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[str, int] | Iterable[tuple[str, int]] | None = None):
        acc: dict[str, int] = defaultdict(int)
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be integers, got {c!r}")
                acc[w] += c
        for w in acc:
            if any(ch not in self.alphabet for ch in w):
                raise ValueError(f"word {w!r} is not over {{{','.join(self.alphabet)}}}")
        self._terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[str, int]):
        # trusted fast path: terms already validated and zero-free
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({"": 1})

    @classmethod
    def word(cls, w: str, coeff: int = 1):
        return cls({w: coeff})

    # -- container protocol --------------------------------------------------

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coeff(self, w: str) -> int:
        return self._terms.get(w, 0)

    def __iter__(self) -> Iterator[str]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({"": other} if other else {})
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)._raw({"": other} if other else {})
        if type(other) is type(self):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self).zero()
            return type(self)._raw({w: c * other for w, c in self._terms.items()})
        if type(other) is not type(self):
            return NotImplemented
        out: dict[str, int] = defaultdict(int)
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                out[u + v] += cu * cv
        return type(self)._raw({w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = type(self).one()
        for _ in range(n):
            out = out * self
        return out

    # -- degrees ---------------------------------------------------------------

    @classmethod
    def word_degree(cls, w: str) -> int:
        return sum(cls.weights[ch] for ch in w)

    def degrees(self) -> set[int]:
        return {self.word_degree(w) for w in self._terms}

    def degree(self) -> int:
        """Largest degree of a term; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_components(self) -> dict[int, "NCPoly"]:
        parts: dict[int, dict[str, int]] = defaultdict(dict)
        for w, c in self._terms.items():
            parts[self.word_degree(w)][w] = c
        return {d: type(self)._raw(t) for d, t in sorted(parts.items())}

    def star(self):
        """Reverse every word."""
        return type(self)._raw({w[::-1]: c for w, c in self._terms.items()})

    # -- text form ---------------------------------------------------------------

    def sort_key(self, w: str):
        return (self.word_degree(w), w)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, w in enumerate(sorted(self._terms, key=self.sort_key)):
            c = self._terms[w]
            body = f"{abs(c)}*{w or '1'}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    @classmethod
    def parse(cls, text: str):
        """Parse ``±k*word`` terms; ``1`` stands for the empty word."""
        src = text.strip()
        if src == "0":
            return cls.zero()
        letters = re.escape(cls.alphabet)
        term = re.compile(rf"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?([{letters}]+|1)\s*")
        pos, terms, first = 0, [], True
        while pos < len(src):
            m = term.match(src, pos)
            if not m or m.end() == pos or (not first and not m.group(1)):
                raise PolyParseError(f"cannot parse {text!r} at offset {pos}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) is not None else 1
            w = "" if m.group(3) == "1" else m.group(3)
            terms.append((w, sign * coeff))
            pos, first = m.end(), False
        if first:
            raise PolyParseError("empty polynomial")
        return cls(terms)


class AbPoly(NCPoly):
    alphabet = "ab"
    weights = {"a": 1, "b": 1}
    __slots__ = ()


class CdPoly(NCPoly):
    alphabet = "cd"
    weights = {"c": 1, "d": 2}
    __slots__ = ()


a = AbPoly.word("a")
b = AbPoly.word("b")
e = a - b  # a - b, the letter written e in the eb-basis
c = a + b
d = AbPoly({"ab": 1, "ba": 1})


def multiply(u: AbPoly, v: AbPoly) -> AbPoly:
    return u * v


def star(u: NCPoly) -> NCPoly:
    return u.star()


def parse_poly(text: str) -> NCPoly:
    """Parse with whichever alphabet the text uses (ab wins when ambiguous)."""
    letters = set(re.sub(r"[^a-z]", "", text))
    if letters and letters <= set("cd"):
        return CdPoly.parse(text)
    return AbPoly.parse(text)


# -- the eb-basis --------------------------------------------------------------


def to_eb(u: AbPoly) -> dict[str, int]:
    """Rewrite in the letters e = a - b and b, i.e. substitute a = e + b."""
    cur = dict(u.items())
    for i in range(max((len(w) for w in cur), default=0)):
        nxt: dict[str, int] = defaultdict(int)
        for w, cw in cur.items():
            if i < len(w) and w[i] == "a":
                nxt[w[:i] + "e" + w[i + 1:]] += cw
                nxt[w[:i] + "b" + w[i + 1:]] += cw
            else:
                nxt[w] += cw
        cur = {w: cw for w, cw in nxt.items() if cw}
    return cur


def from_eb(terms: Mapping[str, int]) -> AbPoly:
    """Expand a combination of eb-words back into the ab-basis (e = a - b)."""
    cur = {w: cw for w, cw in terms.items() if cw}
    for i in range(max((len(w) for w in cur), default=0)):
        nxt: dict[str, int] = defaultdict(int)
        for w, cw in cur.items():
            if i < len(w) and w[i] == "e":
                nxt[w[:i] + "a" + w[i + 1:]] += cw
                nxt[w[:i] + "b" + w[i + 1:]] -= cw
            else:
                nxt[w] += cw
        cur = {w: cw for w, cw in nxt.items() if cw}
    return AbPoly._raw(cur)


def e_power(n: int) -> AbPoly:
    return from_eb({"e" * n: 1})


# -- coproduct -----------------------------------------------------------------


def coproduct(u: AbPoly) -> Tensor:
    """Delete-one-letter coproduct; Delta(1) is the empty tensor."""
    out = []
    for w, cw in u.items():
        for i in range(len(w)):
            out.append((AbPoly._raw({w[:i]: cw}), AbPoly._raw({w[i + 1:]: 1})))
    return out


def coproduct_k(u: AbPoly, k: int) -> Tensor:
    """Iterated coproduct into ``k`` tensor factors (k = 1 is the identity)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    for w, cw in u.items():
        for cuts in combinations(range(len(w)), k - 1):
            bounds = (-1, *cuts, len(w))
            pieces = [w[bounds[i] + 1:bounds[i + 1]] for i in range(k)]
            factors = [AbPoly._raw({pieces[0]: cw})]
            factors += [AbPoly._raw({p: 1}) for p in pieces[1:]]
            out.append(tuple(factors))
    return out


def tensor_terms(expr: Iterable[Sequence[NCPoly]]) -> dict[tuple[str, ...], int]:
    """Normal form of a tensor expression: word tuple -> coefficient."""
    acc: dict[tuple[str, ...], int] = defaultdict(int)
    for factors in expr:
        for combo in product(*(list(f.items()) for f in factors)):
            coeff = 1
            for _, cf in combo:
                coeff *= cf
            acc[tuple(w for w, _ in combo)] += coeff
    return {k: v for k, v in acc.items() if v}


def tensor_map(expr: Iterable[Sequence[NCPoly]], *maps) -> list[tuple]:
    """Apply one map per tensor factor."""
    return [tuple(f(x) for f, x in zip(maps, factors)) for factors in expr]


def apply_coproduct_at(expr: Iterable[Sequence[AbPoly]], slot: int) -> Tensor:
    """(id x ... x Delta x ... x id) with Delta in tensor position ``slot``."""
    out = []
    for factors in expr:
        for left, right in coproduct(factors[slot]):
            out.append((*factors[:slot], left, right, *factors[slot + 1:]))
    return out


# -- scalar functionals ------------------------------------------------------------


def map_A(u: AbPoly) -> int:
    """The algebra map with A(a) = 1, A(b) = 0."""
    return sum(cw for w, cw in u.items() if "b" not in w)


@lru_cache(maxsize=None)
def _C_word(w: str) -> int:
    if not w:
        return 2
    rest_a = 0 if "b" in w[1:] else 1
    if w[0] == "a":
        return rest_a + _C_word(w[1:])
    return rest_a


def map_C(u: AbPoly) -> int:
    """C(u) = 2 A(u) + sum A(u_(1)) A(u_(2)), evaluated by its letter recursion."""
    return sum(cw * _C_word(w) for w, cw in u.items())


def map_C_by_coproduct(u: AbPoly) -> int:
    return 2 * map_A(u) + sum(map_A(x) * map_A(y) for x, y in coproduct(u))


def eval_commutative(u: AbPoly, a_val: int, b_val: int) -> int:
    """Substitute commuting integers for a and b."""
    return sum(cw * a_val ** w.count("a") * b_val ** w.count("b") for w, cw in u.items())


def _scaled_e_powers(u: AbPoly, weight) -> AbPoly:
    acc: dict[str, int] = defaultdict(int)
    for w, cw in u.items():
        acc["e" * len(w)] += cw * weight(w)
    return from_eb(acc)


def kappa(u: AbPoly) -> AbPoly:
    """kappa(u) = A(u) (a - b)^deg u, applied degree-wise."""
    return _scaled_e_powers(u, lambda w: 0 if "b" in w else 1)


def nu(u: AbPoly) -> AbPoly:
    """nu(u) = C(u) (a - b)^deg u, applied degree-wise."""
    return _scaled_e_powers(u, _C_word)


# -- H and H* ------------------------------------------------------------------------


def map_H(u: NCPoly) -> NCPoly:
    """Drop the first letter; on cd-polynomials H(c u) = 2u, H(d u) = c u."""
    if isinstance(u, CdPoly):
        acc: dict[str, int] = defaultdict(int)
        for w, cw in u.items():
            if w:
                acc[w[1:] if w[0] == "c" else "c" + w[1:]] += cw * (2 if w[0] == "c" else 1)
        return CdPoly(acc)
    return AbPoly([(w[1:], cw) for w, cw in u.items() if w])


def map_H_star(u: NCPoly) -> NCPoly:
    """Drop the last letter; on cd-polynomials H*(u c) = 2u, H*(u d) = u c."""
    if isinstance(u, CdPoly):
        acc: dict[str, int] = defaultdict(int)
        for w, cw in u.items():
            if w:
                acc[w[:-1] if w[-1] == "c" else w[:-1] + "c"] += cw * (2 if w[-1] == "c" else 1)
        return CdPoly(acc)
    return AbPoly([(w[:-1], cw) for w, cw in u.items() if w])


# -- omega and the cd-basis -------------------------------------------------------------


def omega(u: AbPoly) -> CdPoly:
    """Replace each occurrence of ab by 2d and every other letter by c."""
    acc: dict[str, int] = defaultdict(int)
    for w, cw in u.items():
        out, i, factor = [], 0, 1
        while i < len(w):
            if w.startswith("ab", i):
                out.append("d")
                factor *= 2
                i += 2
            else:
                out.append("c")
                i += 1
        acc["".join(out)] += cw * factor
    return CdPoly(acc)


def cd_words(n: int) -> list[str]:
    """All cd-words of degree n (c has degree 1, d degree 2), sorted."""

    @lru_cache(maxsize=None)
    def build(k: int) -> tuple[str, ...]:
        if k < 0:
            return ()
        if k == 0:
            return ("",)
        return tuple(["c" + w for w in build(k - 1)] + ["d" + w for w in build(k - 2)])

    return sorted(build(n))


@lru_cache(maxsize=None)
def _cd_word_to_ab(w: str) -> AbPoly:
    out = AbPoly.one()
    for ch in w:
        out = out * (c if ch == "c" else d)
    return out


def cd_to_ab(v: CdPoly) -> AbPoly:
    out = AbPoly.zero()
    for w, cw in v.items():
        out = out + _cd_word_to_ab(w) * cw
    return out


@lru_cache(maxsize=None)
def _cd_solver(n: int) -> tuple[list[str], list[str], list[list[Fraction]]]:
    """Square invertible slice of the degree-n change of basis.

    Rows are chosen by the substitution c -> a, d -> ba, which sends distinct
    cd-words to distinct ab-words; the slice is inverted exactly once per
    degree.
    """
    cols = cd_words(n)
    rows = [w.replace("d", "ba").replace("c", "a") for w in cols]
    matrix = [[_cd_word_to_ab(cw).coeff(r) for cw in cols] for r in rows]
    return cols, rows, linalg.inverse(matrix)


def to_cd(u: AbPoly) -> CdPoly:
    """Express u in c = a + b and d = ab + ba.

    Solves the change-of-basis system exactly, then checks that the solution
    is integral and reproduces u with zero residual.
    """
    out: dict[str, int] = {}
    for n, part in u.homogeneous_components().items():
        cols, rows, inv = _cd_solver(n)
        rhs = [part.coeff(r) for r in rows]
        for cw, row in zip(cols, inv):
            x = sum(coef * r for coef, r in zip(row, rhs) if r)
            if x.denominator != 1:
                raise NotCdExpressible(f"{u} has a non-integral cd expansion")
            if x:
                out[cw] = int(x)
    result = CdPoly(out)
    if cd_to_ab(result) != u:
        raise NotCdExpressible(f"{u} is not in the span of c and d")
    return result


def is_c2d(v: CdPoly) -> bool:
    """Membership in Z<c, 2d>: a word with k d's needs coefficient divisible by 2^k."""
    return all(cw % (2 ** w.count("d")) == 0 for w, cw in v.items())


def c2d_monomial_count(v: CdPoly) -> Fraction:
    """Number of c-2d-monomials, counted with multiplicity."""
    return sum((Fraction(cw, 2 ** w.count("d")) for w, cw in v.items()), Fraction(0))


# -- posets: flag vectors and the ab-index -------------------------------------------------


def flag_f_vector(P: "Poset") -> dict[frozenset[int], int]:
    """f_S = number of chains whose interior ranks are exactly S, S in [rho-1]."""
    import numpy as np

    n = P.rho
    if n < 1:
        raise RankZeroInput("flag vectors need rank >= 1")
    lt = P.less_matrix
    idx = [[P.index[x] for x in P.level(k)] for k in range(n + 1)]
    # chain counts are bounded by the product of level sizes; stay in int64 when safe
    bound = 1
    for k in range(1, n):
        bound *= max(1, len(idx[k]))
    dtype = np.int64 if bound < 2**62 else object
    blocks = {}
    out: dict[frozenset[int], int] = {}
    for size in range(n):
        for S in combinations(range(1, n), size):
            cnt = np.ones(1, dtype=dtype)
            prev = 0
            for k in S:
                key = (prev, k)
                if key not in blocks:
                    blocks[key] = lt[np.ix_(idx[prev], idx[k])].astype(dtype)
                cnt = cnt @ blocks[key]
                prev = k
            out[frozenset(S)] = int(cnt.sum())
    return out


def _bword(n: int, S: Iterable[int], letter: str = "b", fill: str = "a") -> str:
    chars = [fill] * (n - 1)
    for s in S:
        chars[s - 1] = letter
    return "".join(chars)


def ab_index(P: "Poset") -> AbPoly:
    """Psi(P) from the flag h-vector: h_S is the coefficient of the word with b at S."""
    f = flag_f_vector(P)
    n = P.rho
    terms = {}
    for S in f:
        h = 0
        for size in range(len(S) + 1):
            for T in combinations(sorted(S), size):
                h += (-1) ** (len(S) - size) * f[frozenset(T)]
        if h:
            terms[_bword(n, S)] = h
    return AbPoly(terms)


def ab_index_by_chains(P: "Poset") -> AbPoly:
    """Psi(P) as the sum of chain weights wt(c), by explicit chain enumeration."""
    if P.rho < 1:
        raise RankZeroInput("the ab-index needs rank >= 1")
    n = P.rho
    acc: dict[str, int] = defaultdict(int)
    for ch in P.chains():
        acc[_bword(n, (P.rank[x] for x in ch[1:-1]), fill="e")] += 1
    return from_eb(acc)


# -- random inputs for property checks ----------------------------------------------------


def random_ab_poly(rng: random.Random, max_degree: int, nterms: int = 4, coeff: int = 3) -> AbPoly:
    terms = []
    for _ in range(nterms):
        n = rng.randint(0, max_degree)
        w = "".join(rng.choice("ab") for _ in range(n))
        terms.append((w, rng.randint(-coeff, coeff)))
    return AbPoly(terms)


def all_ab_words(n: int) -> list[str]:
    return ["".join(p) for p in product("ab", repeat=n)]
