"""Edge labelings of Hasse diagrams: R- and EL-labelings, Jordan-Hölder
sets, descent words and the labelings used for products and transforms.

Labels are arbitrary hashable values compared through the labeling's declared
linear order.  Signed labels of a transform are `Label(token, "s")` and
`Label(token, "b")`, with `ZERO` between the two blocks.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from .abpoly import AbPoly
from .errors import BadParameter, MalformedLine, NotComparable
from .poset import (
    MINUS_ONE,
    Poset,
    _pair,
    cartesian_product,
    dual_diamond_product,
    interval_id,
    tchebyshev_poset,
)

DEFAULT_RANK_CAP = 6


class Label(NamedTuple):
    token: Hashable
    sign: str | None = None

    def __str__(self) -> str:
        return f"{self.token}^{self.sign}" if self.sign else str(self.token)


ZERO = Label("0", None)


@dataclass
class EdgeLabeling:
    """Labels on every cover relation of ``poset`` with a linear order on labels."""

    poset: Poset
    labels: Mapping[tuple[str, str], Hashable]
    order: Sequence[Hashable]
    _key: dict = field(init=False, repr=False)

    def __post_init__(self):
        self._key = {lab: i for i, lab in enumerate(self.order)}
        if len(self._key) != len(self.order):
            raise BadParameter("label order lists a label twice")
        missing = [cv for cv in self.poset.covers if cv not in self.labels]
        if missing:
            raise BadParameter(f"unlabeled edge {missing[0]}")
        for cv, lab in self.labels.items():
            if cv not in self.poset.covers:
                raise BadParameter(f"{cv} is not a cover relation")
            if lab not in self._key:
                raise BadParameter(f"label {lab!r} missing from the order")

    def key(self, label: Hashable) -> int:
        return self._key[label]

    def __call__(self, x: str, y: str) -> Hashable:
        return self.labels[(x, y)]


# -- the checks --------------------------------------------------------------------


def _chains_from(L: EdgeLabeling, x: str) -> dict[str, list[tuple[int, ...]]]:
    """Key sequences of all saturated chains starting at x, grouped by end."""
    P = L.poset
    out: dict[str, list[tuple[int, ...]]] = defaultdict(list)

    def walk(z: str, seq: tuple[int, ...]):
        for w in P.upper_covers(z):
            s = seq + (L.key(L.labels[(z, w)]),)
            out[w].append(s)
            walk(w, s)

    walk(x, ())
    return out


def _rising(seq: Sequence[int]) -> bool:
    return all(p <= q for p, q in zip(seq, seq[1:]))


def labeling_violation(L: EdgeLabeling, lexicographic: bool = True,
                       rank_cap: int = DEFAULT_RANK_CAP) -> tuple[str, str, str] | None:
    """First interval (x, y, reason) breaking the R (or EL) condition, else None."""
    if L.poset.rho > rank_cap:
        raise BadParameter(f"exhaustive labeling checks are capped at rank {rank_cap}")
    for x in L.poset.elements:
        for y, seqs in _chains_from(L, x).items():
            rising = [s for s in seqs if _rising(s)]
            if len(rising) != 1:
                return x, y, f"{len(rising)} rising chains"
            if lexicographic:
                least = min(seqs)
                if least != rising[0] or seqs.count(least) != 1:
                    return x, y, "rising chain is not the unique lexicographically least"
    return None


def is_R_labeling(L: EdgeLabeling, rank_cap: int = DEFAULT_RANK_CAP) -> bool:
    """Every interval has exactly one maximal chain with weakly rising labels."""
    return labeling_violation(L, False, rank_cap) is None


def is_EL_labeling(L: EdgeLabeling, rank_cap: int = DEFAULT_RANK_CAP) -> bool:
    """R-labeling whose rising chain is also lexicographically least in each interval."""
    return labeling_violation(L, True, rank_cap) is None


def jordan_holder(L: EdgeLabeling, x: str | None = None, y: str | None = None) -> Counter:
    """Multiset of label sequences of the maximal chains of [x, y]."""
    P = L.poset
    x = P.bottom if x is None else x
    y = P.top if y is None else y
    if not P.leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    out: Counter = Counter()
    for ch in P.maximal_chains(x, y):
        out[tuple(L.labels[(p, q)] for p, q in zip(ch, ch[1:]))] += 1
    return out


def descent_word(labels: Sequence, key=None) -> str:
    """u_i = a when labels i and i+1 are weakly rising, b otherwise."""
    if len(labels) < 1:
        raise BadParameter("descent words need a nonempty label string")
    ks = [key(x) for x in labels] if key else list(labels)
    return "".join("a" if p <= q else "b" for p, q in zip(ks, ks[1:]))


def ab_index_from_labeling(L: EdgeLabeling) -> AbPoly:
    """Sum of descent words over the Jordan-Hölder set (valid for R-labelings)."""
    acc: Counter = Counter()
    for seq, mult in jordan_holder(L).items():
        acc[descent_word(seq, L.key)] += mult
    return AbPoly(acc)


# -- shuffles --------------------------------------------------------------------------


def shuffle(x: Sequence, y: Sequence) -> list[tuple]:
    """All C(n+m, n) interleavings of x and y, as a list (with repeats)."""
    n, m = len(x), len(y)
    out = []
    for pos in combinations(range(n + m), n):
        chosen = set(pos)
        xi, yi = iter(x), iter(y)
        out.append(tuple(next(xi) if i in chosen else next(yi) for i in range(n + m)))
    return out


def shuffle_sets(X: Mapping | Iterable, Y: Mapping | Iterable) -> Counter:
    """Multiset union of x * y over x in X, y in Y."""
    X = Counter(X) if not isinstance(X, Counter) else X
    Y = Counter(Y) if not isinstance(Y, Counter) else Y
    out: Counter = Counter()
    for x, mx in X.items():
        for y, my in Y.items():
            for s in shuffle(x, y):
                out[s] += mx * my
    return out


def signed_strings(JH: Mapping) -> Counter:
    """JH^{sb} o 0: every sign pattern on every string, followed by ZERO."""
    out: Counter = Counter()
    for seq, mult in JH.items():
        for signs in _sign_patterns(len(seq)):
            out[tuple(Label(t, s) for t, s in zip(seq, signs)) + (ZERO,)] += mult
    return out


def _sign_patterns(n: int):
    for mask in range(2**n):
        yield ["b" if mask >> i & 1 else "s" for i in range(n)]


def strip_zero(JH: Mapping) -> Counter:
    out: Counter = Counter()
    for seq, mult in JH.items():
        if not seq or seq[-1] != ZERO:
            raise BadParameter("label string does not end in 0")
        out[tuple(seq[:-1])] += mult
    return out


def append_zero(JH: Mapping) -> Counter:
    return Counter({tuple(seq) + (ZERO,): m for seq, m in JH.items()})


# -- concrete labelings --------------------------------------------------------------------


def _parse_subset(s: str) -> frozenset[int]:
    body = s.strip("{}")
    return frozenset(int(t) for t in body.split(",")) if body else frozenset()


def natural_boolean_labeling(P: Poset) -> EdgeLabeling:
    """Label S < S + {i} by i on a Boolean algebra built by `boolean_algebra`."""
    labels = {}
    for x, y in P.covers:
        (i,) = _parse_subset(y) - _parse_subset(x)
        labels[(x, y)] = i
    return EdgeLabeling(P, labels, sorted(set(labels.values())))


def ladder_labeling(P: Poset) -> EdgeLabeling:
    """Label each edge of a `ladder` poset by its upper end: kL -> k,
    kR -> 2n + 2 - k and the top -> n + 1."""
    n = P.rho - 1

    def value(y: str) -> int:
        if y == P.top:
            return n + 1
        k = int(y[:-1])
        return k if y.endswith("L") else 2 * n + 2 - k

    labels = {(x, y): value(y) for x, y in P.covers}
    return EdgeLabeling(P, labels, sorted(set(labels.values())))


def tcheb_labeling(L: EdgeLabeling, T: Poset | None = None) -> EdgeLabeling:
    """The signed labeling of T(P) with label order L^s < 0 < L^b.

    [x,y] < [y,w] gets lambda(y,w)^s, [x,y] < [x,w] gets lambda(y,w)^b and
    [x, top] < top gets 0, so JH(T(P)) = JH(P)^{sb} o 0 for any labeling.
    This is not an R-labeling once P has a rank-2 interval with two atoms:
    in T(B_2) both chains from [*, {}] up to [{}, {1,2}], with labels
    (1^s, 2^b) and (2^s, 1^b), are rising.
    """
    P = L.poset
    T = tchebyshev_poset(P) if T is None else T
    labels = {}
    for y in P.elements:
        below = [MINUS_ONE] + [x for x in P.elements if P.lt(x, y)]
        for x in below:
            for w in P.upper_covers(y):
                lab = L.labels[(y, w)]
                labels[(interval_id(x, y), interval_id(y, w))] = Label(lab, "s")
                labels[(interval_id(x, y), interval_id(x, w))] = Label(lab, "b")
            if y == P.top:
                labels[(interval_id(x, y), T.top)] = ZERO
    order = [Label(t, "s") for t in L.order] + [ZERO] + [Label(t, "b") for t in L.order]
    return EdgeLabeling(T, labels, order)


def _tag(i: int, lab):
    if isinstance(lab, Label):
        return lab if lab == ZERO else Label((i, lab.token), lab.sign)
    return (i, lab)


def product_labeling(L1: EdgeLabeling, L2: EdgeLabeling) -> EdgeLabeling:
    """Labeling of P1 x P2 with labels (1, l) and (2, l); all of L1 precedes L2."""
    P, Q = L1.poset, L2.poset
    R = cartesian_product(P, Q)
    labels = {}
    for (x, z), lab in L1.labels.items():
        for y in Q.elements:
            labels[(_pair(x, y), _pair(z, y))] = _tag(1, lab)
    for (y, w), lab in L2.labels.items():
        for x in P.elements:
            labels[(_pair(x, y), _pair(x, w))] = _tag(2, lab)
    order = [_tag(1, t) for t in L1.order] + [_tag(2, t) for t in L2.order]
    return EdgeLabeling(R, labels, order)


def dual_diamond_labeling(L1: EdgeLabeling, L2: EdgeLabeling) -> EdgeLabeling:
    """Labeling of P1 dual-diamond P2 for factors labeled like transforms:
    signed labels, with 0 exactly on the edges into the top.  The order is
    L1^s, L2^s, 0, L1^b, L2^b."""
    P, Q = L1.poset, L2.poset
    R = dual_diamond_product(P, Q)
    labels = {}
    for (x, z), lab in L1.labels.items():
        if z != P.top:
            for y in Q.elements:
                if y != Q.top:
                    labels[(_pair(x, y), _pair(z, y))] = _tag(1, lab)
    for (y, w), lab in L2.labels.items():
        if w != Q.top:
            for x in P.elements:
                if x != P.top:
                    labels[(_pair(x, y), _pair(x, w))] = _tag(2, lab)
    for x in P.coatoms():
        for y in Q.coatoms():
            labels[(_pair(x, y), R.top)] = ZERO

    def block(L, i, sign):
        return [_tag(i, t) for t in L.order if isinstance(t, Label) and t.sign == sign]

    order = block(L1, 1, "s") + block(L2, 2, "s") + [ZERO] + block(L1, 1, "b") + block(L2, 2, "b")
    return EdgeLabeling(R, labels, order)


# -- text format -----------------------------------------------------------------------------


def parse_labeling(text: str, P: Poset) -> EdgeLabeling:
    """``label <id1> <id2> <token>`` lines plus one ``order <tok> ...`` line."""
    labels, order = {}, None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "label" and len(parts) == 4:
            labels[(parts[1], parts[2])] = parts[3]
        elif parts[0] == "order" and order is None:
            order = parts[1:]
        else:
            raise MalformedLine(f"line {lineno}: {raw!r}")
    if order is None:
        raise MalformedLine("missing order line")
    return EdgeLabeling(P, labels, order)


def emit_labeling(L: EdgeLabeling) -> str:
    lines = ["order " + " ".join(map(str, L.order))]
    for x in L.poset.elements:
        for y in L.poset.upper_covers(x):
            lines.append(f"label {x} {y} {L.labels[(x, y)]}")
    return "\n".join(lines) + "\n"
