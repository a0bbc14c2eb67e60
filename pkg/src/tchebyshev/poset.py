"""Finite graded bounded posets.

A poset is stored through its Hasse diagram (the cover relation) together
with the rank function.  Element ids are whitespace-free strings; every
construction in this module derives composite ids deterministically from the
ids of its inputs, so repeated runs produce byte-identical output.

The order relation itself is kept as a dense boolean matrix in the index
order of :attr:`Poset.elements` (sorted by rank, then id).  At the sizes this
package targets (a few thousand elements at most) that is both the simplest
and the fastest representation numpy offers.
"""

from __future__ import annotations

import random
from collections import deque
from functools import cached_property
from itertools import combinations, product
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import (
    CycleDetected,
    MalformedLine,
    NotBounded,
    NotComparable,
    NotGraded,
    RankZeroInput,
    RankZeroOperand,
)

#: id used for the adjoined minimum below the bottom inside T(P) ids
MINUS_ONE = "*"


class Poset:
    """An immutable finite graded poset with a unique bottom and top.

    Construction validates everything: acyclicity, boundedness, and that each
    cover raises the rank (longest chain from the bottom) by exactly one.
    """

    def __init__(self, elements: Iterable[str], covers: Iterable[tuple[str, str]]):
        covers = frozenset((str(x), str(y)) for x, y in covers)
        elems = set(map(str, elements))
        for x, y in covers:
            elems.add(x)
            elems.add(y)
        if not elems:
            raise NotBounded("empty poset")
        for e in elems:
            if not e or any(ch.isspace() for ch in e):
                raise MalformedLine(f"invalid element id {e!r}")

        up: dict[str, list[str]] = {e: [] for e in elems}
        down: dict[str, list[str]] = {e: [] for e in elems}
        for x, y in covers:
            if x == y:
                raise CycleDetected(f"self-cover on {x!r}")
            up[x].append(y)
            down[y].append(x)

        # Kahn's algorithm: topological order plus cycle detection.
        indeg = {e: len(down[e]) for e in elems}
        queue = deque(sorted(e for e in elems if indeg[e] == 0))
        order = []
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(up[x]):
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if len(order) != len(elems):
            raise CycleDetected("cover relation contains a cycle")

        minimal = [e for e in elems if not down[e]]
        maximal = [e for e in elems if not up[e]]
        if len(minimal) != 1 or len(maximal) != 1:
            raise NotBounded(
                f"need exactly one minimal and one maximal element, "
                f"got {len(minimal)} and {len(maximal)}"
            )

        rank = {e: 0 for e in elems}
        for x in order:
            for y in up[x]:
                rank[y] = max(rank[y], rank[x] + 1)
        for x, y in covers:
            if rank[y] != rank[x] + 1:
                raise NotGraded(f"cover {x} < {y} jumps from rank {rank[x]} to {rank[y]}")

        self.elements: tuple[str, ...] = tuple(sorted(elems, key=lambda e: (rank[e], e)))
        self.covers: frozenset[tuple[str, str]] = covers
        self.rank: Mapping[str, int] = MappingProxyType(rank)
        self.bottom: str = minimal[0]
        self.top: str = maximal[0]
        self.index: Mapping[str, int] = MappingProxyType(
            {e: i for i, e in enumerate(self.elements)}
        )
        self._up = {e: tuple(sorted(up[e], key=self.index.__getitem__)) for e in elems}
        self._down = {e: tuple(sorted(down[e], key=self.index.__getitem__)) for e in elems}
        self._mobius_rows: dict[str, np.ndarray] = {}

    # -- basic queries -----------------------------------------------------

    @property
    def rho(self) -> int:
        """Rank of the poset, i.e. the rank of its top element."""
        return self.rank[self.top]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        return f"<Poset rank={self.rho} size={len(self)}>"

    def upper_covers(self, x: str) -> tuple[str, ...]:
        return self._up[x]

    def lower_covers(self, x: str) -> tuple[str, ...]:
        return self._down[x]

    def level(self, k: int) -> tuple[str, ...]:
        """Elements of rank ``k``."""
        return self._levels[k] if 0 <= k <= self.rho else ()

    @cached_property
    def _levels(self) -> tuple[tuple[str, ...], ...]:
        levels: list[list[str]] = [[] for _ in range(self.rho + 1)]
        for e in self.elements:
            levels[self.rank[e]].append(e)
        return tuple(tuple(lv) for lv in levels)

    @cached_property
    def less_matrix(self) -> np.ndarray:
        """Boolean matrix ``L`` with ``L[i, j]`` iff element i < element j."""
        n = len(self.elements)
        lt = np.zeros((n, n), dtype=bool)
        for i in range(n - 1, -1, -1):
            x = self.elements[i]
            for c in self._up[x]:
                j = self.index[c]
                lt[i] |= lt[j]
                lt[i, j] = True
        lt.setflags(write=False)
        return lt

    def lt(self, x: str, y: str) -> bool:
        return bool(self.less_matrix[self.index[x], self.index[y]])

    def leq(self, x: str, y: str) -> bool:
        return x == y or self.lt(x, y)

    def between(self, x: str, y: str) -> list[str]:
        """Elements of the closed interval [x, y], in index order."""
        if not self.leq(x, y):
            raise NotComparable(f"{x} is not below {y}")
        i, j = self.index[x], self.index[y]
        lt = self.less_matrix
        mask = lt[i] & lt[:, j]
        mask[i] = mask[j] = True
        return [self.elements[k] for k in np.flatnonzero(mask)]

    def interval(self, x: str, y: str) -> Poset:
        """The closed interval [x, y] as a poset in its own right."""
        elems = self.between(x, y)
        inside = set(elems)
        covers = [(u, v) for u in elems for v in self._up[u] if v in inside]
        return Poset(elems, covers)

    def atoms(self) -> tuple[str, ...]:
        return self._up[self.bottom]

    def coatoms(self) -> tuple[str, ...]:
        return self._down[self.top]

    # -- chains ------------------------------------------------------------

    def chains(self, x: str | None = None, y: str | None = None) -> Iterator[tuple[str, ...]]:
        """All chains ``x = x0 < x1 < ... < xk = y`` (any length)."""
        x = self.bottom if x is None else x
        y = self.top if y is None else y
        if not self.leq(x, y):
            raise NotComparable(f"{x} is not below {y}")
        if x == y:
            yield (x,)
            return
        lt = self.less_matrix
        jy = self.index[y]

        def extend(path: list[str]) -> Iterator[tuple[str, ...]]:
            last = self.index[path[-1]]
            for k in np.flatnonzero(lt[last]):
                if k == jy:
                    yield (*path, y)
                elif lt[k, jy]:
                    path.append(self.elements[k])
                    yield from extend(path)
                    path.pop()

        yield from extend([x])

    def maximal_chains(self, x: str | None = None, y: str | None = None) -> Iterator[tuple[str, ...]]:
        """Saturated chains from ``x`` to ``y`` along cover relations."""
        x = self.bottom if x is None else x
        y = self.top if y is None else y
        if not self.leq(x, y):
            raise NotComparable(f"{x} is not below {y}")
        jy = self.index[y]
        lt = self.less_matrix

        def extend(path: list[str]) -> Iterator[tuple[str, ...]]:
            last = path[-1]
            if last == y:
                yield tuple(path)
                return
            for c in self._up[last]:
                if c == y or lt[self.index[c], jy]:
                    path.append(c)
                    yield from extend(path)
                    path.pop()

        yield from extend([x])

    # -- Möbius function ---------------------------------------------------

    def _mobius_row(self, x: str) -> np.ndarray:
        row = self._mobius_rows.get(x)
        if row is None:
            i = self.index[x]
            lt = self.less_matrix
            n = len(self.elements)
            row = np.zeros(n, dtype=np.int64)
            row[i] = 1
            above = lt[i].copy()
            support = np.zeros(n, dtype=bool)
            support[i] = True
            for k in np.flatnonzero(above):
                # elements are sorted by rank, so every w < element k is done
                row[k] = -row[support & lt[:, k]].sum()
                support[k] = True
            self._mobius_rows[x] = row
        return row

    def mobius(self, x: str, y: str) -> int:
        if not self.leq(x, y):
            raise NotComparable(f"{x} is not below {y}")
        return int(self._mobius_row(x)[self.index[y]])


# -- validation and text format ---------------------------------------------


def parse_poset(text: str) -> Poset:
    """Read the line-oriented poset format (``elem``/``cover`` lines)."""
    elements: list[str] = []
    covers: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "elem" and len(parts) == 2:
            elements.append(parts[1])
        elif parts[0] == "cover" and len(parts) == 3:
            covers.append((parts[1], parts[2]))
        else:
            raise MalformedLine(f"line {lineno}: {raw!r}")
    if not elements and not covers:
        raise MalformedLine("no elements")
    return Poset(elements, covers)


def emit_poset(P: Poset) -> str:
    lines = [f"elem {e}" for e in P.elements]
    for x in P.elements:
        lines.extend(f"cover {x} {y}" for y in P.upper_covers(x))
    return "\n".join(lines) + "\n"


def is_eulerian(P: Poset) -> bool:
    """True iff every interval [x, y] with x < y has as many elements of even
    rank as of odd rank.

    The test is done through the Möbius function: P is Eulerian exactly when
    mu(x, y) = (-1)^(rho(y) - rho(x)) for all x <= y, because the signed zeta
    function satisfies the defining recursion of mu precisely when those
    alternating interval sums vanish.  With Z the zeta matrix and S the signed
    zeta matrix this is the single integer identity Z @ S == I.
    """
    n = len(P)
    zeta = P.less_matrix.astype(np.int64) + np.eye(n, dtype=np.int64)
    parity = np.array([(-1) ** P.rank[e] for e in P.elements], dtype=np.int64)
    signed = zeta * parity[None, :] * parity[:, None]
    return bool(np.array_equal(zeta @ signed, np.eye(n, dtype=np.int64)))


# -- standard families ---------------------------------------------------------


def _subset_id(s: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def boolean_algebra(n: int) -> Poset:
    if n < 0:
        raise ValueError("n must be non-negative")
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    covers = [(_subset_id(s), _subset_id(s | {i})) for s in subsets for i in range(1, n + 1) if i not in s]
    return Poset([_subset_id(s) for s in subsets], covers)


def chain(n: int) -> Poset:
    """The chain of rank ``n`` (n + 1 elements)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Poset([str(i) for i in range(n + 1)], [(str(i), str(i + 1)) for i in range(n)])


def one_point() -> Poset:
    return chain(0)


def ladder(n: int) -> Poset:
    """Rank n + 1 poset with two elements at each rank 1..n, all covers present."""
    if n < 0:
        raise ValueError("n must be non-negative")
    levels = [["bot"]] + [[f"{k}L", f"{k}R"] for k in range(1, n + 1)] + [["top"]]
    covers = [(x, y) for lo, hi in zip(levels, levels[1:]) for x in lo for y in hi]
    return Poset([e for lv in levels for e in lv], covers)


def crosspolytope(n: int) -> Poset:
    """Face lattice of the n-dimensional crosspolytope.

    Faces are signed subsets of [n] ordered by restriction (the empty signed
    set is the empty face), plus an adjoined top.
    """
    if n < 1:
        raise ValueError("n must be positive")

    def fid(face: tuple[tuple[int, str], ...]) -> str:
        return "{" + ",".join(f"{s}{i}" for i, s in face) + "}"

    faces = [
        tuple(zip(S, signs))
        for k in range(n + 1)
        for S in combinations(range(1, n + 1), k)
        for signs in product("+-", repeat=k)
    ]
    covers = []
    for face in faces:
        used = {i for i, _ in face}
        for i in range(1, n + 1):
            if i not in used:
                for s in "+-":
                    covers.append((fid(face), fid(tuple(sorted(face + ((i, s),))))))
        if len(face) == n:
            covers.append((fid(face), "top"))
    return Poset([fid(f) for f in faces] + ["top"], covers)


def dual(P: Poset) -> Poset:
    return Poset(P.elements, [(y, x) for x, y in P.covers])


def _pair(x: str, y: str) -> str:
    return f"({x},{y})"


def cartesian_product(P: Poset, Q: Poset) -> Poset:
    elems = [_pair(x, y) for x in P.elements for y in Q.elements]
    covers = [(_pair(x, y), _pair(z, y)) for (x, z) in P.covers for y in Q.elements]
    covers += [(_pair(x, y), _pair(x, w)) for x in P.elements for (y, w) in Q.covers]
    return Poset(elems, covers)


def diamond_product(P: Poset, Q: Poset) -> Poset:
    """(P - bottom) x (Q - bottom) with a new bottom ``bot``."""
    if P.rho < 1 or Q.rho < 1:
        raise RankZeroOperand("diamond product needs operands of rank >= 1")
    ps = [x for x in P.elements if x != P.bottom]
    qs = [y for y in Q.elements if y != Q.bottom]
    covers = [(_pair(x, y), _pair(z, y)) for (x, z) in P.covers if x != P.bottom for y in qs]
    covers += [(_pair(x, y), _pair(x, w)) for x in ps for (y, w) in Q.covers if y != Q.bottom]
    covers += [("bot", _pair(x, y)) for x in P.atoms() for y in Q.atoms()]
    return Poset([_pair(x, y) for x in ps for y in qs] + ["bot"], covers)


def dual_diamond_product(P: Poset, Q: Poset) -> Poset:
    """(P - top) x (Q - top) with a new top ``top``."""
    if P.rho < 1 or Q.rho < 1:
        raise RankZeroOperand("dual diamond product needs operands of rank >= 1")
    ps = [x for x in P.elements if x != P.top]
    qs = [y for y in Q.elements if y != Q.top]
    covers = [(_pair(x, y), _pair(z, y)) for (x, z) in P.covers if z != P.top for y in qs]
    covers += [(_pair(x, y), _pair(x, w)) for x in ps for (y, w) in Q.covers if w != Q.top]
    covers += [(_pair(x, y), "top") for x in P.coatoms() for y in Q.coatoms()]
    return Poset([_pair(x, y) for x in ps for y in qs] + ["top"], covers)


# -- the Tchebyshev transform of a poset ---------------------------------------


def interval_id(x: str, y: str) -> str:
    return f"[{x},{y}]"


def tchebyshev_poset(P: Poset) -> Poset:
    """The Tchebyshev transform T(P).

    Elements are the pairs [x, y] with x < y in P with a new minimum (written
    ``*``) adjoined, plus a new top.  Covers: [x,y] < [y,w] and [x,y] < [x,w]
    whenever y is covered by w, and [x, top(P)] < new top.
    """
    if P.rho < 1:
        raise RankZeroInput("the Tchebyshev transform needs a poset of rank >= 1")
    below: dict[str, list[str]] = {
        y: [MINUS_ONE] + [x for x in P.elements if P.lt(x, y)] for y in P.elements
    }
    elems = [interval_id(x, y) for y in P.elements for x in below[y]]
    covers = []
    for y in P.elements:
        for x in below[y]:
            for w in P.upper_covers(y):
                covers.append((interval_id(x, y), interval_id(y, w)))
                covers.append((interval_id(x, y), interval_id(x, w)))
    covers += [(interval_id(x, P.top), "top") for x in below[P.top]]
    return Poset(elems + ["top"], covers)


def lower_ends(T: Poset) -> dict[str, tuple[str, str]]:
    """Map each non-top element ``[x,y]`` of a transform back to ``(x, y)``."""
    out = {}
    for e in T.elements:
        if e.startswith("[") and e.endswith("]"):
            x, y = _split_pair(e[1:-1])
            out[e] = (x, y)
    return out


def _split_pair(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1:]
    raise ValueError(f"not a composite id: {body!r}")


# -- random posets -------------------------------------------------------------


def random_graded_poset(max_rank: int, width: int, seed: int) -> Poset:
    """A seeded random graded bounded poset of rank between 1 and ``max_rank``.

    Levels get 1..width elements, each pair of elements in consecutive
    levels is joined with probability 1/2, and then every element lacking a
    lower (upper) cover receives one to a uniformly chosen element of the
    neighbouring level.
    """
    if max_rank < 1 or width < 1:
        raise ValueError("max_rank and width must be positive")
    rng = random.Random(seed)
    r = rng.randint(1, max_rank)
    sizes = [1] + [rng.randint(1, width) for _ in range(r - 1)] + [1]
    levels = [[f"x{k}_{j}" for j in range(s)] for k, s in enumerate(sizes)]
    covers: set[tuple[str, str]] = set()
    for lo, hi in zip(levels, levels[1:]):
        for x in lo:
            for y in hi:
                if rng.random() < 0.5:
                    covers.add((x, y))
    for lo, hi in zip(levels, levels[1:]):
        for y in hi:
            if not any((x, y) in covers for x in lo):
                covers.add((rng.choice(lo), y))
        for x in lo:
            if not any((x, y) in covers for y in hi):
                covers.add((x, rng.choice(hi)))
    return Poset([e for lv in levels for e in lv], covers)


def non_lattice_witness(P: Poset) -> tuple[str, str, str, str] | None:
    """Two elements with two distinct common upper covers, neither the top.

    Such a pair has no join, so its existence shows P is not a lattice.
    """
    for k in range(1, P.rho):
        for x, y in combinations(P.level(k), 2):
            common = [z for z in P.upper_covers(x) if z in P.upper_covers(y) and z != P.top]
            if len(common) >= 2:
                return x, y, common[0], common[1]
    return None
