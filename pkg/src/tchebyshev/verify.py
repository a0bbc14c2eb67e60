"""Named verification suites.

Each suite re-derives a family of identities on small instances and yields
one `VerifyReport` per instance.  Runs are deterministic for a given seed.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Callable, Iterator

from . import abpoly as ab
from . import labelings as lab
from . import poset as po
from . import qsym as qs
from . import spectral, transforms as tr
from .abpoly import AbPoly, CdPoly, a, b, c, d, e
from .errors import UnknownCheck

DEFAULT_SEED = 0
DEFAULT_MAX_RANK = 5
DEFAULT_DEGREE = 8


@dataclass
class VerifyReport:
    check: str
    instance: str
    status: str
    witness: str | None
    ms: float

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return asdict(self)


def _run(check: str, instance: str, fn: Callable[[], str | None]) -> VerifyReport:
    """fn returns None on success and a witness string on failure."""
    t0 = time.perf_counter()
    try:
        witness = fn()
    except Exception as exc:  # a crash is a failure with the exception as witness
        witness = f"{type(exc).__name__}: {exc}"
    ms = round((time.perf_counter() - t0) * 1000, 3)
    if witness is None:
        return VerifyReport(check, instance, "pass", None, ms)
    return VerifyReport(check, instance, "fail", str(witness) or "failed", ms)


def _neq(lhs, rhs) -> str | None:
    return None if lhs == rhs else f"{lhs} != {rhs}"


# -- instances ---------------------------------------------------------------------


def family_suite(max_rank: int = 4, include_rank_zero: bool = False) -> list[tuple[str, po.Poset]]:
    """Boolean algebras, chains, ladders and crosspolytopes of rank <= max_rank."""
    out = []
    lo = 0 if include_rank_zero else 1
    for n in range(lo, max_rank + 1):
        out.append((f"B{n}", po.boolean_algebra(n)))
    for n in range(max(lo, 2), max_rank + 1):
        out.append((f"chain{n}", po.chain(n)))
    for n in range(0, max_rank):
        out.append((f"ladder{n}", po.ladder(n)))
    for n in range(1, min(3, max_rank - 1) + 1):
        out.append((f"cross{n}", po.crosspolytope(n)))
    return out


def random_posets(count: int, max_rank: int, seed: int, width: int = 3) -> list[tuple[str, po.Poset]]:
    return [
        (f"random(seed={seed * 100_003 + i})", po.random_graded_poset(max_rank, width, seed * 100_003 + i))
        for i in range(count)
    ]


def random_cd_poly(rng: random.Random, degree: int, nonneg: bool = False) -> CdPoly:
    words = ab.cd_words(degree)
    terms = [(rng.choice(words), rng.randint(0 if nonneg else -3, 3)) for _ in range(3)]
    return CdPoly(terms)


def random_qsym(rng: random.Random, max_degree: int, nterms: int = 3) -> qs.QSymElem:
    terms = []
    for _ in range(nterms):
        n = rng.randint(1, max_degree)
        cuts = [i for i in range(1, n) if rng.random() < 0.5]
        bounds = [0, *cuts, n]
        terms.append((tuple(q - p for p, q in zip(bounds, bounds[1:])), rng.randint(-3, 3)))
    if rng.random() < 0.3:
        terms.append(((), rng.randint(-2, 2)))
    return qs.QSymElem(terms)


def random_bqsym(rng: random.Random, max_degree: int) -> qs.BQSymElem:
    out = qs.BQSymElem()
    for alpha, v in random_qsym(rng, max_degree).items():
        p = rng.randint(0, max(0, max_degree - sum(alpha)))
        out = out + qs.BQSymElem({(p, alpha): v})
    return out


def psi(P: po.Poset) -> AbPoly:
    return ab.ab_index(P)


# -- suites ----------------------------------------------------------------------------


def check_eulerian_preservation(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "eulerian-preservation"
    for label, P in family_suite(min(max_rank, 4)):
        if po.is_eulerian(P):
            yield _run(name, label, lambda P=P: None if po.is_eulerian(po.tchebyshev_poset(P))
                       else "T(P) is not Eulerian")


def check_psi_vs_poset(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "psi-vs-poset"
    cases = family_suite(min(max_rank, 5)) + random_posets(50, min(max_rank, 4), seed)
    for label, P in cases:
        def fn(P=P):
            u = psi(P)
            if u != ab.ab_index_by_chains(P):
                return f"flag-vector ab-index {u} differs from the chain sum"
            return _neq(psi(po.tchebyshev_poset(P)), tr.tcheb_T(u * a))
        yield _run(name, label, fn)


def check_omega_equiv(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "omega-equiv"
    for n in range(0, min(degree, 6) + 1):
        def fn(n=n):
            for w in ab.cd_words(n):
                v = ab.cd_to_ab(CdPoly.word(w))
                t = tr.tcheb_T(v * a)
                if t != ab.cd_to_ab(ab.omega(a * v.star())).star():
                    return f"T(v a) != omega(a v*)* for v = {w}"
                if tr.pi(v * a) != ab.cd_to_ab(ab.omega(a * v.star() * b)).star():
                    return f"pi(v a) != omega(a v* b)* for v = {w}"
                cd = ab.to_cd(t)
                if not ab.is_c2d(cd) or any(x < 0 for _, x in cd.items()):
                    return f"cd-index of T(v a) for v = {w} is not a nonnegative c-2d-index: {cd}"
                if ab.c2d_monomial_count(cd) != 2 ** len(w):
                    return f"{w}: {ab.c2d_monomial_count(cd)} c-2d-monomials, expected {2 ** len(w)}"
            return None
        yield _run(name, f"cd-words of degree {n}", fn)


def check_recursions(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "recursions"
    rng = random.Random(seed)
    c2 = c * c
    for i in range(20):
        u = ab.random_ab_poly(rng, min(degree, 8) - 2)

        def fn(u=u):
            t = tr.tcheb_T(u)
            for other, what in ((tr.tcheb_T_recursive(u), "recursive"),
                                (tr.tcheb_T_functional(u), "functional equation")):
                if other != t:
                    return f"T({u}) differs from its {what} form"
            if tr.sigma(u) != tr.sigma_recursive(u):
                return f"sigma({u}) forms differ"
            if tr.tcheb_U(u) != tr.tcheb_U_via_T(u):
                return f"U({u}) forms differ"
            if tr.tcheb_T(e * u) != e * t:
                return f"T((a-b)u) != (a-b)T(u) for u = {u}"
            if tr.tcheb_T(c2 * u) != 2 * c * tr.tcheb_T(c * u) + (2 * d - c2) * t:
                return f"T(c^2 u) identity fails for u = {u}"
            if tr.tcheb_T((c2 - 2 * d) * u) != (c2 - 2 * d) * t:
                return f"T((c^2-2d)u) != (c^2-2d)T(u) for u = {u}"
            if tr.tcheb_U(u.star()) != tr.tcheb_U(u).star():
                return f"U(u*) != U(u)* for u = {u}"
            return None
        yield _run(name, f"random ab-polynomial #{i}", fn)
    for n in range(0, min(degree, 6) + 1):
        def fn(n=n):
            for w in ab.cd_words(n):
                v = CdPoly.word(w)
                va = ab.cd_to_ab(v) * a
                if ab.cd_to_ab(tr.tcheb_cd(v)) != tr.tcheb_T(va):
                    return f"cd recursion for T differs at v = {w}"
                if ab.cd_to_ab(tr.pi_cd(v)) != tr.pi(va):
                    return f"cd recursion for pi differs at v = {w}"
            return None
        yield _run(name, f"cd recursion, degree {n}", fn)


def check_cartesian_diamond(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "cartesian-diamond"
    fam = family_suite(min(max_rank, 4))
    for (lp, P), (lq, Q) in product(fam, fam):
        if P.rho + Q.rho > min(max_rank, 5):
            continue
        def fn(P=P, Q=Q):
            lhs = psi(po.tchebyshev_poset(po.cartesian_product(P, Q)))
            rhs = psi(po.dual_diamond_product(po.tchebyshev_poset(P), po.tchebyshev_poset(Q)))
            return _neq(lhs, rhs)
        yield _run(name, f"{lp} x {lq}", fn)
    rng = random.Random(seed)
    for i in range(10):
        u, v = ab.random_ab_poly(rng, 4), ab.random_ab_poly(rng, 4)
        yield _run(name, f"polynomial form #{i}", lambda u=u, v=v: _neq(
            tr.tcheb_T(qs.mix_M(u, v) * a), qs.mix_N_star(tr.tcheb_T(u * a), tr.tcheb_T(v * a))))

    def structure():
        T3 = po.tchebyshev_poset(po.boolean_algebra(3))
        if po.non_lattice_witness(T3) is None:
            return "T(B3) has no pair with two common upper covers"
        other = po.dual_diamond_product(po.tchebyshev_poset(po.boolean_algebra(2)),
                                        po.tchebyshev_poset(po.boolean_algebra(1)))
        if psi(T3) != psi(other):
            return "flag vectors of T(B3) and T(B2) dual-diamond T(B1) differ"
        counts = tuple(len(T3.level(k)) for k in (1, 2, 3))
        if counts != (6, 12, 8):
            return f"f-vector {counts} != (6, 12, 8)"
        faces = Counter(len(T3.lower_covers(x)) for x in T3.level(3))
        if faces != Counter({2: 3, 3: 2, 4: 3}):
            return f"2-cells by number of edges: {dict(faces)}"
        return None
    yield _run(name, "T(B3) structure", structure)


def _el_cases():
    for n in range(1, 5):
        yield f"B{n}", lab.natural_boolean_labeling(po.boolean_algebra(n))
    for n in range(0, 5):
        yield f"ladder{n}", lab.ladder_labeling(po.ladder(n))


def check_el_labeling(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "el-labeling"
    for label, L in _el_cases():
        def fn(L=L):
            if not lab.is_EL_labeling(L):
                return "input labeling is not EL"
            bad = lab.labeling_violation(lab.tcheb_labeling(L))
            return None if bad is None else f"T-labeling fails on [{bad[0]}, {bad[1]}]: {bad[2]}"
        yield _run(name, label, fn)


def check_jordan_holder(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "jordan-holder"
    for label, L in _el_cases():
        def fn(L=L):
            TL = lab.tcheb_labeling(L)
            if lab.jordan_holder(TL) != lab.signed_strings(lab.jordan_holder(L)):
                return "JH(T(P)) != JH(P)^{sb} o 0"
            if lab.ab_index_from_labeling(L) != psi(L.poset):
                return "descent words of JH(P) do not sum to Psi(P)"
            return None
        yield _run(name, label, fn)

    pairs = [("B2", "B1"), ("B1", "B1"), ("B2", "ladder1"), ("ladder2", "B1")]
    cases = dict(_el_cases())
    for l1, l2 in pairs:
        def fn(L1=cases[l1], L2=cases[l2]):
            PL = lab.product_labeling(L1, L2)
            if not lab.is_R_labeling(PL):
                return "product labeling is not an R-labeling"
            if lab.jordan_holder(PL) != lab.shuffle_sets(_tagged(L1, 1), _tagged(L2, 2)):
                return "JH(P1 x P2) is not the shuffle of the factors"
            T1, T2 = lab.tcheb_labeling(L1), lab.tcheb_labeling(L2)
            DL = lab.dual_diamond_labeling(T1, T2)
            expect = lab.append_zero(lab.shuffle_sets(lab.strip_zero(_tagged(T1, 1)),
                                                      lab.strip_zero(_tagged(T2, 2))))
            if lab.jordan_holder(DL) != expect:
                return "JH of the dual diamond product is not the zero-stripped shuffle"
            TPL = lab.tcheb_labeling(PL)
            if lab.jordan_holder(TPL) != lab.jordan_holder(DL):
                return "JH(T(P1 x P2)) != JH(T(P1) dual-diamond T(P2))"
            want = psi(DL.poset)
            if lab.ab_index_from_labeling(TPL) != want or psi(TPL.poset) != want:
                return "descent-word and flag-vector routes disagree"
            return None
        yield _run(name, f"{l1} x {l2}", fn)


def _tagged(L: lab.EdgeLabeling, i: int) -> Counter:
    return Counter({tuple(lab._tag(i, t) for t in s): m for s, m in lab.jordan_holder(L).items()})


def check_spectrum(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "spectrum"
    for n in range(0, min(max_rank, degree, 8) + 1):
        def fn(n=n):
            rep = spectral.verify_spectrum(n)
            return None if rep.ok else "; ".join(rep.failures)
        yield _run(name, f"degree {n}", fn)
    rng = random.Random(seed)
    for i in range(5):
        n1, n2 = rng.randint(0, 3), rng.randint(0, 3)
        v1, v2 = rng.choice(spectral.eigenbasis(n1)), rng.choice(spectral.eigenbasis(n2))

        def fn(v1=v1, v2=v2):
            m = qs.mix_M(v1.vector, v2.vector)
            if tr.tcheb_U(m) != v1.eigenvalue * v2.eigenvalue * m:
                return "M(u1, u2) is not an eigenvector for lambda1 lambda2"
            if tr.tcheb_U(e * v1.vector) != v1.eigenvalue * e * v1.vector:
                return "(a-b)u is not an eigenvector for lambda"
            return None
        yield _run(name, f"products of eigenvectors #{i}", fn)


def check_qsym_hopf(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "qsym-hopf"
    gate = _gated(name, max_rank, seed)
    if gate is not None:
        yield gate
        return

    def quasi_shuffle():
        comps = [()]
        for w in range(1, 7):
            for cuts in product((0, 1), repeat=w - 1):
                parts, cur = [], 1
                for cut in cuts:
                    if cut:
                        parts.append(cur)
                        cur = 1
                    else:
                        cur += 1
                comps.append(tuple(parts + [cur]))
        for x in comps:
            for y in comps:
                if sum(x) + sum(y) <= 7:
                    f, g = qs.QSymElem({x: 1}), qs.QSymElem({y: 1})
                    if f * g != qs.qsym_product_truncated(f, g):
                        return f"M{list(x)} M{list(y)} disagrees with the truncation oracle"
        return None
    yield _run(name, "quasi-shuffle vs truncation", quasi_shuffle)

    fam = family_suite(min(max_rank, 4), include_rank_zero=True)
    for label, P in fam:
        def fn(P=P):
            if qs.F(P) != qs.F_by_chains(P):
                return "F(P) differs from the multichain form"
            lhs = qs.tensor_normal(qs.qsym_coproduct(qs.F(P)))
            rhs = qs.tensor_normal(
                (qs.F(P.interval(P.bottom, x)), qs.F(P.interval(x, P.top))) for x in P.elements)
            if lhs != rhs:
                return "coproduct of F(P) is not the interval sum"
            if P.rho >= 1:
                u = psi(P)
                rel = [(qs.gamma(u), qs.QSymElem.one()), (qs.QSymElem.one(), qs.gamma(u))]
                rel += [(qs.gamma(x), qs.gamma(y)) for x, y in ab.coproduct(u)]
                if lhs != qs.tensor_normal(rel):
                    return "coproduct relation between Delta and gamma fails"
            return None
        yield _run(name, f"F({label})", fn)
    for (lp, P), (lq, Q) in product(fam, fam):
        if P.rho + Q.rho <= min(max_rank + 1, 6):
            yield _run(name, f"F({lp} x {lq})", lambda P=P, Q=Q: _neq(
                qs.F(po.cartesian_product(P, Q)), qs.F(P) * qs.F(Q)))

    rng = random.Random(seed)
    chars = tr.builtin_characters()
    for i in range(8):
        f1, f2 = random_qsym(rng, 3), random_qsym(rng, 2)

        def fn(f1=f1, f2=f2):
            U = qs.U_qsym
            if U(f1 * f2) != U(f1) * U(f2):
                return f"U is not multiplicative on {f1}, {f2}"
            lhs = qs.tensor_normal(qs.qsym_coproduct(U(f1 * f2)))
            rhs = qs.tensor_normal((U(x), U(y)) for x, y in qs.qsym_coproduct(f1 * f2))
            if lhs != rhs:
                return f"U does not commute with the coproduct on {f1 * f2}"
            for G in chars:
                g = qs.gtilde_qsym
                if g(G, f1 * f2) != g(G, f1) * g(G, f2):
                    return f"gtilde({G.name}) is not multiplicative on {f1}, {f2}"
            return None
        yield _run(name, f"random QSym pair #{i}", fn)
    yield _run(name, "U(1) = 1", lambda: _neq(qs.U_qsym(qs.QSymElem.one()), qs.QSymElem.one()))


def _g_tensor(G, expr):
    return qs.tensor_normal((qs.g_bqsym(G, x), qs.gtilde_qsym(G, y)) for x, y in expr)


def check_bqsym_comodule(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "bqsym-comodule"
    gate = _gated(name, max_rank, seed)
    if gate is not None:
        yield gate
        return
    fam = family_suite(min(max_rank, 4))
    chars = tr.builtin_characters()
    for label, P in fam:
        def fn(P=P):
            fb = qs.F_B(P)
            if fb != qs.F_B_by_intervals(P):
                return "F_B(P) differs from its interval form"
            lhs = qs.tensor_normal(qs.bqsym_coproduct(fb))
            rhs = qs.tensor_normal((qs.F_B(P.interval(P.bottom, x)), qs.F(P.interval(x, P.top)))
                                   for x in P.elements if x != P.bottom)
            if lhs != rhs:
                return "coaction on F_B(P) is not the interval sum"
            for G in chars:
                gf = qs.g_bqsym(G, fb)
                if qs.tensor_normal(qs.bqsym_coproduct(gf)) != _g_tensor(G, qs.bqsym_coproduct(fb)):
                    return f"g({G.name}) is not a comodule map on F_B(P)"
            card = tr.char_cardinality()
            want = qs.BQSymElem()
            for x in P.elements:
                if x != P.bottom:
                    want = want + qs.BQSymElem.from_qsym(
                        qs.gtilde_qsym(card, qs.F(P.interval(x, P.top))), P.rank[x] - 1)
            return _neq(qs.g_bqsym(card, fb), want)
        yield _run(name, f"F_B({label})", fn)
    for (lp, P), (lq, Q) in product(fam, fam):
        if P.rho + Q.rho <= min(max_rank + 1, 6):
            def fn(P=P, Q=Q):
                if psi(po.diamond_product(P, Q)) != qs.mix_N(psi(P), psi(Q)):
                    return "Psi(P diamond Q) != N(Psi(P), Psi(Q))"
                return _neq(qs.F_B(po.diamond_product(P, Q)), qs.F_B(P) * qs.F_B(Q))
            yield _run(name, f"F_B({lp} diamond {lq})", fn)
    rng = random.Random(seed)
    for i in range(6):
        f1, f2 = random_bqsym(rng, 3), random_bqsym(rng, 2)

        def fn(f1=f1, f2=f2):
            for G in chars:
                if qs.g_bqsym(G, f1 * f2) != qs.g_bqsym(G, f1) * qs.g_bqsym(G, f2):
                    return f"g({G.name}) is not multiplicative on {f1}, {f2}"
                lhs = qs.tensor_normal(qs.bqsym_coproduct(qs.g_bqsym(G, f1)))
                if lhs != _g_tensor(G, qs.bqsym_coproduct(f1)):
                    return f"g({G.name}) is not a comodule map on {f1}"
            return None
        yield _run(name, f"random BQSym pair #{i}", fn)


def check_chain_maps(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "chain-maps"
    gate = _gated(name, max_rank, seed)
    if gate is not None:
        yield gate
        return
    rng = random.Random(seed)
    one, card = tr.char_const_one(), tr.char_cardinality()
    chars = tr.builtin_characters()
    for i in range(10):
        u = ab.random_ab_poly(rng, min(degree, 6))

        def fn(u=u):
            if tr.chain_map_first(one, u) != u or tr.chain_map_second(one, u) != u:
                return f"const-one chain maps are not the identity on {u}"
            if tr.chain_map_first(card, u.star()).star() != tr.tcheb_T(u):
                return f"g(u*)* != T(u) for u = {u}"
            if tr.chain_map_second(card, u) != tr.tcheb_U(u):
                return f"gtilde != U on {u}"
            for G in chars:
                g = lambda x: tr.chain_map_first(G, x)
                gt = lambda x: tr.chain_map_second(G, x)
                if g(a * u) != e * g(u) + b * gt(u) or g(b * u) != b * gt(u):
                    return f"g({G.name}) letter relations fail on {u}"
                co = ab.coproduct(u)
                if ab.tensor_terms(ab.coproduct(gt(u))) != ab.tensor_terms(ab.tensor_map(co, gt, gt)):
                    return f"gtilde({G.name}) is not a coalgebra map on {u}"
                if ab.tensor_terms(ab.coproduct(g(u))) != ab.tensor_terms(ab.tensor_map(co, g, gt)):
                    return f"Delta g({G.name}) law fails on {u}"
            return None
        yield _run(name, f"random ab-polynomial #{i}", fn)

    cases = family_suite(min(max_rank, 4)) + random_posets(10, min(max_rank, 4), seed)
    for label, P in cases:
        def fn(P=P):
            u = psi(P)
            for G in chars:
                acc: dict[str, int] = Counter()
                for ch in P.chains():
                    weight = 1
                    for x, y in zip(ch, ch[1:]):
                        weight *= G(psi(P.interval(x, y)))
                    acc[ab._bword(P.rho, (P.rank[x] for x in ch[1:-1]), fill="e")] += weight
                if tr.chain_map_second(G, u) != ab.from_eb(acc):
                    return f"gtilde({G.name})(Psi(P)) differs from the chain formula"
            return None
        yield _run(name, f"chain formula {label}", fn)

    fam = family_suite(min(max_rank, 3))
    for (lp, P), (lq, Q) in product(fam, fam):
        def fn(P=P, Q=Q):
            m = psi(po.cartesian_product(P, Q))
            if m != qs.mix_M(psi(P), psi(Q)):
                return "Psi(P x Q) != M(Psi(P), Psi(Q))"
            for G in chars:
                if G(m) != G(psi(P)) * G(psi(Q)):
                    return f"{G.name} is not multiplicative"
            return None
        yield _run(name, f"characters on {lp} x {lq}", fn)

    for n in range(0, 6):
        def fn(n=n):
            Z = tr.char_zaslavsky()
            for w in ab.cd_words(n):
                v = ab.cd_to_ab(CdPoly.word(w))
                if tr.chain_map_first(Z, a * v) != ab.cd_to_ab(ab.omega(a * v)):
                    return f"g(a v) != omega(a v) for v = {w}"
                if tr.eta(v) != ab.nu(v):
                    return f"eta(v) != nu(v) for v = {w}"
            return None
        yield _run(name, f"zaslavsky on cd-words of degree {n}", fn)


def check_tcheb_polynomials(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    for n in range(1, max(degree, 1) + 1):
        yield _run("tcheb-polynomials", f"n={n}", lambda n=n: _neq(
            tr.tcheb_polynomial_check(n), tr.classical_chebyshev(n)))


def mobius_sum(P: po.Poset, r: int = 2) -> int:
    """sum over x of (1 - r)^rho(x) mu(0, x)."""
    return sum((1 - r) ** P.rank[x] * P.mobius(P.bottom, x) for x in P.elements)


def _character_cases(max_rank: int, seed: int):
    return family_suite(min(max_rank, 5)) + random_posets(100, min(max_rank, 4), seed)


def _character_mismatch(P: po.Poset) -> str | None:
    u = psi(P)
    if tr.char_zaslavsky()(u) != mobius_sum(P):
        return f"Z(Psi(P)) = {tr.char_zaslavsky()(u)}, Moebius sum = {mobius_sum(P)}"
    for r in (-1, 0, 2, 3, 5):
        if tr.char_r_signed(r)(u) != mobius_sum(P, r):
            return f"{r}-signed character differs from its Moebius sum"
    return None


@lru_cache(maxsize=None)
def character_gate(max_rank: int, seed: int) -> str | None:
    """None when the signed characters match the Moebius-sum oracle on every
    case, otherwise the first mismatch.  Checks that use them run only then."""
    for label, P in _character_cases(max_rank, seed):
        bad = _character_mismatch(P)
        if bad:
            return f"{label}: {bad}"
    return None


def _gated(name: str, max_rank: int, seed: int) -> VerifyReport | None:
    bad = character_gate(max_rank, seed)
    if bad is None:
        return None
    return VerifyReport(name, "character oracle", "fail", f"skipped, oracle failed at {bad}", 0.0)


def check_zaslavsky_character(max_rank: int, seed: int, degree: int) -> Iterator[VerifyReport]:
    name = "zaslavsky-character"
    for label, P in _character_cases(max_rank, seed):
        yield _run(name, label, lambda P=P: _character_mismatch(P))


CHECKS: dict[str, Callable[[int, int, int], Iterator[VerifyReport]]] = {
    "eulerian-preservation": check_eulerian_preservation,
    "psi-vs-poset": check_psi_vs_poset,
    "omega-equiv": check_omega_equiv,
    "recursions": check_recursions,
    "cartesian-diamond": check_cartesian_diamond,
    "el-labeling": check_el_labeling,
    "jordan-holder": check_jordan_holder,
    "spectrum": check_spectrum,
    "qsym-hopf": check_qsym_hopf,
    "bqsym-comodule": check_bqsym_comodule,
    "chain-maps": check_chain_maps,
    "tcheb-polynomials": check_tcheb_polynomials,
    "zaslavsky-character": check_zaslavsky_character,
}


def run_check(name: str, max_rank: int = DEFAULT_MAX_RANK, seed: int = DEFAULT_SEED,
              degree: int = DEFAULT_DEGREE) -> list[VerifyReport]:
    if name == "all":
        names = list(CHECKS)
    elif name in CHECKS:
        names = [name]
    else:
        raise UnknownCheck(f"unknown check {name!r}; choose from {', '.join([*CHECKS, 'all'])}")
    out = []
    for n in names:
        out.extend(CHECKS[n](max_rank, seed, degree))
    return out
