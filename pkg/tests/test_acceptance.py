"""Every acceptance criterion at full scale, exact arithmetic throughout.

Each test records one PASS/FAIL line, printed together at the end of the run.
"""

import random
import time
from collections import Counter
from math import comb

import pytest

from tchebyshev.abpoly import (
    AbPoly,
    CdPoly,
    a,
    ab_index,
    c2d_monomial_count,
    cd_to_ab,
    cd_words,
    is_c2d,
    omega,
    to_cd,
)
from tchebyshev.labelings import (
    is_EL_labeling,
    jordan_holder,
    labeling_violation,
    ladder_labeling,
    natural_boolean_labeling,
    signed_strings,
    tcheb_labeling,
)
from tchebyshev.poset import (
    boolean_algebra,
    cartesian_product,
    chain,
    crosspolytope,
    dual_diamond_product,
    is_eulerian,
    ladder,
    non_lattice_witness,
    random_graded_poset,
    tchebyshev_poset,
)
from tchebyshev.qsym import (
    BQSymElem,
    QSymElem,
    U_qsym,
    bqsym_coproduct,
    g_bqsym,
    gtilde_qsym,
    mix_M,
    mix_N_star,
    qsym_coproduct,
    tensor_normal,
)
from tchebyshev.spectral import verify_spectrum
from tchebyshev.transforms import (
    builtin_characters,
    chain_map_first,
    chain_map_second,
    char_cardinality,
    char_const_one,
    char_zaslavsky,
    classical_chebyshev,
    tcheb_polynomial_check,
    tcheb_T,
    tcheb_U,
)
from tchebyshev.verify import mobius_sum

SEED = 20240607


def family():
    """Named family posets of positive rank.  B_0 is the one-point poset, whose
    transform and ab-index are undefined, so it is left out."""
    out = [(f"B{n}", boolean_algebra(n)) for n in range(1, 5)]
    out += [(f"ladder{n}", ladder(n)) for n in range(5)]
    out += [(f"cross{n}", crosspolytope(n)) for n in (1, 2, 3)]
    out += [(f"chain{n}", chain(n)) for n in range(1, 5)]
    return out


def random_posets(count, max_rank=4, width=3):
    return [(f"random#{s}", random_graded_poset(max_rank, width, SEED + s)) for s in range(count)]


def random_ab(rng, degree, terms=3):
    return AbPoly([("".join(rng.choice("ab") for _ in range(degree)), rng.randint(-5, 5))
                   for _ in range(terms)])


def random_comp(rng, weight):
    parts, left = [], weight
    while left:
        p = rng.randint(1, left)
        parts.append(p)
        left -= p
    return tuple(parts)


def random_qsym(rng, max_weight):
    return QSymElem({random_comp(rng, rng.randint(0, max_weight)): rng.randint(-4, 4)
                     for _ in range(rng.randint(1, 3))})


def random_bqsym(rng, max_weight):
    out = {}
    for _ in range(rng.randint(1, 3)):
        p = rng.randint(0, max_weight)
        out[(p, random_comp(rng, rng.randint(0, max_weight - p)))] = rng.randint(-4, 4)
    return BQSymElem(out)


def test_criterion_1_poset_polynomial_agreement(criterion):
    start = time.perf_counter()
    bad = [name for name, P in family() + random_posets(50)
           if ab_index(tchebyshev_poset(P)) != tcheb_T(ab_index(P) * a)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= 30
    criterion(1, ok, f"Psi(T(P)) = T(Psi(P) a) on {len(family()) + 50} posets, {elapsed:.2f}s, bad={bad}")
    assert ok


def test_criterion_2_eulerian_preservation(criterion):
    eulerian = [(n, P) for n, P in family() if P.rho <= 4 and is_eulerian(P)]
    bad = [n for n, P in eulerian if not is_eulerian(tchebyshev_poset(P))]
    ok = not bad and len(eulerian) >= 10
    criterion(2, ok, f"{len(eulerian)} Eulerian posets, bad={bad}")
    assert ok


def test_criterion_3_omega_equivalence(criterion):
    bad, checked = [], 0
    for n in range(7):
        for w in cd_words(n):
            checked += 1
            v = cd_to_ab(CdPoly.word(w))
            lhs = tcheb_T(v * a)
            if lhs != cd_to_ab(omega(a * v.star())).star():
                bad.append((w, "omega"))
                continue
            cd = to_cd(lhs)
            if not is_c2d(cd) or any(k < 0 for _, k in cd.items()):
                bad.append((w, "c-2d/sign"))
            if c2d_monomial_count(cd) != 2 ** len(w):
                bad.append((w, "count"))
    ok = not bad
    criterion(3, ok, f"{checked} cd-words of degree <= 6, bad={bad[:3]}")
    assert ok


def test_criterion_4_crosspolytope(criterion):
    results = {n: to_cd(ab_index(tchebyshev_poset(boolean_algebra(n)))) == to_cd(ab_index(crosspolytope(n)))
               for n in (1, 2, 3)}
    ok = all(results.values())
    criterion(4, ok, f"cd(T(B_n)) = cd(C_n): {results}")
    assert ok


def test_criterion_5_tchebyshev_polynomials(criterion):
    bad = [n for n in range(1, 9) if tcheb_polynomial_check(n) != classical_chebyshev(n)]
    # spot values fixed from the classical recurrences
    assert classical_chebyshev(8)[0] == [1, 0, -32, 0, 160, 0, -256, 0, 128]
    assert classical_chebyshev(8)[1] == [0, -8, 0, 80, 0, -192, 0, 128]
    ok = not bad
    criterion(5, ok, f"T_n and U_(n-1) for n = 1..8, bad={bad}")
    assert ok


def test_criterion_6_spectrum(criterion):
    details, ok = [], True
    for n in range(9):
        start = time.perf_counter()
        rep = verify_spectrum(n)
        elapsed = time.perf_counter() - start
        expected = {2 ** (i + 1): comb(n, i) for i in range(n + 1)}
        good = (rep.ok and rep.rank == 2**n and rep.trace == 2 * 3**n
                and rep.multiplicities == expected)
        if n == 8:
            good = good and elapsed <= 60
            details.append(f"n=8 in {elapsed:.1f}s")
        ok = ok and good
        if not good:
            details.append(f"n={n}: {rep.failures}")
    criterion(6, ok, "; ".join(details))
    assert ok


def test_criterion_7_cartesian_dual_diamond(criterion):
    fam = family()
    bad, pairs = [], 0
    for np_, P in fam:
        for nq, Q in fam:
            if P.rho + Q.rho <= 5:
                pairs += 1
                lhs = ab_index(tchebyshev_poset(cartesian_product(P, Q)))
                rhs = ab_index(dual_diamond_product(tchebyshev_poset(P), tchebyshev_poset(Q)))
                if lhs != rhs:
                    bad.append((np_, nq))

    rng = random.Random(SEED)
    for _ in range(40):
        u, v = random_ab(rng, rng.randint(0, 4)), random_ab(rng, rng.randint(0, 4))
        if tcheb_T(mix_M(u, v) * a) != mix_N_star(tcheb_T(u * a), tcheb_T(v * a)):
            bad.append((str(u), str(v)))

    T3 = tchebyshev_poset(boolean_algebra(3))
    witness = non_lattice_witness(T3)
    structural = witness is not None and T3.top not in witness[2:]
    T2, T1 = tchebyshev_poset(boolean_algebra(2)), tchebyshev_poset(boolean_algebra(1))
    structural = structural and ab_index(T3) == ab_index(dual_diamond_product(T2, T1))
    levels = tuple(len(T3.level(k)) for k in (1, 2, 3))
    shapes = Counter(sum(1 for x in T3.level(1) if T3.lt(x, f)) for f in T3.level(3))
    structural = structural and levels == (6, 12, 8) and shapes == Counter({2: 3, 3: 2, 4: 3})

    ok = not bad and structural
    criterion(7, ok, f"{pairs} family pairs + 40 random (u, v); T(B3) witness {witness}, "
                     f"f-vector {levels}, faces {dict(shapes)}; bad={bad[:3]}")
    assert ok


def _el_inputs():
    out = [(f"B{n}", natural_boolean_labeling(boolean_algebra(n))) for n in range(1, 5)]
    out += [(f"ladder{n}", ladder_labeling(ladder(n))) for n in range(5)]
    return out


def test_criterion_8_jordan_holder(criterion):
    bad = [name for name, L in _el_inputs()
           if not is_EL_labeling(L) or jordan_holder(tcheb_labeling(L)) != signed_strings(jordan_holder(L))]
    ok = not bad
    criterion("8a", ok, f"JH(T(P)) = JH(P)^sb o 0 on {len(_el_inputs())} labeled posets, bad={bad}")
    assert ok


@pytest.mark.xfail(strict=True, reason="the signed labeling of T(P) has two rising chains in "
                   "[[*,{}],[{},{1,2}]] already for P = B_2; see the decisions ledger")
def test_criterion_8_el_shellability(criterion):
    failures = {}
    for name, L in _el_inputs():
        v = labeling_violation(tcheb_labeling(L))
        if v is not None:
            failures[name] = v
    ok = not failures
    first = next(iter(failures.items()), None)
    criterion("8b", ok, f"is_EL_labeling(tcheb_labeling) fails on {sorted(failures)}; first: {first}")
    assert ok


@pytest.fixture(scope="module")
def character_oracle():
    """Names of posets where the Zaslavsky closed form misses the Moebius sum."""
    Z = char_zaslavsky()
    return [name for name, P in family() + random_posets(100) if Z(ab_index(P)) != mobius_sum(P)]


def test_criterion_9_hopf_endomorphisms(criterion, character_oracle):
    if character_oracle:
        criterion(9, False, f"not run: character oracle failed on {character_oracle}")
        pytest.fail("character oracle failed")
    rng = random.Random(SEED)
    chars = builtin_characters()
    bad = []
    for i in range(25):
        f = random_qsym(rng, 3)
        g = random_qsym(rng, 5 - max(f.degree(), 0))
        if U_qsym(f * g) != U_qsym(f) * U_qsym(g):
            bad.append(("U product", i))
        h = f * g
        lhs = tensor_normal(qsym_coproduct(U_qsym(h)))
        if lhs != tensor_normal((U_qsym(x), U_qsym(y)) for x, y in qsym_coproduct(h)):
            bad.append(("U coproduct", i))
        for G in chars:
            if gtilde_qsym(G, f * g) != gtilde_qsym(G, f) * gtilde_qsym(G, g):
                bad.append(("gtilde", G.name, i))
        fb, gb = random_bqsym(rng, 3), random_bqsym(rng, 2)
        for G in chars:
            if g_bqsym(G, fb * gb) != g_bqsym(G, fb) * g_bqsym(G, gb):
                bad.append(("g product", G.name, i))
            lhs = tensor_normal(bqsym_coproduct(g_bqsym(G, fb)))
            rhs = tensor_normal((g_bqsym(G, x), gtilde_qsym(G, y)) for x, y in bqsym_coproduct(fb))
            if lhs != rhs:
                bad.append(("g comodule", G.name, i))
    ok = not bad
    criterion(9, ok, f"25 random pairs x {len(chars)} characters, bad={bad[:3]}")
    assert ok


def test_criterion_10_zaslavsky_oracle(criterion, character_oracle):
    bad = character_oracle
    ok = not bad
    criterion(10, ok, f"Z(Psi(P)) = sum (-1)^rho(x) mu(0,x) on {len(family()) + 100} posets, bad={bad}")
    assert ok


def test_criterion_11_chain_map_degenerations(criterion):
    rng = random.Random(SEED)
    one, card = char_const_one(), char_cardinality()
    bad = []
    for i in range(60):
        u = random_ab(rng, rng.randint(0, 6)) + random_ab(rng, rng.randint(0, 6), 1)
        if chain_map_first(one, u) != u or chain_map_second(one, u) != u:
            bad.append(("identity", i))
        if chain_map_first(card, u.star()).star() != tcheb_T(u):
            bad.append(("g = T", i))
        if chain_map_second(card, u) != tcheb_U(u):
            bad.append(("gtilde = U", i))
    ok = not bad
    criterion(11, ok, f"60 random inputs of degree <= 6, bad={bad[:3]}")
    assert ok
