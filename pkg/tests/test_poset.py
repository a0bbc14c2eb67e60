from collections import Counter
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from tchebyshev.abpoly import ab_index, flag_f_vector, to_cd, CdPoly
from tchebyshev.errors import (
    CycleDetected,
    MalformedLine,
    NotBounded,
    NotComparable,
    NotGraded,
    RankZeroInput,
    RankZeroOperand,
)
from tchebyshev.poset import (
    MINUS_ONE,
    boolean_algebra,
    cartesian_product,
    chain,
    crosspolytope,
    diamond_product,
    dual,
    dual_diamond_product,
    emit_poset,
    is_eulerian,
    ladder,
    lower_ends,
    non_lattice_witness,
    one_point,
    parse_poset,
    random_graded_poset,
    tchebyshev_poset,
)


def test_parse_two_element_chain():
    P = parse_poset("cover 0 1")
    assert P.rho == 1 and len(P) == 2
    assert (P.bottom, P.top) == ("0", "1")


def test_parse_square_is_b2():
    P = parse_poset("# square\n\ncover 0 x\ncover 0 y\ncover x 1\ncover y 1\n")
    assert P.rho == 2
    assert ab_index(P) == ab_index(boolean_algebra(2))


def test_parse_errors():
    with pytest.raises(NotGraded):
        parse_poset("cover 0 x\ncover x 1\ncover 0 1")
    with pytest.raises(NotBounded):
        parse_poset("cover 0 x\ncover 0 y")
    with pytest.raises(CycleDetected):
        parse_poset("cover 0 x\ncover x y\ncover y x\ncover y 1")
    with pytest.raises(MalformedLine):
        parse_poset("covers 0 1")
    with pytest.raises(MalformedLine):
        parse_poset("cover 0")


def test_elem_lines_and_isolated_element():
    assert len(parse_poset("elem z")) == 1
    with pytest.raises(NotBounded):
        parse_poset("elem z\ncover 0 1")


def test_emit_round_trip():
    for P in (boolean_algebra(3), crosspolytope(2), tchebyshev_poset(ladder(2))):
        Q = parse_poset(emit_poset(P))
        assert Q == P


def test_boolean_algebra_sizes():
    assert len(boolean_algebra(0)) == 1
    assert boolean_algebra(1).rho == 1 and len(boolean_algebra(1)) == 2
    for n in range(5):
        assert len(boolean_algebra(n)) == 2**n
    assert is_eulerian(boolean_algebra(3))
    assert flag_f_vector(boolean_algebra(2))[frozenset({1})] == 2


def test_ladder_shape():
    assert ab_index(ladder(0)) == ab_index(chain(1))
    assert ab_index(ladder(1)) == ab_index(boolean_algebra(2))
    L = ladder(3)
    assert L.rho == 4 and [len(L.level(k)) for k in range(5)] == [1, 2, 2, 2, 1]
    assert to_cd(ab_index(ladder(2))) == CdPoly.parse("1*cc")


def test_crosspolytope():
    C1 = crosspolytope(1)
    assert C1.rho == 2 and len(C1.atoms()) == 2
    assert to_cd(ab_index(crosspolytope(2))) == CdPoly.parse("1*cc + 2*d")
    assert crosspolytope(3).rho == 4 and is_eulerian(crosspolytope(3))
    assert len(crosspolytope(2)) == 10


def test_products():
    B1 = boolean_algebra(1)
    assert ab_index(cartesian_product(B1, B1)) == ab_index(boolean_algebra(2))
    assert ab_index(cartesian_product(boolean_algebra(2), B1)) == ab_index(boolean_algebra(3))
    P = crosspolytope(2)
    assert ab_index(cartesian_product(P, one_point())) == ab_index(P)
    assert ab_index(diamond_product(B1, B1)) == ab_index(B1)
    T2, T1 = tchebyshev_poset(boolean_algebra(2)), tchebyshev_poset(B1)
    assert ab_index(dual_diamond_product(T2, T1)) == ab_index(crosspolytope(3))


@given(st.integers(0, 10**6), st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_diamond_rank(s1, s2):
    P, Q = random_graded_poset(3, 2, s1), random_graded_poset(3, 2, s2)
    assert diamond_product(P, Q).rho == P.rho + Q.rho - 1
    assert dual_diamond_product(P, Q).rho == P.rho + Q.rho - 1


def test_diamond_rejects_rank_zero():
    with pytest.raises(RankZeroOperand):
        diamond_product(one_point(), boolean_algebra(1))
    with pytest.raises(RankZeroOperand):
        dual_diamond_product(boolean_algebra(1), one_point())


def test_dual():
    P = random_graded_poset(4, 3, 11)
    assert dual(dual(P)) == P
    assert dual(chain(1)).rho == 1
    assert ab_index(dual(P)) == ab_index(P).star()
    f, g = flag_f_vector(P), flag_f_vector(dual(P))
    n = P.rho
    for S, v in f.items():
        assert g[frozenset(n - s for s in S)] == v


def test_cartesian_associative_on_flag_vectors():
    A, B, C = ladder(1), chain(2), random_graded_poset(2, 2, 3)
    lhs = cartesian_product(cartesian_product(A, B), C)
    rhs = cartesian_product(A, cartesian_product(B, C))
    assert ab_index(lhs) == ab_index(rhs)


def test_mobius():
    B2 = boolean_algebra(2)
    assert B2.mobius("{1}", "{1}") == 1
    assert B2.mobius(B2.bottom, B2.top) == 1
    C = chain(1)
    assert C.mobius(C.bottom, C.top) == -1
    assert boolean_algebra(4).mobius("{}", "{1,2,3,4}") == 1
    assert chain(3).mobius("0", "3") == 0
    with pytest.raises(NotComparable):
        B2.mobius("{1}", "{2}")


def _mobius_by_definition(P, x, y):
    if x == y:
        return 1
    return -sum(_mobius_by_definition(P, x, z) for z in P.between(x, y) if z != y)


def test_mobius_matches_recursion():
    P = random_graded_poset(4, 3, 5)
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y):
                assert P.mobius(x, y) == _mobius_by_definition(P, x, y)


def test_eulerian_examples():
    assert all(is_eulerian(boolean_algebra(n)) for n in range(5))
    assert all(is_eulerian(ladder(n)) for n in range(5))
    assert not is_eulerian(chain(2))


def _eulerian_by_counting(P):
    for x in P.elements:
        for y in P.elements:
            if P.lt(x, y):
                ranks = Counter(P.rank[z] % 2 for z in P.between(x, y))
                if ranks[0] != ranks[1]:
                    return False
    return True


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_eulerian_matches_parity_count(seed):
    P = random_graded_poset(4, 2, seed)
    assert is_eulerian(P) == _eulerian_by_counting(P)


def test_tchebyshev_poset_examples():
    T1 = tchebyshev_poset(boolean_algebra(1))
    assert ab_index(T1) == ab_index(crosspolytope(1))
    T2 = tchebyshev_poset(boolean_algebra(2))
    assert ab_index(T2) == ab_index(crosspolytope(2))
    assert T2.bottom == f"[{MINUS_ONE},{{}}]"
    T3 = tchebyshev_poset(boolean_algebra(3))
    assert tuple(len(T3.level(k)) for k in (1, 2, 3)) == (6, 12, 8)
    assert 6 - 12 + 8 == 2
    with pytest.raises(RankZeroInput):
        tchebyshev_poset(one_point())


def test_tchebyshev_poset_ranks():
    P = random_graded_poset(4, 3, 2)
    T = tchebyshev_poset(P)
    assert T.rho == P.rho + 1
    for elem, (x, y) in lower_ends(T).items():
        assert T.rank[elem] == P.rank[y]
        assert x == MINUS_ONE or P.lt(x, y)


def test_t_b3_is_not_a_lattice():
    T3 = tchebyshev_poset(boolean_algebra(3))
    x, y, z1, z2 = non_lattice_witness(T3)
    assert z1 != z2 and {z1, z2} <= set(T3.upper_covers(x)) & set(T3.upper_covers(y))
    assert non_lattice_witness(boolean_algebra(3)) is None


@pytest.mark.parametrize("P", [boolean_algebra(2), boolean_algebra(3), ladder(2), crosspolytope(2),
                               random_graded_poset(4, 3, 8), random_graded_poset(3, 3, 9)])
def test_inverse_image_cardinality(P):
    T = tchebyshev_poset(P)
    ends = lower_ends(T)
    images = Counter()
    for ch in T.chains():
        image = tuple(ends[el][1] for el in ch[:-1]) + ("2",)
        images[image] += 1
    for ch in P.chains():
        c = ch + ("2",)
        want = prod(len(P.between(c[i - 1], c[i])) for i in range(1, len(c) - 1))
        assert images[c] == want


def test_random_poset_is_deterministic():
    assert random_graded_poset(4, 3, 42) == random_graded_poset(4, 3, 42)
    for seed in range(30):
        P = random_graded_poset(3, 4, seed)
        assert 1 <= P.rho <= 3
        assert parse_poset(emit_poset(P)) == P


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_eulerian_preserved_by_transform(seed):
    P = random_graded_poset(3, 2, seed)
    if is_eulerian(P):
        assert is_eulerian(tchebyshev_poset(P))
