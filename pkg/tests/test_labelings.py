from collections import Counter
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from tchebyshev.abpoly import ab_index
from tchebyshev.errors import BadParameter, MalformedLine, NotComparable
from tchebyshev.labelings import (
    ZERO,
    EdgeLabeling,
    Label,
    _tag,
    ab_index_from_labeling,
    append_zero,
    descent_word,
    dual_diamond_labeling,
    emit_labeling,
    is_EL_labeling,
    is_R_labeling,
    jordan_holder,
    labeling_violation,
    ladder_labeling,
    natural_boolean_labeling,
    parse_labeling,
    product_labeling,
    shuffle,
    shuffle_sets,
    signed_strings,
    strip_zero,
    tcheb_labeling,
)
from tchebyshev.poset import (
    MINUS_ONE,
    boolean_algebra,
    chain,
    interval_id,
    ladder,
    parse_poset,
    tchebyshev_poset,
)


def _labelings():
    out = [natural_boolean_labeling(boolean_algebra(n)) for n in range(1, 5)]
    out += [ladder_labeling(ladder(n)) for n in range(1, 5)]
    return out


@pytest.mark.parametrize("L", _labelings())
def test_standard_labelings_are_EL(L):
    assert is_EL_labeling(L) and is_R_labeling(L)
    assert ab_index_from_labeling(L) == ab_index(L.poset)


def test_boolean_jordan_holder_is_all_permutations():
    JH = jordan_holder(natural_boolean_labeling(boolean_algebra(3)))
    assert len(JH) == factorial(3) and set(JH.values()) == {1}
    assert (1, 2, 3) in JH and (3, 2, 1) in JH


def test_ladder_labels():
    L = ladder_labeling(ladder(2))
    assert L("1L", "2L") == 2 and L("1R", "2R") == 4 and L("2L", L.poset.top) == 3


def test_constant_labeling_is_not_R():
    B2 = boolean_algebra(2)
    L = EdgeLabeling(B2, {cv: "x" for cv in B2.covers}, ["x"])
    assert not is_R_labeling(L)
    x, y, reason = labeling_violation(L)
    assert (x, y) == (B2.bottom, B2.top) and reason == "2 rising chains"


def test_R_but_not_EL():
    # rising chain exists and is unique but is not lexicographically first
    P = parse_poset("cover 0 x\ncover 0 y\ncover x 1\ncover y 1")
    labels = {("0", "x"): 2, ("x", "1"): 3, ("0", "y"): 1, ("y", "1"): 0}
    L = EdgeLabeling(P, labels, [0, 1, 2, 3])
    assert is_R_labeling(L) and not is_EL_labeling(L)


def test_labeling_validation():
    B1 = boolean_algebra(1)
    with pytest.raises(BadParameter):
        EdgeLabeling(B1, {}, [1])
    with pytest.raises(BadParameter):
        EdgeLabeling(B1, {("{}", "{1}"): 1}, [2])
    with pytest.raises(BadParameter):
        EdgeLabeling(B1, {("{}", "{1}"): 1}, [1, 1])
    with pytest.raises(BadParameter):
        is_EL_labeling(natural_boolean_labeling(boolean_algebra(4)), rank_cap=3)


def test_descent_word():
    assert descent_word([1, 3, 2]) == "ab"
    assert descent_word([1]) == ""
    assert descent_word([2, 2]) == "a"
    with pytest.raises(BadParameter):
        descent_word([])


def test_jordan_holder_subinterval():
    L = natural_boolean_labeling(boolean_algebra(3))
    assert jordan_holder(L, "{1}", "{1,2,3}") == Counter({(2, 3): 1, (3, 2): 1})
    with pytest.raises(NotComparable):
        jordan_holder(L, "{1}", "{2}")


@given(st.lists(st.integers(0, 3), max_size=4), st.lists(st.integers(4, 6), max_size=4))
@settings(max_examples=50, deadline=None)
def test_shuffle_count_and_order(x, y):
    sh = shuffle(x, y)
    assert len(sh) == comb(len(x) + len(y), len(x))
    for s in sh:
        assert [t for t in s if t <= 3] == x and [t for t in s if t >= 4] == y


def test_shuffle_sets_multiset():
    out = shuffle_sets(Counter({(1,): 2}), [(2,)])
    assert out == Counter({(1, 2): 2, (2, 1): 2})


def test_signed_strings_and_zero():
    JH = Counter({(1, 2): 1})
    s = signed_strings(JH)
    assert len(s) == 4 and all(seq[-1] == ZERO for seq in s)
    assert strip_zero(append_zero(JH)) == JH
    with pytest.raises(BadParameter):
        strip_zero(Counter({(1,): 1}))
    assert str(Label(3, "s")) == "3^s" and str(ZERO) == "0"


@pytest.mark.parametrize("L", _labelings())
def test_transform_jordan_holder(L):
    TL = tcheb_labeling(L)
    assert jordan_holder(TL) == signed_strings(jordan_holder(L))
    assert ab_index_from_labeling(TL) == ab_index(TL.poset)


def test_transform_labeling_counterexample():
    # the faithful signed labeling of T(B_2) has two rising chains in one interval
    TL = tcheb_labeling(natural_boolean_labeling(boolean_algebra(2)))
    lo, hi = interval_id(MINUS_ONE, "{}"), interval_id("{}", "{1,2}")
    chains = jordan_holder(TL, lo, hi)
    assert chains == Counter({(Label(1, "s"), Label(2, "b")): 1, (Label(2, "s"), Label(1, "b")): 1})
    assert not is_R_labeling(TL)


def test_transform_labeling_on_B1_is_EL():
    TL = tcheb_labeling(natural_boolean_labeling(boolean_algebra(1)))
    assert is_EL_labeling(TL)


def _tagged(i, JH):
    return Counter({tuple(_tag(i, t) for t in seq): m for seq, m in JH.items()})


def test_product_labeling():
    L1 = natural_boolean_labeling(boolean_algebra(1))
    L2 = natural_boolean_labeling(boolean_algebra(2))
    LP = product_labeling(L1, L2)
    assert is_EL_labeling(LP)
    assert jordan_holder(LP) == shuffle_sets(_tagged(1, jordan_holder(L1)), _tagged(2, jordan_holder(L2)))
    assert ab_index_from_labeling(LP) == ab_index(boolean_algebra(3))


@pytest.mark.parametrize("n1,n2", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_dual_diamond_labeling_jordan_holder(n1, n2):
    L1 = tcheb_labeling(natural_boolean_labeling(boolean_algebra(n1)))
    L2 = tcheb_labeling(natural_boolean_labeling(boolean_algebra(n2)))
    D = dual_diamond_labeling(L1, L2)
    JH1, JH2 = strip_zero(jordan_holder(L1)), strip_zero(jordan_holder(L2))
    want = append_zero(shuffle_sets(_tagged(1, JH1), _tagged(2, JH2)))
    assert jordan_holder(D) == want


def test_labeling_text_round_trip():
    P = parse_poset("cover 0 x\ncover 0 y\ncover x 1\ncover y 1")
    text = "order p q r\nlabel 0 x p\nlabel x 1 q\nlabel 0 y q\nlabel y 1 p\n"
    L = parse_labeling(text, P)
    assert is_EL_labeling(L)
    assert parse_labeling(emit_labeling(L), P).labels == L.labels
    with pytest.raises(MalformedLine):
        parse_labeling("label 0 x p", P)
    with pytest.raises(MalformedLine):
        parse_labeling("order p\nlabel 0 x", P)
    with pytest.raises(BadParameter):
        parse_labeling("order p\nlabel 0 x p", P)


def test_chain_labeling():
    C = chain(3)
    L = EdgeLabeling(C, {cv: i for i, cv in enumerate(sorted(C.covers))}, [0, 1, 2])
    assert is_EL_labeling(L)
    assert ab_index_from_labeling(L) == ab_index(C)
