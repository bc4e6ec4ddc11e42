import pytest
from hypothesis import given, settings, strategies as st

from rfgrowth.errors import BudgetError
from rfgrowth.magnus import (
    TruncatedSeries,
    depth_doubling_check,
    doubling_word,
    expand,
    lcs_depth,
)
from rfgrowth.words import FREE2, Word, commutator, parse_word


def w(text):
    return parse_word(text, FREE2)


def test_expand_generator():
    s = expand(w("x"), cap=4)
    assert s.homogeneous(0) == {(): 1}
    assert s.homogeneous(1) == {(0,): 1}
    assert s.homogeneous(2) == {}


def test_expand_inverse_is_alternating_geometric():
    s = expand(w("x^-1"), cap=3)
    # 1 - X + X^2 - X^3
    assert s.homogeneous(1) == {(0,): -1}
    assert s.homogeneous(2) == {(0, 0): 1}
    assert s.homogeneous(3) == {(0, 0, 0): -1}


def test_expand_commutator_leading_term():
    s = expand(w("x y x^-1 y^-1"), cap=3)
    assert s.homogeneous(0) == {(): 1}
    assert s.lowest_degree() == 2
    assert s.homogeneous(2) == {(0, 1): 1, (1, 0): -1}


def test_expand_identity():
    assert expand(w(""), cap=5) == TruncatedSeries.one(5, 2)


def test_depth_of_generators_and_commutators():
    assert lcs_depth(w("x"), cap=4).depth == 1
    assert lcs_depth(w("x y x^-1 y^-1"), cap=4).depth == 2
    nested = commutator(w("x"), commutator(w("x"), w("y")))
    assert lcs_depth(nested, cap=4).depth == 3


def test_depth_report_describes_itself():
    rep = lcs_depth(w("x"), cap=4)
    assert rep.certified_nontrivial
    assert "depth 1" in rep.describe()


def test_doubling_words_lengths():
    assert len(doubling_word(1)) == 4
    assert len(doubling_word(2)) == 12
    assert len(doubling_word(3)) == 52


def test_doubling_word_recursion_structure():
    x, y = w("x"), w("y")
    u1 = doubling_word(1)
    assert u1 == w("x^-2 y^-1 x")
    u2 = doubling_word(2)
    assert u2 == commutator(u1.conjugate(x), u1.conjugate(y))


def test_doubling_word_budget():
    with pytest.raises(BudgetError):
        doubling_word(9, budget=6)


def test_measured_depths():
    report = depth_doubling_check(3, cap=8)
    assert report.outcome == "pass"
    assert report.depths() == (1, 3, 7)
    assert report.pair_ok


def test_lcs_depth_cap_budget():
    with pytest.raises(BudgetError):
        lcs_depth(w("x"), cap=40)


def test_expand_rank_limit():
    from rfgrowth.words import SURFACE4

    with pytest.raises(BudgetError):
        expand(parse_word("a1", SURFACE4), cap=3, rank_limit=2)
    s = expand(parse_word("a1 b2", SURFACE4), cap=2, rank_limit=4)
    assert s.homogeneous(1) == {(0,): 1, (3,): 1}


short_words = st.lists(
    st.tuples(st.integers(0, 1), st.sampled_from((1, -1))), max_size=6
).map(lambda ls: Word(FREE2, tuple(ls)))


@settings(max_examples=40, deadline=None)
@given(short_words, short_words)
def test_expand_is_multiplicative(u, v):
    cap = 4
    assert expand(u, cap) * expand(v, cap) == expand(u * v, cap)


@settings(max_examples=40, deadline=None)
@given(short_words)
def test_expand_inverse_multiplies_to_one(u):
    cap = 4
    assert expand(u, cap) * expand(~u, cap) == TruncatedSeries.one(cap, 2)
