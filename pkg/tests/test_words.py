import pytest
from hypothesis import given, strategies as st

from rfgrowth.words import (
    FREE2,
    LAMP,
    Alphabet,
    Word,
    commutator,
    free_reduce,
    generator,
    parse_word,
    parse_word_expr,
    word,
)


def w(text):
    return parse_word(text, FREE2)


def test_free_reduce_cancels_adjacent_inverses():
    assert free_reduce([(0, 1), (0, -1)]) == ()
    assert free_reduce([(0, 1), (1, 1), (1, -1), (0, -1)]) == ()
    assert free_reduce([(0, 1), (1, 1), (1, 1)]) == ((0, 1), (1, 1), (1, 1))


def test_word_auto_reduces():
    assert len(Word(FREE2, ((0, 1), (0, -1)))) == 0
    assert not Word(FREE2, ((0, 1), (0, -1)))


def test_parse_and_str_roundtrip():
    for text in ("x", "x y", "x^-1 y x", "x^3", "y^-2 x"):
        assert str(w(text)) == str(w(str(w(text))))


def test_parse_word_exponents():
    assert w("x^3") == w("x x x")
    assert parse_word("t^-2", LAMP) == parse_word("t^-1 t^-1", LAMP)


def test_parse_word_rejects_garbage():
    with pytest.raises(ValueError):
        w("z")
    with pytest.raises(ValueError):
        w("x^one")


def test_word_helper_matches_parse():
    assert word(FREE2, "x y^-1") == w("x y^-1")


def test_mul_and_invert():
    assert w("x") * w("y") == w("x y")
    assert w("x y") * ~w("y") == w("x")
    assert ~w("x y") == w("y^-1 x^-1")


def test_pow():
    assert w("x") ** 3 == w("x x x")
    assert w("x y") ** 0 == w("")
    assert w("x") ** -2 == w("x^-1 x^-1")


def test_conjugate():
    assert w("y").conjugate(w("x")) == w("x y x^-1")


def test_commutator():
    assert commutator(w("x"), w("y")) == w("x y x^-1 y^-1")
    assert commutator(w("x"), w("x")) == w("")


def test_exponent_sums():
    assert w("x y x^-1 y^-1").exponent_sums() == (0, 0)
    assert w("x^3 y^-1").exponent_sums() == (3, -1)


def test_generator():
    assert generator(FREE2, 1, -1) == w("y^-1")


def test_parse_word_expr_brackets():
    assert parse_word_expr("[x,y]", FREE2) == w("x y x^-1 y^-1")
    assert parse_word_expr("[x,[x,y]]^2", FREE2) == commutator(w("x"), commutator(w("x"), w("y"))) ** 2
    assert parse_word_expr("(x y)^-1", FREE2) == w("y^-1 x^-1")


def test_parse_word_expr_rejects_garbage():
    for bad in ("[x", "x,y", "[]", "x^", "(x"):
        with pytest.raises(ValueError):
            parse_word_expr(bad, FREE2)


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(("x", "x"))
    assert Alphabet(("a", "b", "c")).rank == 3


letters = st.lists(
    st.tuples(st.integers(0, 1), st.sampled_from((1, -1))), max_size=20
).map(tuple)


@given(letters)
def test_free_reduce_idempotent(ls):
    once = free_reduce(ls)
    assert free_reduce(once) == once


@given(letters)
def test_word_times_inverse_is_identity(ls):
    u = Word(FREE2, ls)
    assert not (u * ~u)
    assert not (~u * u)


@given(letters, letters, letters)
def test_word_multiplication_associative(a, b, c):
    u, v, s = Word(FREE2, a), Word(FREE2, b), Word(FREE2, c)
    assert (u * v) * s == u * (v * s)


@given(letters, letters)
def test_inverse_antihomomorphism(a, b):
    u, v = Word(FREE2, a), Word(FREE2, b)
    assert ~(u * v) == ~v * ~u
