import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rfgrowth.errors import KernelBoundError
from rfgrowth.wreath import (
    WreathElement,
    ap_collapse,
    build_ap_matrix,
    integer_kernel_basis,
    is_prime,
    kernel_mod_p,
    lamp_cost,
    small_integer_kernel,
    wreath_word_length,
)


def test_identity_and_generators():
    e = WreathElement.identity(2)
    a = WreathElement.lamp(2)
    t = WreathElement.shift_gen(2)
    assert e.is_identity()
    assert not a.is_identity()
    assert a * a == e
    assert t * t.inverse() == e


def test_normalization_drops_dead_lamps():
    g = WreathElement(2, ((0, 2), (3, 1)), 0)
    assert g.lamps == ((3, 1),)
    z = WreathElement(0, ((1, 0),), 2)
    assert z.lamps == ()


def test_shift_moves_lamp_positions():
    a = WreathElement.lamp(2)
    t = WreathElement.shift_gen(2)
    conj = t * a * t.inverse()
    assert conj.lamps == ((1, 1),)
    assert conj.shift == 0


def test_pow_and_inverse():
    t = WreathElement.shift_gen(0)
    a = WreathElement.lamp(0)
    g = a * t
    assert g ** 0 == WreathElement.identity(0)
    assert g ** 3 == g * g * g
    assert g ** -2 == g.inverse() * g.inverse()


def test_lamp_cost_wraps_around_modulus():
    assert lamp_cost(4, 5) == 1
    assert lamp_cost(2, 5) == 2
    assert lamp_cost(-3, 0) == 3


def test_word_length_simple_cases():
    assert wreath_word_length(WreathElement.identity(2)) == 0
    assert wreath_word_length(WreathElement.lamp(2)) == 1
    assert wreath_word_length(WreathElement.shift_gen(2, 5)) == 5
    # lamp at +1 and return: t a t^-1 has length 3
    g = WreathElement(2, ((1, 1),), 0)
    assert wreath_word_length(g) == 3


def test_word_length_against_bfs():
    """Dual route: closed form vs breadth-first search over the Cayley graph."""
    for modulus in (2, 3, 0):
        gens = [
            WreathElement.lamp(modulus),
            WreathElement.lamp(modulus, coeff=-1),
            WreathElement.shift_gen(modulus, 1),
            WreathElement.shift_gen(modulus, -1),
        ]
        dist = {WreathElement.identity(modulus): 0}
        frontier = [WreathElement.identity(modulus)]
        for r in range(1, 7):
            new = []
            for g in frontier:
                for s in gens:
                    h = g * s
                    if h not in dist:
                        dist[h] = r
                        new.append(h)
            frontier = new
        for g, d in dist.items():
            assert wreath_word_length(g) == d


def test_build_ap_matrix_shape_and_content():
    for n in (2, 3, 4):
        a = build_ap_matrix(n)
        m = n * (n + 1)
        assert a.shape == (sum(range(1, n + 1)), m)
        assert a.dtype == np.int64
    a2 = build_ap_matrix(2)
    # modulus 1 progression: all-ones row; modulus 2: the two phases
    assert a2.tolist() == [
        [1, 1, 1, 1, 1, 1],
        [1, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 0, 1],
    ]


def test_kernel_mod_2_smallest_case():
    a = build_ap_matrix(2)
    cand = kernel_mod_p(a, 2, 2)
    assert cand.vector == (1, 0, 1, 0, 0, 0)
    assert all(s % 2 == 0 for s in (a @ np.array(cand.vector)))


def test_kernel_mod_p_rejects_composite():
    with pytest.raises(ValueError):
        kernel_mod_p(build_ap_matrix(2), 4, 2)


def test_is_prime_small():
    assert [p for p in range(2, 20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_kernel_candidate_element_and_length():
    cand = kernel_mod_p(build_ap_matrix(3), 2, 3)
    g = cand.element()
    assert g.modulus == 2
    assert sorted(p for p, _ in g.lamps) == [0, 1, 3, 4]
    assert wreath_word_length(g) == 12


def test_integer_kernel_basis_is_kernel():
    a = build_ap_matrix(3)
    basis = integer_kernel_basis(a)
    assert basis
    for v in basis:
        assert not (a @ np.array(v)).any()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_small_integer_kernel_entries(n):
    a = build_ap_matrix(n)
    cand = small_integer_kernel(a, n)
    m = n * (n + 1)
    assert not (a @ np.array(cand.vector)).any()
    assert max(abs(c) for c in cand.vector) <= m + 2
    # observed: the lattice actually contains +-1 vectors at these sizes
    assert max(abs(c) for c in cand.vector) == 1


def test_small_integer_kernel_bound_too_tight():
    with pytest.raises(KernelBoundError):
        small_integer_kernel(build_ap_matrix(2), 2, bound=0)


def test_ap_collapse_kills_candidate_in_small_shifts():
    cand = kernel_mod_p(build_ap_matrix(3), 2, 3)
    for r in (1, 2, 3):
        assert not any(ap_collapse(cand, r))
    assert any(ap_collapse(cand, 4))


def test_ap_collapse_modulus_validation():
    with pytest.raises(ValueError):
        ap_collapse(WreathElement.lamp(2), 0)


wreath_elems = st.builds(
    WreathElement,
    st.just(3),
    st.lists(
        st.tuples(st.integers(-3, 3), st.integers(0, 2)), max_size=4
    ).map(tuple),
    st.integers(-3, 3),
)


@settings(max_examples=60, deadline=None)
@given(wreath_elems, wreath_elems, wreath_elems)
def test_multiplication_associative(g, h, k):
    assert (g * h) * k == g * (h * k)


@settings(max_examples=60, deadline=None)
@given(wreath_elems)
def test_inverse_cancels(g):
    assert (g * g.inverse()).is_identity()
    assert (g.inverse() * g).is_identity()


@settings(max_examples=60, deadline=None)
@given(wreath_elems, wreath_elems)
def test_length_is_subadditive(g, h):
    assert wreath_word_length(g * h) <= wreath_word_length(g) + wreath_word_length(h)
