import random

import pytest
from hypothesis import given, strategies as st

from gradedlie.exactnum import is_squarefree, minimal_polynomial, vec
from gradedlie.liealg import RootSystem, chevalley_basis, parse_type
from gradedlie.liealg.ops import (centralizer, is_nilpotent_element, is_semisimple_element,
                                  jordan_decomposition)

DIMS = {"A1": 3, "A2": 8, "A3": 15, "B2": 10, "B3": 21, "C3": 21, "G2": 14, "D4": 28, "F4": 52}


@pytest.mark.parametrize("t,dim", sorted(DIMS.items()))
def test_dimension_and_roots(t, dim):
    g = chevalley_basis(t)
    rs = RootSystem.of_type(t)
    assert g.dim == dim == rs.rank + 2 * len(rs.positive)
    assert g.check_antisymmetry()


@pytest.mark.parametrize("t", ["A1", "A2", "B2", "G2", "A3", "B3"])
def test_jacobi_exhaustive_small(t):
    assert chevalley_basis(t).check_jacobi()


@pytest.mark.parametrize("t", ["E6", "F4"])
def test_jacobi_sampled_large(t):
    assert chevalley_basis(t).check_jacobi(samples=300, seed=1)


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "C3"])
def test_structure_constants_integral(t):
    g = chevalley_basis(t)
    assert all(c == int(c) for row in g.table for entry in row for _, c in entry)


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_killing_form_nondegenerate(t):
    assert chevalley_basis(t).killing_matrix().det() != 0


def test_weyl_orders():
    for t, n in [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("F4", 1152)]:
        assert RootSystem.of_type(t).weyl_group_order() == n


def test_parse_type_rejects_nonsense():
    for bad in ["", "Z3", "A0", "E9", "A9"]:
        with pytest.raises(ValueError):
            parse_type(bad)


@given(st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_jordan_decomposition_sl3(coeffs):
    g = chevalley_basis("A2")
    x = vec(coeffs)
    xs, xn = jordan_decomposition(g, x)
    assert tuple(a + b for a, b in zip(xs, xn)) == x
    assert not any(g.bracket(xs, xn))
    assert is_nilpotent_element(g, xn)
    assert is_squarefree(minimal_polynomial(g.ad(xs)))


def test_centralizer_of_regular_semisimple_is_cartan():
    g = chevalley_basis("B2")
    h = vec([3, 1] + [0] * 8)
    assert is_semisimple_element(g, h)
    assert centralizer(g, [h]).dim == 2
