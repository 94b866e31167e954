import random

import pytest
from hypothesis import given, strategies as st

from gradedlie.exactnum import lincomb, vec
from gradedlie.grading import (GradingError, KacSpec, check_automorphism, grade_from_kac,
                               graded_centralizer, graded_jordan, grading_from_theta,
                               shift_grading)
from gradedlie.liealg.ops import is_nilpotent_element, jordan_decomposition

KAC = [("A1", (1, 1)), ("A2", (1, 1, 1)), ("A2", (0, 1, 1)), ("B2", (1, 0, 1)),
       ("G2", (0, 1, 0)), ("A3", (1, 1, 0, 0)), ("B2", (1, 0, 0))]


@pytest.mark.parametrize("t,kac", KAC)
def test_theta_is_automorphism_of_order_m(t, kac):
    G = grade_from_kac(KacSpec(t, kac))
    check_automorphism(G.algebra, G.theta, G.m)
    assert sum(G.dims()) == G.dim
    H = grading_from_theta(G.algebra, G.theta, G.m, G.field)
    assert H.same_grading(G)


def test_kac_dims():
    assert grade_from_kac(KacSpec("A1", (1, 1))).dims() == [1, 2]
    assert grade_from_kac(KacSpec("A2", (1, 1, 1))).dims() == [2, 3, 3]
    assert grade_from_kac(KacSpec("A2", (1, 0, 0))).dims() == [8]


def test_bad_kac_rejected():
    for t, kac in [("A2", (1, 1)), ("A2", (0, 0, 0)), ("A2", (1, -1, 1))]:
        with pytest.raises(GradingError):
            KacSpec(t, kac)


def test_shift_is_still_a_grading():
    G = grade_from_kac(KacSpec("A2", (1, 1, 1)))
    H = shift_grading(G, 1)
    assert sorted(H.dims()) == sorted(G.dims())


@given(st.sampled_from(KAC[:5]), st.integers(0, 10 ** 6))
def test_graded_jordan_parts_homogeneous(tk, seed):
    G = grade_from_kac(KacSpec(*tk))
    rng = random.Random(seed)
    B = G.component(1).basis
    x = lincomb([rng.randint(-3, 3) for _ in B], B, G.dim)
    xs, xn = graded_jordan(G, x)
    assert G.is_homogeneous(xs, 1) and G.is_homogeneous(xn, 1)
    assert (xs, xn) == jordan_decomposition(G.algebra, x)
    assert is_nilpotent_element(G.algebra, xn)


def test_graded_jordan_rejects_inhomogeneous():
    G = grade_from_kac(KacSpec("A1", (1, 1)))
    with pytest.raises(GradingError):
        graded_jordan(G, vec([1, 1, 0]))


def test_graded_centralizer_pieces(sl3_m3):
    G, hs, *_ = sl3_m3
    gc = graded_centralizer(G, hs)
    assert sum(gc.degree_dims()) == gc.z.dim
    assert gc.center_pieces[1].dim == 1
