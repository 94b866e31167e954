import pytest

from conftest import example
from gradedlie.weyl import (HypothesisError, MatrixGroup, check_conjugation_equivalence,
                            circ_equals_reg, gamma_p, little_weyl_maximal_rank,
                            little_weyl_hyperplanes,
                            little_weyl_user, same_W_family, same_gC_family, stabilizer,
                            validate_reflection_group, verify_central, weyl_of_centralizer)
from gradedlie.exactnum import CycloField, ExactMatrix
from gradedlie.grading import KacSpec, grade_from_kac
from gradedlie.cartan import cartan_subspace

CASES = [("A1", (1, 1), 2, 2), ("A2", (1, 1, 1), 3, 2), ("A1", (1, 0), 2, 2),
         ("A2", (1, 0, 0), 6, 3), ("B2", (1, 0, 0), 8, 4), ("G2", (1, 0, 1), 6, None)]


@pytest.mark.parametrize("t,kac,order,nstrata", CASES)
def test_orders_and_strata(t, kac, order, nstrata):
    G, hs, S, W, sts = example(t, kac)
    assert W.order == order
    assert W.is_reflection_group()
    if nstrata is not None:
        assert len(sts) == nstrata
    assert check_conjugation_equivalence(W, sts)
    assert all(circ_equals_reg(G, hs, W, st, weights=S)[0] for st in sts)


@pytest.mark.parametrize("t,kac", [c[:2] for c in CASES[:5]])
def test_central_theorem_and_centralizer_weyl(t, kac):
    G, hs, S, W, sts = example(t, kac)
    rep = verify_central(G, hs, W, sts, pairs=5)
    assert rep["pass"]
    for st in sts:
        _, equal = weyl_of_centralizer(G, hs, W, st.representative)
        assert equal
        Gam = gamma_p(W, st)
        assert Gam.order * st.stabilizer.order == W.normalizer(st.stabilizer).order


def test_families(sl3_m3):
    G, hs, S, W, sts = sl3_m3
    p, q = sts[0].representative, sts[1].representative
    assert same_W_family(W, p, p) and not same_W_family(W, p, q)
    assert same_gC_family(G, hs, W, p, p) is True
    assert same_gC_family(G, hs, W, p, q) is False


def test_not_maximal_rank_is_reported():
    G = grade_from_kac(KacSpec("A3", (1, 1, 0, 0)))
    with pytest.raises(HypothesisError):
        little_weyl_maximal_rank(G, cartan_subspace(G).basis)


def test_user_generators():
    K = CycloField(3)
    W = little_weyl_user([ExactMatrix([[K.omega(1)]])])
    assert W.order == 3 and W.is_reflection_group()
    assert stabilizer(W, (K(0),)).order == 3


def test_group_cap():
    from gradedlie.weyl import GroupOrderExceeded
    K = CycloField(12)
    with pytest.raises(GroupOrderExceeded):
        MatrixGroup(1, [ExactMatrix([[K.omega(1)]])], cap=5)


@pytest.mark.parametrize("t,kac", [c[:2] for c in CASES])
def test_hyperplane_generated_group_matches(t, kac):
    G, hs, S, W, _ = example(t, kac)
    W2 = little_weyl_hyperplanes(G, hs, validate=True, weights=S)
    assert W2.same_elements(W)
