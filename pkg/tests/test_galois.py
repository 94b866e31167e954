import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import example
from gradedlie.exactnum import ExactMatrix, vec
from gradedlie.galois import (EmbeddingError, GammaGroup, RealStructureError, coboundaries,
                              compact_real_structure, gamma_action_by_permutations,
                              gamma_action_on_weyl, h1,
                              induced_kernel, real_cartan_check, real_orbit_count,
                              real_orbit_report, real_point_decision, split_real_structure)
from gradedlie.grading import KacSpec, grade_from_kac
from gradedlie.weyl import hyperplane_reflections


def test_h1_small_groups():
    assert len(h1(GammaGroup.trivial())) == 1
    assert len(h1(GammaGroup.cyclic(2))) == 2
    assert len(h1(GammaGroup.cyclic(3, "inversion"))) == 1
    assert len(h1(GammaGroup.symmetric(3))) == 2
    assert len(h1(GammaGroup.cyclic(4))) == 2


def product_group(ns):
    els = list(itertools.product(*[range(n) for n in ns]))
    idx = {e: i for i, e in enumerate(els)}
    table = [[idx[tuple((a + b) % n for a, b, n in zip(x, y, ns))] for y in els] for x in els]
    return GammaGroup.from_table(table), els


@given(st.lists(st.integers(1, 6), min_size=1, max_size=3))
def test_abelian_trivial_twist_counts_involutions(ns):
    A, els = product_group(ns)
    H = h1(A)
    invol = [x for x in range(A.n) if A.mul(x, x) == 0]
    assert len(H) == len(invol)
    assert sorted(H.class_map) == invol


@given(st.integers(1, 12), st.sampled_from(["trivial", "inversion"]))
def test_cocycles_partitioned(n, twist):
    A = GammaGroup.cyclic(n, twist)
    H = h1(A)
    for z in H.representatives:
        assert A.mul(z, A.twist[z]) == 0
    flat = sorted(z for c in H.classes for z in c)
    assert flat == sorted(H.class_map)
    assert len(set(flat)) == len(flat)
    assert real_orbit_count(A, A) == 1


def test_induced_kernel_examples():
    C4 = GammaGroup.cyclic(4)
    C2 = C4.subgroup([0, 2])
    assert induced_kernel(C2, C4) == [0]
    assert induced_kernel(C4, C4) == [0]
    assert induced_kernel(C4.subgroup([0]), C4) == [0]


def test_functoriality_nested():
    C8 = GammaGroup.cyclic(8, "inversion")
    C4 = C8.subgroup([0, 2, 4, 6])
    C2 = C8.subgroup([0, 4])
    killed_in_C4 = induced_kernel(C2, C4, embed=[0, 2])
    killed_in_C8 = induced_kernel(C2, C8)
    assert set(killed_in_C4) <= set(killed_in_C8)


def test_non_equivariant_embedding():
    A = GammaGroup.cyclic(3)
    B = GammaGroup.cyclic(3, "inversion")
    with pytest.raises(EmbeddingError):
        induced_kernel(A, B, embed=[0, 1, 2])


def test_bad_twist_rejected():
    with pytest.raises(ValueError):
        GammaGroup.from_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]], twist=[0, 2, 2])


@pytest.mark.parametrize("t,kac", [("A1", (1, 1)), ("A2", (1, 1, 1)), ("B2", (1, 0, 1)),
                                   ("G2", (1, 0, 1)), ("A3", (1, 1, 0, 0))])
def test_real_structures(t, kac):
    G = grade_from_kac(KacSpec(t, kac))
    R = split_real_structure(G)
    assert all(R.checks().values())
    assert (R.conjugate_matrix(G.theta) @ G.theta).is_identity()
    C = compact_real_structure(G)
    assert all(C.checks().values())
    assert C.conjugate_matrix(G.theta) == G.theta


def test_split_fixes_basis():
    G = grade_from_kac(KacSpec("A1", (1, 1)))
    R = split_real_structure(G)
    for i in range(3):
        v = G.algebra.basis_vector(i)
        assert R(v) == v


def test_real_cartan_check(sl2_m2, sl3_m3):
    for G, hs, *_ in (sl2_m2, sl3_m3):
        R = split_real_structure(G)
        assert real_cartan_check(R, hs)
        e = G.component(1).basis[0]
        assert not real_cartan_check(R, [e])


def test_real_cartan_check_needs_stable_span():
    G = grade_from_kac(KacSpec("A1", (1, 1)))
    K = G.field
    C = compact_real_structure(G)
    with pytest.raises(RealStructureError):
        real_cartan_check(C, [vec([0, 1, 2])])


def test_gamma_twist_on_weyl(sl2_m2, sl3_m3):
    G, hs, S, W, _ = sl2_m2
    A = gamma_action_on_weyl(W, split_real_structure(G), hs)
    assert A.twist == list(range(A.n))
    G, hs, S, W, _ = sl3_m3
    A = gamma_action_on_weyl(W, split_real_structure(G), hs)
    assert all(A.twist[a] == A.inv(a) for a in range(A.n))
    assert len(h1(A)) == 1


def test_real_orbit_counts(sl2_m2, sl3_m3):
    for G, hs, S, W, sts in (sl2_m2, sl3_m3):
        A = gamma_action_on_weyl(W, split_real_structure(G), hs)
        assert real_orbit_count(A, A.subgroup([0])) == 1
        assert real_orbit_count(A, A) == 1
        assert "assumed" in real_orbit_report(A, A)["assumption"]


def test_real_point_decision(sl2_m2, sl3_m3):
    G, hs, *_ = sl2_m2
    R = split_real_structure(G)
    one = ExactMatrix([[1]])
    assert real_point_decision([1], [one], R, hs) == 0
    G, hs, *_ = sl3_m3
    R = split_real_structure(G)
    w = G.omega(1)
    gammas = [ExactMatrix([[G.omega(k)]]) for k in range(3)]
    i = real_point_decision([w], gammas, R, hs)
    assert i is not None
    assert gammas[i].inverse().apply((w,)) == (w.conj(),)
    assert real_point_decision([w], [one], R, hs) is None


def test_coboundaries_trivial_twist():
    assert coboundaries(GammaGroup.cyclic(4)) == {0}
    assert coboundaries(GammaGroup.cyclic(4, "inversion")) == {0, 2}


@pytest.mark.parametrize("t,kac", [("A1", (1, 1)), ("A2", (1, 1, 1)), ("A2", (1, 0, 0)),
                                   ("B2", (1, 0, 0)), ("G2", (1, 0, 1))])
def test_permutation_realization_matches_matrices(t, kac):
    G, hs, S, W, _ = example(t, kac)
    R = split_real_structure(G)
    A = gamma_action_on_weyl(W, R, hs)
    P = gamma_action_by_permutations(W.generators, [w.functional for w in S.nonzero()], R, hs)
    assert P.n == A.n
    assert len(h1(P)) == len(h1(A))
    fixed = lambda B: sum(1 for a in range(B.n) if B.twist[a] == a)
    assert fixed(P) == fixed(A)
    Q = gamma_action_by_permutations(hyperplane_reflections(G, hs),
                                     [w.functional for w in S.nonzero()], R, hs,
                                     reduce_generators=True)
    assert Q.n == A.n and len(h1(Q)) == len(h1(A))
    assert len(Q.generators) <= len(hyperplane_reflections(G, hs))
