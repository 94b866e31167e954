"""Acceptance criteria, one test each (criterion 11 is an opt-in stretch)."""
import os
import random
import time
from fractions import Fraction
from math import gcd

import pytest

from gradedlie.cartan import algebraic_closure, cartan_subspace, closure_support_ok, \
    graded_support, is_maximal_rank
from gradedlie.cli import parse_job, run
from gradedlie.cli.main import render
from gradedlie.exactnum import is_squarefree, lincomb, minimal_polynomial
from gradedlie.galois import (GammaGroup, gamma_action_on_weyl, h1, real_orbit_count,
                              split_real_structure)
from gradedlie.grading import KacSpec, grade_from_kac, graded_jordan
from gradedlie.liealg import RootSystem, chevalley_basis
from gradedlie.liealg.ops import jordan_decomposition
from gradedlie.weights import weight_system
from gradedlie.weyl import (check_conjugation_equivalence, circ_equals_reg, hypothesis_tag,
                            little_weyl_maximal_rank, stabilizer, strata,
                            validate_reflection_group, verify_central, weyl_of_centralizer)

SL2 = ("A1", (1, 1))
SL3 = ("A2", (1, 1, 1))


class clock:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f}s > {self.limit}s"


def build(t, kac, seed=0):
    G = grade_from_kac(KacSpec(t, kac))
    hs = list(cartan_subspace(G, seed=seed).basis)
    S = weight_system(G, hs)
    W = little_weyl_maximal_rank(G, hs, weights=S)
    return G, hs, S, W


def test_c01_chevalley_construction():
    for t, dim in [("A1", 3), ("A2", 8), ("B2", 10), ("G2", 14)]:
        with clock(1.0):
            g = chevalley_basis(t)
            assert g.check_antisymmetry() and g.check_jacobi()
        rs = RootSystem.of_type(t)
        assert g.dim == dim == rs.rank + 2 * len(rs.positive)


def test_c02_graded_jordan():
    with clock(5.0):
        for t, kac in (SL2, SL3):
            G = grade_from_kac(KacSpec(t, kac))
            g = G.algebra
            B = G.component(1).basis
            rng = random.Random(2024)
            for _ in range(100):
                x = lincomb([rng.randint(-5, 5) for _ in B], B, G.dim)
                xs, xn = graded_jordan(G, x)
                assert G.is_homogeneous(xs, 1) and G.is_homogeneous(xn, 1)
                assert tuple(a + b for a, b in zip(xs, xn)) == x
                assert not any(g.bracket(xs, xn))
                assert (g.ad(xn) ** g.dim).is_zero()
                assert is_squarefree(minimal_polynomial(g.ad(xs)))
                assert (xs, xn) == jordan_decomposition(g, x)


def test_c03_cartan_rank():
    with clock(10.0):
        for (t, kac), rank in ((SL2, 1), (SL3, 1)):
            G = grade_from_kac(KacSpec(t, kac))
            assert {cartan_subspace(G, seed=s).rank for s in range(20)} == {rank}


def test_c04_algebraic_closure():
    with clock(2.0):
        for t, kac in (SL2, SL3, ("A2", (0, 1, 1)), ("B2", (1, 0, 1)), ("A1", (1, 0))):
            G = grade_from_kac(KacSpec(t, kac))
            cl = algebraic_closure(G, cartan_subspace(G).basis)
            assert closure_support_ok(G, cl)
            assert all(gcd(k, G.m) == 1 for k in graded_support(G, cl))
        G = grade_from_kac(KacSpec(*SL3))
        cl = algebraic_closure(G, cartan_subspace(G).basis)
        assert cl.dim == 2 and set(graded_support(G, cl)) == {1, 2}


def test_c05_little_weyl_groups():
    with clock(10.0):
        for (t, kac), order in ((SL2, 2), (SL3, 3), (("A1", (1, 0)), 2), (("A2", (1, 0, 0)), 6)):
            G, hs, S, W = build(t, kac)
            assert W.order == order
            validate_reflection_group(G, hs, W, weights=S)
            assert W.is_reflection_group()
        assert RootSystem.of_type("A2").weyl_group_order() == 6


def test_c06_strata_and_conjugation():
    with clock(5.0):
        for t, kac in (SL2, SL3):
            G, hs, S, W = build(t, kac)
            sts = strata(W, hs, G, weights=S)
            assert len(sts) == 2
            assert check_conjugation_equivalence(W, sts)


def test_c07_circ_reg_and_central_theorem():
    with clock(10.0):
        for t, kac in (SL2, SL3):
            G, hs, S, W = build(t, kac)
            assert hypothesis_tag(G, hs) == "maximal_rank"
            assert is_maximal_rank(G, hs)
            sts = strata(W, hs, G, weights=S)
            assert all(circ_equals_reg(G, hs, W, st, weights=S)[0] for st in sts)
            rep = verify_central(G, hs, W, sts, pairs=10)
            assert rep["pass"] and all(s["pairs"] == 10 for s in rep["strata"])


def test_c08_stabilizer_is_centralizer_weyl_group():
    with clock(5.0):
        for t, kac in (SL2, SL3):
            G, hs, S, W = build(t, kac)
            regular = next(st.representative for st in strata(W, hs, G, weights=S)
                           if st.stabilizer.order == 1)
            for p in (tuple(0 for _ in hs), regular):
                Wz, equal = weyl_of_centralizer(G, hs, W, p)
                assert equal and Wz.order == stabilizer(W, p).order


def test_c09_h1_brute_force():
    with clock(1.0):
        assert len(h1(GammaGroup.trivial())) == 1
        assert len(h1(GammaGroup.cyclic(2))) == 2
        assert len(h1(GammaGroup.cyclic(3, "inversion"))) == 1
        assert len(h1(GammaGroup.symmetric(3))) == 2
        assert len(h1(GammaGroup.cyclic(4))) == 2


def _circle_orbits(c, height=12):
    """Orbits of rational rotations on rational points of a^2 + b^2 = c (c a square)."""
    r = Fraction(int(c ** 0.5))
    pts = set()
    for m in range(-height, height + 1):
        for n in range(0, height + 1):
            d = m * m + n * n
            if d:
                pts.add((r * Fraction(m * m - n * n, d), r * Fraction(2 * m * n, d)))
    pts = sorted(pts)
    parent = {p: p for p in pts}

    def find(p):
        while parent[p] != p:
            p = parent[p]
        return p

    base = (r, Fraction(0))
    for (a, b) in pts:
        cos, sin = a / r, b / r
        img = (cos * base[0] - sin * base[1], sin * base[0] + cos * base[1])
        parent[find(img)] = find(base)
    return len({find(p) for p in pts})


def test_c10_real_orbit_counts():
    with clock(1.0):
        assert _circle_orbits(1) == 1 and _circle_orbits(25) == 1
        for t, kac in (SL2, SL3):
            G, hs, S, W = build(t, kac)
            A = gamma_action_on_weyl(W, split_real_structure(G), hs)
            assert real_orbit_count(A, A.subgroup([0])) == 1
            assert real_orbit_count(A, A) == 1


@pytest.mark.skipif(os.environ.get("GRADEDLIE_SKIP_STRETCH") == "1",
                    reason="e8 stretch run disabled (GRADEDLIE_SKIP_STRETCH=1)")
def test_c11_e8_stretch():
    import importlib.util
    from gradedlie.weyl import GroupOrderExceeded
    path = os.path.join(os.path.dirname(__file__), os.pardir, "scripts", "e8_stretch.py")
    ldr = importlib.util.spec_from_file_location("e8_stretch", path)
    mod = importlib.util.module_from_spec(ldr)
    ldr.loader.exec_module(mod)
    cap = int(os.environ.get("GRADEDLIE_CAP", "200000"))
    run_it = lambda: mod.run_e8_stretch(cap=cap, basis_cache=os.environ.get("GRADEDLIE_E8_BASIS"),
                                        log=lambda m: None)
    if cap < 155520:
        with pytest.raises(GroupOrderExceeded):
            run_it()
        return
    with clock(600):
        res = run_it()
    assert res["dims"] == [80, 84, 84]
    assert res["rank"] == 4
    assert res["order"] == 155520
    assert res["h1"] == 1


def test_c12_determinism():
    for text in ("type = A1\nkac = 1,1\n", "type = A2\nkac = 1,1,1\n"):
        job = parse_job(text)
        bodies = {render(run(job), fmt) for fmt in ("machine",)}
        bodies.add(render(run(job), "machine"))
        bodies.add(render(run(job, parallel=4), "machine"))
        assert len(bodies) == 1
