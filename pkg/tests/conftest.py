"""Shared fixtures: the small graded examples used across modules."""
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from gradedlie.cartan import cartan_subspace
from gradedlie.grading import KacSpec, grade_from_kac
from gradedlie.weights import weight_system
from gradedlie.weyl import little_weyl_maximal_rank, strata

settings.register_profile("repo", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@lru_cache(maxsize=None)
def example(cartan_type, coords, seed=0):
    """(G, hs, weights, W, strata) for a Kac grading of maximal rank."""
    G = grade_from_kac(KacSpec(cartan_type, coords))
    hs = list(cartan_subspace(G, seed=seed).basis)
    S = weight_system(G, hs)
    W = little_weyl_maximal_rank(G, hs, weights=S)
    return G, hs, S, W, strata(W, hs, G, weights=S)


@pytest.fixture(scope="session")
def sl2_m2():
    return example("A1", (1, 1))


@pytest.fixture(scope="session")
def sl3_m3():
    return example("A2", (1, 1, 1))
