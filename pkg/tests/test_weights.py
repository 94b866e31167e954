from gradedlie.exactnum import vec
from gradedlie.weights import (hyperplane_arrangement, is_regular, regularity_crosscheck,
                               restrict_weights, weight_system)


def test_weights_sl2(sl2_m2):
    G, hs, S, *_ = sl2_m2
    assert [w.functional for w in S.weights][0] == (0,)
    assert sorted(int(w.functional[0]) for w in S.nonzero()) == [-2, 2]
    assert sum(w.multiplicity for w in S.weights) == G.dim
    assert len(hyperplane_arrangement(S)) == 1


def test_regularity(sl3_m3):
    G, hs, S, *_ = sl3_m3
    h = hs[0]
    assert is_regular(h, S)
    assert regularity_crosscheck(G, S, h)
    zero = vec([0] * G.dim)
    assert not is_regular(zero, S)
    assert regularity_crosscheck(G, S, zero)


def test_restriction_merges(sl3_m3):
    G, hs, S, *_ = sl3_m3
    R = restrict_weights(S, [])
    assert len(R.weights) == 1 and R.weights[0].multiplicity == G.dim


def test_restriction_composes():
    from conftest import example
    G, hs, S, *_ = example("B2", (1, 0, 0))
    u = [hs[0]]
    once = restrict_weights(S, u)
    twice = restrict_weights(restrict_weights(S, hs), u)
    assert [(w.functional, w.multiplicity) for w in once.weights] == \
        [(w.functional, w.multiplicity) for w in twice.weights]
