from gmpy2 import mpq
from hypothesis import given, strategies as st

from gradedlie.exactnum import (CycloField, conj, EigenvalueFieldError, ExactMatrix, Subspace,
                                characteristic_polynomial, eigenspaces, minimal_polynomial,
                                nullspace, roots_in_field, simultaneous_eigenspaces, vec)
from gradedlie.exactnum.poly import eval_at_matrix, pmul, squarefree_part

ORDERS = st.sampled_from([1, 3, 4, 5, 8, 12])
small = st.integers(-4, 4)


@st.composite
def elements(draw, order=None):
    K = CycloField(order if order is not None else draw(ORDERS))
    return K.element([mpq(draw(small), draw(st.integers(1, 3))) for _ in range(K.phi)])


@st.composite
def triples(draw):
    m = draw(ORDERS)
    return [draw(elements(m)) for _ in range(3)]


@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inverse() == 1


@given(elements())
def test_conj_is_involutive_automorphism(a):
    K = a.field
    b = K.omega(1) + 2
    assert conj(conj(a)) == a
    assert conj(a * b) == conj(a) * conj(b)


def test_roots_of_unity():
    for m in (3, 4, 6, 8, 12):
        K = CycloField(m)
        w = K.omega(1)
        assert w ** m == 1
        assert all(w ** k != 1 for k in range(1, m))
        assert w.conj() == w ** (m - 1)


@st.composite
def rational_matrices(draw, n=3):
    return ExactMatrix([[draw(small) for _ in range(n)] for _ in range(n)])


@given(rational_matrices())
def test_inverse_and_kernel(A):
    if A.det():
        assert (A @ A.inverse()).is_identity()
    for v in A.kernel():
        assert not any(A.apply(v))
    assert A.rank() + len(A.kernel()) == A.cols


@given(rational_matrices(4))
def test_minimal_polynomial_divides_characteristic(A):
    mp = minimal_polynomial(A)
    assert eval_at_matrix(mp, A).is_zero()
    assert eval_at_matrix(characteristic_polynomial(A), A).is_zero()


def test_roots_in_field_and_failure():
    K = CycloField(3)
    p = [mpq(1), mpq(1), mpq(1)]           # x^2 + x + 1
    roots = roots_in_field(p, K)
    assert set(roots) == {K.omega(1), K.omega(2)}
    try:
        roots_in_field([mpq(-2), mpq(0), mpq(1)], K)   # sqrt 2 is not in Q(w_3)
    except EigenvalueFieldError:
        pass
    else:
        raise AssertionError("expected EigenvalueFieldError")
    assert squarefree_part(pmul(p, p)) == p


def test_eigenspaces_of_rotation():
    K = CycloField(4)
    A = ExactMatrix([[0, -1], [1, 0]])
    es = dict(eigenspaces(A, K))
    assert set(es) == {K.omega(1), K.omega(3)}
    assert all(sp.dim == 1 for sp in es.values())
    joint = simultaneous_eigenspaces([A, A @ A], K)
    assert sum(sp.dim for _, sp in joint) == 2


def test_subspace_lattice_ops():
    U = Subspace(3, [vec([1, 0, 0]), vec([0, 1, 0])])
    V = Subspace(3, [vec([0, 1, 0]), vec([0, 0, 1])])
    assert (U & V).dim == 1 and (U + V).dim == 3
    assert vec([1, 1, 0]) in U and vec([1, 1, 1]) not in U
    assert len(nullspace([vec([1, 1, 1])], 3)) == 2
