"""Jordan decomposition, centralizers, center and derived algebra."""
from __future__ import annotations

from gmpy2 import mpq

from ..exactnum import ExactMatrix, Subspace, nullspace, rref, vec
from ..exactnum.poly import (degree, minimal_polynomial, pderiv, peval, pinv_mod, pmod,
                             pmul, psub, pcompose_mod, squarefree_part, is_squarefree,
                             eval_at_matrix_on_vector)
from .algebra import LieAlgebra, Subalgebra

_ZERO = mpq(0)


class JordanError(ArithmeticError):
    pass


def ad(g: LieAlgebra, x) -> ExactMatrix:
    return g.ad(x)


def _pullback_columns(g: LieAlgebra):
    """Basis indices S with joint centralizer 0, and the stacked -ad(b_j) rows.

    Then y is determined by the vectors [y, b_j] = -ad(b_j) y for j in S.
    """
    cached = getattr(g, "_pullback", None)
    if cached is not None:
        return cached
    n = g.dim
    chosen, rows = [], []
    # try root-vector-like basis elements first: those with large ad rank
    order = sorted(range(n), key=lambda i: -len(g.ad_basis()[i]))
    current_rank = 0
    for i in order:
        M = g.ad(g.basis_vector(i))
        cand = rows + [tuple(-a for a in r) for r in M.data]
        r = len(rref(cand, n)[0])
        if r > current_rank:
            chosen.append(i)
            rows = cand
            current_rank = r
        if current_rank == n:
            break
    if current_rank < n:
        raise JordanError("adjoint representation is not faithful (nonzero center)")
    g._pullback = (chosen, rows)
    return g._pullback


def element_from_ad_action(g: LieAlgebra, images):
    """y with [y, b_j] = images[j] for the pull-back indices; None if none."""
    chosen, rows = _pullback_columns(g)
    rhs = []
    for j in chosen:
        rhs.extend(images[j])
    sol = ExactMatrix(tuple(tuple(r) for r in rows)).solve(rhs)
    return sol


def semisimple_polynomial(A: ExactMatrix):
    """Polynomial s with s(A) the semisimple part of A (Newton iteration)."""
    mu = minimal_polynomial(A)
    f = squarefree_part(mu)
    if degree(f) == degree(mu):
        return [_ZERO, mpq(1)], mu
    df = pderiv(f)
    t = [_ZERO, mpq(1)]
    for _ in range(2 * degree(mu) + 2):
        ft = pcompose_mod(f, t, mu)
        if not ft:
            return t, mu
        dft = pcompose_mod(df, t, mu)
        t = pmod(psub(t, pmul(ft, pinv_mod(dft, mu))), mu)
    raise JordanError("Newton iteration for the semisimple part did not converge")


def jordan_decomposition(g: LieAlgebra, x):
    """(x_s, x_n) with x = x_s + x_n; requires ad to be faithful."""
    x = vec(x)
    if not any(x):
        return x, x
    A = g.ad(x)
    s, mu = semisimple_polynomial(A)
    if s == [_ZERO, mpq(1)]:
        return x, tuple(_ZERO for _ in x)
    chosen, _ = _pullback_columns(g)
    images = {j: eval_at_matrix_on_vector(s, A, g.basis_vector(j)) for j in chosen}
    xs = element_from_ad_action(g, images)
    if xs is None:
        raise JordanError("semisimple part of ad(x) is not inner")
    xn = tuple(a - b for a, b in zip(x, xs))
    return tuple(xs), xn


def centralizer(g: LieAlgebra, S, within: Subspace | None = None) -> Subalgebra:
    """{y : [s, y] = 0 for s in S}, optionally intersected with ``within``."""
    S = [tuple(s) for s in S if any(s)]
    n = g.dim
    if not S:
        if within is not None:
            return Subalgebra(g, space=within, check=False)
        return Subalgebra(g, space=Subspace.full(n), check=False)._mark()
    rows = []
    for s in S:
        rows.extend(g.ad(s).data)
    if within is None:
        return Subalgebra(g, space=Subspace(n, nullspace(rows, n)), check=False)._mark()
    # restrict to coordinates in ``within``
    B = within.basis
    cols = [tuple(sum((r[k] * b[k] for k in range(n) if b[k]), _ZERO) for r in rows)
            for b in B]
    red = [tuple(c[i] for c in cols) for i in range(len(rows))]
    coeffs = nullspace(red, len(B))
    vecs = [tuple(sum((c[t] * B[t][k] for t in range(len(B)) if c[t]), _ZERO)
                  for k in range(n)) for c in coeffs]
    # the closed flag is left unset: ``within`` need not be a subalgebra
    return Subalgebra(g, space=Subspace(n, vecs), check=False)


def center_and_derived(a: Subalgebra):
    """(Z(a), [a, a]) as subalgebras of the ambient algebra."""
    g = a.algebra
    B = a.basis
    k = len(B)
    n = g.dim
    brackets = {}
    for i in range(k):
        for j in range(i + 1, k):
            br = g.bracket(B[i], B[j])
            brackets[(i, j)] = br
            brackets[(j, i)] = tuple(-v for v in br)
    # z = sum c_i B_i central iff sum_i c_i [B_i, B_j] = 0 for all j
    rows = []
    for j in range(k):
        for coord in range(n):
            rows.append(tuple((brackets[(i, j)][coord] if i != j else _ZERO)
                              for i in range(k)))
    coeffs = nullspace(rows, k) if k else []
    zvecs = [tuple(sum((c[i] * B[i][t] for i in range(k) if c[i]), _ZERO) for t in range(n))
             for c in coeffs]
    Z = Subalgebra(g, space=Subspace(n, zvecs), check=False)._mark()
    dvecs = [brackets[(i, j)] for i in range(k) for j in range(i + 1, k)]
    D = Subalgebra(g, space=Subspace(n, dvecs), check=False)._mark()
    return Z, D


def is_nilpotent_element(g: LieAlgebra, x) -> bool:
    """ad(x) nilpotent, via the descending flag of images."""
    if not any(x):
        return True
    A = g.ad(x)
    n = g.dim
    cur = [r for r in A.transpose().data]   # columns of A span the image
    cur = rref(cur, n)[0]
    prev = n
    while cur:
        if len(cur) >= prev:
            return False
        prev = len(cur)
        cur = rref([A.apply(v) for v in cur], n)[0]
    return True


def is_semisimple_element(g: LieAlgebra, x) -> bool:
    return is_squarefree(minimal_polynomial(g.ad(x)))


def is_nilpotent_matrix(A: ExactMatrix) -> bool:
    n = A.rows
    cur = rref(A.transpose().data, n)[0]
    prev = n
    while cur:
        if len(cur) >= prev:
            return False
        prev = len(cur)
        cur = rref([A.apply(v) for v in cur], n)[0]
    return True
