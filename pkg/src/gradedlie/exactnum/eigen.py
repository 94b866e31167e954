"""Eigenspaces of commuting diagonalizable matrices over Q(w_m)."""
from __future__ import annotations

from gmpy2 import mpq

from .cyclo import CycloField
from .matrix import ExactMatrix, Subspace, lincomb, nullspace
from .poly import minimal_polynomial, roots_in_field, is_squarefree

_ZERO = mpq(0)


class NotDiagonalizableError(ArithmeticError):
    pass


class NonCommutingError(ValueError):
    pass


def restrict(A: ExactMatrix, space: Subspace) -> ExactMatrix:
    """Matrix of A on an A-invariant subspace, in its echelon basis."""
    cols = []
    for b in space.basis:
        img = A.apply(b)
        c = space.coords(img)
        if c is None:
            raise ValueError("subspace is not invariant")
        cols.append(c)
    return ExactMatrix.from_columns(cols, space.dim)


def eigenspaces(A: ExactMatrix, field: CycloField, space: Subspace | None = None):
    """[(eigenvalue, Subspace)] for A (restricted to ``space`` if given).

    Raises NotDiagonalizableError when A is not semisimple and
    EigenvalueFieldError when an eigenvalue lies outside ``field``.
    """
    n = A.rows
    if space is None:
        space = Subspace.full(n)
    if space.dim == 0:
        return []
    B = restrict(A, space)
    mp = minimal_polynomial(B)
    if not is_squarefree(mp):
        raise NotDiagonalizableError("matrix is not diagonalizable")
    out = []
    k = space.dim
    for lam in roots_in_field(mp, field):
        shifted = [[B.data[i][j] - (lam if i == j else _ZERO) for j in range(k)]
                   for i in range(k)]
        coords = nullspace(shifted, k)
        vecs = [lincomb(c, space.basis, n) for c in coords]
        out.append((lam, Subspace(n, vecs)))
    if sum(s.dim for _, s in out) != space.dim:
        raise NotDiagonalizableError("eigenvalues do not account for the whole space")
    return out


def commute(A: ExactMatrix, B: ExactMatrix) -> bool:
    return A @ B == B @ A


def simultaneous_eigenspaces(matrices, field: CycloField, space: Subspace | None = None,
                             check_commuting: bool = True):
    """Joint eigenspace decomposition.

    Returns a list of (tuple of eigenvalues, Subspace), one entry per joint
    eigenvalue that occurs.
    """
    matrices = list(matrices)
    if check_commuting:
        for i in range(len(matrices)):
            for j in range(i + 1, len(matrices)):
                if not commute(matrices[i], matrices[j]):
                    raise NonCommutingError(f"matrices {i} and {j} do not commute")
    if space is None:
        n = matrices[0].rows if matrices else 0
        space = Subspace.full(n)
    blocks = [((), space)]
    for A in matrices:
        refined = []
        for key, sp in blocks:
            for lam, sub in eigenspaces(A, field, sp):
                refined.append((key + (lam,), sub))
        blocks = refined
    return blocks
