"""Lie algebras given by structure constants."""
from __future__ import annotations

import random

from gmpy2 import mpq

from ..exactnum import CycloField, ExactMatrix, Subspace, lincomb, rref, scalar

_ZERO = mpq(0)


class JacobiError(ValueError):
    pass


class LieAlgebra:
    """Lie algebra with basis b_0..b_{n-1} and [b_i, b_j] = sum_k c_ijk b_k.

    ``table[i][j]`` is a tuple of (k, c) pairs with c nonzero; the table is
    kept antisymmetric. ``field`` is the cyclotomic field containing the
    structure constants (order 1 for rational algebras).
    """

    def __init__(self, dim, table, labels=None, field=None, rank=None, name=""):
        self.dim = dim
        self.table = table
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(dim)]
        self.field = field if field is not None else CycloField(1)
        self.rank = rank
        self.name = name
        self._ad_basis = None

    # construction ---------------------------------------------------------
    @classmethod
    def from_brackets(cls, dim, brackets, **kw):
        """``brackets`` maps (i, j) with i < j to {k: c}."""
        table = [[() for _ in range(dim)] for _ in range(dim)]
        for (i, j), val in brackets.items():
            items = tuple(sorted((k, scalar(c)) for k, c in val.items() if c))
            if i == j:
                if items:
                    raise ValueError("[b_i, b_i] must vanish")
                continue
            table[i][j] = items
            table[j][i] = tuple((k, -c) for k, c in items)
        return cls(dim, table, **kw)

    @classmethod
    def abelian(cls, dim, **kw):
        return cls(dim, [[() for _ in range(dim)] for _ in range(dim)], **kw)

    def direct_sum(self, other, name=None) -> "LieAlgebra":
        n = self.dim
        dim = n + other.dim
        table = [[() for _ in range(dim)] for _ in range(dim)]
        for i in range(n):
            for j in range(n):
                table[i][j] = self.table[i][j]
        for i in range(other.dim):
            for j in range(other.dim):
                table[n + i][n + j] = tuple((n + k, c) for k, c in other.table[i][j])
        if self.field.order != other.field.order and not (
                self.field.phi == 1 and other.field.phi == 1):
            raise ValueError("direct sum of algebras over different fields")
        rank = None if self.rank is None or other.rank is None else self.rank + other.rank
        return LieAlgebra(dim, table, self.labels + [l + "'" for l in other.labels],
                          field=self.field, rank=rank,
                          name=name or f"{self.name}+{other.name}")

    # arithmetic -------------------------------------------------------------
    def basis_vector(self, i):
        v = [_ZERO] * self.dim
        v[i] = mpq(1)
        return tuple(v)

    def element(self, coeffs=None, **named):
        """Element from a coordinate list or from label=coefficient pairs."""
        if coeffs is not None:
            if len(coeffs) != self.dim:
                raise ValueError("coordinate length does not match dimension")
            return tuple(scalar(c) for c in coeffs)
        v = [_ZERO] * self.dim
        for lab, c in named.items():
            v[self.labels.index(lab)] += scalar(c)
        return tuple(v)

    def from_labels(self, terms):
        """{label: coefficient} -> element."""
        v = [_ZERO] * self.dim
        for lab, c in terms.items():
            v[self.labels.index(lab)] += scalar(c)
        return tuple(v)

    def bracket(self, x, y):
        out = [_ZERO] * self.dim
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            row = self.table[i]
            for j, b in ys:
                t = row[j]
                if t:
                    ab = a * b
                    for k, c in t:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def ad_basis(self):
        """Sparse ad(b_i): list of dict (row k, col j) -> c."""
        if self._ad_basis is None:
            res = []
            for i in range(self.dim):
                d = {}
                for j in range(self.dim):
                    for k, c in self.table[i][j]:
                        d[(k, j)] = c
                res.append(d)
            self._ad_basis = res
        return self._ad_basis

    def ad(self, x) -> ExactMatrix:
        n = self.dim
        M = [[_ZERO] * n for _ in range(n)]
        for i, a in enumerate(x):
            if a:
                row = self.table[i]
                for j in range(n):
                    for k, c in row[j]:
                        M[k][j] = M[k][j] + a * c
        return ExactMatrix(tuple(tuple(r) for r in M), _trusted=True)

    def killing_matrix(self) -> ExactMatrix:
        ads = [self.ad(self.basis_vector(i)) for i in range(self.dim)]
        n = self.dim
        return ExactMatrix(tuple(tuple((ads[i] @ ads[j]).trace() for j in range(n))
                                 for i in range(n)))

    def killing_form(self, x, y):
        return (self.ad(x) @ self.ad(y)).trace()

    # checks -------------------------------------------------------------------
    def check_antisymmetry(self) -> bool:
        for i in range(self.dim):
            if self.table[i][i]:
                return False
            for j in range(i + 1, self.dim):
                if dict(self.table[i][j]) != {k: -c for k, c in self.table[j][i]}:
                    return False
        return True

    def jacobi_defect(self, x, y, z):
        b = self.bracket
        t1 = b(x, b(y, z))
        t2 = b(y, b(z, x))
        t3 = b(z, b(x, y))
        return tuple(a + c + d for a, c, d in zip(t1, t2, t3))

    def check_jacobi(self, samples=None, seed=0) -> bool:
        """Exhaustive scan over basis triples, or random sampling above 50."""
        n = self.dim
        if samples is None and n <= 50:
            basis = [self.basis_vector(i) for i in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    bij = self.bracket(basis[i], basis[j])
                    for k in range(j + 1, n):
                        if any(self.jacobi_defect(basis[i], basis[j], basis[k])):
                            raise JacobiError(
                                f"Jacobi fails on {self.labels[i]}, {self.labels[j]}, {self.labels[k]}")
            return True
        rng = random.Random(seed)
        for _ in range(samples or 200):
            i, j, k = (rng.randrange(n) for _ in range(3))
            if any(self.jacobi_defect(self.basis_vector(i), self.basis_vector(j),
                                      self.basis_vector(k))):
                raise JacobiError(
                    f"Jacobi fails on {self.labels[i]}, {self.labels[j]}, {self.labels[k]}")
        return True

    def is_abelian(self) -> bool:
        return not any(self.table[i][j] for i in range(self.dim) for j in range(self.dim))

    def __repr__(self):
        return f"LieAlgebra({self.name or 'unnamed'}, dim={self.dim})"


class Subalgebra:
    """A subspace of a Lie algebra, optionally certified bracket-closed."""

    def __init__(self, algebra: LieAlgebra, vectors=(), space: Subspace | None = None,
                 check: bool = True):
        self.algebra = algebra
        self.space = space if space is not None else Subspace(algebra.dim, vectors)
        self.closed = False
        if check:
            if not self.is_closed():
                raise ValueError("subspace is not closed under the bracket")
            self.closed = True

    @property
    def basis(self):
        return self.space.basis

    @property
    def dim(self):
        return self.space.dim

    def __contains__(self, x):
        return x in self.space

    def __eq__(self, other):
        return isinstance(other, Subalgebra) and self.algebra is other.algebra \
            and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def is_closed(self) -> bool:
        B = self.basis
        for i in range(len(B)):
            for j in range(i + 1, len(B)):
                if self.algebra.bracket(B[i], B[j]) not in self.space:
                    return False
        return True

    def is_abelian(self) -> bool:
        B = self.basis
        return all(not any(self.algebra.bracket(B[i], B[j]))
                   for i in range(len(B)) for j in range(i + 1, len(B)))

    def as_lie_algebra(self) -> LieAlgebra:
        """Structure constants with respect to the echelon basis."""
        B = self.basis
        brackets = {}
        for i in range(len(B)):
            for j in range(i + 1, len(B)):
                c = self.space.coords(self.algebra.bracket(B[i], B[j]))
                if c is None:
                    raise ValueError("subspace is not closed under the bracket")
                brackets[(i, j)] = {k: v for k, v in enumerate(c) if v}
        field = self.algebra.field
        if any(not _is_rational(a) for v in B for a in v):
            from ..exactnum.cyclo import Cyclo
            orders = {a.field.order for v in B for a in v if type(a) is Cyclo}
            field = CycloField(max(orders | {field.order}))
        return LieAlgebra.from_brackets(len(B), brackets, field=field,
                                        name=f"sub({self.algebra.name})")

    def _mark(self):
        """Set the closed flag after an external closure argument."""
        self.closed = True
        return self

    def __repr__(self):
        return f"Subalgebra(dim={self.dim} in {self.algebra!r})"


def _is_rational(a):
    from ..exactnum.cyclo import Cyclo
    return type(a) is not Cyclo or a.is_rational()
