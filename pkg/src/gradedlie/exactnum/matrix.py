"""Dense exact linear algebra over Q and Q(w_m).

Vectors are plain tuples of scalars. ``ExactMatrix`` is immutable and hashable
so that finite matrix groups can be enumerated with dictionaries.
"""
from __future__ import annotations

from gmpy2 import mpq

from .cyclo import RATIONAL_TYPES, Cyclo, conj, to_rational

_ZERO = mpq(0)
_ONE = mpq(1)


def scalar(x):
    if type(x) is Cyclo:
        return x
    if isinstance(x, RATIONAL_TYPES):
        return to_rational(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def vec(xs) -> tuple:
    return tuple(scalar(x) for x in xs)


def zero_vec(n: int) -> tuple:
    return (_ZERO,) * n


def unit_vec(n: int, i: int) -> tuple:
    v = [_ZERO] * n
    v[i] = _ONE
    return tuple(v)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def vneg(v):
    return tuple(-a for a in v)


def dot(u, v):
    s = _ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def is_zero_vec(v) -> bool:
    return not any(v)


def lincomb(coeffs, vectors, n=None):
    if n is None:
        n = len(vectors[0]) if vectors else 0
    acc = [_ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    acc[i] = acc[i] + c * a
    return tuple(acc)


def vconj(v):
    return tuple(conj(a) for a in v)


# ----------------------------------------------------------------------------
# row reduction
# ----------------------------------------------------------------------------
def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[col]
        if inv != 1:
            prow = [a * inv if a else a for a in prow]
            rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][col]
                if f:
                    row_i = rows[i]
                    rows[i] = [a - f * b if b else a for a, b in zip(row_i, prow)]
        pivots.append(col)
        r += 1
    return [tuple(row) for row in rows[:r]], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def nullspace(rows, ncols: int):
    """Basis of {x : sum_j rows[i][j] x_j = 0 for all i}, as tuples."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [_ZERO] * ncols
        x[f] = _ONE
        for row, p in zip(red, pivots):
            if row[f]:
                x[p] = -row[f]
        basis.append(tuple(x))
    return basis


class ExactMatrix:
    """Immutable dense matrix with exact scalar entries (row-major)."""

    __slots__ = ("rows", "cols", "data", "_hash", "_sparse")

    def __init__(self, data, _trusted: bool = False):
        if _trusted:
            self.data = data
        else:
            self.data = tuple(tuple(scalar(x) for x in row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        self._hash = None
        self._sparse = None
        if not _trusted and any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged matrix")

    # constructors -----------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(tuple(unit_vec(n, i) for i in range(n)), _trusted=True)

    @classmethod
    def zeros(cls, r: int, c: int) -> "ExactMatrix":
        return cls(tuple(zero_vec(c) for _ in range(r)), _trusted=True)

    @classmethod
    def from_columns(cls, columns, nrows=None) -> "ExactMatrix":
        columns = [vec(c) for c in columns]
        if not columns:
            return cls.zeros(nrows or 0, 0)
        return cls(tuple(zip(*columns)), _trusted=True)

    @classmethod
    def diagonal(cls, entries) -> "ExactMatrix":
        entries = vec(entries)
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else _ZERO for j in range(n))
                         for i in range(n)), _trusted=True)

    # basic access -------------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i) -> tuple:
        return self.data[i]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self):
        return [tuple(c) for c in zip(*self.data)] if self.rows else [() for _ in range(self.cols)]

    def entries(self):
        return [x for r in self.data for x in r]

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        return ExactMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self.data, other.data)), _trusted=True)

    def __sub__(self, other):
        return ExactMatrix(tuple(tuple(a - b for a, b in zip(r, s))
                                 for r, s in zip(self.data, other.data)), _trusted=True)

    def __neg__(self):
        return ExactMatrix(tuple(tuple(-a for a in r) for r in self.data), _trusted=True)

    def scale(self, c):
        c = scalar(c)
        return ExactMatrix(tuple(tuple(c * a for a in r) for r in self.data), _trusted=True)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = other.columns()
            out = []
            for r in self.data:
                nz = [(k, a) for k, a in enumerate(r) if a]
                row = []
                for col in ocols:
                    s = _ZERO
                    for k, a in nz:
                        b = col[k]
                        if b:
                            s = s + a * b
                    row.append(s)
                out.append(tuple(row))
            return ExactMatrix(tuple(out), _trusted=True)
        return self.apply(other)

    def apply(self, v) -> tuple:
        if self._sparse is None:
            # ad-matrices are mostly zero; keep the nonzero pattern per row
            self._sparse = tuple(tuple((k, a) for k, a in enumerate(r) if a) for r in self.data)
        nzv = {k for k, b in enumerate(v) if b}
        out = []
        for r in self._sparse:
            s = _ZERO
            for k, a in r:
                if k in nzv:
                    s = s + a * v[k]
            out.append(s)
        return tuple(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.data)) if self.rows else (), _trusted=True)

    T = property(transpose)

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(conj(a) for a in r) for r in self.data), _trusted=True)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # predicates ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def is_identity(self) -> bool:
        return all(a == (1 if i == j else 0) for i, r in enumerate(self.data)
                   for j, a in enumerate(r))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.data)
        return self._hash

    # solving ----------------------------------------------------------------
    def rank(self) -> int:
        return rank(self.data)

    def kernel(self):
        return nullspace(self.data, self.cols)

    def image(self):
        return rref(self.transpose().data, self.rows)[0]

    def trace(self):
        s = _ZERO
        for i in range(min(self.rows, self.cols)):
            s = s + self.data[i][i]
        return s

    def inverse(self) -> "ExactMatrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of non-square matrix")
        aug = [list(r) + list(unit_vec(n, i)) for i, r in enumerate(self.data)]
        red, piv = rref(aug, 2 * n)
        if piv[:n] != list(range(n)) or len(red) < n:
            raise ZeroDivisionError("singular matrix")
        return ExactMatrix(tuple(tuple(r[n:]) for r in red), _trusted=True)

    def solve(self, b):
        """Return one solution x of self @ x = b, or None if inconsistent."""
        aug = [list(r) + [bi] for r, bi in zip(self.data, vec(b))]
        red, piv = rref(aug, self.cols + 1)
        if piv and piv[-1] == self.cols:
            return None
        x = [_ZERO] * self.cols
        for row, p in zip(red, piv):
            x[p] = row[-1]
        return tuple(x)

    def det(self):
        n = self.rows
        rows = [list(r) for r in self.data]
        d = _ONE
        for col in range(n):
            piv = next((i for i in range(col, n) if rows[i][col]), None)
            if piv is None:
                return _ZERO
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                d = -d
            p = rows[col][col]
            d = d * p
            inv = 1 / p
            for i in range(col + 1, n):
                f = rows[i][col]
                if f:
                    f = f * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
        return d

    def block_diag(self, other) -> "ExactMatrix":
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        data = [tuple(r) + zero_vec(c2) for r in self.data]
        data += [zero_vec(c1) + tuple(r) for r in other.data]
        return ExactMatrix(tuple(data), _trusted=True)

    def __repr__(self):
        from .cyclo import format_scalar
        body = "; ".join(", ".join(format_scalar(a) for a in r) for r in self.data)
        return f"ExactMatrix([{body}])"


def hstack_rows(*blocks):
    """Stack matrices vertically (given as ExactMatrix) into a row list."""
    out = []
    for b in blocks:
        out.extend(b.data)
    return out


# ----------------------------------------------------------------------------
# subspaces
# ----------------------------------------------------------------------------
class Subspace:
    """A linear subspace of K^n stored by its reduced row echelon basis.

    The echelon basis is canonical, so equality of subspaces is equality of
    the stored tuples.
    """

    __slots__ = ("n", "basis", "pivots", "_hash")

    def __init__(self, n: int, vectors=(), _echelon=None):
        self.n = n
        if _echelon is not None:
            self.basis, self.pivots = _echelon
        else:
            vectors = [vec(v) for v in vectors]
            if any(len(v) != n for v in vectors):
                raise ValueError("vector length does not match ambient dimension")
            red, piv = rref(vectors, n) if vectors else ([], [])
            self.basis, self.pivots = tuple(red), tuple(piv)
        self._hash = None

    @classmethod
    def full(cls, n):
        return cls(n, _echelon=(tuple(unit_vec(n, i) for i in range(n)), tuple(range(n))))

    @classmethod
    def zero(cls, n):
        return cls(n, _echelon=((), ()))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def coords(self, v):
        """Coordinates of v in the echelon basis, or None if v is outside."""
        c = tuple(v[p] for p in self.pivots)
        if lincomb(c, self.basis, self.n) != tuple(v):
            return None
        return c

    def __contains__(self, v) -> bool:
        return self.coords(v) is not None

    def contains_space(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.n, self.basis + other.basis)

    def annihilator(self):
        """Basis of linear functionals vanishing on the subspace."""
        return nullspace(self.basis, self.n)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.n)
        eqs = self.annihilator() + other.annihilator()
        return Subspace(self.n, nullspace(eqs, self.n) if eqs else Subspace.full(self.n).basis)

    def __and__(self, other):
        return self.intersect(other)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.basis))
        return self._hash

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def is_direct_sum(parts, whole: Subspace | None = None) -> bool:
    """True when the subspaces are independent (and span ``whole`` if given)."""
    vectors = [v for p in parts for v in p.basis]
    total = sum(p.dim for p in parts)
    n = parts[0].n if parts else (whole.n if whole else 0)
    if rank(vectors) != total if vectors else total != 0:
        return False
    if whole is not None:
        return Subspace(n, vectors) == whole
    return True
