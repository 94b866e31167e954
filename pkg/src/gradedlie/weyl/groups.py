"""Finite matrix groups enumerated by breadth-first closure."""
from __future__ import annotations

from collections import deque

from ..exactnum import ExactMatrix, Subspace, nullspace, rref, vec

DEFAULT_CAP = 200_000


class GroupOrderExceeded(RuntimeError):
    pass


class MatrixGroup:
    """A finite group of invertible matrices, fully enumerated (identity first)."""

    def __init__(self, dim: int, generators=(), cap: int = DEFAULT_CAP, elements=None,
                 name: str = ""):
        self.dim = dim
        self.generators = [g for g in generators if not g.is_identity()]
        self.cap = cap
        self.name = name
        for g in self.generators:
            if g.rows != dim or g.cols != dim:
                raise ValueError("generator has the wrong size")
        if elements is None:
            elements = self._enumerate()
        else:
            elements = list(elements)
            ident = ExactMatrix.identity(dim)
            if ident in elements:
                elements.remove(ident)
            elements = [ident] + elements
        self.elements = elements
        self.index = {w: i for i, w in enumerate(elements)}

    def _enumerate(self):
        ident = ExactMatrix.identity(self.dim)
        elements = [ident]
        seen = {ident}
        queue = deque([ident])
        while queue:
            w = queue.popleft()
            for g in self.generators:
                x = g @ w
                if x not in seen:
                    seen.add(x)
                    elements.append(x)
                    queue.append(x)
                    if len(elements) > self.cap:
                        raise GroupOrderExceeded(
                            f"group order exceeds the cap {self.cap}")
        return elements

    @classmethod
    def from_elements(cls, dim, elements, generators=None, name=""):
        gens = list(generators) if generators is not None else list(elements)
        return cls(dim, gens, elements=elements, name=name)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w):
        return w in self.index

    @property
    def identity(self):
        return self.elements[0]

    def element_set(self):
        return frozenset(self.elements)

    def same_elements(self, other) -> bool:
        return self.element_set() == other.element_set()

    def inverse(self, w):
        return w.inverse()

    def subgroup(self, predicate, name=""):
        els = [w for w in self.elements if predicate(w)]
        return MatrixGroup.from_elements(self.dim, els, name=name)

    def conjugate_set(self, w, elements):
        wi = w.inverse()
        return frozenset(w @ x @ wi for x in elements)

    def normalizer(self, H):
        Hs = H.element_set()
        return self.subgroup(lambda w: self.conjugate_set(w, Hs) == Hs)

    def reflections(self):
        """Elements whose fixed space is a hyperplane (complex reflections)."""
        ident = self.identity
        return [w for w in self.elements[1:] if (w - ident).rank() == 1]

    def is_reflection_group(self) -> bool:
        refl = self.reflections()
        if self.order == 1:
            return True
        try:
            H = MatrixGroup(self.dim, refl, cap=self.order)
        except GroupOrderExceeded:
            return False
        return H.order == self.order

    def __repr__(self):
        return f"MatrixGroup(dim={self.dim}, order={self.order})"


def little_weyl_user(generators, cap: int = DEFAULT_CAP) -> MatrixGroup:
    gens = [g if isinstance(g, ExactMatrix) else ExactMatrix(g) for g in generators]
    if not gens:
        return MatrixGroup(0, [])
    dim = gens[0].rows
    for g in gens:
        if g.rows != dim or g.cols != dim:
            raise ValueError("generators must be square of a common size")
        if g.det() == 0:
            raise ValueError("generator is not invertible")
    return MatrixGroup(dim, gens, cap=cap)


# ----------------------------------------------------------------------------
# fixed spaces and restriction
# ----------------------------------------------------------------------------
def fixed_space(group_or_elements, dim=None) -> Subspace:
    """{q : (w - 1) q = 0 for all w}."""
    els = group_or_elements.generators if isinstance(group_or_elements, MatrixGroup) \
        else list(group_or_elements)
    if dim is None:
        dim = group_or_elements.dim
    rows = []
    for w in els:
        ident = ExactMatrix.identity(dim)
        rows.extend((w - ident).data)
    if not rows:
        return Subspace.full(dim)
    return Subspace(dim, nullspace(rows, dim))


def fixed_space_of(w: ExactMatrix) -> Subspace:
    return fixed_space([w], w.rows)


def restrict_matrix(w: ExactMatrix, X: Subspace) -> ExactMatrix | None:
    """Matrix of w on the invariant subspace X in its echelon basis (None if not invariant)."""
    cols = []
    for b in X.basis:
        c = X.coords(w.apply(b))
        if c is None:
            return None
        cols.append(c)
    if not cols:
        return ExactMatrix.identity(0)
    return ExactMatrix.from_columns(cols, X.dim)


def image_subspace(w: ExactMatrix, X: Subspace) -> Subspace:
    return Subspace(X.n, [w.apply(b) for b in X.basis])
