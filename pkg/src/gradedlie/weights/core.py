"""Weight systems of ad on subspaces of a Cartan subspace, and their hyperplanes."""
from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from ..exactnum import ExactMatrix, Subspace, simultaneous_eigenspaces, vec
from ..liealg.ops import centralizer

_ZERO = mpq(0)


@dataclass(frozen=True)
class Weight:
    functional: tuple      # values on the base basis
    multiplicity: int
    space: Subspace

    @property
    def is_zero(self) -> bool:
        return not any(self.functional)

    def __call__(self, coords):
        return sum((a * c for a, c in zip(self.functional, coords) if a and c), _ZERO)


def coordinates(basis, x):
    """Coordinates of x in a linearly independent list of vectors (None if outside)."""
    x = vec(x)
    if not basis:
        return () if not any(x) else None
    A = ExactMatrix.from_columns(basis, len(x))
    sol = A.solve(x)
    if sol is None or A.apply(sol) != x:
        return None
    return sol


class WeightSystem:
    def __init__(self, graded, base, weights):
        self.graded = graded
        self.base = [vec(b) for b in base]
        self.weights = weights

    @property
    def rank(self):
        return len(self.base)

    def nonzero(self):
        return [w for w in self.weights if not w.is_zero]

    def zero_space(self) -> Subspace:
        for w in self.weights:
            if w.is_zero:
                return w.space
        return Subspace.zero(self.graded.dim)

    def multiplicities(self):
        return {w.functional: w.multiplicity for w in self.weights}

    def coords(self, q):
        c = coordinates(self.base, q)
        if c is None:
            raise ValueError("point is not in the span of the base")
        return c

    def __len__(self):
        return len(self.weights)

    def __repr__(self):
        return f"WeightSystem(rank={self.rank}, weights={len(self.weights)})"


def _sort_key(w):
    return tuple(str(a) for a in w.functional)


def weight_system(G, V) -> WeightSystem:
    """Joint eigenspaces of ad(v), v in V, labelled by the functionals v_i -> eigenvalue."""
    base = [vec(v) for v in V]
    g = G.algebra
    if not base:
        return WeightSystem(G, [], [Weight((), g.dim, Subspace.full(g.dim))])
    blocks = simultaneous_eigenspaces([g.ad(v) for v in base], G.field)
    ws = [Weight(tuple(lam), sp.dim, sp) for lam, sp in blocks]
    ws.sort(key=lambda w: (not w.is_zero, _sort_key(w)))
    return WeightSystem(G, base, ws)


def restrict_weights(S: WeightSystem, U) -> WeightSystem:
    """Restrict to span(U) with U inside span(base); equal restrictions merge."""
    U = [vec(u) for u in U]
    coords = []
    for u in U:
        c = coordinates(S.base, u)
        if c is None:
            raise ValueError("U is not contained in the base subspace")
        coords.append(c)
    merged = {}
    order = []
    for w in S.weights:
        f = tuple(w(c) for c in coords)
        if f not in merged:
            merged[f] = []
            order.append(f)
        merged[f].append(w)
    n = S.graded.dim
    out = []
    for f in order:
        parts = merged[f]
        space = Subspace(n, [v for w in parts for v in w.space.basis])
        out.append(Weight(f, sum(w.multiplicity for w in parts), space))
    out.sort(key=lambda w: (not w.is_zero, _sort_key(w)))
    return WeightSystem(S.graded, U, out)


def is_regular(q, S: WeightSystem) -> bool:
    c = S.coords(q)
    return all(w(c) != 0 for w in S.nonzero())


def normalize_functional(f):
    for a in f:
        if a:
            inv = 1 / a
            return tuple(x * inv for x in f)
    return tuple(f)


def hyperplane_arrangement(S: WeightSystem):
    """Distinct kernels of the nonzero weights, as normalized functionals."""
    seen = []
    for w in S.nonzero():
        nf = normalize_functional(w.functional)
        if nf not in seen:
            seen.append(nf)
    return seen


def hyperplane_subspace(S: WeightSystem, functional) -> Subspace:
    """The kernel of a functional as a subspace of g (inside span(base))."""
    from ..exactnum import nullspace, lincomb
    n = S.graded.dim
    ker = nullspace([functional], S.rank) if S.rank else []
    return Subspace(n, [lincomb(c, S.base, n) for c in ker])


def regularity_crosscheck(G, S: WeightSystem, q) -> bool:
    """is_regular(q) iff z(q) = z(base); returns True when both sides agree."""
    g = G.algebra
    return is_regular(q, S) == (centralizer(g, [vec(q)]).space == centralizer(g, S.base).space)
