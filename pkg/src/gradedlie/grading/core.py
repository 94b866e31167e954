"""Z_m-gradings of Lie algebras and the automorphisms defining them.

theta acts on the i-th component as w^i, where w = exp(2 pi i / m). Scalars
live in Q(w_M) for a multiple M of m (``field``), so that restrictions and
shifted gradings can keep the ambient coefficient field.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from gmpy2 import mpq

from ..exactnum import (CycloField, ExactMatrix, Subspace, is_direct_sum, lincomb,
                        simultaneous_eigenspaces, vec)
from ..liealg import LieAlgebra, RootSystem, Subalgebra, chevalley_basis, parse_type
from ..liealg.ops import (centralizer, center_and_derived, is_nilpotent_element,
                          is_semisimple_element, jordan_decomposition)

_ZERO = mpq(0)


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class KacSpec:
    """Kac coordinates (s_0, ..., s_l) of an inner automorphism."""

    cartan_type: str
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(s) for s in self.coords))
        comps = parse_type(self.cartan_type)
        if len(comps) != 1:
            raise GradingError("Kac coordinates need a simple Cartan type")
        rank = comps[0][1]
        if len(self.coords) != rank + 1:
            raise GradingError(f"expected {rank + 1} Kac coordinates, got {len(self.coords)}")
        if any(s < 0 for s in self.coords):
            raise GradingError("Kac coordinates must be nonnegative")
        if not any(self.coords):
            raise GradingError("Kac coordinates must not all vanish")

    @property
    def marks(self):
        """(1, a_1, ..., a_l): coefficients of the highest root, with a_0 = 1."""
        return (1,) + RootSystem.of_type(self.cartan_type).highest_root

    @property
    def m(self) -> int:
        return sum(a * s for a, s in zip(self.marks, self.coords))


class GradedAlgebra:
    """Lie algebra with a Z_m-grading given by component subspaces."""

    def __init__(self, algebra: LieAlgebra, m: int, components, field: CycloField | None = None,
                 theta: ExactMatrix | None = None, name: str = "", check: bool = True):
        if m < 1:
            raise GradingError("grading order must be positive")
        if len(components) != m:
            raise GradingError("need one component per degree")
        self.algebra = algebra
        self.m = m
        self.field = field if field is not None else CycloField(m)
        if self.field.order % m:
            raise GradingError("coefficient field must contain the m-th roots of unity")
        self.components = [c if isinstance(c, Subspace) else Subspace(algebra.dim, c)
                           for c in components]
        self.name = name or algebra.name
        self.kac = None
        if check and not is_direct_sum(self.components, Subspace.full(algebra.dim)):
            raise GradingError("components do not form a direct-sum decomposition")
        basis = [v for c in self.components for v in c.basis]
        self._P = ExactMatrix.from_columns(basis, algebra.dim)
        self._Pinv = self._P.inverse()
        self._offsets = []
        off = 0
        for c in self.components:
            self._offsets.append(off)
            off += c.dim
        self._theta = theta
        if check:
            self.check_closure()

    # basic data -----------------------------------------------------------
    @property
    def dim(self):
        return self.algebra.dim

    def omega(self, k: int = 1):
        return self.field.root_of_unity(self.m, k % self.m)

    def component(self, i) -> Subspace:
        return self.components[i % self.m]

    def dims(self):
        return [c.dim for c in self.components]

    @property
    def theta(self) -> ExactMatrix:
        if self._theta is None:
            self._theta = theta_from_grading(self, check=False)
        return self._theta

    def projections(self, x):
        coords = self._Pinv.apply(vec(x))
        out = []
        for i, c in enumerate(self.components):
            off = self._offsets[i]
            part = coords[off: off + c.dim]
            out.append(lincomb(part, c.basis, self.dim) if c.dim else tuple(_ZERO for _ in x))
        return out

    def project(self, x, i):
        return self.projections(x)[i % self.m]

    def degree(self, x):
        """Degree of a homogeneous nonzero element, else None."""
        nz = [i for i, p in enumerate(self.projections(x)) if any(p)]
        return nz[0] if len(nz) == 1 else None

    def is_homogeneous(self, x, i) -> bool:
        return vec(x) in self.component(i)

    def check_closure(self):
        g = self.algebra
        for i, ci in enumerate(self.components):
            for j, cj in enumerate(self.components):
                if j < i:
                    continue
                target = self.component(i + j)
                for x in ci.basis:
                    for y in cj.basis:
                        if g.bracket(x, y) not in target:
                            raise GradingError(f"[g_{i}, g_{j}] is not contained in g_{(i + j) % self.m}")
        return True

    def same_grading(self, other) -> bool:
        return self.algebra is other.algebra and self.components == other.components

    def __repr__(self):
        return f"GradedAlgebra({self.name}, m={self.m}, dims={self.dims()})"


# ----------------------------------------------------------------------------
# constructions
# ----------------------------------------------------------------------------
def grade_from_kac(ks: KacSpec, field: CycloField | None = None) -> GradedAlgebra:
    """Inner grading: e_i in degree s_i, f_i in degree -s_i, Cartan part in degree 0."""
    g = chevalley_basis(ks.cartan_type)
    m = ks.m
    s = ks.coords[1:]
    rs = g.root_system
    l = rs.rank
    deg = [0] * g.dim
    for r, idx in g.root_index.items():
        deg[idx] = sum(c * si for c, si in zip(r, s)) % m
    comps = [[] for _ in range(m)]
    for k in range(g.dim):
        comps[deg[k]].append(g.basis_vector(k))
    F = field if field is not None else CycloField(m)
    G = GradedAlgebra(g, m, comps, field=F,
                      name=f"{ks.cartan_type}{list(ks.coords)}", check=False)
    G.kac = ks
    G.degrees = deg
    G.check_closure()
    return G


def grading_from_theta(g: LieAlgebra, theta: ExactMatrix, m: int,
                       field: CycloField | None = None) -> GradedAlgebra:
    F = field if field is not None else CycloField(m)
    check_automorphism(g, theta, m)
    eig = simultaneous_eigenspaces([theta], F)
    roots = {F.root_of_unity(m, i): i for i in range(m)}
    comps = [Subspace.zero(g.dim) for _ in range(m)]
    for (lam,), sp in eig:
        i = roots.get(lam)
        if i is None:
            raise GradingError(f"theta has eigenvalue {lam} which is not an {m}-th root of unity")
        comps[i] = sp
    return GradedAlgebra(g, m, comps, field=F, theta=theta)


def theta_from_grading(G: GradedAlgebra, check: bool = True) -> ExactMatrix:
    diag = []
    for i, c in enumerate(G.components):
        diag.extend([G.omega(i)] * c.dim)
    D = ExactMatrix.diagonal(diag)
    theta = G._P @ D @ G._Pinv
    if check:
        check_automorphism(G.algebra, theta, G.m)
    return theta


def check_automorphism(g: LieAlgebra, theta: ExactMatrix, m: int):
    n = g.dim
    if not (theta ** m).is_identity():
        raise GradingError("theta^m is not the identity")
    cols = theta.columns()
    for i in range(n):
        for j in range(i + 1, n):
            lhs = theta.apply(g.bracket(g.basis_vector(i), g.basis_vector(j)))
            if lhs != g.bracket(cols[i], cols[j]):
                raise GradingError(f"theta does not preserve [{g.labels[i]}, {g.labels[j]}]")
    return True


def direct_sum(G1: GradedAlgebra, G2: GradedAlgebra) -> GradedAlgebra:
    if G1.m != G2.m:
        raise GradingError("direct sum needs equal grading orders")
    g = G1.algebra.direct_sum(G2.algebra)
    n1, n2 = G1.dim, G2.dim
    comps = []
    for c1, c2 in zip(G1.components, G2.components):
        vecs = [tuple(v) + (_ZERO,) * n2 for v in c1.basis]
        vecs += [(_ZERO,) * n1 + tuple(v) for v in c2.basis]
        comps.append(Subspace(g.dim, vecs))
    F = CycloField(max(G1.field.order, G2.field.order)) if G1.field.order % G2.field.order == 0 \
        or G2.field.order % G1.field.order == 0 else None
    if F is None:
        raise GradingError("incompatible coefficient fields")
    return GradedAlgebra(g, G1.m, comps, field=F, name=f"{G1.name}+{G2.name}")


def restrict_grading(G: GradedAlgebra, sub: Subalgebra, name: str = "") -> GradedAlgebra:
    """The graded subalgebra sub = (+) (sub & g_i), as an algebra in its own right.

    The returned object carries ``embedding`` (the ambient vectors of its basis)
    and ``to_local`` (ambient vector -> local coordinates).
    """
    h = sub.as_lie_algebra()
    pieces = []
    for i in range(G.m):
        pieces.append(sub.space & G.component(i))
    if sum(p.dim for p in pieces) != sub.dim:
        raise GradingError("subalgebra is not graded")
    comps = [[sub.space.coords(v) for v in p.basis] for p in pieces]
    H = GradedAlgebra(h, G.m, comps, field=G.field, name=name or f"sub({G.name})")
    H.embedding = list(sub.basis)
    H.ambient = G
    H.to_local = sub.space.coords
    return H


def to_ambient(H: GradedAlgebra, x):
    return lincomb(x, H.embedding, H.ambient.dim)


def shift_grading(G: GradedAlgebra, j: int) -> GradedAlgebra:
    """Z_mbar-grading of (+)_p g_{pj}, mbar = m / gcd(m, j), with new g_p = old g_{pj}."""
    m = G.m
    if j % m == 0:
        raise GradingError("shift index must be nonzero modulo m")
    mbar = m // gcd(m, j)
    old = [G.component(p * j) for p in range(mbar)]
    if mbar == m:
        H = GradedAlgebra(G.algebra, m, old, field=G.field, name=f"{G.name}<{j}>")
        H.parent = G
        return H
    total = Subspace(G.dim, [v for c in old for v in c.basis])
    sub = Subalgebra(G.algebra, space=total)
    h = sub.as_lie_algebra()
    comps = [[total.coords(v) for v in c.basis] for c in old]
    H = GradedAlgebra(h, mbar, comps, field=G.field, name=f"{G.name}<{j}>")
    H.embedding = list(total.basis)
    H.ambient = G
    H.to_local = total.coords
    H.parent = G
    return H


# ----------------------------------------------------------------------------
# graded Jordan decomposition and graded centralizers
# ----------------------------------------------------------------------------
def graded_jordan(G: GradedAlgebra, x, degree: int = 1):
    x = vec(x)
    if not G.is_homogeneous(x, degree):
        raise GradingError(f"element is not homogeneous of degree {degree}")
    xs, xn = jordan_decomposition(G.algebra, x)
    if not (G.is_homogeneous(xs, degree) and G.is_homogeneous(xn, degree)):
        raise GradingError("Jordan parts are not homogeneous (grading is not by automorphisms?)")
    return xs, xn


@dataclass
class GradedCentralizer:
    """z_g(h) with its graded pieces and the split Z(z)_i + D(z)_i per degree."""

    z: Subalgebra
    pieces: list
    center: Subalgebra
    derived: Subalgebra
    center_pieces: list
    derived_pieces: list
    elements: list = dc_field(default_factory=list)

    def degree_dims(self):
        return [p.dim for p in self.pieces]


def graded_centralizer(G: GradedAlgebra, hs, degree: int = 1, check: bool = True) -> GradedCentralizer:
    g = G.algebra
    hs = [vec(x) for x in hs]
    if check:
        for x in hs:
            if not G.is_homogeneous(x, degree):
                raise GradingError(f"element {x} is not homogeneous of degree {degree}")
            if not is_semisimple_element(g, x):
                raise GradingError(f"element {x} is not semisimple")
        for a in range(len(hs)):
            for b in range(a + 1, len(hs)):
                if any(g.bracket(hs[a], hs[b])):
                    raise GradingError(f"elements {a} and {b} do not commute")
    z = centralizer(g, hs)
    pieces = [centralizer(g, hs, within=G.component(i)).space for i in range(G.m)]
    if not is_direct_sum(pieces, z.space):
        raise GradingError("graded pieces do not reassemble the centralizer")
    Z, D = center_and_derived(z)
    Zp = [Z.space & p for p in pieces]
    Dp = [D.space & p for p in pieces]
    for i in range(G.m):
        if not is_direct_sum([Zp[i], Dp[i]], pieces[i]):
            raise GradingError(f"center/derived split fails in degree {i}")
    return GradedCentralizer(z, pieces, Z, D, Zp, Dp, hs)
