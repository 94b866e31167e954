"""Real structures, finite Gamma-groups and their first Galois cohomology.

A Gamma-group is a finite group A with an involutive automorphism s (the
action of complex conjugation). Cocycles are the z with z s(z) = e, and
z ~ a z s(a)^{-1}. Everything here is a brute-force enumeration over the
elements, which is fine for groups up to a few hundred thousand elements.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field

from ..exactnum import ExactMatrix, Subspace, is_rational_scalar, vconj, vec
from ..grading import GradedAlgebra
from ..weyl.groups import DEFAULT_CAP, GroupOrderExceeded, MatrixGroup


class RealStructureError(ValueError):
    pass


class EmbeddingError(ValueError):
    pass


# ----------------------------------------------------------------------------
# real structures
# ----------------------------------------------------------------------------
@dataclass
class RealStructure:
    """sigma(x) = R conj(x) for a rational matrix R.

    ``kind`` is "graded" when sigma preserves every component (then
    sigma theta sigma = theta^-1), or "theta_stable" when sigma commutes with
    theta and swaps g_i with g_-i.
    """

    graded: GradedAlgebra
    matrix: ExactMatrix
    kind: str = "graded"
    name: str = ""

    def __call__(self, x):
        return self.matrix.apply(vconj(vec(x)))

    def conjugate_matrix(self, A: ExactMatrix) -> ExactMatrix:
        """sigma A sigma for a complex-linear map A."""
        return self.matrix @ A.conj() @ self.matrix.inverse()

    def checks(self) -> dict:
        G = self.graded
        g = G.algebra
        n = G.dim
        R = self.matrix
        out = {"rational": all(is_rational_scalar(c) for c in R.entries())}
        out["involutive"] = (R @ R.conj()).is_identity()
        ok = True
        basis = [g.basis_vector(i) for i in range(n)]
        for i in range(n):
            ei = R.column(i)
            for j in range(i + 1, n):
                lhs = self(g.bracket(basis[i], basis[j]))
                rhs = g.bracket(ei, R.column(j))
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        out["bracket"] = ok
        theta = G.theta
        st = self.conjugate_matrix(theta)
        if self.kind == "graded":
            out["theta"] = (st @ theta).is_identity()
            target = lambda i: G.component(i)
        else:
            out["theta"] = st == theta
            target = lambda i: G.component(-i)
        out["components"] = all(self(v) in target(i)
                                for i in range(G.m) for v in G.component(i).basis)
        return out

    def verify(self):
        bad = [k for k, v in self.checks().items() if not v]
        if bad:
            raise RealStructureError(f"real structure fails: {', '.join(bad)}")
        return self


def _rational_constants(g) -> bool:
    return all(is_rational_scalar(c) for row in g.table for entry in row for _, c in entry)


def split_real_structure(G: GradedAlgebra) -> RealStructure:
    """Coefficientwise conjugation of the (rational) structure constants."""
    if not _rational_constants(G.algebra):
        raise RealStructureError("structure constants are not rational")
    R = RealStructure(G, ExactMatrix.identity(G.dim), "graded", name="split")
    return R.verify()


def chevalley_involution(g) -> ExactMatrix:
    """h -> -h, e_a -> -e_{-a} on a Chevalley basis."""
    index = getattr(g, "root_index", None)
    if index is None:
        raise RealStructureError("algebra carries no root data")
    n = g.dim
    cols = [[0] * n for _ in range(n)]
    for i in range(g.rank):
        cols[i][i] = -1
    for r, k in index.items():
        cols[k][index[tuple(-c for c in r)]] = -1
    return ExactMatrix.from_columns([vec(c) for c in cols], n)


def compact_real_structure(G: GradedAlgebra) -> RealStructure:
    """Split conjugation composed with the Chevalley involution.

    The result commutes with theta for Kac gradings, so it is checked as a
    theta-stable structure; for m <= 2 it also preserves the components.
    """
    if not _rational_constants(G.algebra):
        raise RealStructureError("structure constants are not rational")
    R = RealStructure(G, chevalley_involution(G.algebra), "theta_stable", name="compact")
    return R.verify()


def real_cartan_check(R: RealStructure, h_real, seed: int = 0, certificate: bool = False):
    """Is span_C(h_real) a Cartan subspace of g_1? h_real must be sigma-stable."""
    from ..cartan import PreconditionError, is_cartan_subspace

    G = R.graded
    hs = [vec(v) for v in h_real]
    space = Subspace(G.dim, hs)
    if any(R(v) not in space for v in hs):
        raise RealStructureError("subspace is not stable under the conjugation")
    hs = list(space.basis)
    try:
        ok, cert = is_cartan_subspace(G, hs, seed=seed)
    except PreconditionError as exc:
        ok, cert = False, {"reason": "precondition", "detail": str(exc)}
    return (ok, cert) if certificate else ok


# ----------------------------------------------------------------------------
# Gamma-groups
# ----------------------------------------------------------------------------
class GammaGroup:
    """Finite group on indices 0..n-1 (0 is the identity) with a twist.

    ``mul`` is either a full table (list of lists) or a callable. ``elements``
    optionally keeps the underlying objects (matrices, permutations).
    """

    def __init__(self, n: int, mul, twist, generators=None, elements=None, name: str = "",
                 check: bool = True, inverse=None):
        self.n = n
        if callable(mul):
            self._mulf, self._table = mul, None
        else:
            self._table, self._mulf = mul, None
        self.twist = list(twist)
        self.elements = elements
        self.name = name
        self.parent = None
        self.embedding = None
        self._inv = None
        self._invf = inverse
        self._h1 = None
        if len(self.twist) != n:
            raise ValueError("twist must permute all elements")
        self.generators = list(generators) if generators is not None else self._find_generators()
        if check:
            self.check()

    # group law ----------------------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[a][b]
        return self._mulf(a, b)

    def inv(self, a: int) -> int:
        if self._inv is None:
            self._inv = {0: 0}
        b = self._inv.get(a)
        if b is None:
            if self._invf is not None:
                b = self._invf(a)
            else:
                # walk the cyclic subgroup of a
                p, b = a, 0
                while p != 0:
                    b, p = p, self.mul(p, a)
            self._inv[a] = b
            self._inv[b] = a
        return b

    def __len__(self):
        return self.n

    @property
    def order(self):
        return self.n

    def _find_generators(self):
        gens, inside = [], {0}
        for x in range(self.n):
            if x in inside:
                continue
            gens.append(x)
            inside = self._closure(gens)
            if len(inside) == self.n:
                break
        return gens

    def _closure(self, gens):
        seen = {0}
        queue = deque([0])
        while queue:
            w = queue.popleft()
            for s in gens:
                x = self.mul(s, w)
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        return seen

    def check(self):
        tw = self.twist
        if any(tw[tw[x]] != x for x in range(self.n)):
            raise ValueError("twist is not an involution")
        for s in self.generators:
            for x in range(self.n):
                if tw[self.mul(s, x)] != self.mul(tw[s], tw[x]):
                    raise ValueError("twist is not an automorphism")
        if len(self._closure(self.generators)) != self.n:
            raise ValueError("generators do not generate the group")

    # constructions ------------------------------------------------------------
    @classmethod
    def from_table(cls, table, twist=None, name=""):
        n = len(table)
        return cls(n, [list(r) for r in table], twist if twist is not None else range(n),
                   name=name)

    @classmethod
    def from_matrix_group(cls, W: MatrixGroup, twist=None, name=""):
        """``twist`` maps a matrix to a matrix of W (default: identity)."""
        els = W.elements
        index = W.index

        def mul(a, b):
            return index[els[a] @ els[b]]

        if twist is None:
            tw = list(range(len(els)))
        else:
            tw = []
            for w in els:
                t = twist(w)
                if t not in index:
                    raise RealStructureError(
                        "conjugated element is not in the group: it is not defined over R "
                        "in this realization")
                tw.append(index[t])
        gens = sorted({index[g] for g in W.generators})
        return cls(len(els), mul, tw, generators=gens, elements=els, name=name or W.name,
                   inverse=lambda a: index[els[a].inverse()])

    @classmethod
    def trivial(cls):
        return cls(1, [[0]], [0], name="1")

    @classmethod
    def cyclic(cls, n: int, twist: str = "trivial"):
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        if twist == "trivial":
            tw = list(range(n))
        elif twist == "inversion":
            tw = [(-a) % n for a in range(n)]
        else:
            raise ValueError(f"unknown twist {twist!r}")
        return cls(n, table, tw, generators=[1 % n] if n > 1 else [], name=f"C{n}")

    @classmethod
    def symmetric(cls, k: int):
        """S_k with trivial twist; elements are permutation tuples."""
        from itertools import permutations

        perms = sorted(permutations(range(k)))
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
        return cls(len(perms), table, range(len(perms)), elements=perms, name=f"S{k}")

    def subgroup(self, members, name=""):
        """Sub-Gamma-group on a twist-stable subset of indices (containing 0)."""
        members = sorted(set(members) | {0})
        local = {x: i for i, x in enumerate(members)}
        for x in members:
            if self.twist[x] not in local:
                raise EmbeddingError("subset is not stable under the twist")

        def mul(a, b):
            c = self.mul(members[a], members[b])
            if c not in local:
                raise EmbeddingError("subset is not closed under multiplication")
            return local[c]

        els = [self.elements[x] for x in members] if self.elements is not None else members
        H = GammaGroup(len(members), mul, [local[self.twist[x]] for x in members],
                       elements=els, name=name)
        H.parent = self
        H.embedding = members
        return H

    def __repr__(self):
        return f"GammaGroup({self.name or '?'}, order={self.n})"


@dataclass
class H1Set:
    group: GammaGroup
    representatives: list
    class_map: dict
    classes: list = dc_field(default_factory=list)

    def __len__(self):
        return len(self.representatives)

    def class_of(self, z: int) -> int:
        return self.class_map[z]


def h1(A: GammaGroup, cap: int = DEFAULT_CAP) -> H1Set:
    """Cocycles up to twisted conjugacy, by full enumeration."""
    if A.n > cap:
        raise GroupOrderExceeded(f"group order {A.n} exceeds the cap {cap}")
    if A._h1 is not None:
        return A._h1
    tw = A.twist
    cocycles = [z for z in range(A.n) if A.mul(z, tw[z]) == 0]
    zset = set(cocycles)
    # a.z = a z s(a)^-1; orbits under the generators are orbits under A
    act = [(a, A.inv(tw[a])) for a in A.generators]
    class_map = {}
    classes = []
    for z in cocycles:
        if z in class_map:
            continue
        k = len(classes)
        orbit = [z]
        class_map[z] = k
        queue = deque([z])
        while queue:
            y = queue.popleft()
            for a, sa in act:
                x = A.mul(A.mul(a, y), sa)
                if x not in class_map:
                    assert x in zset
                    class_map[x] = k
                    orbit.append(x)
                    queue.append(x)
        classes.append(sorted(orbit))
    H = H1Set(A, [c[0] for c in classes], class_map, classes)
    A._h1 = H
    return H


def _resolve_embedding(A: GammaGroup, B: GammaGroup, embed):
    if embed is None:
        if A is B:
            embed = range(A.n)
        elif A.parent is B:
            embed = A.embedding
        elif A.n == 1:
            embed = [0]
        elif A.elements is not None and B.elements is not None:
            where = {w: i for i, w in enumerate(B.elements)}
            try:
                embed = [where[w] for w in A.elements]
            except KeyError:
                raise EmbeddingError("element of A not found in B") from None
        else:
            raise EmbeddingError("no embedding given")
    embed = list(embed) if not callable(embed) else [embed(a) for a in range(A.n)]
    if embed[0] != 0:
        raise EmbeddingError("embedding does not send identity to identity")
    for s in A.generators:
        for x in range(A.n):
            if embed[A.mul(s, x)] != B.mul(embed[s], embed[x]):
                raise EmbeddingError("embedding is not a homomorphism")
    if any(embed[A.twist[a]] != B.twist[embed[a]] for a in range(A.n)):
        raise EmbeddingError("embedding is not twist-equivariant")
    return embed


def coboundaries(B: GammaGroup):
    """The trivial class {b^-1 s(b)} of H^1 B."""
    return {B.mul(B.inv(b), B.twist[b]) for b in range(B.n)}


def induced_kernel(A: GammaGroup, B: GammaGroup, embed=None, cap: int = DEFAULT_CAP):
    """Class indices of H^1 A whose image in H^1 B is trivial."""
    if B.n > cap:
        raise GroupOrderExceeded(f"group order {B.n} exceeds the cap {cap}")
    emb = _resolve_embedding(A, B, embed)
    H = h1(A, cap)
    triv = coboundaries(B)
    return [k for k, z in enumerate(H.representatives) if emb[z] in triv]


CONJUGACY_ASSUMPTION = "all Cartan subspaces of the real g_1 are conjugate (assumed, not checked)"


def real_orbit_count(W: GammaGroup, Wq: GammaGroup, embed=None, cap: int = DEFAULT_CAP) -> int:
    """|ker[H^1 W_q -> H^1 W]|: real orbits in G_0(q) meeting g_1, under CONJUGACY_ASSUMPTION."""
    return len(induced_kernel(Wq, W, embed, cap))


def real_orbit_report(W: GammaGroup, Wq: GammaGroup, embed=None, cap: int = DEFAULT_CAP):
    ker = induced_kernel(Wq, W, embed, cap)
    H = h1(Wq, cap)
    return {"count": len(ker), "kernel_representatives": [H.representatives[k] for k in ker],
            "h1_Wq": len(H), "h1_W": len(h1(W, cap)), "assumption": CONJUGACY_ASSUMPTION}


# ----------------------------------------------------------------------------
# conjugation on Cartan-subspace coordinates
# ----------------------------------------------------------------------------
def conjugation_on_basis(R: RealStructure | None, basis=None) -> ExactMatrix | None:
    """Matrix S with sigma(sum c_j h_j) = sum (S conj(c))_j h_j; None means S = 1."""
    if R is None or not basis:
        return None
    basis = [vec(b) for b in basis]
    P = ExactMatrix.from_columns(basis, len(basis[0]))
    cols = []
    for b in basis:
        c = P.solve(R(b))
        if c is None:
            raise RealStructureError("Cartan subspace is not stable under the conjugation")
        cols.append(c)
    S = ExactMatrix.from_columns(cols, len(basis))
    return None if S.is_identity() else S


def gamma_action_on_weyl(W: MatrixGroup, R: RealStructure | None = None, basis=None) -> GammaGroup:
    """W with the twist w -> S conj(w) S^-1 (entrywise conjugation when S = 1)."""
    S = conjugation_on_basis(R, basis)
    if S is None:
        twist = lambda w: w.conj()
    else:
        Si = S.inverse()
        twist = lambda w: S @ w.conj() @ Si
    return GammaGroup.from_matrix_group(W, twist)


def _permutation_of(w: ExactMatrix, points, where):
    """Permutation of ``points`` (functionals) induced by f -> f o w^-1."""
    act = w.inverse().transpose()
    try:
        return tuple(where[act.apply(f)] for f in points)
    except KeyError:
        raise RealStructureError("the point set is not stable under the group") from None


def _perm_closure(gens, ident, cap):
    seen, queue = {ident}, deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if len(seen) > cap:
                    raise GroupOrderExceeded(f"group order exceeds the cap {cap}")
    return seen


def gamma_action_by_permutations(generators, points, R: RealStructure | None = None,
                                 basis=None, cap: int = DEFAULT_CAP, name="W",
                                 reduce_generators: bool = False) -> GammaGroup:
    """W as permutations of a finite stable spanning set of functionals.

    Only the generators are handled as matrices; the closure, the twist and all
    products afterwards are tuple compositions. The twist is that of
    ``gamma_action_on_weyl``, extended from the generators multiplicatively.
    With ``reduce_generators`` a generator already in the group generated by
    the earlier ones is dropped (each test is a permutation closure).
    """
    points = [vec(f) for f in points]
    where = {f: i for i, f in enumerate(points)}
    if len(where) != len(points):
        raise ValueError("points must be distinct")
    S = conjugation_on_basis(R, basis)
    Si = S.inverse() if S is not None else None
    ident = tuple(range(len(points)))
    gens, tgens, reached = [], [], {ident}
    for w in generators:
        p = _permutation_of(w, points, where)
        if reduce_generators and p in reached:
            continue
        tw = w.conj() if S is None else S @ w.conj() @ Si
        gens.append(p)
        tgens.append(_permutation_of(tw, points, where))
        if reduce_generators:
            reached = _perm_closure(gens, ident, cap)
    els, twist = [ident], [ident]
    index = {ident: 0}
    head = 0
    while head < len(els):
        x, tx = els[head], twist[head]
        head += 1
        for g, tg in zip(gens, tgens):
            y = tuple(g[i] for i in x)
            if y not in index:
                index[y] = len(els)
                els.append(y)
                twist.append(tuple(tg[i] for i in tx))
                if len(els) > cap:
                    raise GroupOrderExceeded(f"group order exceeds the cap {cap}")
    try:
        tw = [index[t] for t in twist]
    except KeyError:
        raise RealStructureError("twisted generator is not in the group") from None

    def mul(a, b):
        pa, pb = els[a], els[b]
        return index[tuple(pa[i] for i in pb)]

    def inverse(a):
        pa = els[a]
        out = [0] * len(pa)
        for i, j in enumerate(pa):
            out[j] = i
        return index[tuple(out)]

    gidx = sorted({index[g] for g in gens} - {0})
    return GammaGroup(len(els), mul, tw, generators=gidx, elements=els, name=name,
                      inverse=inverse)


def real_point_decision(p, gamma_classes, R: RealStructure | None = None, basis=None):
    """First i with conj(p) = gamma_i^-1 p, or None.

    ``p`` is given in coordinates of ``basis`` (a sigma-stable Cartan subspace);
    the gamma_i are matrices on those coordinates.
    """
    p = vec(p)
    S = conjugation_on_basis(R, basis)
    pb = vconj(p) if S is None else S.apply(vconj(p))
    for i, gamma in enumerate(gamma_classes):
        if gamma.inverse().apply(p) == pb:
            return i
    return None


def lift_real_point(lift: ExactMatrix, p):
    """Candidate real representative g_i p from user-supplied lifting data."""
    return lift.apply(vec(p))
