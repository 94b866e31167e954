"""Cartan subspaces of g_1: verification, search, algebraic closure, maximal rank."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from math import gcd

from gmpy2 import mpq

from ..exactnum import (EigenvalueFieldError, ExactMatrix, Subspace, lincomb, nullspace,
                        roots_in_field, simultaneous_eigenspaces, vec)
from ..exactnum.cyclo import Cyclo
from ..exactnum.poly import minimal_polynomial
from ..grading import GradedAlgebra, GradingError, graded_centralizer, graded_jordan
from ..liealg import Subalgebra
from ..liealg.ops import centralizer, is_nilpotent_element, is_nilpotent_matrix, \
    is_semisimple_element

_ZERO = mpq(0)


class CartanSearchError(RuntimeError):
    def __init__(self, msg, stats=None):
        super().__init__(msg)
        self.stats = stats or {}


class PreconditionError(ValueError):
    pass


@dataclass
class CartanSubspace:
    graded: GradedAlgebra
    basis: list
    certificate: dict = dc_field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def space(self) -> Subspace:
        return Subspace(self.graded.dim, self.basis)

    def __repr__(self):
        return f"CartanSubspace(rank={self.rank} in {self.graded!r})"


# ----------------------------------------------------------------------------
# nilpotency of a linear space of elements
# ----------------------------------------------------------------------------
def _combos(rng, k, count, width):
    for _ in range(count):
        yield [rng.randint(-width, width) for _ in range(k)]


def _flag_nilpotent(g, vectors) -> bool:
    """True if the associative algebra generated by ad(vectors) is nilpotent."""
    n = g.dim
    mats = [g.ad(v) for v in vectors]
    from ..exactnum import rref
    cur = rref([c for M in mats for c in M.transpose().data], n)[0]
    prev = n + 1
    while cur:
        if len(cur) >= prev:
            return False
        prev = len(cur)
        cur = rref([M.apply(v) for M in mats for v in cur], n)[0]
    return True


def _grid_points(r, K):
    """Points certifying that a homogeneous polynomial of degree <= K in r
    variables vanishes: (1, c') with c' in {0..K}^(r-1), then (0, recursive)."""
    if r == 0:
        return
    for rest in itertools.product(range(K + 1), repeat=r - 1):
        yield (1,) + rest
    for pt in _grid_points(r - 1, K):
        yield (0,) + pt


def nilpotent_space_certificate(g, vectors, seed=0, samples=16, grid_budget=4000):
    """Decide whether every element of span(vectors) is ad-nilpotent.

    Returns (verdict, info). verdict is True, False or None (undecided).
    """
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return True, {"method": "empty"}
    for v in vectors:
        if not is_nilpotent_element(g, v):
            return False, {"witness": v, "method": "basis"}
    k = len(vectors)
    total = lincomb([1] * k, vectors, g.dim)
    if k > 1 and not is_nilpotent_element(g, total):
        return False, {"witness": total, "method": "sum"}
    rng = random.Random(seed)
    if k > 1:
        for c in _combos(rng, k, samples, 3):
            x = lincomb(c, vectors, g.dim)
            if any(x) and not is_nilpotent_element(g, x):
                return False, {"witness": x, "method": "random"}
    if _flag_nilpotent(g, vectors):
        return True, {"method": "engel"}
    # each coefficient of the characteristic polynomial of ad(sum c_i v_i) is a
    # homogeneous polynomial in c of degree <= dim g; it vanishes identically
    # iff it vanishes on the grid below
    K = g.dim
    npts = sum((K + 1) ** (r - 1) for r in range(1, k + 1))
    if npts <= grid_budget:
        for pt in _grid_points(k, K):
            x = lincomb(pt, vectors, g.dim)
            if any(x) and not is_nilpotent_element(g, x):
                return False, {"witness": x, "method": "grid"}
        return True, {"method": "grid", "points": npts}
    return None, {"method": "uncertified", "grid_points_needed": npts}


# ----------------------------------------------------------------------------
# the criterion
# ----------------------------------------------------------------------------
def _check_preconditions(G, hs):
    g = G.algebra
    for x in hs:
        if not G.is_homogeneous(x, 1):
            raise PreconditionError(f"element {x} is not in g_1")
        if not is_semisimple_element(g, x):
            raise PreconditionError(f"element {x} is not semisimple")
    for a in range(len(hs)):
        for b in range(a + 1, len(hs)):
            if any(g.bracket(hs[a], hs[b])):
                raise PreconditionError(f"elements {a} and {b} do not commute")


def is_cartan_subspace(G: GradedAlgebra, hs, seed: int = 0, check: bool = True):
    """(verdict, certificate) for the criterion Z(z(h))_1 = h and D(z(h))_1 nilpotent."""
    hs = [vec(x) for x in hs]
    if check:
        _check_preconditions(G, hs)
    return _criterion(G, hs, seed)[:2]


def _criterion(G, hs, seed):
    gc = graded_centralizer(G, hs, check=False)
    h = Subspace(G.dim, hs)
    Z1 = gc.center_pieces[1 % G.m]
    D1 = gc.derived_pieces[1 % G.m]
    cert = {"dim_z": gc.z.dim, "dim_Z1": Z1.dim, "dim_D1": D1.dim, "rank": h.dim}
    if Z1 != h:
        extra = next(v for v in Z1.basis if v not in h)
        cert.update(reason="center", witness=extra)
        return False, cert, gc
    verdict, info = nilpotent_space_certificate(G.algebra, list(D1.basis), seed=seed)
    cert["nilpotency"] = info["method"]
    if verdict is True:
        cert["reason"] = "ok"
        return True, cert, gc
    if verdict is False:
        cert.update(reason="derived", witness=info["witness"])
        return False, cert, gc
    cert["reason"] = "uncertified"
    return False, cert, gc


# ----------------------------------------------------------------------------
# search
# ----------------------------------------------------------------------------
def splits_over_field(G, x) -> bool:
    try:
        roots_in_field(minimal_polynomial(G.algebra.ad(x)), G.field)
    except EigenvalueFieldError:
        return False
    return True


def _candidates(space: Subspace, rng, budget):
    B = list(space.basis)
    k = len(B)
    n = space.n
    seen = set()

    def emit(c):
        x = lincomb(c, B, n)
        if any(x) and x not in seen:
            seen.add(x)
            return x
        return None

    for i in range(k):
        x = emit([1 if j == i else 0 for j in range(k)])
        if x:
            yield x
    x = emit([1] * k)
    if x:
        yield x
    for signs in itertools.product((1, -1), repeat=min(k, 6)):
        x = emit(list(signs) + [1] * (k - len(signs)))
        if x:
            yield x
    width = 1
    tries = 0
    while tries < budget:
        c = [rng.randint(-width, width) for _ in range(k)]
        x = emit(c)
        tries += 1
        if tries % 8 == 0:
            width += 1
        if x:
            yield x


def cartan_subspace(G: GradedAlgebra, seed: int = 0, budget: int = 64) -> CartanSubspace:
    """Grow h by semisimple degree-1 elements of z(h) until the criterion holds."""
    rng = random.Random(seed)
    g = G.algebra
    hs = []
    stats = {"attempts": 0, "rejected_nonsplit": 0, "steps": 0}
    while True:
        ok, cert, gc = _criterion(G, hs, seed)
        if ok:
            cert["search"] = dict(stats)
            return CartanSubspace(G, hs, cert)
        h = Subspace(G.dim, hs)
        stats["steps"] += 1
        if cert["reason"] == "center":
            hs.append(cert["witness"])
            continue
        D1 = gc.derived_pieces[1 % G.m]
        found = None
        wit = cert.get("witness")
        pool = ([wit] if wit is not None else []) + list(_candidates(D1, rng, budget))
        for x in pool:
            stats["attempts"] += 1
            if stats["attempts"] > budget + 4 * len(pool):
                break
            if is_nilpotent_element(g, x):
                continue
            xs, _ = graded_jordan(G, x)
            if not any(xs) or xs in h:
                continue
            if not splits_over_field(G, xs):
                stats["rejected_nonsplit"] += 1
                continue
            found = xs
            break
        if found is None:
            raise CartanSearchError(
                f"no admissible semisimple element found (reason {cert['reason']})", stats)
        hs.append(found)


# ----------------------------------------------------------------------------
# algebraic closure and maximal rank
# ----------------------------------------------------------------------------
def _rational_coords(x, field):
    if type(x) is Cyclo:
        return list(x.c)
    return [x] + [_ZERO] * (field.phi - 1)


def algebraic_closure(G: GradedAlgebra, h) -> Subalgebra:
    """Smallest algebraic subalgebra containing h, via integer relations of the weights."""
    hs = list(h.basis) if isinstance(h, CartanSubspace) else [vec(x) for x in h]
    g = G.algebra
    n = g.dim
    if not hs:
        return Subalgebra(g, space=Subspace.zero(n), check=False)._mark()
    blocks = simultaneous_eigenspaces([g.ad(x) for x in hs], G.field, check_commuting=False)
    weights = [lam for lam, _ in blocks]
    N = len(weights)
    F = G.field
    # Q-linear relations sum_j n_j lambda_j = 0
    rows = []
    for i in range(len(hs)):
        for t in range(F.phi if F.phi > 1 else 1):
            rows.append([_rational_coords(weights[j][i], F)[t] for j in range(N)])
    rel = nullspace(rows, N)
    Lam = nullspace(rel, N) if rel else [tuple(mpq(1) if a == b else _ZERO for b in range(N))
                                         for a in range(N)]
    z = centralizer(g, hs)
    Z = list(z.basis)
    d, rho = len(Z), len(Lam)
    # unknowns: y = sum a_s Z_s, mu_j = sum_t c_t Lam_t[j]
    eqs = []
    for j, (lam, sp) in enumerate(blocks):
        for v in sp.basis:
            brs = [g.bracket(zs, v) for zs in Z]
            for coord in range(n):
                row = [brs[s][coord] for s in range(d)]
                row += [-Lam[t][j] * v[coord] for t in range(rho)]
                eqs.append(row)
    sol = nullspace(eqs, d + rho)
    vecs = [lincomb(s[:d], Z, n) for s in sol]
    return Subalgebra(g, space=Subspace(n, vecs), check=False)._mark()


def graded_support(G: GradedAlgebra, sub: Subalgebra):
    return sorted(i for i in range(G.m) if (sub.space & G.component(i)).dim > 0)


def closure_support_ok(G: GradedAlgebra, sub: Subalgebra) -> bool:
    pieces = [sub.space & G.component(i) for i in range(G.m)]
    if sum(p.dim for p in pieces) != sub.dim:
        return False
    return all(gcd(i, G.m) == 1 for i, p in enumerate(pieces) if p.dim)


def _is_cartan_subalgebra(g, sub: Subalgebra, rank) -> bool:
    if not sub.is_abelian():
        return False
    if not all(is_semisimple_element(g, v) for v in sub.basis):
        return False
    if rank is not None and sub.dim != rank:
        return False
    return centralizer(g, list(sub.basis)).dim == sub.dim


def algebra_rank(g) -> int | None:
    return g.rank


def maximal_rank_report(G: GradedAlgebra, h) -> dict:
    """Both maximal-rank tests: z(h) Cartan ('centralizer') and closure Cartan ('closure')."""
    hs = list(h.basis) if isinstance(h, CartanSubspace) else [vec(x) for x in h]
    g = G.algebra
    rank = algebra_rank(g)
    z = centralizer(g, hs)
    cl = algebraic_closure(G, hs)
    res = {"centralizer": _is_cartan_subalgebra(g, z, rank),
           "closure": _is_cartan_subalgebra(g, cl, rank),
           "dim_centralizer": z.dim, "dim_closure": cl.dim, "rank_g": rank}
    res["agree"] = res["centralizer"] == res["closure"]
    return res


def is_maximal_rank(G: GradedAlgebra, h, route: str = "centralizer") -> bool:
    """Maximal rank in Vinberg's sense: z_g(h) is a Cartan subalgebra of g.

    ``route='closure'`` tests instead whether the algebraic closure of h is a
    Cartan subalgebra. The two agree whenever the closure is self-centralizing
    but not in general (for an involution the closure of h is h itself).
    """
    hs = list(h.basis) if isinstance(h, CartanSubspace) else [vec(x) for x in h]
    g = G.algebra
    if route == "centralizer":
        return _is_cartan_subalgebra(g, centralizer(g, hs), algebra_rank(g))
    if route == "closure":
        return _is_cartan_subalgebra(g, algebraic_closure(G, hs), algebra_rank(g))
    raise ValueError(f"unknown route {route!r}")
