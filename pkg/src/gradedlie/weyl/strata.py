"""Stabilizers, strata of a Cartan subspace, families, and the centralizer theorem check."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from gmpy2 import mpq

from ..exactnum import ExactMatrix, Subspace, lincomb, vec
from ..liealg.ops import centralizer
from ..weights import hyperplane_subspace, restrict_weights, weight_system
from .groups import (MatrixGroup, fixed_space, fixed_space_of, image_subspace,
                     restrict_matrix)
from .little import HypothesisError, little_weyl_maximal_rank

_ZERO = mpq(0)


def stabilizer(W: MatrixGroup, p) -> MatrixGroup:
    p = vec(p)
    return W.subgroup(lambda w: w.apply(p) == p, name="W_p")


def _closed_flats(W: MatrixGroup):
    """Fixed spaces of pointwise stabilizers, i.e. the flats X with Fix(W_X) = X."""
    n = W.dim
    fixes = {fixed_space_of(w) for w in W.elements[1:]}
    flats = {Subspace.full(n)}
    frontier = set(fixes)
    flats |= fixes
    while frontier:
        new = set()
        for X in frontier:
            for Y in fixes:
                Z = X & Y
                if Z not in flats:
                    new.add(Z)
        flats |= new
        frontier = new
    out = []
    for X in flats:
        WX = pointwise_stabilizer(W, X)
        if fixed_space(WX.elements, n) == X:
            out.append((X, WX))
    return out


def pointwise_stabilizer(W: MatrixGroup, X: Subspace) -> MatrixGroup:
    return W.subgroup(lambda w: all(w.apply(b) == b for b in X.basis), name="W_X")


@dataclass
class Stratum:
    index: int
    representative: tuple          # coordinates in the basis of h
    point: tuple                   # the representative as an element of g
    stabilizer: MatrixGroup
    fixed_space: Subspace          # in coordinates of h
    orbit: list                    # W-conjugate flats
    witnesses: dict                # flat index in orbit -> w with w X_0 = X_i
    regularity: dict = dc_field(default_factory=dict)

    @property
    def dim(self):
        return self.fixed_space.dim

    def __repr__(self):
        return (f"Stratum({self.index}, dim={self.dim}, |W_p|={self.stabilizer.order}, "
                f"orbit={len(self.orbit)})")


def _lattice_points(X: Subspace, max_width=6):
    k = X.dim
    if k == 0:
        yield tuple(_ZERO for _ in range(X.n))
        return
    B = X.basis
    for width in range(1, max_width + 1):
        for c in itertools.product(range(-width, width + 1), repeat=k):
            if max(abs(a) for a in c) != width:
                continue
            yield lincomb(c, B, X.n)


def open_point(W, X, WX, weights_on_X=None, max_width=6):
    """First lattice point of X with stabilizer exactly WX, preferring regular ones."""
    fallback = None
    target = WX.element_set()
    for q in _lattice_points(X, max_width):
        if stabilizer(W, q).element_set() != target:
            continue
        if weights_on_X is None:
            return q, None
        if all(f(q) != 0 for f in weights_on_X):
            return q, True
        if fallback is None:
            fallback = q
    if fallback is None:
        raise RuntimeError("no point with the required stabilizer found within the search width")
    return fallback, False


def to_g(hs, c, n):
    return lincomb(c, hs, n)


def strata(W: MatrixGroup, hs=None, G=None, weights=None):
    """One stratum per W-conjugacy class of point stabilizers."""
    n = W.dim
    flats = _closed_flats(W)
    flats.sort(key=lambda t: (-t[0].dim, t[1].order, repr(t[0].basis)))
    assigned = {}
    result = []
    Sigma = weights
    if Sigma is None and G is not None and hs:
        Sigma = weight_system(G, hs)
    for X, WX in flats:
        if X in assigned:
            continue
        orbit = [X]
        witnesses = {0: W.identity}
        for w in W.elements:
            Y = image_subspace(w, X)
            if Y not in orbit:
                orbit.append(Y)
                witnesses[len(orbit) - 1] = w
        idx = len(result)
        for Y in orbit:
            assigned[Y] = idx
        funcs = None
        if Sigma is not None and hs:
            funcs = _weight_functions_on(Sigma, X)
        q, reg = open_point(W, X, WX, funcs)
        point = to_g(hs, q, G.dim) if (hs is not None and G is not None) else None
        st = Stratum(idx, q, point, WX, X, orbit, witnesses,
                     {"sigma_regular": reg})
        result.append(st)
    return result


def _weight_functions_on(Sigma, X):
    """Nonzero weights of Sigma restricted to X, as functions of h-coordinates."""
    fs = []
    for w in Sigma.nonzero():
        lam = w.functional
        vals = [sum((a * b for a, b in zip(lam, v)), _ZERO) for v in X.basis]
        if any(vals):
            fs.append(lambda q, lam=lam: sum((a * b for a, b in zip(lam, q)), _ZERO))
    return fs


def check_conjugation_equivalence(W: MatrixGroup, strata_list):
    """w X = X' <=> w W_X w^-1 = W_X' for all w and all flats in the listed orbits."""
    flats = [(Y, pointwise_stabilizer(W, Y).element_set())
             for st in strata_list for Y in st.orbit]
    for w in W.elements:
        for X, WX in flats:
            img = image_subspace(w, X)
            conj = W.conjugate_set(w, WX)
            for Y, WY in flats:
                if (img == Y) != (conj == WY):
                    return False
    return True


# ----------------------------------------------------------------------------
# circ = reg
# ----------------------------------------------------------------------------
def _maximal(spaces):
    spaces = list(set(spaces))
    return {S for S in spaces if not any(T != S and T.contains_space(S) for T in spaces)}


def circ_equals_reg(G, hs, W: MatrixGroup, stratum: Stratum, weights=None):
    """Compare the loci removed from h_p by larger stabilizers and by weight hyperplanes."""
    X = stratum.fixed_space
    Wp = stratum.stabilizer.element_set()
    removed_circ = set()
    for w in W.elements:
        if w in Wp:
            continue
        Z = fixed_space_of(w) & X
        if Z != X:
            removed_circ.add(Z)
    removed_circ = _maximal(removed_circ)
    Sigma = weights if weights is not None else weight_system(G, hs)
    removed_reg = set()
    for w in Sigma.nonzero():
        lam = w.functional
        vals = [sum((a * b for a, b in zip(lam, v)), _ZERO) for v in X.basis]
        if any(vals):
            from ..exactnum import nullspace
            ker = nullspace([vals], X.dim)
            removed_reg.add(Subspace(X.n, [lincomb(c, X.basis, X.n) for c in ker]))
    removed_reg = _maximal(removed_reg)
    ok = removed_circ == removed_reg
    cert = {"circ_only": [S.basis for S in removed_circ - removed_reg],
            "reg_only": [S.basis for S in removed_reg - removed_circ],
            "n_circ": len(removed_circ), "n_reg": len(removed_reg)}
    return ok, cert


# ----------------------------------------------------------------------------
# families
# ----------------------------------------------------------------------------
def same_W_family(W: MatrixGroup, p, q) -> bool:
    Wp = stabilizer(W, p).element_set()
    Wq = stabilizer(W, q).element_set()
    if len(Wp) != len(Wq):
        return False
    return any(W.conjugate_set(w, Wp) == Wq for w in W.elements)


UNKNOWN = "unknown"


def same_gC_family(G, hs, W: MatrixGroup, p, q):
    """True / False / 'unknown' for conjugacy of z(p) and z(q) (p, q in h-coordinates).

    True when z(p) = z(w q) for an enumerated w (w lifts to G_0, so z(wq) is
    conjugate to z(q)). False when dimensions of the graded pieces differ.
    """
    g = G.algebra
    n = G.dim
    zp = centralizer(g, [to_g(hs, p, n)])
    q = vec(q)
    for w in W.elements:
        if centralizer(g, [to_g(hs, w.apply(q), n)]).space == zp.space:
            return True
    zq = centralizer(g, [to_g(hs, q, n)])
    dims_p = [(zp.space & G.component(i)).dim for i in range(G.m)]
    dims_q = [(zq.space & G.component(i)).dim for i in range(G.m)]
    if dims_p != dims_q:
        return False
    return UNKNOWN


# ----------------------------------------------------------------------------
# theorem check, Gamma_p, Weyl group of the centralizer
# ----------------------------------------------------------------------------
def _is_prime(m):
    return m > 1 and all(m % d for d in range(2, int(m ** 0.5) + 1))


def hypothesis_tag(G, hs) -> str:
    from ..cartan import is_maximal_rank
    if is_maximal_rank(G, hs):
        return "maximal_rank"
    if _is_prime(G.m):
        return "prime_m"
    return "unknown"


def sample_open_points(W, stratum, count, seed=0, max_width=12):
    rng = random.Random(seed)
    X = stratum.fixed_space
    target = stratum.stabilizer.element_set()
    out = []
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        width = 2 + tries // 20
        c = [rng.randint(-width, width) for _ in range(X.dim)]
        q = lincomb(c, X.basis, X.n) if X.dim else tuple(_ZERO for _ in range(X.n))
        if stabilizer(W, q).element_set() == target:
            out.append(q)
    return out


def verify_central(G, hs, W: MatrixGroup, strata_list=None, pairs: int = 10, seed: int = 0):
    """For each stratum, z(p) = z(q) on sampled pairs of open-part points."""
    tag = hypothesis_tag(G, hs)
    if tag == "unknown":
        raise HypothesisError(
            "the centralizer theorem needs m prime or a grading of maximal rank; "
            "use same_gC_family for a tri-state answer instead")
    if strata_list is None:
        strata_list = strata(W, hs, G)
    g = G.algebra
    n = G.dim
    report = {"hypothesis": tag, "strata": []}
    for st in strata_list:
        pts = sample_open_points(W, st, 2 * pairs, seed=seed + st.index)
        verdicts = []
        for a, b in zip(pts[0::2], pts[1::2]):
            za = centralizer(g, [to_g(hs, a, n)]).space
            zb = centralizer(g, [to_g(hs, b, n)]).space
            verdicts.append(za == zb)
        if not all(verdicts):
            raise AssertionError(f"centralizer theorem fails on stratum {st.index}")
        report["strata"].append({"index": st.index, "pairs": len(verdicts), "pass": True})
    report["pass"] = True
    return report


def gamma_p(W: MatrixGroup, stratum: Stratum, check_free: bool = True, seed: int = 0):
    """N_W(W_p)/W_p realized as the image group on the fixed space h_p."""
    Wp = stratum.stabilizer
    N = W.normalizer(Wp)
    X = stratum.fixed_space
    mats = []
    seen = set()
    for w in N.elements:
        M = restrict_matrix(w, X)
        if M is None:
            raise AssertionError("normalizer element does not preserve h_p")
        if M not in seen:
            seen.add(M)
            mats.append(M)
    Gam = MatrixGroup.from_elements(X.dim, mats, name="Gamma_p")
    if Gam.order * Wp.order != N.order:
        raise AssertionError("restriction to h_p does not have kernel W_p")
    if check_free and X.dim:
        for q in sample_open_points(W, stratum, 5, seed=seed):
            c = X.coords(q)
            for M in Gam.elements[1:]:
                if M.apply(c) == tuple(c):
                    raise AssertionError("Gamma_p does not act freely on the open part")
    return Gam


def weyl_of_centralizer(G, hs, W: MatrixGroup, p, user_generators=None):
    """W(z(p), theta) on h, compared with the stabilizer W_p. Returns (group, equal)."""
    g = G.algebra
    n = G.dim
    z = centralizer(g, [to_g(hs, p, n)])
    if user_generators is not None:
        from .groups import little_weyl_user
        Wz = little_weyl_user(user_generators)
    else:
        Wz = little_weyl_maximal_rank(G, hs, sub=z, validate=False)
    Wp = stabilizer(W, p)
    return Wz, Wz.same_elements(Wp)
