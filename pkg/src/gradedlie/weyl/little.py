"""Little Weyl group of a grading of maximal rank, through the big Weyl group of z(h)."""
from __future__ import annotations

from gmpy2 import mpq

from ..exactnum import ExactMatrix, Subspace, simultaneous_eigenspaces, vec
from ..liealg.ops import centralizer
from ..weights import hyperplane_arrangement, normalize_functional, weight_system
from .groups import DEFAULT_CAP, MatrixGroup

_ZERO = mpq(0)


class LiftingObstruction(RuntimeError):
    """The computed group fails the reflection validation (see docs)."""


class HypothesisError(ValueError):
    pass


def _basis(h):
    return list(h.basis) if hasattr(h, "basis") and not isinstance(h, Subspace) else \
        ([vec(x) for x in h] if not isinstance(h, Subspace) else list(h.basis))


def coords_in(basis, x):
    A = ExactMatrix.from_columns(basis, len(x))
    sol = A.solve(x)
    if sol is None or A.apply(sol) != tuple(x):
        return None
    return sol


def torus_data(G, h):
    """t = z(h), its roots, Killing Gram matrix and theta|t, all in an echelon basis of t."""
    g = G.algebra
    hs = _basis(h)
    tsp = centralizer(g, hs)
    T = list(tsp.basis)
    if not tsp.is_abelian():
        raise HypothesisError("z_g(h) is not abelian: the grading is not of maximal rank")
    blocks = simultaneous_eigenspaces([g.ad(t) for t in T], G.field)
    roots = [(lam, sp) for lam, sp in blocks if any(lam)]
    if g.rank is not None and len(T) != g.rank:
        raise HypothesisError("z_g(h) is not a Cartan subalgebra")
    l = len(T)
    gram = [[sum((lam[i] * lam[j] * sp.dim for lam, sp in roots), _ZERO) for j in range(l)]
            for i in range(l)]
    theta = G.theta
    cols = [tsp.space.coords(theta.apply(t)) for t in T]
    theta_t = ExactMatrix.from_columns(cols, l)
    return tsp, T, roots, ExactMatrix(gram), theta_t


def reflections_of_roots(roots, gram: ExactMatrix):
    """s_a on t for each root a, with s_a(x) = x - a(x) h_a, h_a = 2 t_a / a(t_a)."""
    l = gram.rows
    out = []
    seen = set()
    for lam, _ in roots:
        t_a = gram.solve(lam)
        if t_a is None:
            raise HypothesisError("Killing form restricted to t is degenerate")
        a_ta = sum((x * y for x, y in zip(lam, t_a)), _ZERO)
        h_a = tuple(2 * c / a_ta for c in t_a)
        M = ExactMatrix(tuple(tuple((1 if i == j else 0) - h_a[i] * lam[j] for j in range(l))
                              for i in range(l)))
        if M not in seen:
            seen.add(M)
            out.append(M)
    return out


def little_weyl_maximal_rank(G, h, sub=None, cap: int = DEFAULT_CAP, validate: bool = True,
                             weights=None) -> MatrixGroup:
    """W(g, theta) on h (coordinates in the given basis of h).

    With ``sub`` (a reductive subalgebra containing z(h)), only roots whose root
    spaces lie in ``sub`` are used, which gives W(sub, theta).
    """
    hs = _basis(h)
    r = len(hs)
    if r == 0:
        return MatrixGroup(0, [], name="W")
    tsp, T, roots, gram, theta_t = torus_data(G, hs)
    if sub is not None:
        roots = [(lam, sp) for lam, sp in roots if sub.space.contains_space(sp)]
    refl = reflections_of_roots(roots, gram)
    l = len(T)
    big = MatrixGroup(l, refl, cap=cap, name="W(g,t)")
    H = [tsp.space.coords(x) for x in hs]
    els = _restrict_to_h(big.elements, theta_t, H)
    W = MatrixGroup.from_elements(r, els, name="W")
    W.big_order = big.order
    if validate:
        validate_reflection_group(G, hs, W, weights=weights, sub=sub)
    return W


def _restrict_to_h(elements, theta_t, H):
    """Elements commuting with theta|t and preserving h, as matrices on h."""
    Hspace = Subspace(theta_t.rows, H)
    selected = set()
    for w in elements:
        if w @ theta_t != theta_t @ w:
            continue
        imgs = [w.apply(v) for v in H]
        if not all(v in Hspace for v in imgs):
            continue
        selected.add(ExactMatrix.from_columns([coords_in(H, v) for v in imgs], len(H)))
    return sorted(selected, key=lambda M: (not M.is_identity(), repr(M)))


def hyperplane_stabilizers(G, h):
    """{normalized weight functional: pointwise stabilizer of its kernel in W}.

    The stabilizer of a generic point p of the hyperplane is the little Weyl
    group of z(p), whose roots are the roots of t vanishing at p, i.e. those
    whose restriction to h is proportional to the functional. Only these small
    root subsystems are enumerated.
    """
    hs = _basis(h)
    tsp, T, roots, gram, theta_t = torus_data(G, hs)
    H = [tsp.space.coords(x) for x in hs]
    classes = {}
    for lam, sp in roots:
        res = tuple(sum((a * b for a, b in zip(hv, lam) if a and b), _ZERO) for hv in H)
        if not any(res):
            raise HypothesisError("a root vanishes on h: the grading is not of maximal rank")
        classes.setdefault(normalize_functional(res), []).append((lam, sp))
    out = {}
    for f, rts in classes.items():
        local = MatrixGroup(len(T), reflections_of_roots(rts, gram), name="W_H")
        out[f] = _restrict_to_h(local.elements, theta_t, H)
    return out


def hyperplane_reflections(G, h):
    """Distinct non-identity elements of all hyperplane stabilizers (matrices on h)."""
    out = []
    for f, els in sorted(hyperplane_stabilizers(G, h).items(), key=lambda kv: repr(kv[0])):
        out.extend(w for w in els if not w.is_identity())
    return out


def little_weyl_hyperplanes(G, h, cap: int = DEFAULT_CAP, validate: bool = False,
                            weights=None) -> MatrixGroup:
    """W generated by the pointwise stabilizers of the weight hyperplanes.

    Same group as ``little_weyl_maximal_rank`` (W is a reflection group and each
    reflection fixes its hyperplane pointwise) without enumerating the Weyl
    group of z(h). Generators are picked greedily, so the final closure runs
    over a small generating set.
    """
    hs = _basis(h)
    r = len(hs)
    W = MatrixGroup(r, [], cap=cap, name="W")
    if r == 0:
        return W
    gens = []
    for w in hyperplane_reflections(G, hs):
        if w not in W.index:
            gens.append(w)
            W = MatrixGroup(r, gens, cap=cap, name="W")
    if validate:
        validate_reflection_group(G, hs, W, weights=weights)
    return W


def reflection_hyperplane(w: ExactMatrix):
    ident = ExactMatrix.identity(w.rows)
    rows = [r for r in (w - ident).data if any(r)]
    return normalize_functional(rows[0])


def validate_reflection_group(G, hs, W: MatrixGroup, weights=None, sub=None):
    """W is generated by reflections whose hyperplanes are weight hyperplanes of h."""
    if W.order == 1:
        return True
    if not W.is_reflection_group():
        raise LiftingObstruction("lifting obstruction: group is not generated by its reflections")
    S = weights if weights is not None else weight_system(G, hs)
    arrangement = set(hyperplane_arrangement(S))
    for w in W.reflections():
        if reflection_hyperplane(w) not in arrangement:
            raise LiftingObstruction(
                "lifting obstruction: reflecting hyperplane is not a weight hyperplane")
    return True
