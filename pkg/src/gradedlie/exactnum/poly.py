"""Univariate polynomials over Q(w_m), stored as coefficient lists (low first).

Also minimal and characteristic polynomials of exact matrices and root
finding inside a fixed cyclotomic field.
"""
from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from .cyclo import Cyclo, CycloField, format_scalar
from .matrix import ExactMatrix, rref, unit_vec

_ZERO = mpq(0)
_ONE = mpq(1)


class EigenvalueFieldError(ArithmeticError):
    """An eigenvalue does not lie in the working cyclotomic field."""

    def __init__(self, factor, field: CycloField):
        self.factor = factor
        self.field = field
        super().__init__(
            f"polynomial factor {poly_str(factor)} has no root in Q(w_{field.order})")


def trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def monic(p):
    p = trim(p)
    if not p:
        return p
    inv = 1 / p[-1]
    return [c * inv for c in p]


def padd(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else _ZERO) + (q[i] if i < len(q) else _ZERO)
                 for i in range(n)])


def psub(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else _ZERO) - (q[i] if i < len(q) else _ZERO)
                 for i in range(n)])


def pmul(p, q):
    if not p or not q:
        return []
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return trim(out)


def pscale(c, p):
    return trim([c * a for a in p])


def pdivmod(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if len(p) < len(q):
        return [], p
    inv = 1 / q[-1]
    r = list(p)
    out = [_ZERO] * (len(p) - len(q) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = r[k + len(q) - 1] * inv
        out[k] = c
        if c:
            for i, b in enumerate(q):
                if b:
                    r[k + i] = r[k + i] - c * b
    return trim(out), trim(r[: len(q) - 1])


def pmod(p, q):
    return pdivmod(p, q)[1]


def pgcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, pmod(p, q)
    return monic(p)


def pxgcd(p, q):
    """Return (g, s, t) with s p + t q = g monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = [_ONE], []
    t0, t1 = [], [_ONE]
    while r1:
        quo, rem = pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, psub(s0, pmul(quo, s1))
        t0, t1 = t1, psub(t0, pmul(quo, t1))
    if not r0:
        return [], s0, t0
    inv = 1 / r0[-1]
    return pscale(inv, r0), pscale(inv, s0), pscale(inv, t0)


def pderiv(p):
    return trim([c * k for k, c in enumerate(p)][1:])


def squarefree_part(p):
    """Product of the distinct monic irreducible factors of p."""
    p = monic(p)
    if degree(p) <= 0:
        return p
    g = pgcd(p, pderiv(p))
    return monic(pdivmod(p, g)[0])


def is_squarefree(p) -> bool:
    return degree(pgcd(p, pderiv(p))) == 0


def peval(p, x):
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pcompose_mod(p, t, mod):
    """p(t) mod ``mod``."""
    acc = []
    for c in reversed(trim(p)):
        acc = pmod(padd(pmul(acc, t), [c]), mod)
    return acc


def pinv_mod(a, mod):
    g, s, _ = pxgcd(a, mod)
    if degree(g) != 0:
        raise ZeroDivisionError("polynomial not invertible modulo")
    return pmod(s, mod)


def eval_at_matrix(p, A: ExactMatrix) -> ExactMatrix:
    n = A.rows
    acc = ExactMatrix.zeros(n, n)
    ident = ExactMatrix.identity(n)
    for c in reversed(trim(p)):
        acc = acc @ A + ident.scale(c)
    return acc


def eval_at_matrix_on_vector(p, A: ExactMatrix, v):
    acc = tuple(_ZERO for _ in v)
    for c in reversed(trim(p)):
        acc = A.apply(acc)
        acc = tuple(a + c * b for a, b in zip(acc, v))
    return acc


def poly_str(p, var: str = "x") -> str:
    p = trim(p)
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        cs = format_scalar(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(f"({cs})" if " " in cs else cs)
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
    return " + ".join(terms)


# ----------------------------------------------------------------------------
# polynomials of matrices
# ----------------------------------------------------------------------------
def _reduce(basis, w):
    """Reduce w against a semi-echelon basis of (vector, pivot) pairs."""
    w = list(w)
    for b, p in basis:
        f = w[p]
        if f:
            w = [a - f * c if c else a for a, c in zip(w, b)]
    return w


def _insert(basis, w):
    piv = next((i for i, a in enumerate(w) if a), None)
    if piv is None:
        return False
    inv = 1 / w[piv]
    basis.append(([a * inv if a else a for a in w], piv))
    return True


def _krylov_minpoly(A: ExactMatrix, v):
    """Minimal polynomial of A relative to v (monic)."""
    basis = []   # (reduced vector, pivot, combination of A^i v)
    w = tuple(v)
    k = 0
    while True:
        comb = [_ZERO] * k + [_ONE]
        vec_w = list(w)
        for (b, p, bc) in basis:
            f = vec_w[p]
            if f:
                vec_w = [a - f * c if c else a for a, c in zip(vec_w, b)]
                for i, c in enumerate(bc):
                    if c:
                        comb[i] = comb[i] - f * c
        piv = next((i for i, a in enumerate(vec_w) if a), None)
        if piv is None:
            return monic(trim(comb))
        inv = 1 / vec_w[piv]
        vec_w = [a * inv if a else a for a in vec_w]
        comb = [a * inv if a else a for a in comb]
        basis.append((vec_w, piv, comb))
        w = A.apply(w)
        k += 1


def _extend_invariant(A, basis, w):
    """Add the cyclic subspace of w to the A-invariant span of ``basis``."""
    w = _reduce(basis, w)
    while _insert(basis, w):
        w = _reduce(basis, A.apply(basis[-1][0]))


def _start_vector(n):
    # fixed dense vector: its local minimal polynomial is almost always the
    # full one, so the pass below is usually a cheap check
    return tuple(mpq((7 * j * j + 3 * j + 1) % 11 + 1) for j in range(n))


def minimal_polynomial(A: ExactMatrix):
    """Monic minimal polynomial of a square matrix.

    mp starts as the local minimal polynomial of a fixed vector. U is an
    A-invariant subspace annihilated by mp; unit vectors outside U are checked
    and their cyclic subspaces added, raising mp to an lcm when a check fails.
    """
    n = A.rows
    if n == 0:
        return [_ONE]
    v = _start_vector(n)
    mp = _krylov_minpoly(A, v)
    U = []
    _extend_invariant(A, U, v)
    for j in range(n):
        if len(U) == n or degree(mp) == n:
            break
        e = unit_vec(n, j)
        if not any(_reduce(U, e)):
            continue
        if any(eval_at_matrix_on_vector(mp, A, e)):
            local = _krylov_minpoly(A, e)
            mp = monic(pdivmod(pmul(mp, local), pgcd(mp, local))[0])
        _extend_invariant(A, U, e)
    return mp


def characteristic_polynomial(A: ExactMatrix):
    """det(x I - A) via reduction to upper Hessenberg form."""
    n = A.rows
    H = [list(r) for r in A.data]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[j + 1], H[piv] = H[piv], H[j + 1]
            for r in H:
                r[j + 1], r[piv] = r[piv], r[j + 1]
        inv = 1 / H[j + 1][j]
        for i in range(j + 2, n):
            f = H[i][j] * inv
            if f:
                H[i] = [a - f * b for a, b in zip(H[i], H[j + 1])]
                for r in H:
                    r[j + 1] = r[j + 1] + f * r[i]
    # recurrence for characteristic polynomials of leading blocks
    polys = [[_ONE]]
    for k in range(1, n + 1):
        pk = psub(pmul([_ZERO, _ONE], polys[k - 1]), pscale(H[k - 1][k - 1], polys[k - 1]))
        prod = _ONE
        for i in range(k - 1, 0, -1):
            prod = prod * H[i][i - 1]
            if not prod:
                break
            pk = psub(pk, pscale(prod * H[i - 1][k - 1], polys[i - 1]))
        polys.append(pk)
    return monic(polys[n]) if n else [_ONE]


# ----------------------------------------------------------------------------
# roots inside a cyclotomic field
# ----------------------------------------------------------------------------
@lru_cache(maxsize=None)
def _sympy_domain(order: int):
    import sympy

    if CycloField(order).phi == 1:
        return sympy.QQ
    zeta = sympy.exp(2 * sympy.pi * sympy.I / order)
    return sympy.QQ.algebraic_field(zeta)


def _to_sympy(c, field, K):
    from sympy import QQ

    if field.phi == 1:
        return QQ(c.numerator, c.denominator) if type(c) is not Cyclo else QQ(
            c.c[0].numerator, c.c[0].denominator)
    if type(c) is not Cyclo:
        c = field(c)
    coeffs = [QQ(a.numerator, a.denominator) for a in reversed(c.c)]
    return K(coeffs)


def _from_sympy(a, field):
    if field.phi == 1:
        return mpq(int(a.numerator), int(a.denominator))
    coeffs = list(reversed([mpq(int(q.numerator), int(q.denominator)) for q in a.to_list()]))
    return field.element(coeffs)


def roots_in_field(p, field: CycloField):
    """Distinct roots of p lying in ``field``; raises on any other factor."""
    import sympy

    p = squarefree_part(p)
    if degree(p) <= 0:
        return []
    if degree(p) == 1:
        return [-(p[0] / p[1])]
    K = _sympy_domain(field.order)
    x = sympy.Symbol("x")
    sp_poly = sympy.Poly.from_list([_to_sympy(c, field, K) for c in reversed(p)], x, domain=K)
    _, factors = sp_poly.factor_list()
    roots = []
    for f, _mult in factors:
        if f.degree() != 1:
            coeffs = [_from_sympy(c, field) for c in reversed(f.rep.to_list())]
            raise EigenvalueFieldError(coeffs, field)
        a1, a0 = f.rep.to_list()
        roots.append(-(_from_sympy(a0, field) / _from_sympy(a1, field)))
    return roots
