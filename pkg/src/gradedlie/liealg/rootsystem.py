"""Cartan matrices and root systems of finite type.

Convention: a[i][j] = <alpha_j, alpha_i^v> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
so that [h_i, e_j] = a[i][j] e_j. Simple roots are numbered as in Bourbaki.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

from gmpy2 import mpq


class CartanMatrixError(ValueError):
    pass


MAX_RANK = 8


def _gram(kind: str, n: int):
    """Gram matrix of the simple roots in a standard realization."""
    G = [[mpq(0)] * n for _ in range(n)]

    def link(i, j, v):
        G[i][j] = G[j][i] = mpq(v)

    if kind == "A":
        if n < 1:
            raise CartanMatrixError("A_n needs n >= 1")
        for i in range(n):
            G[i][i] = mpq(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif kind == "B":
        if n < 2:
            raise CartanMatrixError("B_n needs n >= 2")
        for i in range(n - 1):
            G[i][i] = mpq(2)
        G[n - 1][n - 1] = mpq(1)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif kind == "C":
        if n < 2:
            raise CartanMatrixError("C_n needs n >= 2")
        for i in range(n - 1):
            G[i][i] = mpq(2)
        G[n - 1][n - 1] = mpq(4)
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 2, n - 1, -2)
    elif kind == "D":
        if n < 4:
            raise CartanMatrixError("D_n needs n >= 4")
        for i in range(n):
            G[i][i] = mpq(2)
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif kind == "E":
        if n not in (6, 7, 8):
            raise CartanMatrixError("E_n needs n in 6, 7, 8")
        for i in range(n):
            G[i][i] = mpq(2)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif kind == "F":
        if n != 4:
            raise CartanMatrixError("F_n needs n = 4")
        G[0][0] = G[1][1] = mpq(2)
        G[2][2] = G[3][3] = mpq(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, mpq(-1, 2))
    elif kind == "G":
        if n != 2:
            raise CartanMatrixError("G_n needs n = 2")
        G[0][0] = mpq(2)
        G[1][1] = mpq(6)
        link(0, 1, -3)
    else:
        raise CartanMatrixError(f"unknown Cartan type {kind!r}")
    return G


_COMPONENT = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


def parse_type(name: str):
    """'A2', 'B_3', 'A1xA1' -> [('A', 2)], ... ."""
    if not isinstance(name, str) or not name.strip():
        raise CartanMatrixError("empty Cartan type")
    parts = re.split(r"[x×+]", name.strip())
    out = []
    for part in parts:
        mt = _COMPONENT.match(part)
        if not mt:
            raise CartanMatrixError(f"cannot parse Cartan type component {part!r}")
        out.append((mt.group(1).upper(), int(mt.group(2))))
    if sum(n for _, n in out) > MAX_RANK:
        raise CartanMatrixError(f"total rank exceeds {MAX_RANK}")
    for kind, n in out:
        _gram(kind, n)
    return out


def type_string(components) -> str:
    return "x".join(f"{k}{n}" for k, n in components)


def gram_of_type(name: str):
    comps = parse_type(name)
    n = sum(r for _, r in comps)
    G = [[mpq(0)] * n for _ in range(n)]
    off = 0
    for kind, r in comps:
        g = _gram(kind, r)
        for i in range(r):
            for j in range(r):
                G[off + i][off + j] = g[i][j]
        off += r
    return G


def cartan_matrix(name: str):
    G = gram_of_type(name)
    n = len(G)
    return [[int(2 * G[i][j] / G[i][i]) for j in range(n)] for i in range(n)]


def _symmetrizer(A):
    """eps_i > 0 with eps_i a_ij symmetric, i.e. eps_i = (alpha_i, alpha_i) / 2."""
    n = len(A)
    eps = [None] * n
    for start in range(n):
        if eps[start] is not None:
            continue
        eps[start] = mpq(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and A[i][j] != 0:
                    if A[j][i] == 0:
                        raise CartanMatrixError("a_ij = 0 must imply a_ji = 0")
                    val = eps[i] * A[i][j] / A[j][i]
                    if eps[j] is None:
                        eps[j] = val
                        stack.append(j)
                    elif eps[j] != val:
                        raise CartanMatrixError("Cartan matrix is not symmetrizable")
    # normalise each component so the short roots have (alpha, alpha) = 2
    return eps


def validate_cartan_matrix(A):
    n = len(A)
    if n == 0 or any(len(r) != n for r in A):
        raise CartanMatrixError("Cartan matrix must be square and nonempty")
    if n > MAX_RANK:
        raise CartanMatrixError(f"rank exceeds {MAX_RANK}")
    for i in range(n):
        if A[i][i] != 2:
            raise CartanMatrixError("diagonal entries must be 2")
        for j in range(n):
            if i != j and (A[i][j] > 0 or int(A[i][j]) != A[i][j]):
                raise CartanMatrixError("off-diagonal entries must be nonpositive integers")
    eps = _symmetrizer(A)
    S = [[eps[i] * A[i][j] for j in range(n)] for i in range(n)]
    # positive definiteness by leading principal minors (Gaussian elimination)
    M = [list(r) for r in S]
    for k in range(n):
        if M[k][k] <= 0:
            raise CartanMatrixError("Cartan matrix is not of finite type")
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[k])]
    return eps


@dataclass
class RootSystem:
    """Positive roots as coefficient tuples in the simple roots."""

    cartan: list
    name: str = ""
    positive: list = field(init=False)

    def __post_init__(self):
        self.cartan = [[int(a) for a in r] for r in self.cartan]
        eps = validate_cartan_matrix(self.cartan)
        self.rank = len(self.cartan)
        # (alpha_i, alpha_j) = eps_i a_ij
        self.gram = [[eps[i] * self.cartan[i][j] for j in range(self.rank)]
                     for i in range(self.rank)]
        self.positive = self._positive_roots()
        self._index = {r: k for k, r in enumerate(self.positive)}

    @classmethod
    def of_type(cls, name: str) -> "RootSystem":
        return cls(cartan_matrix(name), name=type_string(parse_type(name)))

    def pairing(self, beta, i) -> int:
        """<beta, alpha_i^v>."""
        return sum(c * self.cartan[i][j] for j, c in enumerate(beta))

    def _positive_roots(self):
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        roots = list(simple)
        known = set(roots)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    # p = largest k with beta - k alpha_i a root
                    p = 0
                    while True:
                        cand = tuple(c - (p + 1) * (j == i) for j, c in enumerate(beta))
                        if cand in known:
                            p += 1
                        else:
                            break
                    q = p - self.pairing(beta, i)
                    if q > 0:
                        up = tuple(c + (j == i) for j, c in enumerate(beta))
                        if up not in known:
                            known.add(up)
                            nxt.append(up)
            nxt.sort(key=lambda r: tuple(-c for c in r))
            roots.extend(nxt)
            layer = nxt
        roots.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
        return roots

    @cached_property
    def roots(self):
        return self.positive + [tuple(-c for c in r) for r in self.positive]

    def is_root(self, r) -> bool:
        r = tuple(r)
        if r in self._index:
            return True
        return tuple(-c for c in r) in self._index

    def inner(self, a, b):
        s = mpq(0)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        s += x * y * self.gram[i][j]
        return s

    def height(self, r) -> int:
        return sum(r)

    @property
    def highest_root(self):
        top = [r for r in self.positive if sum(r) == max(sum(x) for x in self.positive)]
        if len(top) != 1:
            raise CartanMatrixError("highest root requires an irreducible root system")
        return top[0]

    def components(self):
        """Connected components of the Dynkin diagram (lists of node indices)."""
        n = self.rank
        seen, comps = set(), []
        for s in range(n):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and self.cartan[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def is_irreducible(self) -> bool:
        return len(self.components()) == 1

    def string_down(self, beta, alpha) -> int:
        """Largest p with beta - p alpha a root (beta, alpha roots)."""
        p = 0
        while self.is_root(tuple(b - (p + 1) * a for a, b in zip(alpha, beta))):
            p += 1
        return p

    def weyl_group_order(self) -> int:
        total = 1
        for comp in self.components():
            sub = [[self.cartan[i][j] for j in comp] for i in comp]
            total *= _weyl_order_irreducible(sub)
        return total


def _weyl_order_irreducible(A) -> int:
    from math import factorial

    n = len(A)
    rs = RootSystem(A)
    N = len(rs.positive)
    long_count = sum(1 for i in range(n) for j in range(n) if A[i][j] < -1)
    if long_count == 0:
        # simply laced: A, D, E distinguished by root count
        if N == n * (n + 1) // 2:
            return factorial(n + 1)
        if N == n * (n - 1):
            return 2 ** (n - 1) * factorial(n)
        return {36: 51840, 63: 2903040, 120: 696729600}[N]
    if n == 2 and N == 6:
        return 12
    if n == 4 and N == 24:
        return 1152
    return 2 ** n * factorial(n)
