"""Chevalley bases of split semisimple Lie algebras.

Structure constants N_{a,b} are fixed by choosing N = +(p+1) on extraspecial
pairs and propagating through the standard identities (antisymmetry, the
cyclic rule for a+b+c = 0, and the four-root rule), with N_{-a,-b} = -N_{a,b}.
"""
from __future__ import annotations

from gmpy2 import mpq

from .algebra import LieAlgebra
from .rootsystem import RootSystem


def _neg(r):
    return tuple(-c for c in r)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Constants:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.pos = {r: k for k, r in enumerate(rs.positive)}
        self.table = {}
        self._fill_positive()

    def norm(self, r):
        return self.rs.inner(r, r)

    def is_positive(self, r):
        return r in self.pos

    def _fill_positive(self):
        rs = self.rs
        pos = rs.positive
        for xi in pos:
            if sum(xi) < 2:
                continue
            pairs = []
            for a in pos:
                b = _sub(xi, a)
                if b in self.pos and self.pos[a] < self.pos[b]:
                    pairs.append((a, b))
            pairs.sort(key=lambda ab: self.pos[ab[0]])
            a1, b1 = pairs[0]
            p1 = rs.string_down(b1, a1)
            self._store(a1, b1, mpq(p1 + 1))
            for a, b in pairs[1:]:
                # four-root rule with (a, b, -a1, -b1)
                val = mpq(0)
                d = _sub(b, a1)
                if rs.is_root(d):
                    val += self.N(b, _neg(a1)) * self.N(a, _neg(b1)) / self.norm(d)
                d = _sub(a, a1)
                if rs.is_root(d):
                    val += self.N(_neg(a1), a) * self.N(b, _neg(b1)) / self.norm(d)
                n_ab = val * self.norm(xi) / (p1 + 1)
                self._store(a, b, n_ab)

    def _store(self, a, b, v):
        self.table[(a, b)] = v
        self.table[(b, a)] = -v

    def N(self, a, b):
        s = _add(a, b)
        if not any(s) or not self.rs.is_root(s):
            return mpq(0)
        pa, pb = self.is_positive(a), self.is_positive(b)
        if pa and pb:
            return self.table[(a, b)]
        if not pa and not pb:
            return -self.N(_neg(a), _neg(b))
        c = _neg(s)
        # N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
        if self.is_positive(b) == self.is_positive(c):
            return self.norm(c) / self.norm(a) * self.N(b, c)
        return self.norm(c) / self.norm(b) * self.N(c, a)


def _root_label(r, positive):
    body = ",".join(str(abs(c)) for c in r)
    return ("e" if positive else "f") + "[" + body + "]"


def chevalley_basis(cartan, name: str = "") -> LieAlgebra:
    """Split semisimple Lie algebra from a Cartan matrix or a type string.

    Basis order: h_1..h_l (simple coroots), e_a for positive roots by height,
    then f_a = e_{-a} in the same order.
    """
    rs = RootSystem.of_type(cartan) if isinstance(cartan, str) else RootSystem(cartan)
    consts = _Constants(rs)
    l = rs.rank
    pos = rs.positive
    roots = pos + [_neg(r) for r in pos]
    index = {r: l + k for k, r in enumerate(roots)}
    dim = l + len(roots)
    eps = [rs.gram[i][i] / 2 for i in range(l)]
    brackets = {}

    def put(i, j, val):
        if i < j:
            brackets[(i, j)] = val
        else:
            brackets[(j, i)] = {k: -c for k, c in val.items()}

    for i in range(l):
        for r in roots:
            c = rs.pairing(r, i)
            if c:
                put(i, index[r], {index[r]: c})
    for a_i, a in enumerate(roots):
        for b in roots[a_i + 1:]:
            s = _add(a, b)
            if not any(s):
                # [e_a, e_-a] = h_a with h_a = sum_i c_i eps_i / eps_a h_i
                ea = rs.inner(a, a) / 2
                sign = 1 if a in consts.pos else -1
                coroot = {i: sign * abs(a[i]) * eps[i] / ea for i in range(l) if a[i]}
                put(index[a], index[b], coroot)
            elif rs.is_root(s):
                put(index[a], index[b], {index[s]: consts.N(a, b)})
    labels = [f"h{i + 1}" for i in range(l)] + [_root_label(r, k < len(pos))
                                                  for k, r in enumerate(roots)]
    alg = LieAlgebra.from_brackets(dim, brackets, labels=labels, rank=l,
                                   name=name or rs.name or "custom")
    alg.root_system = rs
    alg.root_index = index
    return alg
