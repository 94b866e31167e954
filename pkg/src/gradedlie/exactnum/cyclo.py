"""Exact arithmetic in Q and in the cyclotomic fields Q(w_m).

Elements of Q(w_m) are stored in the power basis 1, w, ..., w^(phi(m)-1)
modulo the m-th cyclotomic polynomial, which gives a unique normal form.
Rationals are gmpy2 ``mpq`` values throughout.

For the two fields whose degree is 1 (m = 1 and m = 2) the field object hands
out plain ``mpq`` scalars instead of wrapping them; every routine in the
package accepts either kind of scalar.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from gmpy2 import mpq

RATIONAL_TYPES = (int, type(mpq(0)), Fraction)
_MPQ = type(mpq(0))


class FieldMismatchError(ValueError):
    """Raised when scalars from different cyclotomic fields are combined."""


def to_rational(x):
    if type(x) is _MPQ:
        return x
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    raise TypeError(f"not a rational: {x!r}")


def euler_phi(n: int) -> int:
    result, k, m = n, 2, n
    while k * k <= m:
        if m % k == 0:
            while m % k == 0:
                m //= k
            result -= result // k
        k += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], lead)
        assert r == 0
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


class CycloField:
    """The field Q(w_m) with w_m = exp(2 pi i / m)."""

    _cache: dict = {}

    def __new__(cls, order: int):
        order = int(order)
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        field = cls._cache.get(order)
        if field is None:
            field = super().__new__(cls)
            field._setup(order)
            cls._cache[order] = field
        return field

    def __getnewargs__(self):
        return (self.order,)

    def _setup(self, order):
        self.order = order
        self.phi = euler_phi(order)
        self.modulus = cyclotomic_polynomial(order)
        n = self.phi
        # reduction rows for x^k, k < max(order, 2n - 1)
        rows = []
        for k in range(max(order, 2 * n - 1)):
            if k < n:
                row = [0] * n
                row[k] = 1
            else:
                prev = rows[k - 1]
                # x * prev, then replace x^n by -(modulus[:n])
                top = prev[-1]
                row = [0] + list(prev[:-1])
                if top:
                    for i in range(n):
                        row[i] -= top * self.modulus[i]
            rows.append(tuple(row))
        self._rows = tuple(tuple(mpq(c) for c in r) for r in rows)
        self.zero = self.element([0] * n) if n > 1 else mpq(0)
        self.one = self.element([1] + [0] * (n - 1)) if n > 1 else mpq(1)
        self._omega_cache = {}

    @property
    def is_rational(self) -> bool:
        return self.phi == 1

    def element(self, coeffs) -> "Cyclo":
        coeffs = [to_rational(c) for c in coeffs]
        if len(coeffs) > self.phi:
            coeffs = self._reduce(coeffs)
        coeffs += [mpq(0)] * (self.phi - len(coeffs))
        return Cyclo._make(self, tuple(coeffs))

    def _reduce(self, prod):
        n = self.phi
        res = list(prod[:n]) + [0] * max(0, n - len(prod))
        for k in range(n, len(prod)):
            pk = prod[k]
            if pk:
                if k >= len(self._rows):
                    row = self._rows[k % self.order]
                else:
                    row = self._rows[k]
                for t in range(n):
                    rt = row[t]
                    if rt:
                        res[t] += pk * rt
        return res

    def __call__(self, x):
        """Coerce an int, rational or scalar of this field."""
        if type(x) is Cyclo:
            if x.field is not self:
                raise FieldMismatchError(
                    f"scalar of Q(w_{x.field.order}) used in Q(w_{self.order})")
            if self.phi == 1:
                return x.c[0]
            return x
        if isinstance(x, RATIONAL_TYPES):
            q = to_rational(x)
            if self.phi == 1:
                return q
            return Cyclo._make(self, (q,) + (mpq(0),) * (self.phi - 1))
        raise TypeError(f"cannot coerce {x!r} into Q(w_{self.order})")

    def omega(self, k: int = 1):
        """w_m^k as a field scalar."""
        k %= self.order
        val = self._omega_cache.get(k)
        if val is None:
            row = self._rows[k]
            val = row[0] if self.phi == 1 else Cyclo._make(self, row)
            self._omega_cache[k] = val
        return val

    def root_of_unity(self, m: int, k: int = 1):
        """exp(2 pi i k / m); requires m | order."""
        if self.order % m:
            raise FieldMismatchError(
                f"Q(w_{self.order}) does not contain primitive {m}-th roots")
        return self.omega((self.order // m) * k)

    def contains_roots_of(self, m: int) -> bool:
        return self.order % m == 0

    def __repr__(self):
        return f"CycloField({self.order})"

    def __reduce__(self):
        return (CycloField, (self.order,))


def common_field(*orders: int) -> CycloField:
    m = 1
    for o in orders:
        m = m * o // gcd(m, o)
    return CycloField(m)


class Cyclo:
    """Element of Q(w_m) in the reduced power basis."""

    __slots__ = ("field", "c")

    def __init__(self, order: int, coeffs):
        field = CycloField(order)
        el = field.element(coeffs)
        self.field = el.field
        self.c = el.c

    @classmethod
    def _make(cls, field, coeffs):
        obj = object.__new__(cls)
        obj.field = field
        obj.c = coeffs
        return obj

    @property
    def order(self) -> int:
        return self.field.order

    @property
    def coeffs(self) -> tuple:
        return self.c

    def _other(self, other):
        if type(other) is Cyclo:
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"order mismatch: {self.field.order} vs {other.field.order}")
            return other.c
        if isinstance(other, RATIONAL_TYPES):
            q = to_rational(other)
            return (q,) + (0,) * (len(self.c) - 1)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Cyclo._make(self.field, tuple(a + b for a, b in zip(self.c, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Cyclo._make(self.field, tuple(a - b for a, b in zip(self.c, o)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Cyclo._make(self.field, tuple(b - a for a, b in zip(self.c, o)))

    def __neg__(self):
        return Cyclo._make(self.field, tuple(-a for a in self.c))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is Cyclo:
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"order mismatch: {self.field.order} vs {other.field.order}")
            a, b = self.c, other.c
            n = len(a)
            prod = [0] * (2 * n - 1)
            for i in range(n):
                ai = a[i]
                if ai:
                    for j in range(n):
                        bj = b[j]
                        if bj:
                            prod[i + j] += ai * bj
            if n == 1:
                return Cyclo._make(self.field, (mpq(prod[0]),))
            return Cyclo._make(self.field, tuple(self.field._reduce(prod)))
        if isinstance(other, RATIONAL_TYPES):
            q = to_rational(other)
            return Cyclo._make(self.field, tuple(a * q for a in self.c))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if not self:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        field = self.field
        n = field.phi
        # columns: self * w^j ; solve M c = e_0
        cols = []
        for j in range(n):
            cols.append((self * field.omega(j)).c if n > 1 else self.c)
        rows = [[cols[j][i] for j in range(n)] + [mpq(1 if i == 0 else 0)]
                for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = 1 / rows[col][col]
            rows[col] = [v * inv for v in rows[col]]
            for r in range(n):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        return Cyclo._make(field, tuple(rows[i][n] for i in range(n)))

    def __truediv__(self, other):
        if type(other) is Cyclo:
            return self * other.inverse()
        if isinstance(other, RATIONAL_TYPES):
            q = to_rational(other)
            if not q:
                raise ZeroDivisionError("division by zero")
            return Cyclo._make(self.field, tuple(a / q for a in self.c))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return self.inverse() * to_rational(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field(1)
        if type(result) is not Cyclo:
            result = Cyclo._make(self.field, (mpq(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Cyclo":
        """Complex conjugation w -> w^(m-1)."""
        field = self.field
        m = field.order
        acc = [mpq(0)] * field.phi
        for i, a in enumerate(self.c):
            if a:
                row = field._rows[(m - i) % m]
                for t, r in enumerate(row):
                    if r:
                        acc[t] += a * r
        return Cyclo._make(field, tuple(acc))

    conjugate = conj

    def galois(self, k: int) -> "Cyclo":
        """Image under the automorphism w -> w^k, gcd(k, m) = 1."""
        field = self.field
        m = field.order
        if gcd(k, m) != 1:
            raise ValueError("k must be a unit mod m")
        acc = [mpq(0)] * field.phi
        for i, a in enumerate(self.c):
            if a:
                row = field._rows[(i * k) % m]
                for t, r in enumerate(row):
                    if r:
                        acc[t] += a * r
        return Cyclo._make(field, tuple(acc))

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if type(other) is Cyclo:
            return self.field is other.field and self.c == other.c
        if isinstance(other, RATIONAL_TYPES):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash((self.field.order, self.c))

    def __repr__(self):
        return f"Cyclo({self.field.order}, {format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


# ----------------------------------------------------------------------------
# scalar helpers usable on mpq and Cyclo alike
# ----------------------------------------------------------------------------
def conj(x):
    return x.conj() if type(x) is Cyclo else x


def is_rational_scalar(x) -> bool:
    return type(x) is not Cyclo or x.is_rational()


def format_scalar(x, var: str = "w") -> str:
    if type(x) is not Cyclo:
        return str(mpq(x))
    terms = []
    for i, a in enumerate(x.c):
        if not a:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(str(a))
        elif a == 1:
            terms.append(mono)
        elif a == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{a}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def cyclo_mul(a: Cyclo, b: Cyclo) -> Cyclo:
    if a.field is not b.field:
        raise FieldMismatchError(
            f"order mismatch: {a.field.order} vs {b.field.order}")
    return a * b


def cyclo_conj(a):
    return conj(a)
