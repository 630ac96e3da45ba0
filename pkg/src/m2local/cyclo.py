"""Exact arithmetic in the cyclotomic field Q(zeta_120).

Elements are stored as integer coefficient vectors of length phi(120) = 32 in
the power basis 1, z, ..., z^31 together with a positive common denominator,
always reduced modulo the 120th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence, Union

N = 120


def _poly_divexact(a: list, b: list) -> list:
    # integer polynomials, low degree first, b monic
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert not any(a), "inexact cyclotomic division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, list(cyclotomic_polynomial(d)))
    return tuple(p)


PHI = cyclotomic_polynomial(N)
DEG = len(PHI) - 1  # 32
# sparse tail of Phi: z^DEG = -sum_{i<DEG} PHI[i] z^i
_TAIL = [(i, -c) for i, c in enumerate(PHI[:-1]) if c]


def _reduce(coeffs: list) -> list:
    c = list(coeffs)
    for k in range(len(c) - 1, DEG - 1, -1):
        a = c[k]
        if a:
            shift = k - DEG
            for i, t in _TAIL:
                c[i + shift] += a * t
    del c[DEG:]
    if len(c) < DEG:
        c += [0] * (DEG - len(c))
    return c


class Cyclo:
    """Element of Q(zeta_120)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[int], den: int = 1, _reduced: bool = False):
        num = list(num)
        if not _reduced:
            num = _reduce(num) if len(num) > DEG else num + [0] * (DEG - len(num))
        if den <= 0:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            if g == 1:
                break
            g = gcd(g, c)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.num = tuple(num)
        self.den = den

    @classmethod
    def rational(cls, q: Union[int, Fraction]) -> "Cyclo":
        q = Fraction(q)
        return cls([q.numerator] + [0] * (DEG - 1), q.denominator, _reduced=True)

    @classmethod
    def coerce(cls, x) -> "Cyclo":
        if isinstance(x, Cyclo):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclo")

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coefficients(self) -> tuple:
        return tuple(Fraction(c, self.den) for c in self.num)

    def __add__(self, other):
        other = Cyclo.coerce(other)
        if self.den == other.den:
            return Cyclo([a + b for a, b in zip(self.num, other.num)], self.den, _reduced=True)
        return Cyclo([a * other.den + b * self.den for a, b in zip(self.num, other.num)],
                     self.den * other.den, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo([-a for a in self.num], self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-Cyclo.coerce(other))

    def __rsub__(self, other):
        return Cyclo.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclo([a * other for a in self.num], self.den, _reduced=True)
        other = Cyclo.coerce(other)
        prod = [0] * (2 * DEG - 1)
        b = other.num
        nzb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(self.num):
            if x:
                for j, y in nzb:
                    prod[i + j] += x * y
        return Cyclo(_reduce(prod), self.den * other.den, _reduced=True)

    __rmul__ = __mul__

    def mul_root(self, k: int) -> "Cyclo":
        """Multiply by zeta_120^k."""
        k %= N
        if not k:
            return self
        return Cyclo(_reduce([0] * k + list(self.num)), self.den, _reduced=True)

    def inverse(self) -> "Cyclo":
        """Inverse via the extended Euclidean algorithm against Phi_120."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        a = [Fraction(c) for c in PHI]
        b = [Fraction(c) for c in self.num]
        while b and b[-1] == 0:
            b.pop()
        # invariants: s0*x == a (mod Phi), s1*x == b (mod Phi)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(b) > 1:
            q, r = _qdivmod(a, b)
            a, b = b, r
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        c = b[0]
        inv = [x / c for x in s1]
        den = 1
        for x in inv:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in inv]
        if len(ints) > DEG:
            ints = _reduce(ints)
        # multiply by self.den because self == num/den
        return Cyclo([v * self.den for v in ints], den)

    def __truediv__(self, other):
        return self * Cyclo.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Cyclo.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo.rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.num):
            if c:
                q = Fraction(c, self.den)
                terms.append(f"{q}" if i == 0 else f"{q}*z^{i}")
        return "Cyclo(" + (" + ".join(terms) or "0") + ")"


def _qtrim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qsub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _qtrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qtrim(out)


def _qdivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lb
        k = len(a) - len(b)
        q[k] = c
        for j, y in enumerate(b):
            a[j + k] -= c * y
        _qtrim(a)
    return _qtrim(q), a


@lru_cache(maxsize=None)
def root_of_unity(k: int) -> Cyclo:
    """zeta_120^k."""
    k %= N
    return Cyclo([0] * k + [1], 1)


_ROOT_INDEX: dict = {}


def root_exponent(c: Cyclo) -> int:
    """k with c == zeta_120^k; ValueError if c is not a 120th root of unity."""
    if not _ROOT_INDEX:
        for k in range(N):
            _ROOT_INDEX[root_of_unity(k)] = k
    try:
        return _ROOT_INDEX[c]
    except KeyError:
        raise ValueError(f"{c} is not a 120th root of unity") from None


def zeta(n: int) -> Cyclo:
    """Primitive n-th root of unity zeta_120^(120/n)."""
    if n <= 0 or N % n:
        raise ValueError("root of unity not representable")
    return root_of_unity(N // n)


def sqrt2() -> Cyclo:
    return zeta(8) - zeta(8) ** 3


def sqrt5() -> Cyclo:
    """Positive square root of 5 (Gauss sum for zeta_5 = exp(2 pi i / 5))."""
    z = zeta(5)
    return z - z ** 2 - z ** 3 + z ** 4


def imag_unit() -> Cyclo:
    return zeta(4)


class CMat2:
    """2x2 matrix over Q(zeta_120)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (Cyclo.coerce(x) for x in (a, b, c, d))

    @classmethod
    def identity(cls) -> "CMat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def diag(cls, p, q) -> "CMat2":
        return cls(p, 0, 0, q)

    def __matmul__(self, o: "CMat2") -> "CMat2":
        return CMat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                     self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def scale(self, s) -> "CMat2":
        s = Cyclo.coerce(s)
        return CMat2(self.a * s, self.b * s, self.c * s, self.d * s)

    def __neg__(self) -> "CMat2":
        return CMat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> Cyclo:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Cyclo:
        return self.a + self.d

    def inverse(self) -> "CMat2":
        dt = self.det()
        if dt == 1:
            return CMat2(self.d, -self.b, -self.c, self.a)
        di = dt.inverse()
        return CMat2(self.d * di, -self.b * di, -self.c * di, self.a * di)

    def __pow__(self, n: int) -> "CMat2":
        if n < 0:
            return self.inverse() ** (-n)
        r = CMat2.identity()
        for _ in range(n):
            r = r @ self
        return r

    def key(self) -> tuple:
        return (self.a.num, self.a.den, self.b.num, self.b.den, self.c.num, self.c.den, self.d.num, self.d.den)

    def __eq__(self, o):
        return isinstance(o, CMat2) and self.key() == o.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"CMat2({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


_TRACE_TABLE: list = []


def _trace_table() -> list:
    if not _TRACE_TABLE:
        for k in range(N):
            _TRACE_TABLE.append(root_of_unity(k) + root_of_unity(-k))
    return _TRACE_TABLE


def eigenvalue_exponent(m: CMat2) -> int:
    """Smallest k in [0, 120) with zeta^k + zeta^-k == trace(m)."""
    tr = m.trace()
    for k, t in enumerate(_trace_table()):
        if t == tr:
            return k
    raise ValueError("element order not supported")


def eigenvalue_of(m: CMat2) -> Cyclo:
    """An eigenvalue lambda of a finite-order SL(2) element: lambda + 1/lambda = trace."""
    return root_of_unity(eigenvalue_exponent(m))
