"""Exact arithmetic: sparse polynomials over Q, rational functions, series, matrices.

All polynomials live in the fixed ring Q[u, v, alpha, beta, x, y]; a monomial is
an exponent 6-tuple in that variable order.  Terms are ordered graded
lexicographically with ``u < v < alpha < beta < x < y``.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

BigRat = Fraction

VARS = ("u", "v", "alpha", "beta", "x", "y")
NV = len(VARS)
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_VAR_INDEX.update({"α": 2, "β": 3, "a": 2, "b": 3})
ZERO_EXP = (0,) * NV

Scalar = Union[int, Fraction]


class DivisionByZeroPolynomial(ZeroDivisionError):
    pass


class NotExpandable(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    def __init__(self, det: "RatFun"):
        super().__init__(f"singular matrix: determinant is {det}")
        self.det = det


def _var_index(var: Union[str, int]) -> int:
    if isinstance(var, int):
        return var
    try:
        return _VAR_INDEX[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARS}") from None


def grlex_key(e: tuple) -> tuple:
    return (sum(e),) + tuple(reversed(e))


# ---------------------------------------------------------------------------
# integer polynomial kernels (dict exps -> int), used by gcd and division
# ---------------------------------------------------------------------------

def _zmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def _zsub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _zcontent(a: dict) -> int:
    g = 0
    for c in a.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _zlead(a: dict) -> tuple:
    return max(a, key=grlex_key)


def _zexquo(a: dict, b: dict) -> dict:
    """Exact quotient a / b over Z; raises ArithmeticError if b does not divide a."""
    if not b:
        raise DivisionByZeroPolynomial("division by zero polynomial")
    if len(b) == 1:
        (eb, cb), = b.items()
        out = {}
        for e, c in a.items():
            q, r = divmod(c, cb)
            d = tuple(x - y for x, y in zip(e, eb))
            if r or min(d) < 0:
                raise ArithmeticError("inexact polynomial division")
            out[d] = q
        return out
    lb = _zlead(b)
    cb = b[lb]
    rem = dict(a)
    q: dict = {}
    while rem:
        lr = _zlead(rem)
        d = tuple(x - y for x, y in zip(lr, lb))
        c, r = divmod(rem[lr], cb)
        if r or min(d) < 0:
            raise ArithmeticError("inexact polynomial division")
        q[d] = c
        for e, cc in b.items():
            t = tuple(x + y for x, y in zip(e, d))
            v = rem.get(t, 0) - c * cc
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return q


def _zvars(a: dict) -> set:
    s = set()
    for e in a:
        for i, k in enumerate(e):
            if k:
                s.add(i)
    return s


def _znormalize(a: dict) -> dict:
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    c = _zcontent(a)
    if a[_zlead(a)] < 0:
        c = -c
    if c == 1:
        return a
    return {e: v // c for e, v in a.items()}


# dense univariate integer gcd (primitive PRS)

def _uprim(p: list) -> list:
    g = 0
    for c in p:
        g = gcd(g, c)
    if g > 1:
        p = [c // g for c in p]
    return p


def _uprem(a: list, b: list) -> list:
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        while r and r[-1] == 0:
            r.pop()
        if r:
            r = _uprim(r)
    return r


def _ugcd(a: list, b: list) -> list:
    a = _uprim(a)
    b = _uprim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _uprem(a, b)
    return a


def _zgcd(a: dict, b: dict) -> dict:
    """gcd over Z of integer polynomials, primitive with positive leading coefficient."""
    if not a:
        return _znormalize(b)
    if not b:
        return _znormalize(a)
    va, vb = _zvars(a), _zvars(b)
    if not va or not vb:
        return {ZERO_EXP: 1}
    both = va | vb
    if len(both) == 1:
        (i,) = both
        da = [0] * (max(e[i] for e in a) + 1)
        for e, c in a.items():
            da[e[i]] = c
        db = [0] * (max(e[i] for e in b) + 1)
        for e, c in b.items():
            db[e[i]] = c
        g = _ugcd(da, db)
        out = {}
        for k, c in enumerate(g):
            if c:
                e = [0] * NV
                e[i] = k
                out[tuple(e)] = c
        return _znormalize(out)
    # a variable present in only one argument: gcd divides the content in it
    for i in sorted(both):
        if i in va and i not in vb:
            return _zgcd(_zcontent_in(a, i), b)
        if i in vb and i not in va:
            return _zgcd(a, _zcontent_in(b, i))
    x = max(both)
    ca, cb = _zcontent_in(a, x), _zcontent_in(b, x)
    c = _zgcd(ca, cb)
    A = _to_uni(_zexquo(a, ca), x)
    B = _to_uni(_zexquo(b, cb), x)
    if max(A) < max(B):
        A, B = B, A
    while B:
        R = _uni_prem(A, B)
        A, B = B, _uni_primpart(R)
    h = _from_uni(_uni_primpart(A), x)
    return _znormalize(_zmul(c, h))


def _to_uni(a: dict, x: int) -> dict:
    out: dict = {}
    for e, c in a.items():
        k = e[x]
        r = e[:x] + (0,) + e[x + 1:]
        out.setdefault(k, {})[r] = c
    return out


def _from_uni(A: dict, x: int) -> dict:
    out = {}
    for k, co in A.items():
        for e, c in co.items():
            out[e[:x] + (k,) + e[x + 1:]] = c
    return out


def _zcontent_in(a: dict, x: int) -> dict:
    """Content of a as a polynomial in variable x (gcd of its coefficients)."""
    coeffs = sorted(_to_uni(a, x).values(), key=len)
    g = coeffs[0]
    for co in coeffs[1:]:
        if len(g) == 1 and next(iter(g)) == ZERO_EXP:
            break
        g = _zgcd(g, co)
    g = _znormalize(g)
    # keep the sign convention of a's leading coefficient out of the content
    return g


def _uni_prem(A: dict, B: dict) -> dict:
    dB = max(B)
    lB = B[dB]
    R = {k: v for k, v in A.items() if v}
    while R and max(R) >= dB:
        dR = max(R)
        lR = R[dR]
        shift = dR - dB
        newR = {k: _zmul(lB, v) for k, v in R.items()}
        for k, v in B.items():
            t = newR.get(k + shift, {})
            t = _zsub(t, _zmul(lR, v))
            if t:
                newR[k + shift] = t
            else:
                newR.pop(k + shift, None)
        R = {k: v for k, v in newR.items() if v}
    # the remaining power of lc(B) is dropped: callers take primitive parts
    return R


def _uni_primpart(A: dict) -> dict:
    if not A:
        return A
    coeffs = sorted(A.values(), key=len)
    g = coeffs[0]
    for co in coeffs[1:]:
        if len(g) == 1 and next(iter(g)) == ZERO_EXP:
            break
        g = _zgcd(g, co)
    g = _znormalize(g)
    if not (len(g) == 1 and next(iter(g)) == ZERO_EXP):
        A = {k: _zexquo(v, g) for k, v in A.items()}
    ic = 0
    for co in A.values():
        ic = gcd(ic, _zcontent(co))
        if ic == 1:
            return A
    return {k: {e: c // ic for e, c in v.items()} for k, v in A.items()}


# ---------------------------------------------------------------------------
# MPoly
# ---------------------------------------------------------------------------

class MPoly:
    """Sparse polynomial over Q in the variables ``VARS``.

    ``terms`` maps exponent tuples to nonzero Fractions.  Instances are treated
    as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != NV:
                        e = tuple(e) + (0,) * (NV - len(e))
                    clean[tuple(e)] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "MPoly":
        return cls({ZERO_EXP: c}) if c else cls()

    @classmethod
    def var(cls, name: Union[str, int], power: int = 1) -> "MPoly":
        e = [0] * NV
        e[_var_index(name)] = power
        return cls._raw({tuple(e): Fraction(1)})

    @classmethod
    def coerce(cls, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to MPoly")

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ZERO_EXP in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(ZERO_EXP, Fraction(0))

    def variables(self) -> set:
        s = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    s.add(VARS[i])
        return s

    def degree(self, var: Union[str, int, None] = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = _var_index(var)
        return max(e[i] for e in self.terms)

    def leading_exp(self) -> tuple:
        return max(self.terms, key=grlex_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_exp()]

    def coeff(self, exps: Union[tuple, Mapping[str, int]]) -> Fraction:
        if isinstance(exps, Mapping):
            e = [0] * NV
            for k, v in exps.items():
                e[_var_index(k)] = v
            exps = tuple(e)
        return self.terms.get(tuple(exps), Fraction(0))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        other = MPoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other):
        return MPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly()
            return MPoly._raw({e: c * other for e, c in self.terms.items()})
        other = MPoly.coerce(other)
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        return RatFun(self, MPoly.coerce(other))

    def __rtruediv__(self, other):
        return RatFun(MPoly.coerce(other), self)

    def exquo(self, other: "MPoly") -> "MPoly":
        """Exact quotient; raises ArithmeticError if ``other`` does not divide self."""
        other = MPoly.coerce(other)
        if other.is_zero():
            raise DivisionByZeroPolynomial("division by zero polynomial")
        lb = other.leading_exp()
        cb = other.terms[lb]
        rem = dict(self.terms)
        q = {}
        while rem:
            lr = max(rem, key=grlex_key)
            d = tuple(x - y for x, y in zip(lr, lb))
            if min(d) < 0:
                raise ArithmeticError("inexact polynomial division")
            c = rem[lr] / cb
            q[d] = c
            for e, cc in other.terms.items():
                t = tuple(x + y for x, y in zip(e, d))
                v = rem.get(t, 0) - c * cc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MPoly._raw(q)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exquo(self)
        except ArithmeticError:
            return False
        return True

    # -- calculus and evaluation ------------------------------------------
    def diff(self, var: Union[str, int], times: int = 1) -> "MPoly":
        i = _var_index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < times:
                continue
            f = 1
            for j in range(times):
                f *= k - j
            out[e[:i] + (k - times,) + e[i + 1:]] = c * f
        return MPoly._raw(out)

    def subs(self, values: Mapping[str, Union[Scalar, "MPoly"]]) -> "MPoly":
        idx = {_var_index(k): MPoly.coerce(v) for k, v in values.items()}
        powers: dict = {}
        out = MPoly()
        for e, c in self.terms.items():
            keep = list(e)
            term = MPoly.const(c)
            for i, p in idx.items():
                if e[i]:
                    key = (i, e[i])
                    if key not in powers:
                        powers[key] = p ** e[i]
                    term = term * powers[key]
                    keep[i] = 0
            term = term * MPoly._raw({tuple(keep): Fraction(1)})
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        r = self.subs(values)
        if not r.is_constant():
            raise ValueError(f"free variables remain: {sorted(r.variables())}")
        return r.constant_term()

    # -- normalization helpers --------------------------------------------
    def _int_form(self) -> tuple[dict, Fraction]:
        """(integer terms, scale) with self == scale * integer polynomial."""
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        z = {e: int(c * den) for e, c in self.terms.items()}
        return z, Fraction(1, den)

    def primitive(self) -> tuple[Fraction, "MPoly"]:
        """(c, p) with self == c * p, p integral primitive with positive leading coefficient."""
        if not self.terms:
            return Fraction(0), MPoly()
        z, scale = self._int_form()
        c = _zcontent(z)
        if z[_zlead(z)] < 0:
            c = -c
        return scale * c, MPoly._raw({e: Fraction(v // c) for e, v in z.items()})

    # -- comparison / hashing / display ------------------------------------
    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly.const(other).terms
        if isinstance(other, RatFun):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sorted_terms(self, descending: bool = False) -> list:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def __str__(self):
        return format_mpoly(self)

    def __repr__(self):
        return f"MPoly({format_mpoly(self)!r})"


def _format_monomial(e: tuple) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(VARS[i])
        elif k:
            parts.append(f"{VARS[i]}^{k}")
    return "*".join(parts)


def format_mpoly(p: MPoly) -> str:
    """Canonical text: ascending graded-lex term order, ``*`` and ``^`` explicit."""
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.sorted_terms():
        mono = _format_monomial(e)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += sign + body
    return s


def mpoly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Greatest common divisor, primitive over Z with positive leading coefficient."""
    za, _ = a._int_form()
    zb, _ = b._int_form()
    g = _zgcd(za, zb)
    if not g:
        return MPoly()
    return MPoly._raw({e: Fraction(c) for e, c in g.items()})


# ---------------------------------------------------------------------------
# RatFun
# ---------------------------------------------------------------------------

class RatFun:
    """Reduced quotient num/den; den is integral primitive with positive leading coefficient."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced: bool = False):
        num = MPoly.coerce(num)
        den = MPoly.const(1) if den is None else MPoly.coerce(den)
        if den.is_zero():
            raise DivisionByZeroPolynomial("division by zero polynomial")
        if num.is_zero():
            self.num, self.den = MPoly(), MPoly.const(1)
            self._hash = None
            return
        if not _reduced and not den.is_constant():
            g = mpoly_gcd(num, den)
            if not g.is_constant():
                num = num.exquo(g)
                den = den.exquo(g)
        c, den = den.primitive()
        self.num = num * (1 / c) if c != 1 else num
        self.den = den
        self._hash = None

    @classmethod
    def coerce(cls, other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        return cls(MPoly.coerce(other))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    def __add__(self, other):
        other = RatFun.coerce(other)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        g = mpoly_gcd(self.den, other.den)
        bd = self.den.exquo(g)
        dd = other.den.exquo(g)
        return RatFun(self.num * dd + other.num * bd, self.den * dd)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RatFun.coerce(other))

    def __rsub__(self, other):
        return RatFun.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFun(self.num * other, self.den, _reduced=True)
        other = RatFun.coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFun(MPoly())
        g1 = mpoly_gcd(self.num, other.den)
        g2 = mpoly_gcd(other.num, self.den)
        num = self.num.exquo(g1) * other.num.exquo(g2)
        den = self.den.exquo(g2) * other.den.exquo(g1)
        return RatFun(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise DivisionByZeroPolynomial("division by zero polynomial")
        return RatFun(self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        return self * RatFun.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFun.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, (MPoly, int, Fraction)):
            other = RatFun.coerce(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def subs(self, values) -> "RatFun":
        return RatFun(self.num.subs(values), self.den.subs(values))

    def __str__(self):
        return format_ratfun(self)

    def __repr__(self):
        return f"RatFun({format_ratfun(self)!r})"


def ratfun_normalize(num, den) -> RatFun:
    return RatFun(num, den)


def ratfun_equal(a: RatFun, b: RatFun) -> bool:
    """Cross-multiplication test a.num*b.den == b.num*a.den."""
    return (a.num * b.den - b.num * a.den).is_zero()


# ---------------------------------------------------------------------------
# display of denominators as products of binomials (1 -+ w^k)
# ---------------------------------------------------------------------------

def coefficients_in(p: MPoly, var: Union[str, int]) -> dict:
    """Coefficients of p viewed as a polynomial in ``var``: power -> MPoly free of var."""
    i = _var_index(var)
    out: dict = {}
    for e, c in p.terms.items():
        k = e[i]
        out.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
    return {k: MPoly._raw(t) for k, t in out.items()}


def _gcd_many(start: MPoly, polys) -> MPoly:
    g = start
    for q in polys:
        if g.is_constant():
            break
        g = mpoly_gcd(g, q)
    return g


def separable_split(p: MPoly) -> tuple[MPoly, MPoly] | None:
    """(a(u), b(v)) with p == a*b, or None if p does not factor that way."""
    if p.variables() - {"u", "v"}:
        return None
    by_v = coefficients_in(p, "v")
    a = _gcd_many(next(iter(by_v.values())), by_v.values())
    b = p.exquo(a)
    if "u" in b.variables():
        return None
    return a, b


def separable_sum(terms) -> RatFun:
    """Sum of RatFuns in u, v whose denominators are products a(u)*b(v).

    Works with univariate lcms and gcds only, avoiding bivariate gcds.
    Falls back to ordinary addition when a denominator does not split.
    """
    one = MPoly.const(1)
    splits = []
    lu, lv = one, one
    for f in terms:
        sp = separable_split(f.den)
        if sp is None:
            acc = RatFun(MPoly())
            for g in terms:
                acc = acc + g
            return acc
        splits.append(sp)
        lu = _poly_lcm(lu, sp[0])
        lv = _poly_lcm(lv, sp[1])
    num = MPoly()
    for f, (a, b) in zip(terms, splits):
        if not f.is_zero():
            num = num + f.num * lu.exquo(a) * lv.exquo(b)
    if num.is_zero():
        return RatFun(MPoly())
    gu = _gcd_many(lu, coefficients_in(num, "v").values())
    gv = _gcd_many(lv, coefficients_in(num, "u").values())
    g = gu * gv
    return RatFun(num.exquo(g), lu.exquo(gu) * lv.exquo(gv), _reduced=True)


def binomial_factors(p: MPoly) -> tuple[Fraction, list] | None:
    """Write p as c * prod (1 - w^k)^m * prod (1 + w^k)^m for w in {u, v}.

    Returns (c, [(var, k, sign, mult), ...]) or None if p has another factor.
    Greedy from large k, which is the usual presentation of such products.
    """
    rest = p
    found = []
    for var in ("u", "v"):
        i = _var_index(var)
        for sign in (-1, 1):
            for k in range(rest.degree(i), 0, -1):
                f = MPoly.const(1) + MPoly.var(var, k) * sign
                m = 0
                while rest.degree(i) >= k:
                    try:
                        rest = rest.exquo(f)
                    except ArithmeticError:
                        break
                    m += 1
                if m:
                    found.append((var, k, sign, m))
    if not rest.is_constant():
        return None
    found.sort(key=lambda t: (t[0], -t[2], t[1]))
    return rest.constant_term(), found


def format_denominator(p: MPoly) -> str:
    bf = binomial_factors(p) if not p.is_constant() else None
    if bf is None:
        return format_mpoly(p)
    c, fs = bf
    parts = []
    for var, k, sign, m in fs:
        mono = var if k == 1 else f"{var}^{k}"
        s = f"(1{'-' if sign < 0 else '+'}{mono})"
        if m > 1:
            s += f"^{m}"
        parts.append(s)
    body = "*".join(parts)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def format_ratfun(f: RatFun) -> str:
    num = format_mpoly(f.num)
    if f.den == MPoly.const(1):
        return num
    return f"({num})/({format_denominator(f.den)})"


def ratfun_to_json(f: RatFun) -> dict:
    return {"num": format_mpoly(f.num), "den": format_denominator(f.den)}


# ---------------------------------------------------------------------------
# parsing of the canonical text form
# ---------------------------------------------------------------------------

def _eval_node(node):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return RatFun(MPoly.const(node.value))
    if isinstance(node, ast.Name):
        return RatFun(MPoly.var(node.id))
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError("exponents must be integer literals")
            return left ** node.right.value
        right = _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    raise ValueError(f"unsupported syntax in expression: {ast.dump(node)}")


def parse_ratfun(text: str) -> RatFun:
    """Parse the textual form produced by :func:`format_ratfun` (or any +-*/^ expression)."""
    text = text.replace("^", "**").replace("α", "alpha").replace("β", "beta")
    text = text.replace("−", "-")
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc}") from None
    return _eval_node(tree)


def parse_mpoly(text: str) -> MPoly:
    f = parse_ratfun(text)
    if not f.is_polynomial():
        raise ValueError(f"not a polynomial: {text!r}")
    return f.num * (1 / f.den.constant_term())


# ---------------------------------------------------------------------------
# power series in u, v
# ---------------------------------------------------------------------------

class SeriesBox:
    """Dense truncated bivariate series: coefficient [i][j] of u^i v^j, i <= max_u, j <= max_v."""

    __slots__ = ("coefficients", "max_u", "max_v")

    def __init__(self, coefficients: Sequence[Sequence[Scalar]], max_u: int, max_v: int):
        rows = tuple(tuple(Fraction(c) for c in row) for row in coefficients)
        if len(rows) != max_u + 1 or any(len(r) != max_v + 1 for r in rows):
            raise ValueError("coefficient array does not match cutoffs")
        self.coefficients = rows
        self.max_u = max_u
        self.max_v = max_v

    @classmethod
    def zeros(cls, max_u: int, max_v: int) -> "SeriesBox":
        return cls([[0] * (max_v + 1) for _ in range(max_u + 1)], max_u, max_v)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.coefficients[i][j]

    def truncate(self, max_u: int, max_v: int) -> "SeriesBox":
        if max_u > self.max_u or max_v > self.max_v:
            raise ValueError("cannot extend a truncated series")
        return SeriesBox([row[: max_v + 1] for row in self.coefficients[: max_u + 1]], max_u, max_v)

    def _check(self, other: "SeriesBox"):
        if (self.max_u, self.max_v) != (other.max_u, other.max_v):
            raise ValueError("series cutoffs differ")

    def __add__(self, other: "SeriesBox") -> "SeriesBox":
        self._check(other)
        return SeriesBox(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.coefficients, other.coefficients)],
            self.max_u, self.max_v)

    def __sub__(self, other: "SeriesBox") -> "SeriesBox":
        return self + other * -1

    def __mul__(self, other) -> "SeriesBox":
        if isinstance(other, (int, Fraction)):
            return SeriesBox([[a * other for a in r] for r in self.coefficients], self.max_u, self.max_v)
        self._check(other)
        mu, mv = self.max_u, self.max_v
        out = [[Fraction(0)] * (mv + 1) for _ in range(mu + 1)]
        A, B = self.coefficients, other.coefficients
        for i in range(mu + 1):
            for j in range(mv + 1):
                a = A[i][j]
                if not a:
                    continue
                for k in range(mu + 1 - i):
                    rowB = B[k]
                    rowO = out[i + k]
                    for l in range(mv + 1 - j):
                        if rowB[l]:
                            rowO[j + l] += a * rowB[l]
        return SeriesBox(out, mu, mv)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SeriesBox):
            return NotImplemented
        return (self.max_u, self.max_v) == (other.max_u, other.max_v) and self.coefficients == other.coefficients

    def first_difference(self, other: "SeriesBox") -> tuple[int, int] | None:
        self._check(other)
        for i in range(self.max_u + 1):
            for j in range(self.max_v + 1):
                if self.coefficients[i][j] != other.coefficients[i][j]:
                    return (i, j)
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for r in self.coefficients for c in r)

    def __repr__(self):
        return f"SeriesBox(max_u={self.max_u}, max_v={self.max_v})"


def mpoly_to_box(p: MPoly, max_u: int, max_v: int) -> list:
    if p.variables() - {"u", "v"}:
        raise ValueError(f"series in u, v only; found {sorted(p.variables())}")
    box = [[Fraction(0)] * (max_v + 1) for _ in range(max_u + 1)]
    for e, c in p.terms.items():
        if e[0] <= max_u and e[1] <= max_v:
            box[e[0]][e[1]] = c
    return box


def series_expand(f, max_u: int, max_v: int) -> SeriesBox:
    """Truncated power series of a rational function in u, v about the origin."""
    f = RatFun.coerce(f)
    if f.variables() - {"u", "v"}:
        raise ValueError(f"series in u, v only; found {sorted(f.variables())}")
    c0 = f.den.constant_term()
    if not c0:
        raise NotExpandable("not expandable at origin")
    num = mpoly_to_box(f.num, max_u, max_v)
    den = [(e[0], e[1], c) for e, c in f.den.terms.items()
           if e != ZERO_EXP and e[0] <= max_u and e[1] <= max_v]
    out = [[Fraction(0)] * (max_v + 1) for _ in range(max_u + 1)]
    inv = 1 / c0
    for i in range(max_u + 1):
        for j in range(max_v + 1):
            s = num[i][j]
            for a, b, c in den:
                if a <= i and b <= j:
                    s -= c * out[i - a][j - b]
            out[i][j] = s * inv
    return SeriesBox(out, max_u, max_v)


# ---------------------------------------------------------------------------
# matrices over the fraction field
# ---------------------------------------------------------------------------

class FMatrix:
    """Square matrix with RatFun entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(RatFun.coerce(x) for x in r) for r in rows)
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise ValueError("FMatrix must be square with dimension >= 1")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "FMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_int(cls, m: Sequence[Sequence[int]]) -> "FMatrix":
        return cls(m)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "FMatrix") -> "FMatrix":
        return FMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "FMatrix") -> "FMatrix":
        return FMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def scale(self, c) -> "FMatrix":
        c = RatFun.coerce(c)
        return FMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = RatFun(MPoly())
                for a, b in zip(r, col):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return FMatrix(out)

    def transpose(self) -> "FMatrix":
        return FMatrix(zip(*self.rows))

    def row_times(self, vec: Sequence[RatFun]) -> list:
        """Row vector times matrix."""
        out = []
        for j in range(self.n):
            acc = RatFun(MPoly())
            for i, a in enumerate(vec):
                b = self.rows[i][j]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    def times_col(self, vec: Sequence[RatFun]) -> list:
        out = []
        for r in self.rows:
            acc = RatFun(MPoly())
            for a, b in zip(r, vec):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    def __eq__(self, other):
        return isinstance(other, FMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "FMatrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"


def _poly_lcm(a: MPoly, b: MPoly) -> MPoly:
    return a * b.exquo(mpoly_gcd(a, b))


def fmatrix_inverse(m: FMatrix) -> FMatrix:
    """Inverse by fraction-free Gauss-Jordan elimination.

    Rows are first cleared of denominators (M' = D M), so the elimination runs
    over polynomials with exact divisions only; then M^-1 = M'^-1 D.
    """
    n = m.n
    scales = []
    rows = []
    for r in m.rows:
        L = MPoly.const(1)
        for x in r:
            if not x.den.is_constant():
                L = _poly_lcm(L, x.den)
        scales.append(L)
        rows.append([x.num * L.exquo(x.den) for x in r])
    one, zero = MPoly.const(1), MPoly()
    A = [row + [one if i == j else zero for j in range(n)] for i, row in enumerate(rows)]
    prev = one
    for k in range(n):
        piv = next((i for i in range(k, n) if not A[i][k].is_zero()), None)
        if piv is None:
            raise SingularMatrixError(RatFun(MPoly()))
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
        akk = A[k][k]
        rk = A[k]
        for i in range(n):
            if i == k:
                continue
            ri = A[i]
            aik = ri[k]
            A[i] = [(akk * ri[j] - aik * rk[j]).exquo(prev) for j in range(2 * n)]
        prev = akk
    det_like = A[0][0]
    inv = []
    for i in range(n):
        assert A[i][i] == det_like
        inv.append([RatFun(A[i][n + j] * scales[j], det_like) for j in range(n)])
    return FMatrix(inv)
