"""S_n-equivariant Euler characteristics of M_{2,n} from the genus-2 values e2(1^k 2^l).

Pipeline: expand (1+p1)^2 prod_k (1+p_k)^E_k in power sums with coefficients
polynomial in symbols c_d (c_d stands for the Adams operation psi^d of the
rank-4 local system), rewrite in Schur functions, then turn every c-monomial
into a combination of S^k V (x) S^l Lambda^2 V by symplectic weight
decomposition, and finally substitute e2(1^k 2^l).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re
from math import comb, factorial

# --------------------------------------------------------------------------
# coefficient ring Q[c_1, c_2, ...]: dict sorted-tuple-of-degrees -> Fraction
# --------------------------------------------------------------------------


def cp_const(q) -> dict:
    q = Fraction(q)
    return {(): q} if q else {}


def cp_var(d: int) -> dict:
    return {(d,): Fraction(1)}


def cp_add(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + c * scale
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def cp_mul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(Fraction)
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            out[tuple(sorted(m1 + m2))] += c1 * c2
    return {m: c for m, c in out.items() if c}


def cp_scale(a: dict, q) -> dict:
    q = Fraction(q)
    return {m: c * q for m, c in a.items()} if q else {}


def cp_format(a: dict) -> str:
    if not a:
        return "0"
    parts = []
    for m in sorted(a, key=lambda m: (len(m), m)):
        c = a[m]
        mono = "*".join(f"c{d}" for d in m)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += sign + body
    return s


def mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def exponent(k: int, with_factorial: bool = False) -> dict:
    """E_k = -(1/k) sum_{d|k} mu(k/d) c_d, optionally with an extra d! in each term."""
    e: dict = {}
    for d in range(1, k + 1):
        if k % d == 0:
            mu = mobius(k // d)
            if mu:
                w = Fraction(-mu, k) * (factorial(d) if with_factorial else 1)
                e = cp_add(e, cp_var(d), w)
    return e


def binomial_cp(e: dict, j: int) -> dict:
    """C(E, j) = E (E-1) ... (E-j+1) / j!."""
    out = cp_const(1)
    for i in range(j):
        out = cp_mul(out, cp_add(e, cp_const(-i)))
    return cp_scale(out, Fraction(1, factorial(j)))


# --------------------------------------------------------------------------
# power-sum expansion
# --------------------------------------------------------------------------

def _pmul(a: dict, b: dict, n_max: int) -> dict:
    out: dict = {}
    for mu1, c1 in a.items():
        s1 = sum(mu1)
        for mu2, c2 in b.items():
            if s1 + sum(mu2) > n_max:
                continue
            mu = tuple(sorted(mu1 + mu2, reverse=True))
            out[mu] = cp_add(out.get(mu, {}), cp_mul(c1, c2))
            if not out[mu]:
                del out[mu]
    return out


@lru_cache(maxsize=None)
def _config_expansion(n_max: int, with_factorial: bool) -> tuple:
    result = {(): cp_const(1)}
    for k in range(1, n_max + 1):
        e = exponent(k, with_factorial)
        if k == 1:
            e = cp_add(e, cp_const(2))
        factor = {}
        for j in range(0, n_max // k + 1):
            b = binomial_cp(e, j)
            if b:
                factor[(k,) * j] = b
        result = _pmul(result, factor, n_max)
    return tuple(sorted(result.items()))


def config_expansion(n_max: int, with_factorial: bool = False) -> dict:
    """partition mu (descending tuple) -> coefficient of p_mu, truncated at |mu| <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return dict(_config_expansion(n_max, with_factorial))


# --------------------------------------------------------------------------
# symmetric group characters
# --------------------------------------------------------------------------

def partitions(n: int, largest: int | None = None):
    """Partitions of n in reverse lexicographic order (n first, 1^n last)."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def mn_character(lam: tuple, mu: tuple) -> int:
    """chi^lam(mu) by the Murnaghan-Nakayama rule, using beta-sets for rim-hook removal."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        k = len(new_beta)
        new_lam = tuple(x for x in (new_beta[i] - (k - 1 - i) for i in range(k)) if x > 0)
        total += (-1) ** height * mn_character(new_lam, rest)
    return total


def psum_to_schur(e: dict, n: int) -> dict:
    """Degree-n part of a power-sum expression rewritten in Schur functions."""
    out = {}
    for lam in partitions(n):
        acc: dict = {}
        for mu, c in e.items():
            if sum(mu) == n:
                chi = mn_character(lam, mu)
                if chi:
                    acc = cp_add(acc, c, chi)
        out[lam] = acc
    return out


def hook_dimension(lam: tuple) -> int:
    n = sum(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


def schur_dimension(v: dict) -> int:
    total = Fraction(0)
    for lam, c in v.items():
        total += Fraction(c) * hook_dimension(lam)
    if total.denominator != 1:
        raise ArithmeticError("non-integral dimension")
    return int(total)


# --------------------------------------------------------------------------
# Sp(4) weight decomposition
# --------------------------------------------------------------------------

def _lmul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(int)
    for (a1, b1), c1 in a.items():
        for (a2, b2), c2 in b.items():
            out[(a1 + a2, b1 + b2)] += c1 * c2
    return {k: v for k, v in out.items() if v}


def adams_character(d: int) -> dict:
    """x1^d + x1^-d + x2^d + x2^-d as exponent pairs."""
    out: dict = defaultdict(int)
    for w in ((d, 0), (-d, 0), (0, d), (0, -d)):
        out[w] += 1
    return dict(out)


def _complete(weights: list, k: int) -> dict:
    """h_k evaluated at the monomials x^w, w in weights."""
    # h_k(A + B) = sum_j h_j(A) h_{k-j}(B); add one weight at a time
    series = [{(0, 0): 1}] + [{} for _ in range(k)]
    for w in weights:
        for deg in range(1, k + 1):
            acc = dict(series[deg])
            mono = {w: 1}
            for kk, v in _lmul(series[deg - 1], mono).items():
                acc[kk] = acc.get(kk, 0) + v
            series[deg] = {kk: v for kk, v in acc.items() if v}
    return series[k]


V_WEIGHTS = [(1, 0), (-1, 0), (0, 1), (0, -1)]
L2_WEIGHTS = [(1, 1), (1, -1), (-1, 1), (-1, -1), (0, 0), (0, 0)]


@lru_cache(maxsize=None)
def basis_character(k: int, l: int) -> tuple:
    """Weights of S^k V (x) S^l Lambda^2 V."""
    ch = _lmul(_complete(V_WEIGHTS, k), _complete(L2_WEIGHTS, l))
    return tuple(sorted(ch.items()))


def basis_dimension(k: int, l: int) -> int:
    return comb(k + 3, 3) * comb(l + 5, 5)


def default_order(w: tuple) -> tuple:
    a, b = w
    return (a + b, a)


def decompose_weyl(ch: dict, order=default_order, max_steps: int = 100000) -> dict:
    """Write a Weyl-invariant Laurent polynomial in the basis S^k V (x) S^l Lambda^2 V."""
    rem = {w: c for w, c in ch.items() if c}
    out: dict = {}
    steps = 0
    while rem:
        steps += 1
        if steps > max_steps:
            raise ArithmeticError("weight decomposition did not terminate")
        dominant = [w for w in rem if w[0] >= w[1] >= 0]
        if not dominant:
            raise ArithmeticError("input is not Weyl invariant")
        a, b = max(dominant, key=order)
        c = rem[(a, b)]
        key = (a - b, b)
        out[key] = out.get(key, 0) + c
        for w, v in basis_character(a - b, b):
            nv = rem.get(w, 0) - c * v
            if nv:
                rem[w] = nv
            else:
                rem.pop(w, None)
    return out


@lru_cache(maxsize=None)
def _sp4_decompose(monomial: tuple) -> tuple:
    ch = {(0, 0): 1}
    for d in monomial:
        ch = _lmul(ch, adams_character(d))
    dec = decompose_weyl(ch)
    dim = sum(c * basis_dimension(k, l) for (k, l), c in dec.items())
    if dim != 4 ** len(monomial):
        raise ArithmeticError("dimension check failed in weight decomposition")
    return tuple(sorted(dec.items()))


def sp4_decompose(monomial) -> dict:
    """Product of Adams characters ch_{d_i}(V) -> {(k, l): multiplicity}."""
    if sum(monomial) > 16:
        raise ValueError("total Adams degree above 16")
    return dict(_sp4_decompose(tuple(sorted(monomial))))


def reconstruct(dec: dict) -> dict:
    """Inverse of decompose_weyl: sum of coefficient * basis character."""
    out: dict = defaultdict(int)
    for (k, l), c in dec.items():
        for w, v in basis_character(k, l):
            out[w] += c * v
    return {w: v for w, v in out.items() if v}


# --------------------------------------------------------------------------
# equivariant Euler characteristic
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class EulerSymbol:
    k: int
    l: int

    def __str__(self):
        if self.k == 0 and self.l == 0:
            return "e2"
        parts = []
        if self.k:
            parts.append("1" if self.k == 1 else f"1^{self.k}")
        if self.l:
            parts.append("2" if self.l == 1 else f"2^{self.l}")
        return "e2(" + " ".join(parts) + ")"


def symbolic_coefficient(c: dict, drop_odd: bool = True) -> dict:
    """Coefficient polynomial in c_d -> {(k, l): Fraction}."""
    out: dict = defaultdict(Fraction)
    for mono, q in c.items():
        for (k, l), m in sp4_decompose(mono).items():
            out[(k, l)] += q * m
    return {kl: v for kl, v in out.items() if v and not (drop_odd and kl[0] % 2)}


def equivariant_euler(n: int, mode: str = "numeric", with_factorial: bool = False,
                      euler=None) -> dict:
    """Schur expansion of e_{S_n}(M_{2,n}).

    mode ``symbolic``: partition -> {(k, l): int} with odd k dropped;
    mode ``numeric``: partition -> int after substituting e2(1^k 2^l).
    """
    if not 0 <= n <= 8:
        raise ValueError("n out of range")
    if mode not in ("symbolic", "numeric"):
        raise ValueError(f"unknown mode {mode!r}")
    if euler is None:
        from .strata import euler_char as euler
    schur = psum_to_schur(config_expansion(n, with_factorial), n)
    out = {}
    for lam, c in schur.items():
        sym = symbolic_coefficient(c, drop_odd=(mode == "symbolic"))
        if mode == "symbolic":
            if any(q.denominator != 1 for q in sym.values()):
                raise ArithmeticError(f"non-integral symbolic coefficient at {lam}")
            out[lam] = {kl: int(q) for kl, q in sorted(sym.items())}
        else:
            total = sum((q * euler(k, l) for (k, l), q in sym.items()), Fraction(0))
            if total.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient at {lam}")
            out[lam] = int(total)
    return out


def format_partition(lam: tuple) -> str:
    if not lam:
        return "()"
    parts = []
    for v in sorted(set(lam), reverse=True):
        m = lam.count(v)
        parts.append(str(v) if m == 1 else f"{v}^{m}")
    return "".join(parts) if all(v < 10 for v in lam) else ",".join(parts)


def format_symbolic(coeff: dict) -> str:
    if not coeff:
        return "0"
    s = ""
    for (k, l), c in sorted(coeff.items(), key=lambda t: (t[0][0] + 2 * t[0][1], t[0])):
        sym = str(EulerSymbol(k, l))
        body = sym if abs(c) == 1 else f"{abs(c)}*{sym}"
        s += ("-" if c < 0 else ("+" if s else "")) + body
    return s


def numeric_dimension_sequence(n_max: int = 7) -> list:
    return [schur_dimension(equivariant_euler(n)) for n in range(n_max + 1)]


# --------------------------------------------------------------------------
# Table 2 fixtures
# --------------------------------------------------------------------------

_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?(e2(?:\(([^)]*)\))?|\d+)")


def parse_partition(text: str) -> tuple:
    """'2^21' -> (2, 2, 1); parts and exponents are single digits."""
    text = text.strip()
    if text in ("()", ""):
        return ()
    out = []
    i = 0
    while i < len(text):
        part = int(text[i])
        i += 1
        mult = 1
        if i < len(text) and text[i] == "^":
            mult = int(text[i + 1])
            i += 2
        out += [part] * mult
    return tuple(sorted(out, reverse=True))


def parse_symbol(inner: str | None) -> tuple:
    k = l = 0
    for tok in (inner or "").split():
        base, _, exp = tok.partition("^")
        e = int(exp) if exp else 1
        if base == "1":
            k += e
        elif base == "2":
            l += e
        else:
            raise ValueError(f"bad symbol part {tok!r}")
    return (k, l)


def parse_symbolic(text: str) -> dict:
    """'e2 - 2*e2(1^2 2) + 1' -> {(0,0): 1, (2,1): -2, None: 1}; None keys bare constants."""
    out: dict = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        mult = int(m.group(2)) if m.group(2) else 1
        atom = m.group(3)
        key = parse_symbol(m.group(4)) if atom.startswith("e2") else None
        val = sign * mult * (1 if key is not None else int(atom))
        out[key] = out.get(key, 0) + val
        pos = m.end()
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class Table2Row:
    n: int
    partition: tuple
    symbolic: dict
    numeric: int


def load_table2() -> list:
    from importlib import resources
    rows = []
    text = (resources.files("m2local") / "data" / "table2.txt").read_text()
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        n, lam, sym, num = (x.strip() for x in line.split(";"))
        rows.append(Table2Row(int(n), parse_partition(lam), parse_symbolic(sym), int(num)))
    return rows


@dataclass(frozen=True)
class Table2Check:
    n: int
    partition: tuple
    numeric_ok: bool
    symbolic_ok: bool
    folded: bool  # printed entry had bare constants, read as multiples of e2 = 1
    computed_symbolic: dict
    printed_symbolic: dict


def fold_constants(sym: dict) -> dict:
    """Read a bare constant c as c*e2; legitimate because e2 = e(M_2) = 1."""
    out = {k: v for k, v in sym.items() if k is not None}
    if None in sym:
        out[(0, 0)] = out.get((0, 0), 0) + sym[None]
    return {k: v for k, v in out.items() if v}


def verify_table2(n_max: int = 7) -> list:
    rows = [r for r in load_table2() if r.n <= n_max]
    out = []
    cache: dict = {}
    for r in rows:
        if r.n not in cache:
            cache[r.n] = (equivariant_euler(r.n, "numeric"), equivariant_euler(r.n, "symbolic"))
        num, sym = cache[r.n]
        got = sym.get(r.partition, {})
        folded = None in r.symbolic
        out.append(Table2Check(r.n, r.partition, num.get(r.partition) == r.numeric,
                               got == fold_constants(r.symbolic), folded, got, r.symbolic))
    return out
