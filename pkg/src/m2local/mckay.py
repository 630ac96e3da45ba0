"""McKay graphs of the catalog groups and the matrix-substitution route to stratum series.

Irreducibles of a Kleinian group are indexed by vertices; the fundamental
representation V acts on R(Gamma) by the adjacency matrix N and a one-dimensional
character chi by a permutation matrix P(chi).  Substituting these into a rational
expression in V and rho and reading the (trivial, trivial) entry gives the
invariant series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import FMatrix, MPoly, RatFun, fmatrix_inverse, separable_sum
from .groups import (
    CHI0, CHI_MINUS, CHI_PLUS, OCT_CHI, TRIVIAL, CharId, GroupError, GroupId, characters, power,
)


@dataclass(frozen=True)
class McKayModel:
    group: GroupId
    labels: tuple
    dims: tuple
    N: tuple
    P: dict  # CharId -> permutation matrix (tuple of tuples)
    char_vertex: dict  # CharId -> index of the vertex of that one-dimensional irreducible

    @property
    def size(self) -> int:
        return len(self.labels)

    def perm(self, chi: CharId) -> tuple:
        try:
            return self.P[chi]
        except KeyError:
            raise GroupError(f"character {chi} not defined for {self.group}") from None


def _adjacency(n: int, edges) -> tuple:
    m = [[0] * n for _ in range(n)]
    for i, j in edges:
        m[i][j] += 1
        m[j][i] += 1
    return tuple(tuple(r) for r in m)


def _perm_matrix(images: list) -> tuple:
    """P_ij = 1 iff chi . W_i = W_j, i.e. j = images[i]."""
    n = len(images)
    return tuple(tuple(1 if images[i] == j else 0 for j in range(n)) for i in range(n))


def _cyclic_model(gid: GroupId) -> McKayModel:
    n = gid.n
    labels = ["1"] + [f"chi^{i}" if i > 1 else "chi" for i in range(1, n)]
    N = _adjacency(n, [(i, (i + 1) % n) for i in range(n)] if n > 2 else [(0, 1), (1, 0)])
    P = {}
    cv = {}
    for chi in characters(gid):
        m = chi.power
        P[chi] = _perm_matrix([(i + m) % n for i in range(n)])
        cv[chi] = m
    return McKayModel(gid, tuple(labels), (1,) * n, N, P, cv)


def _quaternionic_model(gid: GroupId) -> McKayModel:
    n = gid.n // 4
    labels = ["1", "chi0", "chi+", "chi-"] + [f"V[{i}]" for i in range(1, n)]
    size = len(labels)
    v = {i: 3 + i for i in range(1, n)}  # V[i] -> vertex
    edges = [(0, v[1]), (1, v[1]), (2, v[n - 1]), (3, v[n - 1])]
    edges += [(v[i], v[i + 1]) for i in range(1, n - 1)]
    # products of one-dimensional characters: (chi0, chi+, chi-) form Z/2 x Z/2
    # when n is even and Z/4 generated by chi+ when n is odd
    if n % 2 == 0:
        plus = {0: 2, 1: 3, 2: 0, 3: 1}
    else:
        plus = {0: 2, 1: 3, 2: 1, 3: 0}
    minus = {i: plus[{0: 1, 1: 0, 2: 3, 3: 2}[i]] for i in range(4)}
    zero = {0: 1, 1: 0, 2: 3, 3: 2}
    P = {
        TRIVIAL: _perm_matrix(list(range(size))),
        CHI0: _perm_matrix([zero[i] for i in range(4)] + [v[i] for i in range(1, n)]),
        CHI_PLUS: _perm_matrix([plus[i] for i in range(4)] + [v[n - i] for i in range(1, n)]),
        CHI_MINUS: _perm_matrix([minus[i] for i in range(4)] + [v[n - i] for i in range(1, n)]),
    }
    cv = {TRIVIAL: 0, CHI0: 1, CHI_PLUS: 2, CHI_MINUS: 3}
    dims = (1, 1, 1, 1) + (2,) * (n - 1)
    return McKayModel(gid, tuple(labels), dims, _adjacency(size, edges), P, cv)


def _tetrahedral_model(gid: GroupId) -> McKayModel:
    labels = ("1", "chi", "chi^2", "V", "chi V", "chi^2 V", "V2")
    edges = [(0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)]
    cyc = [1, 2, 0, 4, 5, 3, 6]
    P = {TRIVIAL: _perm_matrix(list(range(7))), power(1): _perm_matrix(cyc),
         power(2): _perm_matrix([cyc[c] for c in cyc])}
    cv = {TRIVIAL: 0, power(1): 1, power(2): 2}
    return McKayModel(gid, labels, (1, 1, 1, 2, 2, 2, 3), _adjacency(7, edges), P, cv)


def _octahedral_model(gid: GroupId) -> McKayModel:
    labels = ("1", "V", "V2", "V3", "chi V2", "chi V", "chi", "W")
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]
    swap = [6, 5, 4, 3, 2, 1, 0, 7]
    P = {TRIVIAL: _perm_matrix(list(range(8))), OCT_CHI: _perm_matrix(swap)}
    cv = {TRIVIAL: 0, OCT_CHI: 6}
    return McKayModel(gid, labels, (1, 2, 3, 4, 3, 2, 1, 2), _adjacency(8, edges), P, cv)


def _icosahedral_model(gid: GroupId) -> McKayModel:
    labels = ("1", "V", "V2", "V3", "V4", "V5", "X4", "X2", "X3")
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]
    P = {TRIVIAL: _perm_matrix(list(range(9)))}
    return McKayModel(gid, labels, (1, 2, 3, 4, 5, 6, 4, 2, 3), _adjacency(9, edges), P, {TRIVIAL: 0})


@lru_cache(maxsize=None)
def mckay_model(gid: GroupId) -> McKayModel:
    return {
        "C": _cyclic_model, "Q": _quaternionic_model, "T": _tetrahedral_model,
        "O": _octahedral_model, "I": _icosahedral_model,
    }[gid.family](gid)


# --------------------------------------------------------------------------
# integer matrix helpers
# --------------------------------------------------------------------------

def imat_mul(a, b) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in a)


def imat_transpose(a) -> tuple:
    return tuple(zip(*a))


def imat_identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def cartan_check(m: McKayModel) -> bool:
    """A = 2I - N is positive semi-definite of nullity one with null vector the dimensions.

    Exact symmetric elimination over Q: a zero pivot must come with a zero row,
    otherwise A is indefinite.
    """
    n = m.size
    A = [[Fraction(2 * (i == j) - m.N[i][j]) for j in range(n)] for i in range(n)]
    if any(A[i][j] != A[j][i] for i in range(n) for j in range(n)):
        return False
    if any(sum(A[i][j] * m.dims[j] for j in range(n)) for i in range(n)):
        return False
    nullity = 0
    for k in range(n):
        p = A[k][k]
        if p < 0:
            return False
        if p == 0:
            if any(A[k][j] for j in range(k + 1, n)):
                return False
            nullity += 1
            continue
        for i in range(k + 1, n):
            f = A[i][k] / p
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return nullity == 1


# --------------------------------------------------------------------------
# matrix substitution
# --------------------------------------------------------------------------

def _poly_matrix(terms: dict, n: int) -> FMatrix:
    """sum over (var, power) -> integer matrix of var^power * matrix."""
    rows = [[MPoly() for _ in range(n)] for _ in range(n)]
    for (var, k), mat in terms.items():
        mono = MPoly.var(var, k) if k else MPoly.const(1)
        for i in range(n):
            for j in range(n):
                if mat[i][j]:
                    rows[i][j] = rows[i][j] + mono * mat[i][j]
    return FMatrix(rows)


def _scaled(a, c: int) -> tuple:
    return tuple(tuple(c * x for x in r) for r in a)


def _sub(a, b) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _add(*mats) -> tuple:
    return tuple(tuple(sum(xs) for xs in zip(*rows)) for rows in zip(*mats))


def _dot(a: list, b: list) -> RatFun:
    # a in u only, b in v only: each product is already reduced
    terms = [RatFun(x.num * y.num, x.den * y.den, _reduced=True)
             for x, y in zip(a, b) if not x.is_zero() and not y.is_zero()]
    return separable_sum(terms)


@lru_cache(maxsize=None)
def stratum_series_mckay(gid: GroupId, rho: CharId) -> RatFun:
    """(trivial, trivial) entry of the invariant series of S^k V (x) S^l Lambda^2 V under Gamma(rho).

    The u-factors and v-factors commute (everything lives in the commutative
    ring R(Gamma)), so the entry is evaluated as a row vector through the
    u-only factors dotted with a column vector through the v-only factors.
    """
    m = mckay_model(gid)
    n = m.size
    I = imat_identity(n)
    N = m.N
    P = m.perm(rho)
    Pt = imat_transpose(P)
    N2 = imat_mul(N, N)
    N2m = _sub(N2, _scaled(I, 2))

    num = _poly_matrix({("u", 0): I, ("u", 2): _add(N2, P, Pt), ("u", 4): I}, n)
    du1 = _poly_matrix({("u", 0): I, ("u", 2): _scaled(imat_mul(N2m, P), -1), ("u", 4): imat_mul(P, P)}, n)
    du2 = _poly_matrix({("u", 0): I, ("u", 2): _scaled(imat_mul(N2m, Pt), -1), ("u", 4): imat_mul(Pt, Pt)}, n)
    dv1 = _poly_matrix({("v", 0): I, ("v", 1): _scaled(N2m, -1), ("v", 2): I}, n)
    dv2 = _poly_matrix({("v", 0): I, ("v", 1): _scaled(P, -1)}, n)
    dv4 = _poly_matrix({("v", 0): I, ("v", 1): _scaled(Pt, -1)}, n)

    row = list(num.rows[0])
    for d in (du1, du2):
        row = fmatrix_inverse(d).row_times(row)
    col = [RatFun(int(i == 0)) for i in range(n)]
    for d in (dv4, dv2, dv1):
        col = fmatrix_inverse(d).times_col(col)
    one_minus_v = MPoly.const(1) - MPoly.var("v")
    col = [RatFun(c.num, c.den * one_minus_v ** 2, _reduced=True) if not c.is_zero() else c for c in col]
    return _dot(row, col)


@lru_cache(maxsize=None)
def cyclic_genus1_series(n: int) -> RatFun:
    """Sum_k u^k dim (S^k C^2)^{C_n}: trivial entry of (I - uN + u^2 I)^-1 on the cyclic McKay graph."""
    gid = GroupId("C", n)
    m = mckay_model(gid)
    I = imat_identity(m.size)
    d = _poly_matrix({("u", 0): I, ("u", 1): _scaled(m.N, -1), ("u", 2): I}, m.size)
    return fmatrix_inverse(d)[0, 0]


def cyclic_genus1_closed_form(n: int) -> RatFun:
    u = MPoly.var("u")
    one = MPoly.const(1)
    return RatFun(one + u ** n, (one - u ** 2) * (one - u ** n))
