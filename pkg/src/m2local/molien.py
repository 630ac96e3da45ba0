"""Brute-force invariant series by averaging over Gamma(rho).

An element (gamma, w) of Gamma(rho) acts on the genus-2 first cohomology with
eigenvalues w*lam, w/lam, lam/w, 1/(w*lam) where lam is an eigenvalue of gamma.
Each term is a product of geometric series expanded to the cutoff with
coefficients in Q(zeta_120); the average has rational integer coefficients.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cyclo import Cyclo, N, root_of_unity
from .exact import SeriesBox
from .groups import CharId, GroupId, build_group, cyclic, extended_elements


class OracleError(ArithmeticError):
    pass


@dataclass(frozen=True)
class MolienTerm:
    lam_exp: int
    w_exp: int

    @property
    def lam(self) -> Cyclo:
        return root_of_unity(self.lam_exp)

    @property
    def w(self) -> Cyclo:
        return root_of_unity(self.w_exp)

    def u_exponents(self) -> tuple:
        e, f = self.lam_exp, self.w_exp
        return tuple(sorted(x % N for x in (f + e, f - e, e - f, -f - e)))

    def v_exponents(self) -> tuple:
        e, f = self.lam_exp, self.w_exp
        return tuple(sorted(x % N for x in (2 * f, -2 * f, 2 * e, -2 * e, 0, 0)))


def molien_terms(gid: GroupId, rho: CharId, invert: bool = False) -> list:
    """One MolienTerm per element of Gamma(rho); ``invert`` uses 1/lam instead of lam."""
    model = build_group(gid)
    sign = -1 if invert else 1
    return [MolienTerm(sign * model.eigen_exps[x.gamma] % N, x.w_exp)
            for x in extended_elements(gid, rho)]


def complete_series(exps, cutoff: int) -> list:
    """Coefficients of prod_a 1/(1 - t zeta^a) up to t^cutoff."""
    s = [Cyclo.rational(1)] + [Cyclo.rational(0)] * cutoff
    for a in exps:
        for k in range(1, cutoff + 1):
            s[k] = s[k] + s[k - 1].mul_root(a)
    return s


def _class_contribution(args) -> list:
    v_exps, u_keys, max_u, max_v = args
    useries = [Cyclo.rational(0)] * (max_u + 1)
    for key, mult in u_keys:
        for k, c in enumerate(complete_series(key, max_u)):
            useries[k] = useries[k] + c * mult
    vseries = complete_series(v_exps, max_v)
    return [[useries[i] * vseries[j] for j in range(max_v + 1)] for i in range(max_u + 1)]


def _average(total, count: int) -> list:
    out = []
    for row in total:
        r = []
        for c in row:
            if not c.is_rational():
                raise OracleError("irrational coefficient after averaging")
            q = c.to_fraction() / count
            if q.denominator != 1 or q < 0:
                raise OracleError(f"coefficient {q} is not a non-negative integer")
            r.append(q)
        out.append(r)
    return out


def molien_series_g2(gid: GroupId, rho: CharId, max_u: int, max_v: int,
                     jobs: int = 1, invert: bool = False) -> SeriesBox:
    if max_u < 0 or max_v < 0:
        raise ValueError("cutoffs must be non-negative")
    terms = molien_terms(gid, rho, invert)
    # terms with the same v-eigenvalues share the v-series; sum their u-series first
    classes: dict = defaultdict(lambda: defaultdict(int))
    for t in terms:
        classes[t.v_exponents()][t.u_exponents()] += 1
    work = [(vk, sorted(uk.items()), max_u, max_v) for vk, uk in sorted(classes.items())]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_class_contribution, work))
    else:
        parts = [_class_contribution(w) for w in work]
    total = [[Cyclo.rational(0)] * (max_v + 1) for _ in range(max_u + 1)]
    for part in parts:
        for i in range(max_u + 1):
            for j in range(max_v + 1):
                if not part[i][j].is_zero():
                    total[i][j] = total[i][j] + part[i][j]
    return SeriesBox(_average(total, len(terms)), max_u, max_v)


def molien_series_g1(n: int, max_u: int) -> SeriesBox:
    """Truncated sum_k u^k dim (S^k C^2)^{C_n} by averaging over C_n."""
    model = build_group(cyclic(n))
    total = [Cyclo.rational(0)] * (max_u + 1)
    for e in model.eigen_exps:
        for k, c in enumerate(complete_series((e, -e % N), max_u)):
            total[k] = total[k] + c
    coeffs = _average([[c] for c in total], model.order)
    return SeriesBox(coeffs, max_u, 0)

