"""Strata of the genus-1 and genus-2 moduli spaces and the generating functions f1, f2.

f2(u, v) = sum over strata of e(stratum) * Z(u, v) where Z is the invariant
series of the stratum's (Gamma, rho); its (k, l) coefficient is e2(1^k 2^l).
"""

from __future__ import annotations

import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .exact import MPoly, RatFun, SeriesBox, parse_mpoly, separable_sum, series_expand
from .groups import CHI0, CHI_PLUS, OCT_CHI, TRIVIAL, CharId, GroupId, power
from .mckay import cyclic_genus1_series, stratum_series_mckay


@dataclass(frozen=True)
class Stratum:
    group: GroupId
    rho: CharId
    euler: int
    normal_form: str

    @property
    def key(self) -> str:
        return f"{self.group.name}:{self.rho.name}"


STRATA = (
    Stratum(GroupId("C", 2), TRIVIAL, -1, "generic"),
    Stratum(GroupId("C", 4), power(2), 3, "c4_family"),
    Stratum(GroupId("Q", 8), CHI0, -2, "q8_family"),
    Stratum(GroupId("Q", 12), CHI0, -2, "q12_family"),
    Stratum(GroupId("Q", 24), CHI_PLUS, 1, "q24"),
    Stratum(GroupId("O"), OCT_CHI, 1, "o"),
    Stratum(GroupId("C", 10), power(6), 1, "c10"),
)

# genus one: (n, e) for the strata with automorphism group C_n
GENUS1_STRATA = ((2, -1), (4, 1), (6, 1))


def stratum_by_key(key: str) -> Stratum:
    for s in STRATA:
        if s.key == key:
            return s
    raise KeyError(f"unknown stratum {key!r}; valid: {' '.join(s.key for s in STRATA)}")


def _series(s: Stratum) -> RatFun:
    return stratum_series_mckay(s.group, s.rho)


def stratum_series(jobs: int = 1) -> dict:
    """key -> invariant series of every stratum (McKay route)."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_series, STRATA))
    else:
        values = [_series(s) for s in STRATA]
    return {s.key: v for s, v in zip(STRATA, values)}


def _weighted_sum(series: dict, strata) -> RatFun:
    return separable_sum([series[s.key] * s.euler for s in strata])


def f2_subtotal(jobs: int = 1) -> RatFun:
    """Sum over every stratum except the C10 one."""
    return _weighted_sum(stratum_series(jobs), STRATA[:-1])


_F2_LOCK = threading.Lock()
_F2: list = []


def f2(jobs: int = 1) -> RatFun:
    with _F2_LOCK:
        if not _F2:
            _F2.append(_weighted_sum(stratum_series(jobs), STRATA))
        return _F2[0]


def _one_minus(var: str, k: int) -> MPoly:
    return MPoly.const(1) - MPoly.var(var, k)


def f1_closed_form() -> RatFun:
    u = MPoly.var("u")
    num = 1 - u ** 2 - 2 * u ** 4 - u ** 6 + u ** 8
    return RatFun(num, _one_minus("u", 4) * _one_minus("u", 6))


@lru_cache(maxsize=None)
def f1() -> RatFun:
    return separable_sum([cyclic_genus1_series(n) * e for n, e in GENUS1_STRATA])


class EulerTable:
    """Lazily grown table of e2(1^k 2^l), the coefficients of f2.

    Growth happens under a lock; a filled box is never mutated, so readers of a
    box they already hold need no synchronization.
    """

    def __init__(self, f: RatFun | None = None):
        self._f = f
        self._box: SeriesBox | None = None
        self._lock = threading.Lock()

    def ensure(self, max_k: int, max_l: int) -> SeriesBox:
        box = self._box
        if box is not None and box.max_u >= max_k and box.max_v >= max_l:
            return box
        with self._lock:
            box = self._box
            if box is None or box.max_u < max_k or box.max_v < max_l:
                f = self._f if self._f is not None else f2()
                mk = max(max_k, box.max_u if box else 0)
                ml = max(max_l, box.max_v if box else 0)
                box = series_expand(f, mk, ml)
                self._box = box
            return box

    def __call__(self, k: int, l: int) -> int:
        if k < 0 or l < 0:
            raise ValueError("k and l must be non-negative")
        c = self.ensure(k, l)[k, l]
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral Euler characteristic at ({k}, {l})")
        return int(c)


EULER_TABLE = EulerTable()


def euler_char(k: int, l: int) -> int:
    """e2(1^k 2^l)."""
    return EULER_TABLE(k, l)


# --------------------------------------------------------------------------
# Table 1 fixtures
# --------------------------------------------------------------------------

def _read_fixture(name: str) -> dict:
    rows: dict = {}
    text = (resources.files("m2local") / "data" / name).read_text()
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        ident, r, s, t = (x.strip() for x in line.split(";"))
        rows.setdefault(ident, []).append((parse_mpoly(r), parse_mpoly(s), parse_mpoly(t)))
    return rows


def table1_chunks(corrected: bool = False) -> dict:
    rows = _read_fixture("table1.txt")
    if corrected:
        rows.update(_read_fixture("table1_corrections.txt"))
    return rows


def table1_rows(corrected: bool = False) -> dict:
    """id -> RatFun: each row's chunks r/(s t) summed."""
    return {k: separable_sum([RatFun(r, s * t) for r, s, t in chunks])
            for k, chunks in table1_chunks(corrected).items()}


def table1_corrected_ids() -> list:
    return list(_read_fixture("table1_corrections.txt"))


@dataclass(frozen=True)
class Table1Check:
    ident: str
    ok: bool
    first_difference: tuple | None


def verify_table1(corrected: bool = False, jobs: int = 1, cutoff=(16, 12)) -> list:
    """Compare computed stratum series and the six-stratum subtotal with the fixtures."""
    fixtures = table1_rows(corrected)
    series = stratum_series(jobs)
    computed = dict(series)
    computed["total"] = _weighted_sum(series, STRATA[:-1])
    out = []
    for ident in list(series) + ["total"]:
        want = fixtures[ident]
        got = computed[ident]
        ok = got == want
        diff = None
        if not ok:
            diff = series_expand(got, *cutoff).first_difference(series_expand(want, *cutoff))
        out.append(Table1Check(ident, ok, diff))
    return out


def euler_sum() -> int:
    return sum(s.euler for s in STRATA)


def coefficient(f: RatFun, k: int, l: int = 0) -> Fraction:
    return series_expand(f, k, l)[k, l]
