import pytest

from m2local.exact import MPoly, RatFun, series_expand
from m2local.groups import CHI0, CHI_MINUS, CHI_PLUS, GROUP_NAMES, TRIVIAL, GroupId, power
from m2local.mckay import (
    cartan_check, cyclic_genus1_closed_form, cyclic_genus1_series, imat_mul, mckay_model,
    stratum_series_mckay,
)
from m2local.molien import molien_series_g1
from m2local.strata import STRATA

u, v = MPoly.var("u"), MPoly.var("v")
one = MPoly.const(1)


def test_c2_model():
    m = mckay_model(GroupId.parse("c2"))
    assert m.N == ((0, 2), (2, 0))


def test_q8_model():
    m = mckay_model(GroupId.parse("q8"))
    assert m.size == 5
    v1 = m.labels.index("V[1]")
    assert [m.N[v1][j] for j in range(4)] == [1, 1, 1, 1]


def test_o_model():
    m = mckay_model(GroupId.parse("o"))
    assert m.size == 8
    assert m.dims == (1, 2, 3, 4, 3, 2, 1, 2)
    degrees = sorted(sum(r) for r in m.N)
    assert degrees == [1, 1, 1, 2, 2, 2, 2, 3]


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_cartan(name):
    m = mckay_model(GroupId.parse(name))
    assert cartan_check(m)
    assert sum(m.dims[i] ** 2 for i in range(m.size)) == m.group.order


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_n_p_commute(name):
    m = mckay_model(GroupId.parse(name))
    for chi, P in m.P.items():
        assert imat_mul(m.N, P) == imat_mul(P, m.N)
        assert all(sum(r) == 1 for r in P) and all(sum(c) == 1 for c in zip(*P))


@pytest.mark.parametrize("name", ["q8", "q12", "q24"])
def test_quaternionic_products(name):
    m = mckay_model(GroupId.parse(name))
    assert imat_mul(m.perm(CHI0), m.perm(CHI_PLUS)) == m.perm(CHI_MINUS)


def test_cartan_rejects_bad_graph():
    from dataclasses import replace
    m = mckay_model(GroupId.parse("c4"))
    bad = replace(m, N=((0, 2, 0, 1), (2, 0, 1, 0), (0, 1, 0, 1), (1, 0, 1, 0)))
    assert not cartan_check(bad)


def test_c2_series():
    f = stratum_series_mckay(GroupId.parse("c2"), TRIVIAL)
    assert f == RatFun(u ** 4 + 6 * u ** 2 + 1, (one - u ** 2) ** 4 * (one - v) ** 6)


def test_c4_series():
    f = stratum_series_mckay(GroupId.parse("c4"), power(2))
    num = (u ** 2 + 1) ** 2 * (v ** 4 + 6 * v ** 2 + 1) + 16 * u ** 2 * (v ** 3 + v)
    assert f == RatFun(num, (one - u ** 2) ** 4 * (one - v) ** 2 * (one - v ** 2) ** 4)


@pytest.mark.parametrize("s", STRATA, ids=lambda s: s.key)
def test_constant_term_and_nonnegative(s):
    box = series_expand(stratum_series_mckay(s.group, s.rho), 10, 6)
    assert box[0, 0] == 1
    assert all(c >= 0 and c.denominator == 1 for row in box.coefficients for c in row)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_genus1(n):
    g = cyclic_genus1_series(n)
    assert g == cyclic_genus1_closed_form(n)
    box = series_expand(g, 20, 0)
    oracle = molien_series_g1(n, 20)
    assert all(box[k, 0] == oracle[k, 0] for k in range(21))


def test_genus1_examples():
    assert cyclic_genus1_series(2) == RatFun(one + u ** 2, (one - u ** 2) ** 2)
    assert cyclic_genus1_series(4) == RatFun(one + u ** 4, (one - u ** 2) * (one - u ** 4))
    assert series_expand(cyclic_genus1_series(6), 0, 0)[0, 0] == 1
