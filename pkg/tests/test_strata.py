import pytest

from m2local.exact import MPoly, RatFun, separable_sum, series_expand
from m2local.mckay import cyclic_genus1_series
from m2local.strata import (
    EULER_TABLE, STRATA, EulerTable, coefficient, euler_char, euler_sum, f1, f1_closed_form, f2,
    f2_subtotal, stratum_by_key, table1_corrected_ids, table1_rows, verify_table1,
)

u = MPoly.var("u")

EULER_VALUES = {(0, 0): 1, (2, 0): 0, (0, 1): 0, (4, 0): 0, (2, 1): -1, (0, 2): 0,
                (6, 0): -1, (4, 1): -1, (2, 2): -1, (0, 3): -3}


def test_strata_data():
    got = [(s.group.name, s.rho.name, s.euler) for s in STRATA]
    assert got == [("c2", "1", -1), ("c4", "chi^2", 3), ("q8", "chi0", -2), ("q12", "chi0", -2),
                   ("q24", "chi+", 1), ("o", "chi", 1), ("c10", "chi^6", 1)]
    assert euler_sum() == 1


def test_f1():
    assert f1() == f1_closed_form()
    g = {n: cyclic_genus1_series(n) for n in (2, 4, 6)}
    assert f1() == -g[2] + g[4] + g[6]
    assert coefficient(f1(), 0) == 1
    assert coefficient(f1(), 2) == -1
    assert f1().den == ((1 - u ** 4) * (1 - u ** 6))


def test_f2_examples():
    f = f2()
    assert coefficient(f, 0, 0) == 1
    assert coefficient(f, 2, 1) == -1
    assert coefficient(f, 10, 0) == 1


@pytest.mark.parametrize("kl,value", sorted(EULER_VALUES.items()))
def test_euler_values(kl, value):
    assert euler_char(*kl) == value


def test_odd_k_vanishes():
    assert euler_char(3, 2) == 0
    assert all(euler_char(k, l) == 0 for k in range(1, 16, 2) for l in range(7))


def test_euler_table_grows():
    t = EulerTable(f1_closed_form() * 1)
    assert t(0, 0) == 1
    assert t.ensure(4, 0).max_u >= 4
    with pytest.raises(ValueError):
        t(-1, 0)


def test_f2_is_sum():
    # the subtotal plus the C10 stratum is f2
    from m2local.mckay import stratum_series_mckay
    c10 = STRATA[-1]
    assert separable_sum([f2_subtotal(), stratum_series_mckay(c10.group, c10.rho) * c10.euler]) == f2()


def test_table1_single_rows():
    rows = table1_rows()
    one = MPoly.const(1)
    v = MPoly.var("v")
    assert rows["c2:1"] == RatFun(u ** 4 + 6 * u ** 2 + 1, (one - u ** 2) ** 4 * (one - v) ** 6)


def test_table1_printed():
    checks = {c.ident: c for c in verify_table1()}
    for key in ("c2:1", "c4:chi^2", "q8:chi0", "q12:chi0", "q24:chi+", "c10:chi^6"):
        assert checks[key].ok, key
    assert checks["o:chi"].ok, f"o:chi first differs at {checks['o:chi'].first_difference}"
    assert checks["total"].ok, f"total first differs at {checks['total'].first_difference}"


def test_table1_corrected():
    assert sorted(table1_corrected_ids()) == ["o:chi", "total"]
    assert all(c.ok for c in verify_table1(corrected=True))


def test_printed_rows_contradict_euler_table():
    # the printed O row and Total row are incompatible with e2(2) = 0
    rows = table1_rows()
    o = series_expand(rows["o:chi"], 0, 1)[0, 1]
    total = series_expand(rows["total"], 0, 1)[0, 1] + series_expand(rows["c10:chi^6"], 0, 1)[0, 1]
    assert (o, total) == (0, 4)
    assert euler_char(0, 1) == 0


def test_stratum_by_key():
    assert stratum_by_key("o:chi").euler == 1
    with pytest.raises(KeyError):
        stratum_by_key("o:1")


def test_shared_table_identity():
    assert EULER_TABLE(0, 0) == 1
