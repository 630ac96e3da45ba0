import pytest

from m2local.cyclo import Cyclo, root_of_unity, zeta
from m2local.groups import (
    CHI0, CHI_MINUS, CHI_PLUS, GROUP_NAMES, MINUS_I, OCT_CHI, TRIVIAL, GroupError, GroupId,
    build_group, char_value, characters, extended_elements, is_even, parse_char, power,
)
from m2local.strata import STRATA

ORDERS = {"c2": 2, "c4": 4, "c6": 6, "c10": 10, "q8": 8, "q12": 12, "q24": 24, "t": 24, "o": 48, "i": 120}


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_orders(name):
    gid = GroupId.parse(name)
    assert gid.order == ORDERS[name]
    assert build_group(gid).order == ORDERS[name]


def test_order_formula():
    for name in ("q8", "q12", "q24", "t", "o", "i"):
        p, q, r = GroupId.parse(name).pqr
        assert 4 / (1 / p + 1 / q + 1 / r - 1) == pytest.approx(ORDERS[name])


def test_cyclic_diagonal():
    m = build_group(GroupId.parse("c10"))
    assert all(g.b.is_zero() and g.c.is_zero() for g in m.elements)


@pytest.mark.parametrize("name", ["q8", "q12", "q24", "t", "o", "i"])
def test_presentation(name):
    gid = GroupId.parse(name)
    m = build_group(gid)
    S, T, U = (m.elements[m.generators[k]] for k in "STU")
    # T, O, I satisfy the relations with U^-1 as the third generator (same group)
    assert m.presentation_u == ("U" if gid.family == "Q" else "U^-1")
    if m.presentation_u == "U^-1":
        U = U.inverse()
    p, q, r = gid.pqr
    assert S ** p == MINUS_I and T ** q == MINUS_I and U ** r == MINUS_I
    assert S @ T @ U == MINUS_I


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_closed_and_contains_minus_identity(name):
    gid = GroupId.parse(name)
    m = build_group(gid)
    elems = set(m.elements)
    for g in m.elements:
        assert g.inverse() in elems
    for g in m.elements[:12]:
        for h in m.elements:
            assert g @ h in elems
    assert (m.minus_identity() is not None) == (gid.order % 2 == 0)


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_characters_multiplicative(name):
    gid = GroupId.parse(name)
    m = build_group(gid)
    for chi in characters(gid):
        for a in range(m.order):
            for b in range(0, m.order, 3):
                ab = m.index_of(m.elements[a] @ m.elements[b])
                assert char_value(gid, chi, ab) == char_value(gid, chi, a) * char_value(gid, chi, b)


def test_trivial_character():
    gid = GroupId.parse("o")
    assert all(char_value(gid, TRIVIAL, g) == Cyclo.rational(1) for g in range(48))


def test_q8_chi0_at_T():
    gid = GroupId.parse("q8")
    m = build_group(gid)
    assert char_value(gid, CHI0, m.generators["T"]) == Cyclo.rational(-1)


def test_c10_chi6_at_T():
    gid = GroupId.parse("c10")
    m = build_group(gid)
    assert char_value(gid, power(6), m.generators["T"]) == zeta(10) ** 6


@pytest.mark.parametrize("name", ["q8", "q12", "q24"])
def test_quaternionic_generator_values(name):
    gid = GroupId.parse(name)
    n = gid.n // 4
    m = build_group(gid)
    S, T, U = (m.generators[k] for k in "STU")
    i = zeta(4)
    assert char_value(gid, CHI_PLUS, S) == Cyclo.rational(-1)
    assert char_value(gid, CHI_PLUS, T) == i ** n
    assert char_value(gid, CHI_PLUS, U) == -(i ** n)


def test_oct_chi_on_generators():
    gid = GroupId.parse("o")
    m = build_group(gid)
    assert char_value(gid, OCT_CHI, m.generators["S"]) == Cyclo.rational(-1)
    assert char_value(gid, OCT_CHI, m.generators["U"]) == Cyclo.rational(-1)


@pytest.mark.parametrize("name", ["q8", "q12", "q24"])
def test_chi0_times_chiplus(name):
    gid = GroupId.parse(name)
    for g in range(gid.order):
        assert char_value(gid, CHI0, g) * char_value(gid, CHI_PLUS, g) == char_value(gid, CHI_MINUS, g)


def test_strata_characters_even():
    for s in STRATA:
        assert is_even(s.group, s.rho)
        m = build_group(s.group)
        assert char_value(s.group, s.rho, m.minus_identity()) == Cyclo.rational(1)


def test_extended_elements():
    ext = extended_elements(GroupId.parse("c2"), TRIVIAL)
    assert sorted((x.gamma, x.w_exp) for x in ext) == [(0, 0), (0, 60), (1, 0), (1, 60)]
    assert len(extended_elements(GroupId.parse("c4"), power(2))) == 8
    ext = extended_elements(GroupId.parse("o"), OCT_CHI)
    assert len(ext) == 96
    for x in ext:
        assert x.w * x.w == char_value(GroupId.parse("o"), OCT_CHI, x.gamma)
        assert x.w == root_of_unity(x.w_exp)


def test_odd_character_rejected():
    with pytest.raises(GroupError):
        extended_elements(GroupId.parse("c4"), power(1))


def test_names():
    with pytest.raises(GroupError, match="c2 c4 c6 c10 q8 q12 q24 t o i"):
        GroupId.parse("d7")
    with pytest.raises(GroupError, match="chi0"):
        parse_char(GroupId.parse("q8"), "chi^3")
    assert parse_char(GroupId.parse("o"), "chi") == OCT_CHI
    assert parse_char(GroupId.parse("c10"), "chi^6") == power(6)
