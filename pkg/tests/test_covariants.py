from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from m2local.covariants import (
    BForm, FormError, coord_X, coord_Y, covariant_suite, delta0, delta1, delta2, discriminant6,
    displayed_prefactor_transvectant, normal_form, transvectant, verify_covariants,
)
from m2local.exact import MPoly

x, y = MPoly.var("x"), MPoly.var("y")
a, b = MPoly.var("alpha"), MPoly.var("beta")
xi, eta = MPoly.var("u"), MPoly.var("v")  # second copy of the form variables


def omega_transvectant(f: BForm, g: BForm, p: int) -> BForm:
    """Cayley omega process on f(x,y) g(xi,eta), then xi -> x, eta -> y."""
    h = f.poly * g.poly.subs({"x": xi, "y": eta})
    for _ in range(p):
        h = h.diff("x").diff("v") - h.diff("y").diff("u")
    h = h.subs({"u": x, "v": y})
    k, l = f.degree, g.degree
    c = Fraction(factorial(k - p) * factorial(l - p), factorial(k) * factorial(l))
    return BForm(k + l - 2 * p, h * c)


def test_order_zero_is_product():
    f, g = BForm.of(x ** 2 + 3 * x * y), BForm.of(y ** 3 - x ** 3)
    assert transvectant(f, g, 0).poly == f.poly * g.poly


def test_x2_y2():
    assert transvectant(BForm.of(x ** 2), BForm.of(y ** 2), 2).scalar() == MPoly.const(1)


def test_sextic_anchor():
    f = BForm.of(x ** 6 + y ** 6)
    assert transvectant(f, f, 6).scalar() == MPoly.const(2)
    assert displayed_prefactor_transvectant(f, f, 6).scalar() == MPoly.const(Fraction(120, 77))


def test_order_too_large():
    with pytest.raises(FormError):
        transvectant(BForm.of(x ** 2), BForm.of(y ** 3), 3)


@st.composite
def forms(draw, max_degree=6):
    d = draw(st.integers(0, max_degree))
    cs = draw(st.lists(st.integers(-4, 4), min_size=d + 1, max_size=d + 1))
    p = MPoly()
    for i, c in enumerate(cs):
        p = p + x ** i * y ** (d - i) * c
    return BForm(d, p)


@settings(max_examples=100)
@given(forms(), forms(), st.integers(0, 6))
def test_transvectant_laws(f, g, p):
    if p > min(f.degree, g.degree):
        return
    fg = transvectant(f, g, p)
    gf = transvectant(g, f, p)
    assert fg.degree == f.degree + g.degree - 2 * p
    assert (fg.poly - gf.poly * (-1) ** p).is_zero()
    assert fg.poly == omega_transvectant(f, g, p).poly


@settings(max_examples=30)
@given(forms(4), forms(4), forms(4), st.integers(0, 4), st.integers(-3, 3))
def test_bilinear(f, g, h, p, c):
    if g.degree != h.degree or p > min(f.degree, g.degree):
        return
    lhs = transvectant(f, g + h * c, p).poly
    rhs = transvectant(f, g, p).poly + transvectant(f, h, p).poly * c
    assert lhs == rhs


def test_suite_degrees():
    f = normal_form("c4_family")
    s = covariant_suite(f)
    assert (s.i.degree, s.l.degree, s.m.degree, s.n.degree) == (4, 2, 2, 2)
    # degrees in the coefficients of f: scale f by t and read off the power of t
    t = MPoly.var("u")
    st_ = covariant_suite(BForm(6, f.poly * t))
    for form, deg in ((st_.i, 2), (st_.l, 3), (st_.m, 5), (st_.n, 7)):
        assert {e[0] for e in form.poly.terms} == {deg}


def test_repeated_root_degrees():
    quartic = x ** 4 + 2 * x ** 3 * y - x * y ** 3 + 5 * y ** 4
    s = covariant_suite(BForm.of((x - y) ** 2 * quartic))
    assert (s.i.degree, s.l.degree, s.m.degree, s.n.degree) == (4, 2, 2, 2)


def test_R_zero_on_family():
    assert covariant_suite(normal_form("c4_family")).R.is_zero()
    assert covariant_suite(BForm.of(x ** 6 + y ** 6)).R.is_zero()


def test_family_identities():
    f = normal_form("c4_family")
    X, Y = coord_X(), coord_Y()
    assert transvectant(f, f, 6).scalar() == Y * Fraction(2, 15) + 2
    assert discriminant6(f) == X ** 2 * -64
    assert (a ** 3 - b ** 3) ** 2 * 16 == delta2(X, Y)


def test_discriminant_calibration():
    assert discriminant6(BForm.of(x ** 6 + y ** 6)) == MPoly.const(-46656)


def test_special_discriminants():
    q8 = discriminant6(normal_form("q8_family"))
    assert q8 == (a ** 2 - 4) ** 2 * 16
    q12 = discriminant6(normal_form("q12_family"))
    assert q12 == (a ** 2 + 4) ** 3 * 729


def test_points():
    for px, py, divs in ((0, 9, (delta0, delta1, delta2)), (-2048, 25, (delta1, delta2)),
                         (-27648, 225, (delta1, delta2)), (0, 1, (delta0, delta2))):
        for d in divs:
            assert d(Fraction(px), Fraction(py)) == 0
    assert -2048 + 128 * (25 - 9) == 0


def test_repeated_root_has_zero_discriminant():
    assert discriminant6(BForm.of((x - y) ** 2 * (x ** 4 + y ** 4))).is_zero()


@settings(max_examples=15)
@given(st.lists(st.integers(-3, 3), min_size=7, max_size=7),
       st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)))
def test_discriminant_weight(cs, m):
    f = MPoly()
    for i, c in enumerate(cs):
        f = f + x ** i * y ** (6 - i) * c
    if f.is_zero():
        return
    p, q, r, s = m
    g = f.subs({"x": x * p + y * q, "y": x * r + y * s})
    det = p * s - q * r
    if g.is_zero():
        return
    assert discriminant6(BForm(6, g)) == discriminant6(BForm(6, f)) * det ** 30


def test_discriminant_scaling_exponent():
    f = BForm.of(x ** 6 + 3 * x ** 5 * y - x ** 2 * y ** 4 + 2 * y ** 6)
    d0 = discriminant6(f).constant_term()
    d1 = discriminant6(f.subs({"x": x * 2})).constant_term()
    ratio = d1 / d0
    e = 0
    while ratio % 2 == 0 and ratio > 1:
        ratio /= 2
        e += 1
    assert ratio == 1 and e == 30


def test_report():
    rep = verify_covariants()
    assert rep.ok
    assert all(e.ok for e in rep.entries if e.gating)
    assert verify_covariants().as_dict() == rep.as_dict()
