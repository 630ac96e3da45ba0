import pytest
from hypothesis import given, strategies as st

from m2local.exact import (
    DivisionByZeroPolynomial, FMatrix, MPoly, NotExpandable, RatFun, SingularMatrixError,
    format_ratfun, fmatrix_inverse, mpoly_gcd, parse_ratfun, ratfun_equal,
    ratfun_normalize, ratfun_to_json, separable_sum, series_expand,
)

u, v = MPoly.var("u"), MPoly.var("v")
one = MPoly.const(1)


def test_normalize_cancels_common_factor():
    assert ratfun_normalize(u ** 2 - 1, u - 1) == RatFun(u + 1)
    f = ratfun_normalize(u ** 2 - 1, u - 1)
    assert f.den == one and f.num == u + 1


def test_zero_numerator_canonical():
    f = ratfun_normalize(MPoly(), one - v)
    assert f.num.is_zero() and f.den == one


def test_f1_roundtrip():
    q = 1 - u ** 2 - 2 * u ** 4 - u ** 6 + u ** 8
    d = (one - u ** 4) * (one - u ** 6)
    f = ratfun_normalize(d * q, d)
    assert f.den == one and f.num == q


def test_zero_denominator():
    with pytest.raises(DivisionByZeroPolynomial, match="division by zero polynomial"):
        RatFun(u, MPoly())


def test_scaling_invariance():
    c = (u - v) * 3 + 7
    assert RatFun(u * c, (one - v) * c) == RatFun(u, one - v)
    # the normalized denominator is independent of the representative
    assert RatFun(u * c, (one - v) * c).den == RatFun(u, one - v).den


def test_geometric_series():
    box = series_expand(RatFun(one, one - u ** 2), 4, 0)
    assert [box[i, 0] for i in range(5)] == [1, 0, 1, 0, 1]


def test_c2_row_expansion():
    f = RatFun(u ** 4 + 6 * u ** 2 + 1, (one - u ** 2) ** 4 * (one - v) ** 6)
    assert series_expand(f, 2, 0)[2, 0] == 10


def test_not_expandable():
    with pytest.raises(NotExpandable, match="not expandable at origin"):
        series_expand(RatFun(one, u), 3, 3)


def test_series_times_denominator_gives_numerator():
    num = 1 + 3 * u - v ** 2 * u
    den = (one - u - v) * (one + 2 * u ** 2)
    f = RatFun(num, den)
    box = series_expand(f, 6, 6)
    prod_terms = {}
    for (i, j), c in ((e[:2], c) for e, c in f.den.terms.items()):
        for a in range(7):
            for b in range(7):
                if a + i <= 6 and b + j <= 6:
                    prod_terms[(a + i, b + j)] = prod_terms.get((a + i, b + j), 0) + c * box[a, b]
    want = {e[:2]: c for e, c in f.num.terms.items()}
    for key, c in prod_terms.items():
        assert c == want.get(key, 0)


def test_fmatrix_identity_inverse():
    I = FMatrix.identity(3)
    inv = fmatrix_inverse(I)
    for i in range(3):
        for j in range(3):
            assert inv[i, j] == RatFun(int(i == j))


def test_fmatrix_one_by_one():
    inv = fmatrix_inverse(FMatrix([[RatFun(one - v)]]))
    assert inv[0, 0] == RatFun(one, one - v)


def test_fmatrix_c2_factor():
    N = [[0, 2], [2, 0]]
    N2m = [[sum(N[i][k] * N[k][j] for k in range(2)) - 2 * (i == j) for j in range(2)] for i in range(2)]
    M = FMatrix([[RatFun(int(i == j) - u ** 2 * N2m[i][j] + u ** 4 * int(i == j)) for j in range(2)]
                 for i in range(2)])
    P = M @ fmatrix_inverse(M)
    for i in range(2):
        for j in range(2):
            assert P[i, j] == RatFun(int(i == j))


def test_singular_matrix():
    M = FMatrix([[RatFun(u), RatFun(u)], [RatFun(v), RatFun(v)]])
    with pytest.raises(SingularMatrixError):
        fmatrix_inverse(M)


def test_canonical_text():
    f = RatFun(1 - u ** 2 - 2 * u ** 4 - u ** 6 + u ** 8, (one - u ** 4) * (one - u ** 6))
    assert format_ratfun(f) == "(1-u^2-2*u^4-u^6+u^8)/((1-u^4)*(1-u^6))"
    assert ratfun_to_json(f)["den"] == "(1-u^4)*(1-u^6)"
    assert parse_ratfun(format_ratfun(f)) == f


def test_gcd():
    a = (u - v) * (u + 2)
    b = (u - v) * (v + 3)
    g = mpoly_gcd(a, b)
    assert g.divides(a) and g.divides(b) and g.degree() == 1


def test_separable_sum_matches_plain_sum():
    fs = [RatFun(u + v, (one - u) * (one - v ** 2)), RatFun(one, (one - u ** 2) * (one - v)),
          RatFun(u * v, (one - u) ** 2)]
    acc = RatFun(MPoly())
    for f in fs:
        acc = acc + f
    assert separable_sum(fs) == acc


# ---- property tests ----

small = st.integers(-3, 3)
monomial = st.tuples(st.integers(0, 2), st.integers(0, 2))


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(monomial, small, max_size=4))
    p = MPoly()
    for (a, b), c in terms.items():
        p = p + u ** a * v ** b * c
    return p


@st.composite
def series_ratfuns(draw):
    # denominators with unit constant term so the series exists
    d = draw(polys())
    den = one + u * d
    return RatFun(draw(polys()), den)


@given(polys(), polys(), polys())
def test_mpoly_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@given(series_ratfuns(), series_ratfuns(), series_ratfuns())
def test_ratfun_ring_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert ratfun_equal(f * g, g * f)


@given(series_ratfuns(), series_ratfuns())
def test_series_additive(f, g):
    lhs = series_expand(f + g, 4, 3)
    a, b = series_expand(f, 4, 3), series_expand(g, 4, 3)
    assert all(lhs[i, j] == a[i, j] + b[i, j] for i in range(5) for j in range(4))


@given(polys())
def test_series_of_inverse(p):
    f = RatFun(one + u * p + v * p)
    a, b = series_expand(f, 4, 4), series_expand(f.inverse(), 4, 4)
    for i in range(5):
        for j in range(5):
            s = sum(a[k, l] * b[i - k, j - l] for k in range(i + 1) for l in range(j + 1))
            assert s == (1 if i == j == 0 else 0)
