from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcf_unify.poly import N, ONE, Poly, format_poly, low_degree_factors, poly_gcd


def test_construction_strips_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Poly([0, 0]).degree == -1
    assert Poly().is_zero()


def test_difference_of_squares():
    assert (N + 1) * (N - 1) == N**2 - 1


def test_divrem_exact():
    q, r = divmod(N**2 - 1, N - 1)
    assert q == N + 1
    assert r.is_zero()


def test_product_expansion():
    # (n^2+n+1)(n^2-n+1) = n^4+n^2+1, expanded by independent convolution
    p = (N**2 + N + 1) * (N**2 - N + 1)
    assert p == N**4 + N**2 + 1


def test_divide_by_zero_poly():
    with pytest.raises(ZeroDivisionError):
        divmod(N, Poly())


def test_gcd_fixtures():
    assert poly_gcd(N**2 - 1, N - 1) == N - 1
    assert poly_gcd(N**4 + N**2 + 1, N**2 + N + 1) == N**2 + N + 1
    assert poly_gcd(Poly(), Poly()).is_zero()
    assert poly_gcd(Poly(), 3 * N) == N  # gcd(p, 0) normalizes p


def test_content_and_primitive():
    p = Poly([Fraction(2, 3), Fraction(4, 3)])
    assert p.content() == Fraction(2, 3)
    assert p.primitive() == Poly([1, 2])
    assert (-2 * N).monic_primitive() == N


def test_shift_round_trip():
    p = 3 * N**2 - N + 5
    assert p.shift(2).shift(-2) == p
    assert p.shift(1)(0) == p(1)


def test_format_round_trip():
    from pcf_unify.parsing import parse_poly

    for p in [Poly([Fraction(1, 2), -3, 0, 2]), -N, Poly.const(-7), Poly()]:
        assert parse_poly(format_poly(p)) == p


def test_integer_roots():
    p = (N - 3) * (N + 5) * (2 * N - 1)
    assert p.integer_roots(10) == [-5, 3]


def test_low_degree_factors():
    p = (N - 2) ** 2 * (N**2 + 1)
    factors, rem = low_degree_factors(p)
    assert factors == [N - 2, N - 2]
    assert rem == N**2 + 1


rationals = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4)


@st.composite
def polys(draw, max_degree=6):
    coeffs = draw(st.lists(rationals, max_size=max_degree + 1))
    return Poly(coeffs)


@given(polys(), polys())
@settings(max_examples=200, deadline=None)
def test_add_sub_round_trip(p, q):
    assert (p + q) - q == p


@given(polys(), polys(), polys())
@settings(max_examples=100, deadline=None)
def test_mul_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys(), polys())
@settings(max_examples=100, deadline=None)
def test_divmod_invariant(p, q):
    if q.is_zero():
        return
    quot, rem = divmod(p, q)
    assert quot * q + rem == p
    assert rem.degree < q.degree


@given(polys(max_degree=4), polys(max_degree=4), polys(max_degree=3))
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(p, q, m):
    g = poly_gcd(p * m, q * m)
    if not g.is_zero():
        assert g.divides(p * m)
        assert g.divides(q * m)
    if not (p.is_zero() and q.is_zero()) and not m.is_zero():
        assert g.degree >= m.degree  # common factor m must show up
