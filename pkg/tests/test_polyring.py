import itertools

import pytest
from hypothesis import given, settings, strategies as st

from genusfield.errors import ConstantPolynomial, NotMonic, PolySyntaxError, UnknownCoefficient
from genusfield.gf import field_of_order, make_field
from genusfield.polyring import (
    Poly,
    factor,
    factor_monic,
    is_irreducible,
    monic_irreducibles,
    monic_polys,
    parse_poly,
    poly_arith,
    render_poly,
)

from conftest import poly

FIELDS = [2, 3, 4, 5, 7, 8, 9]


def _mobius(n):
    out, k, d = 1, n, 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            out = -out
        d += 1
    return -out if k > 1 else out


def _gauss_count(q, d):
    """Number of monic irreducibles of degree d over F_q."""
    return sum(_mobius(d // e) * q**e for e in range(1, d + 1) if d % e == 0) // d


def _no_small_divisor(a: Poly) -> bool:
    """Brute-force irreducibility: no monic divisor of degree 1..deg/2."""
    for d in range(1, a.degree // 2 + 1):
        for b in monic_polys(a.field, d):
            if (a % b).is_zero():
                return False
    return True


def test_arith_examples(F7):
    assert poly(F7, "(T+1)*(T+2)") == poly(F7, "T^2+3*T+2")
    assert poly_arith(poly(F7, "T^2-1"), poly(F7, "T-1"), "gcd") == poly(F7, "T+6")
    q, r = poly_arith(poly(F7, "T^3"), poly(F7, "T^2+1"), "divrem")
    assert (q, r) == (poly(F7, "T"), poly(F7, "6*T"))


def test_division_by_zero(F7):
    with pytest.raises(ZeroDivisionError):
        divmod(poly(F7, "T"), Poly.zero(F7))


def test_factor_difference_of_squares(F7):
    fac = factor_monic(poly(F7, "T^2-1"))
    # sorted by (degree, coefficients from the constant term up): T+1 before T+6
    assert [(str(p), e) for p, e in fac.factors] == [("T+1", 1), ("T+6", 1)]


def test_cubic_without_roots_is_irreducible(F7):
    f = poly(F7, "T^3+T+1")
    assert all(f(x) != 0 for x in range(7))
    assert [(str(p), e) for p, e in factor_monic(f).factors] == [("T^3+T+1", 1)]


def test_f2_square(F7):
    F2 = make_field(2)
    fac = factor_monic(poly(F2, "T^4+T^2+1"))
    assert [(str(p), e) for p, e in fac.factors] == [("T^2+T+1", 2)]
    assert poly(F2, "(T^2+T+1)^2") == poly(F2, "T^4+T^2+1")


def test_factor_errors(F7):
    with pytest.raises(NotMonic):
        factor_monic(poly(F7, "2*T+1"))
    with pytest.raises(ConstantPolynomial):
        factor_monic(poly(F7, "1"))
    fac = factor(poly(F7, "3*T^2-3"))
    assert fac.unit == 3 and len(fac.factors) == 2


def test_parse_examples(F7):
    assert parse_poly(F7, "T^3+T+1").coeffs == (1, 1, 0, 1)
    assert parse_poly(F7, "6*T").coeffs == (0, 6)
    assert parse_poly(F7, " 6 * T ") == parse_poly(F7, "6*T")
    F4 = make_field(2, 2)
    p = parse_poly(F4, "(u+1)*T^2+u")
    assert p.degree == 2
    assert p.coeffs[2] == F4.parse("u+1") and p.coeffs[0] == F4.parse("u")
    assert render_poly(p) == "(u+1)*T^2+u"


def test_parse_errors(F7):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(F7, "T^2+*T")
    assert info.value.position == 4
    with pytest.raises(UnknownCoefficient):
        parse_poly(F7, "u*T")  # u is only a coefficient symbol for n > 1
    with pytest.raises(UnknownCoefficient):
        parse_poly(F7, "x+1")


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_irreducible_counts_match_gauss_formula(q):
    F = field_of_order(q)
    for d in range(1, 5 if q <= 4 else 4):
        assert len(monic_irreducibles(F, d)) == _gauss_count(q, d)


def test_monic_polys_are_in_degree_lex_order():
    F = make_field(3, 2)
    ps = list(monic_polys(F, 2))
    assert ps == sorted(ps, key=Poly.sort_key)
    assert len(ps) == 81


def poly_strategy(q, max_deg):
    return st.lists(st.integers(0, q - 1), min_size=1, max_size=max_deg + 1)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_factorization_properties(q, data):
    F = field_of_order(q)
    max_deg = 7 if q <= 5 else 5
    coeffs = data.draw(poly_strategy(q, max_deg))
    a = Poly(F, coeffs)
    if a.is_zero():
        return
    fac = factor(a)
    assert fac.expand(F) == a
    for p, e in fac.factors:
        assert p.is_monic() and e >= 1
        assert is_irreducible(p)
        if p.degree <= 4:
            assert _no_small_divisor(p)
    keys = [p.sort_key() for p, _ in fac.factors]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    seed = data.draw(st.integers(0, 2**32))
    assert factor(a, seed) == fac


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_render_parse_round_trip(q, data):
    F = field_of_order(q)
    a = Poly(F, data.draw(poly_strategy(q, 6)))
    assert parse_poly(F, render_poly(a)) == a


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_ring_axioms(q, data):
    F = field_of_order(q)
    a, b, c = (Poly(F, data.draw(poly_strategy(q, 4))) for _ in range(3))
    assert a + b == b + a and a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not b.is_zero():
        quo, rem = divmod(a, b)
        assert quo * b + rem == a
        assert rem.is_zero() or rem.degree < b.degree
        g = poly_arith(a, b, "gcd")
        assert g.is_monic() and (a % g).is_zero() and (b % g).is_zero()


def test_is_irreducible_agrees_with_brute_force():
    F = make_field(3)
    for d in range(1, 5):
        for a in monic_polys(F, d):
            assert is_irreducible(a) == _no_small_divisor(a)


def test_small_fields_exhaustive_round_trip():
    F = make_field(2, 2)
    for coeffs in itertools.product(range(4), repeat=3):
        a = Poly(F, coeffs)
        if not a.is_zero():
            assert factor(a).expand(F) == a
