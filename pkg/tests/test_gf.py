import itertools
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from genusfield.errors import DegreeMismatch, FieldTooLarge, NotPrime, ReducibleModulus
from genusfield.gf import FqElem, arith, field_of_order, is_lth_power, make_field, power_class

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


def _fp_poly_has_root(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def test_prime_field():
    F = make_field(7)
    assert (F.p, F.n, F.q) == (7, 1, 7)


def test_f4_modulus_is_the_only_irreducible_quadratic():
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_f9_modulus_by_brute_force_scan():
    # a monic quadratic is irreducible iff it has no root; scan in lex order from the constant term
    candidates = [(c0, c1, 1) for c0, c1 in itertools.product(range(3), repeat=2)]
    oracle = next(m for m in candidates if not _fp_poly_has_root(m, 3))
    assert oracle == (1, 0, 1)  # u^2 + 1
    assert make_field(3, 2).modulus == oracle


def test_make_field_errors():
    with pytest.raises(NotPrime):
        make_field(6)
    with pytest.raises(DegreeMismatch):
        make_field(3, 0)
    with pytest.raises(DegreeMismatch):
        make_field(3, 2, (1, 0, 0, 1))
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, (1, 0, 1))  # (u+1)^2
    with pytest.raises(FieldTooLarge):
        make_field(2, 10)


def test_explicit_irreducible_modulus_accepted():
    F = make_field(3, 2, (2, 1, 1))  # u^2 + u + 2 has no root mod 3
    assert F.q == 9


def test_arith_examples():
    F = make_field(7)
    assert arith(F.elem(3), F.elem(5), "mul") == 1
    assert arith(F.elem(3), 3, "pow") == 6
    assert F.elem(3) * F.elem(3) * F.elem(3) == 6
    F4 = make_field(2, 2)
    u = F4.elem("u")
    assert str(u * u) == "u+1"


def test_division_by_zero():
    F = make_field(5)
    with pytest.raises(ZeroDivisionError):
        arith(F.elem(1), F.elem(0), "div")
    with pytest.raises(ZeroDivisionError):
        F.elem(0).inverse()


def test_cubes_in_f7():
    F = make_field(7)
    cubes = {pow(x, 3, 7) for x in range(1, 7)}
    assert cubes == {1, 6}
    for x in range(1, 7):
        assert is_lth_power(F.elem(x), 3) == (x in cubes)


def test_power_class_examples():
    F = make_field(7)
    # smallest primitive root mod 7 by order computation
    g0 = next(g for g in range(2, 7) if len({pow(g, k, 7) for k in range(6)}) == 6)
    assert g0 == 3 == F.generator
    assert power_class(F.elem(1), 3) == 0
    assert power_class(F.elem(3), 3) == 1
    assert power_class(F.elem(2), 3) == 2


def test_f9_canonical_generator_is_lex_smallest():
    F = make_field(3, 2)
    order = lambda a: next(k for k in range(1, 9) if F.pow(a, k) == 1)  # noqa: E731
    by_lex = sorted(range(1, 9), key=lambda a: F.coeffs(a))
    first = next(a for a in by_lex if order(a) == 8)
    assert F.generator == first
    assert F.coeffs(first) == (1, 1)  # 1 + u


def test_element_text_round_trip():
    F = make_field(3, 2)
    for a in F.elements():
        assert F.parse(F.format(a)) == a
    assert F.format(F.parse("u+2")) == "u+2"


def test_fqelem_is_immutable():
    F = make_field(5)
    x = F.elem(2)
    with pytest.raises(AttributeError):
        x.value = 3


@pytest.mark.parametrize("q", SMALL_Q)
def test_lth_power_law_exhaustive(q):
    F = field_of_order(q)
    for l in (2, 3, 5, 7):
        g = gcd(l, q - 1)
        powers = [a for a in range(1, q) if F.is_lth_power(a, l)]
        assert len(powers) == (q - 1) // g
        assert set(powers) == {F.pow(a, l) for a in range(1, q)}
        for a in range(1, q):
            assert F.is_lth_power(a, l) == (F.power_class(a, l) == 0)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_Q), st.sampled_from([2, 3, 5]), st.data())
def test_power_class_homomorphism(q, l, data):
    F = field_of_order(q)
    a = data.draw(st.integers(1, q - 1))
    b = data.draw(st.integers(1, q - 1))
    g = gcd(l, q - 1)
    assert F.power_class(F.mul(a, b), l) == (F.power_class(a, l) + F.power_class(b, l)) % g
    c = F.power_class(a, l)
    assert F.power_class(F.class_representative(c, l), l) == c


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SMALL_Q), st.data())
def test_field_axioms(q, data):
    F = field_of_order(q)
    x, y, z = (FqElem(F, data.draw(st.integers(0, q - 1))) for _ in range(3))
    assert x + y == y + x and x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0 and x + (-x) == 0
    if x:
        assert x * x.inverse() == 1
        assert (x / x) == 1
    e = data.draw(st.integers(0, 200))
    slow = FqElem(F, 1)
    for _ in range(e):
        slow = slow * x
    assert x**e == slow
