import pytest
from hypothesis import given, settings, strategies as st

from genusfield.characters import build_nonkummer_spec
from genusfield.errors import AllDegreesDivisible
from genusfield.extension import build_spec, contains, join, span, spec_lattice, support_from_primes
from genusfield.genus import (
    bezout,
    build_E,
    build_E_gex,
    build_M,
    choose_Pr_and_bezout,
    constant_degree,
    genus_field,
    genus_field_nonkummer,
    support_of_lattice,
)
from genusfield.gf import make_field
from genusfield.localdata import finite_ramification_index, lattice_infinite_invariants
from genusfield.polyring import Poly
from genusfield.serialize import report_from_dict

from conftest import kummer, poly
from strategies import f7_specs, invertible_matrices

F2 = make_field(2)


def lat(F, l, *radicals):
    """Lattice spanned by radicals given as (class, {"P": e})."""
    return span(F, l, [(c, {poly(F, P): e for P, e in ex.items()}) for c, ex in radicals])


# -- auxiliary fields ------------------------------------------------------------------


def test_build_E_examples(F7):
    spec = kummer(F7, 3, [(6, "T")])
    assert build_E(spec).radical == lat(F7, 3, (0, {"T": 1})) == spec_lattice(spec)
    spec = kummer(F7, 3, [(3, "T")])
    E = build_E(spec).radical
    assert E == lat(F7, 3, (0, {"T": 1}))
    assert E != spec_lattice(spec)


def test_build_E_gex_examples(F7):
    sup = support_from_primes(F7, 3, [poly(F7, s) for s in ("T", "T+1", "T+2")])
    assert sup.s == 0
    assert build_E_gex(sup).radical == lat(F7, 3, (0, {"T": 1}), (0, {"T+1": 1}), (0, {"T+2": 1}))
    sup = support_from_primes(F7, 3, [poly(F7, "T^3+T+1")])
    assert build_E_gex(sup).radical == lat(F7, 3, (0, {"T^3+T+1": 1}))
    sup = support_from_primes(F7, 3, [poly(F7, "T^3+T+1"), poly(F7, "T")])
    minus_one = F7.power_class(6, 3)
    assert build_E_gex(sup).radical == lat(F7, 3, (0, {"T^3+T+1": 1}), (minus_one, {"T": 1}))
    F5 = make_field(5)
    sup = support_from_primes(F5, 2, [poly(F5, "T")])
    # -1 = 4 is a square in F_5 but T* = -T keeps its sign class
    assert build_E_gex(sup).radical == lat(F5, 2, (F5.power_class(4, 2), {"T": 1}))


def test_bezout_examples():
    assert bezout(3, 1) == (0, 1)
    assert bezout(3, 2) == (-1, 2)
    assert bezout(2, 3) == (-1, 1)
    for l in (2, 3, 5, 7):
        for d in range(1, 12):
            if d % l:
                a, b = bezout(l, d)
                assert a * l + b * d == 1 and 0 < b < l


def test_choose_Pr(F7):
    sup = support_from_primes(F7, 3, [poly(F7, s) for s in ("T", "T+1", "T+2")])
    Pr, a, b = choose_Pr_and_bezout(sup)
    assert (str(Pr), a, b) == ("T+2", 0, 1)
    sup = support_from_primes(F7, 3, [poly(F7, "T^3+T+1")])
    with pytest.raises(AllDegreesDivisible):
        choose_Pr_and_bezout(sup)


def test_build_M_examples(F7):
    sup = support_from_primes(F7, 3, [poly(F7, s) for s in ("T", "T+1", "T+2")])
    M = build_M(sup, 1).radical
    assert M == lat(F7, 3, (0, {"T": 1, "T+2": 2}), (0, {"T+1": 1, "T+2": 2}))
    assert M.rank == 2
    for _, D in M.radicals():
        assert D.degree % 3 == 0
    assert build_M(support_from_primes(F7, 3, [poly(F7, "T")]), 1).radical.rank == 0


# -- dispatch ---------------------------------------------------------------------------


def test_case_C2(F7):
    rep = genus_field(kummer(F7, 3, [(6, "T")]))
    K = lat(F7, 3, (0, {"T": 1}))
    assert rep.case == "C2"
    assert rep.K_ge.radical == rep.K_gex.radical == K
    assert rep.genus_degree == 1 and rep.m0 == 1


def test_case_C3(F7):
    rep = genus_field(kummer(F7, 3, [(6, "T^3+3*T^2+2*T")]))
    assert rep.case == "C3"
    assert rep.K_ge.radical == lat(F7, 3, (0, {"T": 1, "T+2": 2}), (0, {"T+1": 1, "T+2": 2}))
    assert rep.K_ge.text() == "k( ³√(T(T+2)²), ³√((T+1)(T+2)²) )"
    assert rep.genus_degree == 3
    assert rep.K_gex.radical == lat(F7, 3, (0, {"T": 1}), (0, {"T+1": 1}), (0, {"T+2": 1}))
    assert rep.extended_degree == 9
    assert (str(rep.chosen_Pr), rep.bezout) == ("T+2", (0, 1))


def test_case_C7(F7):
    rep = genus_field(kummer(F7, 3, [(3, "T")]))
    assert rep.case == "C7"
    assert rep.M.radical.rank == 0
    assert rep.K_ge.radical == spec_lattice(kummer(F7, 3, [(3, "T")]))
    assert rep.genus_degree == 1
    assert rep.K_gex.radical == lat(F7, 3, (0, {"T": 1}), (1, {"T": 1}))
    assert rep.K_gex.radical == lat(F7, 3, (1, {"T": 1}), (1, {}))  # K(cube root of 3)
    assert constant_degree(rep.K_gex) == 3
    assert constant_degree(rep.K_ge) == 1
    assert rep.m0 == 3


def test_remaining_cases(F7):
    assert genus_field(kummer(F7, 3, [(1, "T^3+T+1")])).case == "C1"
    rep = genus_field(kummer(F7, 3, [(3, "T^3+T+1")]))
    assert rep.case == "C4" and (rep.e_inf, rep.f_inf) == (1, 3)
    assert constant_degree(rep.K_ge) == 3
    assert genus_field(kummer(F7, 3, [(3, "T^3+T+1"), (1, "T^3+3*T^2+2*T")])).case == "C5"
    rep = genus_field(kummer(F7, 3, [(3, "T"), (1, "T+1")]))
    assert rep.case == "C6" and (rep.e_inf, rep.f_inf) == (3, 3)


def test_constant_degree_examples(F7):
    rep = genus_field(kummer(F7, 3, [(6, "T^3+3*T^2+2*T")]))
    assert constant_degree(rep.E_gex) == 1


def test_nonkummer_examples():
    P, Q = poly(F2, "T^2+T+1"), poly(F2, "T^4+T+1")
    rep = genus_field_nonkummer(build_nonkummer_spec(F2, 3, [P], [[1]]))
    assert rep.case == "NK_cyclotomic" and rep.genus_degree == 1
    assert [c.P for c in rep.K_ge.cyclotomic] == [P]
    rep = genus_field_nonkummer(build_nonkummer_spec(F2, 3, [P, Q], [[1], [1]]))
    assert rep.genus_degree == 3 and rep.K_ge == rep.K_gex
    rep = genus_field_nonkummer(build_nonkummer_spec(F2, 3, [P, Q], [[1, 0], [0, 1]]))
    assert rep.genus_degree == 1
    rep = genus_field_nonkummer(build_nonkummer_spec(F2, 3, [P, Q], [[1], [1]], twisted=True))
    assert rep.case == "NK_twisted" and rep.f_inf is None and rep.m0 is None
    assert rep.K_ge.constant_degree is None and rep.K_ge.with_K
    assert rep.e_inf == 1


def test_text_rendering(F7):
    rep = genus_field(kummer(F7, 3, [(3, "T")]))
    text = rep.render_text()
    assert "case: C7" in text
    assert "K_gex = k( ³√(T), ³√(3) )   [constant field F_{q^3}]" in text


# -- invariants over random specs ---------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(f7_specs())
def test_sandwich_and_genus_property(spec):
    rep = genus_field(spec)
    K, K_ge, K_gex = spec_lattice(spec), rep.K_ge.radical, rep.K_gex.radical
    assert contains(K_ge, K) and contains(K_gex, K_ge)
    for P in K_gex.support:
        assert finite_ramification_index(K_ge, P) == finite_ramification_index(K, P)
        assert finite_ramification_index(K_gex, P) == finite_ramification_index(K, P)
    inv, inv_ge = lattice_infinite_invariants(K), lattice_infinite_invariants(K_ge)
    assert (inv_ge.e_inf, inv_ge.f_inf) == (inv.e_inf, inv.f_inf)
    assert constant_degree(rep.K_ge) == rep.f_inf
    assert rep.genus_degree == 3 ** (K_ge.rank - spec.m)
    assert rep.m0 == (1 if K == build_E(spec).radical else 3)


@settings(max_examples=100, deadline=None)
@given(f7_specs())
def test_E_gex_idempotent(spec):
    E_gex = genus_field(spec).E_gex.radical
    again = build_E_gex(support_of_lattice(E_gex)).radical
    assert again == E_gex


@settings(max_examples=100, deadline=None)
@given(f7_specs(), st.data())
def test_basis_invariance_of_report(spec, data):
    F, l, m = spec.field, spec.l, spec.m
    A = data.draw(invertible_matrices(m, l))
    gens = []
    for row in A:
        gamma, D = 1, Poly.one(F)
        for a, g in zip(row, spec.generators):
            gamma = F.mul(gamma, F.pow(g.gamma, a))
            D = D * g.D**a
        gens.append((gamma, D))
    other = build_spec(F, l, gens)
    assert genus_field(other).to_dict(include_spec=False) == genus_field(spec).to_dict(include_spec=False)


@settings(max_examples=100, deadline=None)
@given(f7_specs())
def test_report_round_trip(spec):
    rep = genus_field(spec)
    assert report_from_dict(rep.to_dict()) == rep


def test_case7_extended_step_is_l(F7):
    for c in (3, 2):
        for D in ("T", "T+1", "T^2+1", "T*(T+1)"):
            rep = genus_field(kummer(F7, 3, [(c, D)]))
            assert rep.case == "C7"
            assert constant_degree(rep.K_gex) == 3
            assert rep.K_gex.radical.rank - rep.K_ge.radical.rank == 1


def test_join_with_K_is_no_op_when_contained(F7):
    rep = genus_field(kummer(F7, 3, [(6, "T^3+3*T^2+2*T")]))
    assert join(rep.M.radical, rep.K.radical) == rep.M.radical
