"""Independent checks of the genus engine.

The oracles here only use the local primitives (valuation columns at finite
primes, the local pair subgroup at infinity) and brute-force enumeration of
intermediate lattices.  They never consult the case dispatch in
:mod:`genusfield.genus`, so agreement between the two is real evidence.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .characters import NonKummerSpec, ramification_via_characters, unit_group_order
from .errors import BoundExceeded, NoUniqueMaximum, NotContained, PreconditionViolated
from .extension import (
    ExtensionSpec,
    KummerLattice,
    contains,
    from_dense,
    spec_lattice,
)
from .localdata import (
    f_infinity_by_subfields,
    finite_ramification_index,
    lattice_infinite_invariants,
)
from .polyring import Poly

MAX_BRUTEFORCE_R = 4


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    passed: bool
    witness: str | None = None
    skipped: bool = False
    detail: str = ""

    def __post_init__(self):
        if not self.passed and not self.skipped and self.witness is None:
            raise ValueError(f"failed check {self.name!r} must carry a witness")

    def to_dict(self) -> dict:
        out = {"check": self.name, "passed": self.passed}
        if self.skipped:
            out["skipped"] = True
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


def _ok(name, detail=""):
    return PropertyCheck(name, True, detail=detail)


def _fail(name, witness, detail=""):
    return PropertyCheck(name, False, witness=str(witness), detail=detail)


def check_genus_property(K: KummerLattice, L: KummerLattice, name: str = "genus_property") -> PropertyCheck:
    """L/K unramified at every finite prime and p_infinity splits completely."""
    if not contains(L, K):
        raise NotContained("the candidate field does not contain K")
    for P in sorted(set(K.support) | set(L.support), key=Poly.sort_key):
        if finite_ramification_index(L, P) != finite_ramification_index(K, P):
            return _fail(name, P, f"{P} ramifies in L/K")
    inv_K = lattice_infinite_invariants(K)
    inv_L = lattice_infinite_invariants(L)
    if inv_K.as_pair() != inv_L.as_pair():
        return _fail(name, "p_inf", f"(e, f) at infinity changes from {inv_K.as_pair()} to {inv_L.as_pair()}")
    return _ok(name)


def check_finite_unramified(K: KummerLattice, L: KummerLattice, name: str = "extended_finite_unramified") -> PropertyCheck:
    """L/K unramified at every finite prime (infinity unconstrained)."""
    if not contains(L, K):
        raise NotContained("the candidate field does not contain K")
    for P in sorted(set(K.support) | set(L.support), key=Poly.sort_key):
        if finite_ramification_index(L, P) != finite_ramification_index(K, P):
            return _fail(name, P, f"{P} ramifies in L/K")
    return _ok(name)


def _ambient(spec: ExtensionSpec):
    """Coordinates (constant, primes of S) spanning join(E_gex, K, non-l-th-power constant).

    E_gex has one radical per prime of S, so together with a constant of
    nontrivial class the join is the full coordinate space.
    """
    K = spec_lattice(spec)
    support = list(K.support)
    return K, support, len(support) + 1


def maximality_bruteforce(spec: ExtensionSpec, max_r: int = MAX_BRUTEFORCE_R) -> KummerLattice:
    """Largest L with K <= L <= ambient having the genus property, by enumeration."""
    K, support, width = _ambient(spec)
    if len(support) > max_r:
        raise BoundExceeded(f"r = {len(support)} exceeds the enumeration bound {max_r}")
    l = spec.l
    K_rows = [list(r) for r in K.rows]
    # complement of K in F_l^width: extend with unit vectors
    basis = [list(r) for r in K_rows]
    complement = []
    for i in range(width):
        e = [0] * width
        e[i] = 1
        if linalg.rank(basis + [e], l) > len(basis):
            basis.append(e)
            complement.append(e)
    degs = [p.degree for p in support]

    def pair(v):
        n = sum(x * d for x, d in zip(v[1:], degs))
        return ((-n) % l, v[0] % l)

    K_image = [pair(v) for v in K_rows]
    image_rank = linalg.rank(K_image, l) if K_image else 0

    passing = []
    for W in linalg.subspaces(len(complement), l):
        lifted = [[sum(w[j] * complement[j][i] for j in range(len(complement))) % l for i in range(width)] for w in W]
        # finite primes: every P of S already ramifies in K, and the ambient adds no new primes
        imgs = K_image + [pair(v) for v in lifted]
        if (linalg.rank(imgs, l) if imgs else 0) == image_rank:
            passing.append(lifted)
    best_dim = max(len(W) for W in passing)
    maxima = [W for W in passing if len(W) == best_dim]
    if len(maxima) != 1:
        raise NoUniqueMaximum(f"{len(maxima)} maximal intermediate fields with the genus property")
    top = K_rows + maxima[0]
    for W in passing:
        if linalg.rank(top + W, l) != len(top):
            raise NoUniqueMaximum("a field with the genus property is not contained in the maximal one")
    L = from_dense(spec.field, l, support, top)
    # confirm with the generic (lattice-level) check
    check = check_genus_property(K, L)
    if not check.passed:
        raise NoUniqueMaximum(f"enumerated maximum fails the genus property: {check.detail}")
    return L


def crosscheck_f_infinity(spec: ExtensionSpec) -> PropertyCheck:
    name = "f_infinity_crosscheck"
    local = lattice_infinite_invariants(spec_lattice(spec)).f_inf
    by_subfields = f_infinity_by_subfields(spec)
    detail = f"local={local} subfields={by_subfields}"
    if local != by_subfields:
        return _fail(name, "p_inf", detail)
    return _ok(name, detail)


def case7_generator_index(spec: ExtensionSpec):
    """First j with l not dividing deg D_j and (-1)^deg(D_j) gamma_j not an l-th power."""
    f, l = spec.field, spec.l
    for j, g in enumerate(spec.generators):
        n = g.D.degree
        xi = f.mul(f.pow(f.minus_one, n), g.gamma)
        if n % l and not f.is_lth_power(xi, l):
            return j
    return None


def verify_case7_constants(spec: ExtensionSpec, j: int | None = None) -> PropertyCheck:
    """delta = gamma_j^(s_j) must not be congruent to -1 modulo l-th powers.

    Here n_j = l*m_j - r_j with 0 < r_j < l and s_j r_j = 1 mod l; the
    non-congruence forces the constant field of K_gex up to F_{q^l}.
    """
    f, l = spec.field, spec.l
    if j is None:
        j = case7_generator_index(spec)
        if j is None:
            raise PreconditionViolated("no generator with l not dividing deg D and xi not an l-th power")
    g = spec.generators[j]
    n = g.D.degree
    xi = f.mul(f.pow(f.minus_one, n), g.gamma)
    if n % l == 0 or f.is_lth_power(xi, l):
        raise PreconditionViolated(f"generator {j} does not satisfy the case-7 hypotheses")
    r_j = (-n) % l
    s_j = pow(r_j, -1, l)
    delta = f.pow(g.gamma, s_j)
    ratio = f.div(delta, f.minus_one)
    detail = f"r={r_j} s={s_j} delta={f.format(delta)}"
    if f.is_lth_power(ratio, l):
        return _fail("case7_constants", f.format(delta), detail + " is congruent to -1")
    return _ok("case7_constants", detail)


def check_alternate_Pr(spec: ExtensionSpec, report=None) -> PropertyCheck:
    """Every admissible P_r gives the same M and the same K_ge (double inclusion).

    K_ge depends on P_r only through M, so each alternative rebuilds M and,
    in the cases whose genus field is M K, the join with K.
    """
    from .extension import join, ramified_support
    from .genus import admissible_Pr, bezout, build_M, genus_field

    name = "alternate_Pr"
    support = ramified_support(spec)
    candidates = admissible_Pr(support)
    if not candidates:
        return PropertyCheck(name, True, skipped=True, detail="s = r, M undefined")
    if report is None:
        report = genus_field(spec, crosscheck=False)
    ref = report.K_ge.radical
    K = spec_lattice(spec)
    ref_M = None
    uses_M = report.case in ("C3", "C5", "C7")
    for P in candidates:
        _, b = bezout(spec.l, P.degree)
        M = build_M(support, b, P).radical
        if ref_M is None:
            ref_M = M
        if not (contains(ref_M, M) and contains(M, ref_M)):
            return _fail(name, P, f"M differs for P_r = {P}")
        if uses_M:
            other = join(M, K)
            if not (contains(ref, other) and contains(other, ref)):
                return _fail(name, P, f"K_ge differs for P_r = {P}")
    return _ok(name, f"{len(candidates)} admissible choices")


def _gex_difference_ramified_only(K_ge: KummerLattice, K_gex: KummerLattice) -> bool:
    """[K_gex : K_ge] is accounted for by ramification at infinity alone."""
    extra = K_gex.rank - K_ge.rank
    e_ge = lattice_infinite_invariants(K_ge)
    e_gex = lattice_infinite_invariants(K_gex)
    return e_gex.e_inf == e_ge.e_inf * K_ge.l**extra and e_gex.f_inf == e_ge.f_inf


def run_checks(spec, report=None, max_r: int = MAX_BRUTEFORCE_R) -> list[PropertyCheck]:
    """All applicable checks; ``report`` overrides the engine output under test."""
    if isinstance(spec, NonKummerSpec):
        return run_nonkummer_checks(spec, report)
    from .genus import constant_degree_of_lattice, genus_field

    if report is None:
        report = genus_field(spec)
    l = spec.l
    K = spec_lattice(spec)
    K_ge = report.K_ge.radical
    K_gex = report.K_gex.radical
    checks = []

    if contains(K_ge, K) and contains(K_gex, K_ge):
        checks.append(_ok("sandwich"))
    else:
        checks.append(_fail("sandwich", "K <= K_ge <= K_gex violated"))
        return checks

    checks.append(check_genus_property(K, K_ge))
    checks.append(check_finite_unramified(K, K_gex))
    checks.append(crosscheck_f_infinity(spec))

    try:
        brute = maximality_bruteforce(spec, max_r)
    except BoundExceeded as exc:
        checks.append(PropertyCheck("maximality", True, skipped=True, detail=str(exc)))
    else:
        if brute == K_ge:
            checks.append(_ok("maximality"))
        else:
            checks.append(_fail("maximality", str(brute), f"brute force gives {brute}, engine gives {K_ge}"))

    f_inf = lattice_infinite_invariants(K).f_inf
    cd = constant_degree_of_lattice(K_ge)
    if cd == f_inf:
        checks.append(_ok("constant_field_law", f"constant degree {cd}"))
    else:
        checks.append(_fail("constant_field_law", f"constant_degree={cd}", f"f_inf(K) = {f_inf}"))

    if report.case == "C7":
        cdx = constant_degree_of_lattice(K_gex)
        if cdx == l:
            checks.append(_ok("case7_gex_constants"))
        else:
            checks.append(_fail("case7_gex_constants", f"constant_degree={cdx}"))
        checks.append(verify_case7_constants(spec))
    elif K == report.E.radical:
        if _gex_difference_ramified_only(K_ge, K_gex):
            checks.append(_ok("gex_difference_at_infinity"))
        else:
            checks.append(_fail("gex_difference_at_infinity", "p_inf"))

    checks.append(check_alternate_Pr(spec, report))

    expect = l ** (K_ge.rank - spec.m)
    if report.genus_degree == expect:
        checks.append(_ok("genus_degree"))
    else:
        checks.append(_fail("genus_degree", report.genus_degree, f"expected {expect}"))
    return checks


def run_nonkummer_checks(spec: NonKummerSpec, report=None) -> list[PropertyCheck]:
    from .genus import genus_field_nonkummer

    if report is None:
        report = genus_field_nonkummer(spec)
    l = spec.l
    checks = []
    bad = [P for P in spec.primes if unit_group_order(spec.field, P) % l]
    checks.append(_fail("character_existence", bad[0]) if bad else _ok("character_existence"))
    ram = [P for P in spec.primes if ramification_via_characters(spec, P) != l]
    checks.append(_fail("ramified_primes", ram[0]) if ram else _ok("ramified_primes"))
    checks.append(_ok("e_inf") if report.e_inf == 1 else _fail("e_inf", report.e_inf))
    layers = [c.P for c in report.K_ge.cyclotomic]
    if sorted(layers, key=Poly.sort_key) == sorted(spec.primes, key=Poly.sort_key) and report.K_ge == report.K_gex:
        checks.append(_ok("product_group_field"))
    else:
        checks.append(_fail("product_group_field", ",".join(map(str, layers))))
    expect = l ** (spec.r - spec.m)
    if report.genus_degree == expect:
        checks.append(_ok("genus_degree"))
    else:
        checks.append(_fail("genus_degree", report.genus_degree, f"expected {expect}"))
    return checks


def all_passed(checks) -> bool:
    return all(c.passed for c in checks)
