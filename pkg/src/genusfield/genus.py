"""Genus field K_ge and extended genus field K_gex of an elementary abelian l-extension.

Kummer case (l | q - 1).  With S = {P_1, ..., P_r} the primes dividing the
radicands, ordered so that l | deg P_i exactly for i <= s, the auxiliary
fields are

    E      = k(l-th roots of D_j*)                       D* = (-1)^deg D * D
    E_gex  = k(l-th roots of P_1..P_s, P_{s+1}*..P_r*)
    M      = k(l-th roots of Q_i = P_i P_r^(-b d_i)),    a l + b d_r = 1

and the genus field is E_gex K or M K depending on the degrees of the
radicands, whether K = E, and the inertia degree of p_infinity in K/k.
K_gex = E_gex K in every case.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .characters import CyclotomicSubfield, NonKummerSpec, product_group_field
from .errors import AllDegreesDivisible, InvalidInput
from .extension import (
    ExtensionSpec,
    KummerLattice,
    RamifiedSupport,
    constant_kernel,
    join,
    ramified_support,
    span,
    spec_lattice,
    support_from_primes,
    trivial_lattice,
)
from .gf import FiniteField
from .localdata import InfinityInvariants, infinite_invariants, lattice_infinite_invariants
from .polyring import Poly, parse_poly

KUMMER_CASES = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")
CASE_LABELS = KUMMER_CASES + ("NK_cyclotomic", "NK_twisted")


@dataclass(frozen=True)
class FieldDescription:
    """A field between k and the genus fields.

    ``radical`` is set for Kummer fields; ``cyclotomic`` lists the degree-l
    cyclotomic layers for the non-Kummer branch, where ``with_K`` marks a
    compositum with the (symbolic) input field.  ``constant_degree`` is
    ``None`` when it cannot be determined from the input.
    """

    radical: KummerLattice | None
    cyclotomic: tuple[CyclotomicSubfield, ...] = ()
    constant_degree: int | None = 1
    with_K: bool = False

    @classmethod
    def from_lattice(cls, lat: KummerLattice) -> "FieldDescription":
        return cls(lat, (), constant_degree_of_lattice(lat))

    def to_dict(self) -> dict:
        out: dict = {}
        if self.radical is not None:
            lat = self.radical
            f = lat.field
            out["radicals"] = [{"gamma": f.format(g), "poly": str(D)} for g, D in lat.radicals()]
            out["rank"] = lat.rank
        if self.cyclotomic:
            out["cyclotomic"] = [str(c.P) for c in self.cyclotomic]
        if self.with_K:
            out["with_K"] = True
        out["constant_degree"] = self.constant_degree
        out["text"] = self.text()
        return out

    def text(self) -> str:
        if self.radical is not None:
            return str(self.radical)
        parts = [f"L_{{{c.P}}}" for c in self.cyclotomic]
        if self.with_K:
            parts.append("K")
        return "·".join(parts) if parts else "k"


def constant_degree_of_lattice(lat: KummerLattice) -> int:
    """l^c with c the rank of the constant radicals in the lattice."""
    return lat.l ** constant_kernel(lat).rank


def constant_degree(desc: FieldDescription) -> int | None:
    if desc.radical is None:
        return desc.constant_degree
    return constant_degree_of_lattice(desc.radical)


@dataclass(frozen=True)
class GenusReport:
    case: str
    spec: ExtensionSpec | NonKummerSpec
    support: RamifiedSupport | None
    K: FieldDescription
    E: FieldDescription | None
    E_gex: FieldDescription
    M: FieldDescription | None
    K_ge: FieldDescription
    K_gex: FieldDescription
    genus_degree: int
    extended_degree: int
    e_inf: int
    f_inf: int | None
    m0: int | None
    chosen_Pr: Poly | None = None
    bezout: tuple[int, int] | None = None
    notes: tuple[str, ...] = dc_field(default=())

    def to_dict(self, include_spec: bool = True) -> dict:
        out: dict = {"case": self.case}
        if include_spec:
            out["spec"] = self.spec.to_dict()
        if self.support is not None:
            sup = self.support
            out["support"] = {
                "primes": [str(p) for p in sup.primes],
                "degrees": list(sup.degrees),
                "s": sup.s,
            }
            if include_spec:
                # beta depends on the chosen generator basis, so it travels with the spec echo
                out["support"]["beta"] = [list(row) for row in sup.beta]
        out["chosen_Pr"] = None if self.chosen_Pr is None else str(self.chosen_Pr)
        out["bezout"] = None if self.bezout is None else {"a": self.bezout[0], "b": self.bezout[1]}
        for name in ("K", "E", "E_gex", "M", "K_ge", "K_gex"):
            desc = getattr(self, name)
            out[name] = None if desc is None else desc.to_dict()
        out["genus_degree"] = self.genus_degree
        out["extended_degree"] = self.extended_degree
        out["e_inf"] = self.e_inf
        out["f_inf"] = self.f_inf
        out["m0"] = self.m0
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def render_text(self) -> str:
        lines = [f"case: {self.case}"]
        for name in ("K", "E", "E_gex", "M", "K_ge", "K_gex"):
            desc = getattr(self, name)
            if desc is None:
                continue
            cd = desc.constant_degree
            suffix = "" if cd == 1 else f"   [constant field F_{{q^{cd}}}]" if cd else "   [constant field undetermined]"
            lines.append(f"{name} = {desc.text()}{suffix}")
        if self.chosen_Pr is not None:
            a, b = self.bezout
            lines.append(f"P_r = {self.chosen_Pr}, a = {a}, b = {b}")
        lines.append(f"[K_ge : K] = {self.genus_degree}")
        lines.append(f"[K_gex : K] = {self.extended_degree}")
        f_txt = "undetermined" if self.f_inf is None else str(self.f_inf)
        m0_txt = "undetermined" if self.m0 is None else str(self.m0)
        lines.append(f"e_inf = {self.e_inf}, f_inf = {f_txt}, m0 = {m0_txt}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


# -- auxiliary fields ---------------------------------------------------------------


def _starred_class(field: FiniteField, l: int, degree: int) -> int:
    """Power class of (-1)^degree."""
    return field.power_class(field.pow(field.minus_one, degree), l)


def build_E(spec: ExtensionSpec) -> FieldDescription:
    """E = k(l-th roots of (-1)^deg(D_j) D_j): the cyclotomic part of K."""
    f, l = spec.field, spec.l
    rows = []
    for g in spec.generators:
        rows.append((_starred_class(f, l, g.D.degree), _exponents(spec, g.D)))
    return FieldDescription.from_lattice(span(f, l, rows))


def _exponents(spec: ExtensionSpec, D: Poly) -> dict[Poly, int]:
    from .extension import exponent_vector

    return {p: e % spec.l for p, e in exponent_vector(D, spec.seed).items()}


def build_E_gex(support: RamifiedSupport) -> FieldDescription:
    f, l = support.field, support.l
    rows = []
    for i, P in enumerate(support.primes):
        c = 0 if i < support.s else _starred_class(f, l, P.degree)
        rows.append((c, {P: 1}))
    return FieldDescription.from_lattice(span(f, l, rows))


def support_of_lattice(lat: KummerLattice) -> RamifiedSupport:
    return support_from_primes(lat.field, lat.l, lat.support)


def admissible_Pr(support: RamifiedSupport) -> list[Poly]:
    """Primes whose degree is prime to l, i.e. valid choices of P_r."""
    return [P for P in support.primes if P.degree % support.l]


def choose_Pr_and_bezout(support: RamifiedSupport, prefer: Poly | None = None) -> tuple[Poly, int, int]:
    """(P_r, a, b) with a*l + b*deg(P_r) = 1 and 0 < b < l.

    P_r defaults to the largest (degree, lex) prime of degree prime to l;
    ``prefer`` selects another admissible one.
    """
    l = support.l
    candidates = admissible_Pr(support)
    if not candidates:
        raise AllDegreesDivisible("every ramified prime has degree divisible by l; M is undefined")
    if prefer is None:
        Pr = max(candidates, key=Poly.sort_key)
    else:
        if prefer not in candidates:
            raise InvalidInput(f"{prefer} is not an admissible choice of P_r")
        Pr = prefer
    a, b = bezout(l, Pr.degree)
    return Pr, a, b


def bezout(l: int, d: int) -> tuple[int, int]:
    """(a, b) with a*l + b*d = 1, 0 < b < l."""
    b = pow(d, -1, l)
    a, rem = divmod(1 - b * d, l)
    assert rem == 0
    return a, b


def build_M(support: RamifiedSupport, b: int, Pr: Poly | None = None) -> FieldDescription:
    """M = k(l-th roots of Q_i), Q_i = P_i * P_r^((-b d_i) mod l) for P_i != P_r.

    Every Q_i has degree divisible by l, so p_infinity splits in M.  For
    r = 1 the product is empty and M = k.
    """
    f, l = support.field, support.l
    if Pr is None:
        Pr = max(admissible_Pr(support), key=Poly.sort_key)
    dr = Pr.degree
    rows = []
    for P in support.primes:
        if P == Pr:
            continue
        e = (-b * P.degree) % l
        assert (P.degree + e * dr) % l == 0
        exps = {P: 1}
        if e:
            exps[Pr] = e
        rows.append((0, exps))
    return FieldDescription.from_lattice(span(f, l, rows) if rows else trivial_lattice(f, l))


# -- dispatch ------------------------------------------------------------------------


def genus_field(spec: ExtensionSpec, prefer_Pr: Poly | None = None, crosscheck: bool = True) -> GenusReport:
    """Compute K_ge and K_gex for a validated Kummer spec."""
    f, l = spec.field, spec.l
    support = ramified_support(spec)
    K = FieldDescription.from_lattice(spec_lattice(spec))
    E = build_E(spec)
    E_gex = build_E_gex(support)
    K_is_E = K.radical == E.radical

    Pr = bezout_pair = M = None
    if support.s < support.r:
        Pr, a, b = choose_Pr_and_bezout(support, prefer_Pr)
        bezout_pair = (a, b)
        M = build_M(support, b, Pr)

    inv = infinite_invariants(spec, crosscheck=crosscheck)
    degrees = [g.D.degree for g in spec.generators]
    xi_all_powers = all(
        f.is_lth_power(f.mul(f.pow(f.minus_one, g.D.degree), g.gamma), l) for g in spec.generators
    )

    if support.s == support.r:
        case = "C1" if K_is_E else "C4"
        base = E_gex
    elif all(n % l == 0 for n in degrees):
        case = "C3" if K_is_E else "C5"
        base = M
    elif xi_all_powers:
        case = "C2"
        base = E_gex
    elif inv.f_inf == l:
        case = "C6"
        base = E_gex
    else:
        case = "C7"
        base = M

    K_ge = FieldDescription.from_lattice(join(base.radical, K.radical))
    K_gex = FieldDescription.from_lattice(join(E_gex.radical, K.radical))
    m = spec.m
    return GenusReport(
        case=case,
        spec=spec,
        support=support,
        K=K,
        E=E,
        E_gex=E_gex,
        M=M,
        K_ge=K_ge,
        K_gex=K_gex,
        genus_degree=l ** (K_ge.radical.rank - m),
        extended_degree=l ** (K_gex.radical.rank - m),
        e_inf=inv.e_inf,
        f_inf=inv.f_inf,
        m0=1 if K_is_E else l,
        chosen_Pr=Pr,
        bezout=bezout_pair,
    )


def genus_field_nonkummer(spec: NonKummerSpec) -> GenusReport:
    """K_ge = K_gex = L_1 ... L_r (joined with K when K is not cyclotomic)."""
    l = spec.l
    layers = tuple(product_group_field(spec))
    twisted = spec.twisted
    K = FieldDescription(None, (), None if twisted else 1, with_K=True)
    Y = FieldDescription(None, layers, 1)
    genus = FieldDescription(None, layers, None if twisted else 1, with_K=twisted)
    degree = l ** (spec.r - spec.m)
    notes = ()
    if twisted:
        notes = ("constant field of K_ge depends on f_inf(K|k), which the character data does not determine",)
    support = support_from_primes(spec.field, l, spec.primes)
    return GenusReport(
        case="NK_twisted" if twisted else "NK_cyclotomic",
        spec=spec,
        support=support,
        K=K,
        E=None,
        E_gex=Y,
        M=None,
        K_ge=genus,
        K_gex=genus,
        genus_degree=degree,
        extended_degree=degree,
        e_inf=1,
        f_inf=None if twisted else 1,
        m0=None if twisted else 1,
        notes=notes,
    )


def compute(spec) -> GenusReport:
    if isinstance(spec, NonKummerSpec):
        return genus_field_nonkummer(spec)
    return genus_field(spec)


def lattice_from_radicals(field: FiniteField, l: int, radicals) -> KummerLattice:
    """Rebuild a lattice from the ``radicals`` list of a serialized field."""
    from .extension import radical_row

    rows = []
    for item in radicals:
        rows.append(radical_row(field, l, field.parse(item["gamma"]), parse_poly(field, item["poly"])))
    return span(field, l, rows)


def infinity_of(desc: FieldDescription) -> InfinityInvariants:
    return lattice_infinite_invariants(desc.radical)
