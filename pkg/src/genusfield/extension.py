"""Kummer extensions K = k(l-th roots of gamma_j D_j) and their radical lattices.

A field built from l-th roots over k = F_q(T) (with l | q - 1) is identified
with a finite subgroup of k*/(k*)^l.  Because every nonzero element of k is
a constant times monic irreducible powers, that group is

    F_q*/(F_q*)^l  x  (sum over monic irreducibles P of Z/l)

and a subgroup is an F_l-subspace.  :class:`KummerLattice` stores one in
canonical form: only primes that actually occur, sorted in (degree, lex)
order, and a reduced echelon basis.  Two lattices are equal exactly when
the fields they describe are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import linalg
from .errors import (
    ConstantRadical,
    DependentGenerators,
    FieldMismatch,
    NotKummer,
    NotPrime,
    WildPrime,
    ZeroPolynomial,
)
from .gf import FiniteField, FqElem, is_prime
from .polyring import DEFAULT_SEED, Poly, factor, superscript


def _code(field: FiniteField, x) -> int:
    if isinstance(x, FqElem):
        if x.field != field:
            raise FieldMismatch("element from a different field")
        return x.value
    if isinstance(x, str):
        return field.parse(x)
    return x


@dataclass(frozen=True)
class RadicalGenerator:
    """One radical gamma * D with D monic and l-power-free."""

    gamma: int
    D: Poly

    @property
    def degree(self) -> int:
        return self.D.degree


@dataclass(frozen=True)
class ExtensionSpec:
    field: FiniteField
    l: int
    generators: tuple[RadicalGenerator, ...]
    seed: int = dc_field(default=DEFAULT_SEED, compare=False)
    mode: str = "kummer"

    @property
    def m(self) -> int:
        return len(self.generators)

    def canonical(self) -> "ExtensionSpec":
        """Same spec with each gamma replaced by its canonical class representative."""
        f, l = self.field, self.l
        gens = tuple(
            RadicalGenerator(f.class_representative(f.power_class(g.gamma, l), l), g.D)
            for g in self.generators
        )
        return ExtensionSpec(f, l, gens, self.seed)

    def to_dict(self) -> dict:
        f = self.field
        return {
            "p": f.p,
            "n": f.n,
            "l": self.l,
            "generators": [{"gamma": f.format(g.gamma), "D": str(g.D)} for g in self.generators],
        }


@dataclass(frozen=True)
class RamifiedSupport:
    field: FiniteField
    l: int
    primes: tuple[Poly, ...]
    beta: tuple[tuple[int, ...], ...]  # r x m, row i = exponents of P_i in D_1..D_m
    s: int

    @property
    def r(self) -> int:
        return len(self.primes)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.primes)


@dataclass(frozen=True)
class SubfieldDatum:
    alpha: tuple[int, ...]
    eta: int
    R: Poly


# -- exponent bookkeeping -----------------------------------------------------------


def exponent_vector(D: Poly, seed: int = DEFAULT_SEED) -> dict[Poly, int]:
    """Multiplicities of the monic irreducible factors of D."""
    if D.degree < 1:
        return {}
    return {p: e for p, e in factor(D, seed).factors}


def product_of_powers(field: FiniteField, exps: dict[Poly, int]) -> Poly:
    items = tuple(sorted(((p, e) for p, e in exps.items() if e), key=lambda pe: pe[0].sort_key()))
    return _expand(field, items)


@lru_cache(maxsize=65536)
def _expand(field: FiniteField, items) -> Poly:
    out = Poly.one(field)
    for p, e in items:
        out = out * p**e
    return out


def normalize_generator(field: FiniteField, a, A: Poly, l: int, seed: int = DEFAULT_SEED) -> RadicalGenerator:
    """Write a*A = gamma * f^l * D with D monic l-power-free and return (gamma, D).

    >>> from genusfield.gf import make_field
    >>> from genusfield.polyring import parse_poly
    >>> F = make_field(7)
    >>> g = normalize_generator(F, 3, parse_poly(F, "T^4"), 3)
    >>> g.gamma, str(g.D)
    (3, 'T')
    """
    a = _code(field, a)
    if A.is_zero() or a == 0:
        raise ZeroPolynomial("radicand must be nonzero")
    fac = factor(A, seed)
    gamma = field.mul(a, fac.unit)
    D = product_of_powers(field, {p: e % l for p, e in fac.factors})
    return RadicalGenerator(gamma, D)


def build_spec(field: FiniteField, l: int, raw_generators, reduce: bool = False, seed: int = DEFAULT_SEED) -> ExtensionSpec:
    """Validate and normalize a Kummer extension.

    ``raw_generators`` is a sequence of ``(a, A)`` pairs (constant, polynomial).
    With ``reduce=True`` dependent generator lists are replaced by an
    echelon basis of the lattice they generate instead of being rejected.
    """
    if not is_prime(l):
        raise NotPrime(f"l = {l} is not prime")
    if l == field.p:
        raise WildPrime(f"l = p = {l}: wild ramification is not supported")
    if (field.q - 1) % l:
        raise NotKummer(f"l = {l} does not divide q - 1 = {field.q - 1}; use the non-Kummer input")
    gens = []
    for a, A in raw_generators:
        g = normalize_generator(field, a, A, l, seed)
        if g.D.degree < 1 and not reduce:
            raise ConstantRadical(f"generator {field.format(g.gamma)} has constant radical after normalization")
        gens.append(g)
    if not gens:
        raise ConstantRadical("at least one generator is required")
    if reduce:
        gens = _reduced_basis(field, l, gens, seed)
    spec = ExtensionSpec(field, l, tuple(gens), seed)
    witness = dependency_witness(spec)
    if witness is not None:
        const = 1
        for g, e in zip(spec.generators, witness):
            const = field.mul(const, field.pow(g.gamma, e))
        kind = "constant is an l-th power" if field.is_lth_power(const, l) else "non-geometric (constant subextension)"
        raise DependentGenerators(f"generators are dependent; {kind}", witness)
    return spec


def dependency_witness(spec: ExtensionSpec):
    """alpha != 0 with prod D_j^alpha_j an l-th power, or None when beta has rank m."""
    primes, beta = _beta(spec)
    if not primes:
        return tuple([1] + [0] * (spec.m - 1))
    null = linalg.nullspace([list(row) for row in beta], spec.l)
    if not null:
        return None
    v = null[0]
    lead = next(x for x in v if x)
    inv = pow(lead, spec.l - 2, spec.l)
    return tuple(x * inv % spec.l for x in v)


def _reduced_basis(field, l, gens, seed):
    rows = [radical_row(field, l, g.gamma, g.D, seed) for g in gens]
    lat = span(field, l, rows)
    if constant_kernel(lat).rank:
        const = next(r for r in lat.radicals() if r[1].degree < 1)
        raise DependentGenerators(
            f"lattice contains the constant radical {field.format(const[0])}; K is not geometric"
        )
    return [RadicalGenerator(gamma, D) for gamma, D in lat.radicals()]


def _beta(spec: ExtensionSpec):
    vecs = [exponent_vector(g.D, spec.seed) for g in spec.generators]
    primes = sorted({p for v in vecs for p in v}, key=Poly.sort_key)
    beta = tuple(tuple(v.get(p, 0) % spec.l for v in vecs) for p in primes)
    return primes, beta


def ramified_support(spec: ExtensionSpec) -> RamifiedSupport:
    primes, beta = _beta(spec)
    l = spec.l
    order = sorted(range(len(primes)), key=lambda i: (primes[i].degree % l != 0, primes[i].sort_key()))
    s = sum(1 for p in primes if p.degree % l == 0)
    return RamifiedSupport(spec.field, l, tuple(primes[i] for i in order), tuple(beta[i] for i in order), s)


def support_from_primes(field: FiniteField, l: int, primes) -> RamifiedSupport:
    """Support structure for a bare prime set (beta = identity-free, one column per prime)."""
    primes = sorted(set(primes), key=Poly.sort_key)
    order = sorted(primes, key=lambda p: (p.degree % l != 0, p.sort_key()))
    r = len(order)
    beta = tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))
    s = sum(1 for p in order if p.degree % l == 0)
    return RamifiedSupport(field, l, tuple(order), beta, s)


def enumerate_subfields(spec: ExtensionSpec) -> list[SubfieldDatum]:
    """The (l^m - 1)/(l - 1) degree-l subfields k(l-th root of eta_t R_t)."""
    f, l = spec.field, spec.l
    vecs = [exponent_vector(g.D, spec.seed) for g in spec.generators]
    out = []
    for alpha in linalg.projective_representatives(spec.m, l):
        eta = 1
        exps: dict[Poly, int] = {}
        for a, g, v in zip(alpha, spec.generators, vecs):
            if a:
                eta = f.mul(eta, f.pow(g.gamma, a))
                for p, e in v.items():
                    exps[p] = (exps.get(p, 0) + a * e) % l
        out.append(SubfieldDatum(alpha, eta, product_of_powers(f, exps)))
    return out


# -- lattices ----------------------------------------------------------------------


@dataclass(frozen=True)
class KummerLattice:
    """Canonical F_l-subspace of k*/(k*)^l.

    Each row is ``(constant class, e_1, ..., e_k)`` with ``e_i`` the exponent
    at ``support[i]``.  Rows are in reduced echelon form with pivots sought
    over the prime columns first and the constant column last, so rows with
    a zero polynomial part (constant radicals) come at the end.
    """

    field: FiniteField
    l: int
    support: tuple[Poly, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def degree(self) -> int:
        """[field : k] = l^rank."""
        return self.l**self.rank

    def row_dicts(self):
        for row in self.rows:
            yield row[0], {p: e for p, e in zip(self.support, row[1:]) if e}

    def radicals(self) -> list[tuple[int, Poly]]:
        """(gamma, D) per basis row with gamma the canonical class representative."""
        f = self.field
        return [
            (f.class_representative(c, self.l), product_of_powers(f, exps)) for c, exps in self.row_dicts()
        ]

    def exponent_column(self, P: Poly) -> tuple[int, ...]:
        if P not in self.support:
            return tuple(0 for _ in self.rows)
        i = self.support.index(P) + 1
        return tuple(r[i] for r in self.rows)

    def coordinates(self, support) -> list[list[int]]:
        """Rows re-expressed over a larger ordered support (missing primes get 0)."""
        pos = {p: i for i, p in enumerate(self.support)}
        out = []
        for row in self.rows:
            out.append([row[0]] + [row[pos[p] + 1] if p in pos else 0 for p in support])
        return out

    def __str__(self):
        return render_lattice(self)


def radical_row(field: FiniteField, l: int, gamma, D: Poly, seed: int = DEFAULT_SEED):
    """(constant class, {P: exponent mod l}) for the radicand gamma * D."""
    gamma = _code(field, gamma)
    fac = factor(D, seed)
    c = field.power_class(field.mul(gamma, fac.unit), l)
    return c, {p: e % l for p, e in fac.factors if e % l}


def _check_kummer(field: FiniteField, l: int):
    if (field.q - 1) % l:
        raise NotKummer(f"lattices need l | q - 1 (l = {l}, q = {field.q})")


def span(field: FiniteField, l: int, rows) -> KummerLattice:
    """Lattice generated by rows given as ``(constant class, {P: exponent})``."""
    _check_kummer(field, l)
    rows = list(rows)
    support = sorted({p for _, ex in rows for p, e in ex.items() if e % l}, key=Poly.sort_key)
    dense = [[c % l] + [ex.get(p, 0) % l for p in support] for c, ex in rows]
    return _canonical(field, l, support, dense)


def _canonical(field, l, support, dense) -> KummerLattice:
    width = len(support) + 1
    pivot_order = list(range(1, width)) + [0]
    red = linalg.rref(dense, l, pivot_order) if dense else []
    used = [i for i in range(1, width) if any(r[i] for r in red)]
    support = tuple(support[i - 1] for i in used)
    rows = tuple(tuple([r[0]] + [r[i] for i in used]) for r in red)
    return KummerLattice(field, l, support, rows)


def from_dense(field, l, support, dense) -> KummerLattice:
    """Lattice from coordinate rows over an explicit ordered support."""
    return _canonical(field, l, list(support), [list(r) for r in dense])


def _same_space(a: KummerLattice, b: KummerLattice):
    if a.field != b.field or a.l != b.l:
        raise FieldMismatch("lattices over different fields or exponents")


def join(*lats: KummerLattice) -> KummerLattice:
    """Compositum of the corresponding fields."""
    first = lats[0]
    for other in lats[1:]:
        _same_space(first, other)
    support = sorted({p for lat in lats for p in lat.support}, key=Poly.sort_key)
    dense = [row for lat in lats for row in lat.coordinates(support)]
    return _canonical(first.field, first.l, support, dense)


def member(lat: KummerLattice, row) -> bool:
    """Is the radical class ``(c, {P: e})`` in the subgroup generated by ``lat``?"""
    c, ex = row
    ex = {p: e % lat.l for p, e in ex.items() if e % lat.l}
    if any(p not in lat.support for p in ex):
        return False
    vec = [c % lat.l] + [ex.get(p, 0) for p in lat.support]
    return linalg.in_span(list(lat.rows), vec, lat.l)


def contains(big: KummerLattice, small: KummerLattice) -> bool:
    """Field inclusion small <= big."""
    _same_space(big, small)
    if not set(small.support) <= set(big.support):
        return False
    rows = list(big.rows) + small.coordinates(big.support)
    return linalg.rank(rows, big.l) == big.rank


def constant_kernel(lat: KummerLattice) -> KummerLattice:
    """Sub-lattice of radicals with trivial polynomial part (the constant subextension)."""
    rows = [(r[0], {}) for r in lat.rows if not any(r[1:])]
    return span(lat.field, lat.l, rows)


def trivial_lattice(field: FiniteField, l: int) -> KummerLattice:
    return span(field, l, [])


@lru_cache(maxsize=4096)
def spec_lattice(spec: ExtensionSpec) -> KummerLattice:
    f, l = spec.field, spec.l
    return span(f, l, [radical_row(f, l, g.gamma, g.D, spec.seed) for g in spec.generators])


def rank(lat: KummerLattice) -> int:
    return lat.rank


# -- text -----------------------------------------------------------------------------


def render_radicand(field: FiniteField, gamma: int, exps: dict[Poly, int]) -> str:
    parts = []
    for p in sorted(exps, key=Poly.sort_key):
        e = exps[p]
        if not e:
            continue
        s = str(p)
        if "+" in s and (len(exps) > 1 or e > 1 or gamma != 1):
            s = f"({s})"
        parts.append(s + (superscript(e) if e > 1 else ""))
    body = "".join(parts)
    if gamma != 1 or not body:
        g = field.format(gamma)
        if field.n > 1 and "+" in g:
            g = f"({g})"
        body = g + ("·" + body if body else "")
    return body


def render_lattice(lat: KummerLattice) -> str:
    if not lat.rows:
        return "k"
    root = superscript(lat.l) + "√"
    f = lat.field
    items = []
    for c, exps in lat.row_dicts():
        items.append(f"{root}({render_radicand(f, f.class_representative(c, lat.l), exps)})")
    return "k( " + ", ".join(items) + " )"
