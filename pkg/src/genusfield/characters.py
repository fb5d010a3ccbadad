"""Character data for elementary abelian l-extensions with l not dividing q - 1.

Such a K sits inside a cyclotomic function field and is cut out by
Dirichlet characters.  For a monic irreducible P with l | q^deg(P) - 1 the
group (F_q[T]/P)* is cyclic, so it has exactly one character subgroup of
order l and k(Lambda_P) has exactly one subfield L_P of degree l.  Characters
are never evaluated; they are tracked as exponent vectors over F_l relative
to the canonical generator of each (F_q[T]/P)*.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .errors import (
    GroupTooLarge,
    InvalidInput,
    NotIrreducible,
    NotKummer,
    NotMonic,
    NoDegreeLSubfield,
    NotPrime,
    UnramifiedListedPrime,
    WildPrime,
)
from .gf import MAX_EXPONENT_BOUND, FiniteField, is_prime, prime_factors
from .polyring import Poly, is_irreducible


@dataclass(frozen=True)
class CyclotomicSubfield:
    """The unique degree-ell subfield of k(Lambda_P)."""

    P: Poly
    ell: int

    def __str__(self):
        return f"L_{{{self.P}}}"


@dataclass(frozen=True)
class NonKummerSpec:
    field: FiniteField
    l: int
    primes: tuple[Poly, ...]
    C: tuple[tuple[int, ...], ...]  # r x m over F_l
    twisted: bool = False

    @property
    def r(self) -> int:
        return len(self.primes)

    @property
    def m(self) -> int:
        return len(self.C[0]) if self.C else 0

    def to_dict(self) -> dict:
        f = self.field
        return {
            "p": f.p,
            "n": f.n,
            "l": self.l,
            "primes": [str(p) for p in self.primes],
            "C": [list(row) for row in self.C],
            "twisted": self.twisted,
        }


def unit_group_order(field: FiniteField, P: Poly) -> int:
    order = field.q**P.degree - 1
    if order >= MAX_EXPONENT_BOUND:
        raise GroupTooLarge(f"|(F_q[T]/P)*| = {order} exceeds the 64-bit bound")
    return order


def _residues(field: FiniteField, d: int):
    """Nonzero polynomials of degree < d in (degree, lex) order."""
    codes = sorted(range(field.q), key=field.lex_key)
    nonzero = [c for c in codes if c]
    for deg in range(d):
        for low in itertools.product(codes, repeat=deg):
            for lead in nonzero:
                yield Poly(field, tuple(low) + (lead,))


def canonical_unit_generator(P: Poly) -> Poly:
    """Least (degree, lex) residue generating the cyclic group (F_q[T]/P)*."""
    field = P.field
    order = unit_group_order(field, P)
    factors = prime_factors(order) if order > 1 else []
    for cand in _residues(field, P.degree):
        if all(not cand.powmod(order // r, P).is_one() for r in factors):
            return cand
    raise AssertionError("no generator found")  # pragma: no cover


def build_nonkummer_spec(field: FiniteField, l: int, primes, C, twisted: bool = False) -> NonKummerSpec:
    if not is_prime(l):
        raise NotPrime(f"l = {l} is not prime")
    if l == field.p:
        raise WildPrime(f"l = p = {l}: wild ramification is not supported")
    if (field.q - 1) % l == 0:
        raise NotKummer(f"l = {l} divides q - 1; use the Kummer input")
    primes = tuple(primes)
    if not primes:
        raise InvalidInput("at least one ramified prime is required")
    if len(set(primes)) != len(primes):
        raise InvalidInput("ramified primes must be distinct")
    for P in primes:
        if not P.is_monic():
            raise NotMonic(f"{P} is not monic")
        if not is_irreducible(P):
            raise NotIrreducible(f"{P} is not irreducible")
        order = unit_group_order(field, P)
        if order % l:
            raise NoDegreeLSubfield(
                f"l = {l} does not divide q^{P.degree} - 1 = {order}: no degree-l character modulo {P}"
            )
    C = tuple(tuple(int(x) % l for x in row) for row in C)
    if len(C) != len(primes) or not C or len({len(row) for row in C}) != 1 or not C[0]:
        raise InvalidInput("C must be an r x m matrix with one row per prime")
    for P, row in zip(primes, C):
        if not any(row):
            raise UnramifiedListedPrime(f"row of {P} in C is zero: {P} would not ramify")
    m = len(C[0])
    if linalg.rank([list(row) for row in C], l) != m:
        raise InvalidInput(f"C has rank < m = {m}: characters are dependent")
    return NonKummerSpec(field, l, primes, C, bool(twisted))


def ramification_via_characters(spec: NonKummerSpec, P: Poly) -> int:
    """e_P = |X_P|: l when P's row of C is nonzero."""
    if P not in spec.primes:
        return 1
    row = spec.C[spec.primes.index(P)]
    if not any(row):
        raise UnramifiedListedPrime(f"{P} is listed but its character row is zero")
    return spec.l


def product_group_field(spec: NonKummerSpec) -> list[CyclotomicSubfield]:
    """The field of Y = prod X_P: the compositum L_1 ... L_r."""
    return [CyclotomicSubfield(P, spec.l) for P in spec.primes]
