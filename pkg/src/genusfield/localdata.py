"""Ramification and splitting of places in radical extensions of F_q(T).

At the infinite place the completion is F_q((1/T)) and, since l | q - 1 and
l != p, the principal units are l-divisible.  So the local class of a
radicand gamma * D (D monic of degree n) is determined by the pair

    (-n mod l, class of gamma in F_q*/(F_q*)^l)

and the local extension generated by a lattice is read off from the subgroup
of (Z/l)^2 spanned by these pairs: its projection to the valuation
coordinate gives the ramification index, the quotient gives the inertia
degree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import linalg
from .errors import InternalInconsistency
from .extension import ExtensionSpec, KummerLattice, RadicalGenerator, enumerate_subfields, spec_lattice
from .gf import FiniteField
from .polyring import Poly


class InfinityBehavior(enum.Enum):
    RAMIFIED = "Ramified"
    SPLIT = "Split"
    INERT = "Inert"


@dataclass(frozen=True)
class InfinityInvariants:
    e_inf: int
    f_inf: int
    g_count_exponent: int

    def as_pair(self) -> tuple[int, int]:
        return self.e_inf, self.f_inf


def classify_p_infty_cyclic(gen: RadicalGenerator, l: int, field: FiniteField) -> InfinityBehavior:
    """Behaviour of the infinite place in k(l-th root of gamma D)/k."""
    if gen.D.degree % l:
        return InfinityBehavior.RAMIFIED
    if field.is_lth_power(gen.gamma, l):
        return InfinityBehavior.SPLIT
    return InfinityBehavior.INERT


def local_image_at_infinity(lat: KummerLattice) -> list[tuple[int, int]]:
    """RREF basis of the (valuation, constant class) image of the lattice in (Z/l)^2."""
    l = lat.l
    degs = [p.degree for p in lat.support]
    pairs = []
    for row in lat.rows:
        n = sum(e * d for e, d in zip(row[1:], degs))
        pairs.append(((-n) % l, row[0] % l))
    return linalg.rref(pairs, l)


def lattice_infinite_invariants(lat: KummerLattice) -> InfinityInvariants:
    l = lat.l
    image = local_image_at_infinity(lat)
    order = l ** len(image)
    e = l if any(v for v, _ in image) else 1
    f = order // e
    return InfinityInvariants(e, f, lat.rank - len(image))


def f_infinity_by_subfields(spec: ExtensionSpec) -> int:
    """Inertia degree of p_infinity via the degree-l subfields: l iff some one is inert."""
    f, l = spec.field, spec.l
    for datum in enumerate_subfields(spec):
        if datum.R.degree % l == 0 and not f.is_lth_power(datum.eta, l):
            return l
    return 1


def infinite_invariants(spec: ExtensionSpec, crosscheck: bool = True) -> InfinityInvariants:
    """(e, f) of p_infinity in K/k from the local pair subgroup.

    With ``crosscheck`` the inertia degree is recomputed from the subfield
    enumeration and a disagreement raises :class:`InternalInconsistency`.
    """
    inv = lattice_infinite_invariants(spec_lattice(spec))
    if crosscheck:
        f_sub = f_infinity_by_subfields(spec)
        if f_sub != inv.f_inf:
            raise InternalInconsistency(
                f"inertia degree at infinity: local pairs give {inv.f_inf}, subfields give {f_sub}"
            )
    return inv


def finite_ramification_index(lat: KummerLattice, P: Poly) -> int:
    """e_P of the lattice field over k: l if some row has nonzero exponent at P."""
    return lat.l if any(lat.exponent_column(P)) else 1
