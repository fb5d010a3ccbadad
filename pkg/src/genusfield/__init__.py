"""Genus fields and extended genus fields of elementary abelian l-extensions of F_q(T)."""

from .characters import build_nonkummer_spec, canonical_unit_generator
from .errors import GenusFieldError, InvalidInput, VerificationError
from .extension import KummerLattice, build_spec, contains, join, spec_lattice
from .genus import GenusReport, compute, genus_field, genus_field_nonkummer
from .gf import field_of_order, make_field
from .localdata import infinite_invariants
from .polyring import Poly, factor, parse_poly
from .serialize import load_spec, report_from_dict, spec_from_dict
from .verify import maximality_bruteforce, run_checks

__all__ = [
    "GenusFieldError",
    "GenusReport",
    "InvalidInput",
    "KummerLattice",
    "Poly",
    "VerificationError",
    "build_nonkummer_spec",
    "build_spec",
    "canonical_unit_generator",
    "compute",
    "contains",
    "factor",
    "field_of_order",
    "genus_field",
    "genus_field_nonkummer",
    "infinite_invariants",
    "join",
    "load_spec",
    "make_field",
    "maximality_bruteforce",
    "parse_poly",
    "report_from_dict",
    "run_checks",
    "spec_from_dict",
    "spec_lattice",
]

__version__ = "0.1.0"
