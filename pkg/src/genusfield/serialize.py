"""JSON wire formats for specs and reports."""

from __future__ import annotations

import json

from .characters import CyclotomicSubfield, NonKummerSpec, build_nonkummer_spec
from .errors import InvalidInput
from .extension import ExtensionSpec, build_spec, ramified_support, support_from_primes
from .genus import FieldDescription, GenusReport, lattice_from_radicals
from .gf import make_field
from .polyring import DEFAULT_SEED, parse_poly


def _require(data: dict, *keys):
    missing = [k for k in keys if k not in data]
    if missing:
        raise InvalidInput(f"spec is missing {', '.join(missing)}")


def _int(data: dict, key: str) -> int:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{key} must be an integer, got {value!r}")
    return value


def spec_from_dict(data: dict, reduce: bool = False, seed: int = DEFAULT_SEED):
    """Kummer spec if ``generators`` is present, non-Kummer spec if ``primes`` is."""
    if not isinstance(data, dict):
        raise InvalidInput("spec must be a JSON object")
    _require(data, "p", "l")
    p, l = _int(data, "p"), _int(data, "l")
    n = _int(data, "n") if "n" in data else 1
    field = make_field(p, n, data.get("modulus"))
    if "generators" in data:
        gens = data["generators"]
        if not isinstance(gens, list):
            raise InvalidInput("generators must be a list")
        raw = []
        for g in gens:
            if not isinstance(g, dict) or "D" not in g:
                raise InvalidInput(f"bad generator entry {g!r}")
            gamma = field.parse(str(g.get("gamma", "1")))
            raw.append((gamma, parse_poly(field, str(g["D"]))))
        return build_spec(field, l, raw, reduce=reduce, seed=seed)
    if "primes" in data:
        _require(data, "C")
        primes = [parse_poly(field, str(P)) for P in data["primes"]]
        C = data["C"]
        if not isinstance(C, list) or not all(isinstance(row, list) for row in C):
            raise InvalidInput("C must be a list of rows")
        return build_nonkummer_spec(field, l, primes, C, bool(data.get("twisted", False)))
    raise InvalidInput('spec needs either "generators" (Kummer) or "primes" (non-Kummer)')


def load_spec(text: str, reduce: bool = False, seed: int = DEFAULT_SEED):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"spec is not valid JSON: {exc}") from None
    return spec_from_dict(data, reduce=reduce, seed=seed)


def _description_from_dict(spec, data):
    if data is None:
        return None
    field, l = spec.field, spec.l
    radical = None
    if "radicals" in data:
        radical = lattice_from_radicals(field, l, data["radicals"])
    cyclo = tuple(CyclotomicSubfield(parse_poly(field, P), l) for P in data.get("cyclotomic", ()))
    return FieldDescription(radical, cyclo, data.get("constant_degree"), bool(data.get("with_K", False)))


def report_from_dict(data: dict, spec=None) -> GenusReport:
    """Inverse of ``GenusReport.to_dict``; the spec echo is re-parsed unless given."""
    if spec is None:
        spec = spec_from_dict(data["spec"])
    field = spec.field
    if isinstance(spec, ExtensionSpec):
        support = ramified_support(spec)
    else:
        support = support_from_primes(field, spec.l, spec.primes)
    Pr = data.get("chosen_Pr")
    bez = data.get("bezout")
    return GenusReport(
        case=data["case"],
        spec=spec,
        support=support,
        K=_description_from_dict(spec, data["K"]),
        E=_description_from_dict(spec, data.get("E")),
        E_gex=_description_from_dict(spec, data["E_gex"]),
        M=_description_from_dict(spec, data.get("M")),
        K_ge=_description_from_dict(spec, data["K_ge"]),
        K_gex=_description_from_dict(spec, data["K_gex"]),
        genus_degree=data["genus_degree"],
        extended_degree=data["extended_degree"],
        e_inf=data["e_inf"],
        f_inf=data["f_inf"],
        m0=data["m0"],
        chosen_Pr=None if Pr is None else parse_poly(field, Pr),
        bezout=None if bez is None else (bez["a"], bez["b"]),
        notes=tuple(data.get("notes", ())),
    )


def dumps(obj) -> str:
    """Canonical one-line JSON (insertion order kept, no extra whitespace variance)."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def is_nonkummer(spec) -> bool:
    return isinstance(spec, NonKummerSpec)
