"""Exhaustive enumeration of small specs and the compute+verify sweep driver."""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from . import linalg
from .characters import build_nonkummer_spec
from .extension import build_spec, radical_row, span
from .gf import FiniteField, field_of_order
from .genus import compute
from .polyring import DEFAULT_SEED, Poly, monic_irreducibles
from .verify import MAX_BRUTEFORCE_R, all_passed, run_checks


def lpower_free_products(field: FiniteField, l: int, max_factor_deg: int, max_total_deg: int) -> list[Poly]:
    """Monic l-power-free products of irreducibles of degree <= max_factor_deg."""
    primes = [p for d in range(1, max_factor_deg + 1) for p in monic_irreducibles(field, d)]
    out = []

    # each level picks the next prime actually used, so depth is bounded by max_total_deg
    def rec(start, deg, acc):
        for i in range(start, len(primes)):
            P = primes[i]
            if deg + P.degree > max_total_deg:
                break  # primes come in increasing degree
            power = acc
            for e in range(1, l):
                if deg + e * P.degree > max_total_deg:
                    break
                power = power * P
                out.append(power)
                rec(i + 1, deg + e * P.degree, power)

    rec(0, 0, Poly.one(field))
    out.sort(key=Poly.sort_key)
    return out


def kummer_specs(q: int, l: int, max_deg: int = 2, max_m: int = 2, max_total_deg: int = 4, max_r: int = 4, seed: int = DEFAULT_SEED):
    """Every valid Kummer spec in the bounds, one per distinct field, deterministic order.

    Generators are (g0^c, D) with c over the power-class transversal and D
    an l-power-free product of irreducibles of degree <= ``max_deg``; the
    D's of one spec are distinct, listed in increasing order, and have total
    degree <= ``max_total_deg``; the union of their prime supports has at most
    ``max_r`` elements.
    """
    field = field_of_order(q)
    if (q - 1) % l or l == field.p:
        return
    Ds = lpower_free_products(field, l, max_deg, max_total_deg)
    reps = [field.class_representative(c, l) for c in range(l)]
    exps = [radical_row(field, l, 1, D, seed)[1] for D in Ds]
    seen = set()
    for m in range(1, max_m + 1):
        for combo in _degree_bounded_combinations([D.degree for D in Ds], m, max_total_deg):
            primes = sorted({P for i in combo for P in exps[i]}, key=Poly.sort_key)
            if len(primes) > max_r:
                continue
            beta = [[exps[i].get(P, 0) for P in primes] for i in combo]
            if linalg.rank(beta, l) < m:
                continue  # dependent for every choice of constants
            for classes in itertools.product(range(l), repeat=m):
                lat = span(field, l, [(c, exps[i]) for c, i in zip(classes, combo)])
                if lat in seen:
                    continue
                seen.add(lat)
                yield build_spec(field, l, [(reps[c], Ds[i]) for c, i in zip(classes, combo)], seed=seed)


def _degree_bounded_combinations(degs, m, budget, start=0):
    """Index m-subsets (increasing) of a degree-sorted list with total degree <= budget."""
    if m == 0:
        yield ()
        return
    for i in range(start, len(degs)):
        if degs[i] * m > budget:
            break
        for rest in _degree_bounded_combinations(degs, m - 1, budget - degs[i], i + 1):
            yield (i,) + rest


def nonkummer_specs(q: int, l: int, max_deg: int = 4, max_r: int = 3, max_m: int | None = None):
    """Non-Kummer specs: prime sets of admissible irreducibles and character subspaces.

    One C per m-dimensional subspace of F_l^r (RREF basis as columns) in
    which no prime's row vanishes.
    """
    field = field_of_order(q)
    if (q - 1) % l == 0 or l == field.p:
        return
    primes = [
        p
        for d in range(1, max_deg + 1)
        if (q**d - 1) % l == 0
        for p in monic_irreducibles(field, d)
    ]
    for r in range(1, max_r + 1):
        for chosen in itertools.combinations(primes, r):
            top = r if max_m is None else min(r, max_m)
            for m in range(1, top + 1):
                for basis in linalg.subspaces(r, l):
                    if len(basis) != m:
                        continue
                    C = [[basis[j][i] for j in range(m)] for i in range(r)]
                    if not all(any(row) for row in C):
                        continue
                    yield build_nonkummer_spec(field, l, chosen, C)


def _spec_payload(spec):
    if hasattr(spec, "generators"):
        return ("kummer", spec.field.p, spec.field.n, spec.l, [(g.gamma, g.D.coeffs) for g in spec.generators], spec.seed)
    return ("nonkummer", spec.field.p, spec.field.n, spec.l, [p.coeffs for p in spec.primes], spec.C, spec.twisted)


def _rebuild(payload):
    from .gf import make_field

    kind, p, n = payload[:3]
    field = make_field(p, n)
    if kind == "kummer":
        _, _, _, l, gens, seed = payload
        return build_spec(field, l, [(g, Poly(field, D)) for g, D in gens], seed=seed)
    _, _, _, l, primes, C, twisted = payload
    return build_nonkummer_spec(field, l, [Poly(field, P) for P in primes], C, twisted)


def evaluate(spec, max_r: int = MAX_BRUTEFORCE_R) -> dict:
    """compute + verify one spec; returns the JSON-ready line."""
    report = compute(spec)
    checks = run_checks(spec, report, max_r=max_r)
    return {
        "spec": spec.to_dict(),
        "case": report.case,
        "genus_degree": report.genus_degree,
        "extended_degree": report.extended_degree,
        "K_ge": report.K_ge.text(),
        "K_gex": report.K_gex.text(),
        "passed": all_passed(checks),
        "checks": [c.to_dict() for c in checks],
    }


def _evaluate_payload(payload):
    return evaluate(_rebuild(payload))


def run_sweep(specs, jobs: int = 1):
    """Yield (index, line) in spec order; ``jobs > 1`` evaluates in worker processes."""
    specs = list(specs)
    if jobs <= 1:
        for i, spec in enumerate(specs):
            yield i, evaluate(spec)
        return
    payloads = [_spec_payload(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for i, line in enumerate(pool.map(_evaluate_payload, payloads, chunksize=32)):
            yield i, line


def summarize(lines) -> dict:
    cases = Counter(line["case"] for line in lines)
    failed = sum(1 for line in lines if not line["passed"])
    return {"summary": True, "total": len(lines), "failed": failed, "cases": dict(sorted(cases.items()))}
