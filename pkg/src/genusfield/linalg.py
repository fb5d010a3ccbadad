"""Row reduction and subspace enumeration over the prime field F_l."""

from __future__ import annotations

import itertools


def rref(rows, l: int, pivot_order=None) -> list[tuple[int, ...]]:
    """Reduced row-echelon basis of the row space.

    ``pivot_order`` lists column indices in the order pivots are sought;
    the default is left to right.  Rows come back sorted by pivot position
    in that order, each with leading entry 1.
    """
    rows = [[x % l for x in r] for r in rows]
    if not rows:
        return []
    width = len(rows[0])
    cols = list(range(width)) if pivot_order is None else list(pivot_order)
    basis: list[list[int]] = []
    for col in cols:
        pivot = next((i for i, r in enumerate(rows) if r[col]), None)
        if pivot is None:
            continue
        prow = rows.pop(pivot)
        inv = pow(prow[col], l - 2, l)
        prow = [x * inv % l for x in prow]
        for r in rows:
            if r[col]:
                c = r[col]
                for k in range(width):
                    r[k] = (r[k] - c * prow[k]) % l
        for b in basis:
            if b[col]:
                c = b[col]
                for k in range(width):
                    b[k] = (b[k] - c * prow[k]) % l
        basis.append(prow)
        rows = [r for r in rows if any(r)]
        if not rows:
            break
    return [tuple(b) for b in basis]


def rank(rows, l: int) -> int:
    return len(rref(rows, l))


def in_span(basis, vec, l: int) -> bool:
    if not basis:
        return not any(x % l for x in vec)
    return rank(list(basis) + [vec], l) == rank(basis, l)


def nullspace(matrix, l: int) -> list[tuple[int, ...]]:
    """Basis of {x : matrix @ x = 0} for a list-of-rows matrix (columns = unknowns)."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    red = rref(matrix, l)
    pivots = [next(i for i, x in enumerate(r) if x) for r in red]
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for r, pc in zip(red, pivots):
            v[pc] = (-r[fcol]) % l
        out.append(tuple(v))
    return out


def projective_representatives(m: int, l: int):
    """One vector per line of F_l^m, first nonzero coordinate 1.

    Ordered by weight, then by the index of the leading coordinate, then
    lexicographically; e.g. m=2, l=3 gives (1,0), (0,1), (1,1), (1,2).
    """
    reps = []
    for v in itertools.product(range(l), repeat=m):
        nz = [i for i, x in enumerate(v) if x]
        if nz and v[nz[0]] == 1:
            reps.append(v)
    reps.sort(key=lambda v: (sum(1 for x in v if x), next(i for i, x in enumerate(v) if x), v))
    return reps


def subspaces(dim: int, l: int):
    """Every subspace of F_l^dim, as an RREF basis (list of tuples).

    Enumerated through RREF shapes: choose pivot columns, fill the free
    entries to the right of each pivot that are not themselves pivots.
    """
    yield []
    for k in range(1, dim + 1):
        for pivots in itertools.combinations(range(dim), k):
            slots = [
                (i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, dim) if c not in pivots
            ]
            for fill in itertools.product(range(l), repeat=len(slots)):
                rows = [[0] * dim for _ in pivots]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, c), v in zip(slots, fill):
                    rows[i][c] = v
                yield [tuple(r) for r in rows]


def count_subspaces(dim: int, l: int) -> int:
    """Sum of Gaussian binomials; used as an independent count in tests."""
    total = 0
    for k in range(dim + 1):
        num = den = 1
        for i in range(k):
            num *= l ** (dim - i) - 1
            den *= l ** (i + 1) - 1
        total += num // den
    return total
