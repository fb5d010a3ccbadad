"""Polynomials over F_q and their factorization.

Factorization runs the classical pipeline: squarefree decomposition, then
distinct-degree and equal-degree (Cantor-Zassenhaus) splitting.  Equal-degree
splitting draws from ``random.Random(seed)`` so results are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConstantPolynomial, FieldMismatch, NotMonic, ZeroPolynomial
from .gf import FiniteField, FqElem
from .grammar import parse_coefficients

DEFAULT_SEED = 20210901

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def superscript(n: int) -> str:
    return str(n).translate(_SUPERSCRIPTS)


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Dense polynomial in T over a finite field (coefficient codes, constant first)."""

    __slots__ = ("field", "coeffs", "_hash", "_key")

    def __init__(self, field: FiniteField, coeffs=()):
        self.field = field
        self.coeffs = _trim(coeffs)
        self._hash = None
        self._key = None

    # -- constructors ----------------------------------------------------------

    @classmethod
    def const(cls, field, c: int) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def one(cls, field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field, ())

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, (0, 1))

    # -- basic properties --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def sort_key(self):
        """(degree, coefficient tuple from the constant term up); the global tie-break order."""
        if self._key is None:
            lex = self.field.lex_key
            self._key = (self.degree, tuple(lex(c) for c in self.coeffs))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def _check(self, other):
        if isinstance(other, int):
            return Poly.const(self.field, self.field.from_int(other))
        if isinstance(other, FqElem):
            return Poly.const(self.field, other.value)
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")
        return other

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = f.add(out[i], y)
        return Poly(f, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f, ())
        out = [0] * (len(a) + len(b) - 1)
        add, mul = f.add, f.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly(f, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(c, x) for x in self.coeffs])

    def __pow__(self, e: int):
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly(f, ()), Poly(f, rem)
        inv_lead = f.inv(other.lead)
        quot = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = f.mul(rem[k + db], inv_lead)
            quot[k] = c
            if c:
                for i, bi in enumerate(b):
                    if bi:
                        rem[k + i] = f.sub(rem[k + i], f.mul(c, bi))
        return Poly(f, quot), Poly(f, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no monic associate")
        return self.scale(self.field.inv(self.lead))

    def derivative(self) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, m: "Poly") -> "Poly":
        result = Poly.one(self.field) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    # -- text ---------------------------------------------------------------

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"Poly({render_poly(self)!r}, {self.field!r})"


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def poly_arith(a: Poly, b: Poly, kind: str):
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "divrem":
        return divmod(a, b)
    if kind == "gcd":
        return gcd(a, b)
    raise ValueError(f"unknown operation {kind!r}")


# -- text format ---------------------------------------------------------------


def _coeff_text(field: FiniteField, c: int, wrap: bool) -> str:
    s = field.format(c)
    if wrap and field.n > 1 and ("+" in s or "*" in s):
        return f"({s})"
    return s


def render_poly(a: Poly) -> str:
    """Descending powers, e.g. ``T^3+3*T^2+2*T`` or ``(u+1)*T^2+u``."""
    f = a.field
    terms = []
    for e in range(a.degree, -1, -1):
        c = a.coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(_coeff_text(f, c, False))
            continue
        mono = "T" if e == 1 else f"T^{e}"
        terms.append(mono if c == 1 else f"{_coeff_text(f, c, True)}*{mono}")
    return "+".join(terms) if terms else "0"


def parse_poly(field: FiniteField, text: str) -> Poly:
    return Poly(field, parse_coefficients(field, text))


# -- factorization -----------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    unit: int
    factors: tuple[tuple[Poly, int], ...]

    def expand(self, field: FiniteField) -> Poly:
        out = Poly.const(field, self.unit)
        for p, e in self.factors:
            out = out * p**e
        return out


def _pth_root(a: Poly) -> Poly:
    """Inverse of the Frobenius on a polynomial whose derivative vanishes."""
    f = a.field
    p = f.p
    # c -> c^(q/p) is the inverse of c -> c^p on F_q
    e = f.q // p
    return Poly(f, [f.pow(c, e) for c in a.coeffs[::p]])


def squarefree_decomposition(a: Poly) -> list[tuple[Poly, int]]:
    """Pairs (s_i, i) with a = prod s_i^i, s_i squarefree and pairwise coprime; a monic."""
    out: dict[int, Poly] = {}
    p = a.field.p

    def merge(part: Poly, mult: int):
        if part.degree > 0:
            out[mult] = out[mult] * part if mult in out else part

    def rec(f: Poly, scale: int):
        if f.degree < 1:
            return
        d = f.derivative()
        if d.is_zero():
            rec(_pth_root(f), scale * p)
            return
        g = gcd(f, d)
        w = f // g
        i = 1
        while w.degree > 0:
            y = gcd(w, g)
            merge(w // y, i * scale)
            i += 1
            w = y
            g = g // y
        if g.degree > 0:
            rec(_pth_root(g), scale * p)

    rec(a, 1)
    return [(v, k) for k, v in sorted(out.items())]


def distinct_degree(a: Poly) -> list[tuple[Poly, int]]:
    """Split a squarefree monic polynomial into products of equal-degree irreducibles."""
    f = a.field
    x = Poly.x(f)
    out = []
    h = x
    i = 0
    rest = a
    while rest.degree >= 2 * (i + 1):
        i += 1
        h = h.powmod(f.q, rest)
        g = gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, i))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def equal_degree(a: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a squarefree product of degree-d irreducibles."""
    if a.degree == d:
        return [a]
    f = a.field
    n = a.degree
    while True:
        r = Poly(f, [rng.randrange(f.q) for _ in range(n)])
        if r.degree < 1:
            continue
        if f.p == 2:
            # absolute trace to F_2 of r over F_{q^d}
            t = r % a
            acc = t
            for _ in range(f.n * d - 1):
                t = (t * t) % a
                acc = acc + t
            b = acc
        else:
            b = r.powmod((f.q**d - 1) // 2, a) - 1
        g = gcd(a, b)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(a // g, d, rng)


@lru_cache(maxsize=65536)
def _factor_cached(field: FiniteField, coeffs: tuple[int, ...], seed: int):
    a = Poly(field, coeffs)
    rng = random.Random(seed)
    found: list[tuple[Poly, int]] = []
    for part, mult in squarefree_decomposition(a):
        for block, d in distinct_degree(part):
            for irr in equal_degree(block, d, rng):
                found.append((irr.monic(), mult))
    found.sort(key=lambda pe: pe[0].sort_key())
    return tuple(found)


def factor_monic(a: Poly, seed: int = DEFAULT_SEED) -> Factorization:
    if a.is_zero() or a.degree < 1:
        raise ConstantPolynomial(f"cannot factor constant polynomial {a}")
    if not a.is_monic():
        raise NotMonic(f"{a} is not monic")
    return Factorization(1, _factor_cached(a.field, a.coeffs, seed))


def factor(a: Poly, seed: int = DEFAULT_SEED) -> Factorization:
    """Factor any nonzero polynomial as unit times monic irreducible powers."""
    if a.is_zero():
        raise ZeroPolynomial("cannot factor zero")
    unit = a.lead
    if a.degree < 1:
        return Factorization(unit, ())
    return Factorization(unit, factor_monic(a.monic(), seed).factors)


def is_irreducible(a: Poly) -> bool:
    """Independent check: no common factor with T^{q^i} - T for 1 <= i <= deg/2."""
    if a.degree < 1:
        return False
    f = a.field
    x = Poly.x(f)
    h = x
    for _ in range(a.degree // 2):
        h = h.powmod(f.q, a)
        if gcd(a, h - x).degree > 0:
            return False
    return True


def monic_polys(field: FiniteField, degree: int):
    """All monic polynomials of the given degree, in (degree, lex) order."""
    codes = sorted(range(field.q), key=field.lex_key)
    for low in itertools.product(codes, repeat=degree):
        yield Poly(field, tuple(low) + (1,))


def monic_irreducibles(field: FiniteField, degree: int) -> list[Poly]:
    return list(_monic_irreducibles(field, degree))


@lru_cache(maxsize=64)
def _monic_irreducibles(field: FiniteField, degree: int) -> tuple[Poly, ...]:
    return tuple(p for p in monic_polys(field, degree) if is_irreducible(p))
