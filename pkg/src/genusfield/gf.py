"""Exact arithmetic in F_q = F_p[u]/(m(u)).

Elements are stored as integer codes ``c_0 + c_1 p + ... + c_{n-1} p^{n-1}``
where ``c_i`` is the coefficient of ``u^i``.  The field object owns log/exp
tables built from the canonical generator, so multiplication is two lookups.
Only small fields are supported: ``q^8 - 1`` must fit a signed 64-bit word.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd

from .errors import DegreeMismatch, FieldMismatch, FieldTooLarge, NotPrime, ReducibleModulus

MAX_EXPONENT_BOUND = 2**63
MAX_DEGREE_FOR_BOUND = 8


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n >= 1`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p^n``; raises :class:`NotPrime` if q is not a prime power."""
    ps = prime_factors(q) if q > 1 else []
    if len(ps) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p, n, t = ps[0], 0, q
    while t > 1:
        t //= p
        n += 1
    return p, n


# -- dense polynomials over F_p (constant term first); used only to bootstrap ----


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _fp_mulmod(a: list[int], b: list[int], m: tuple[int, ...], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _fp_mod(prod, m, p)


def _fp_powmod(a: list[int], e: int, m: tuple[int, ...], p: int) -> list[int]:
    result = [1]
    base = _fp_mod(list(a), m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _fp_mod(a, tuple(b), p)
    return a


def _fp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim([x % p for x in out])


def is_irreducible_fp(m: tuple[int, ...], p: int) -> bool:
    """Rabin-style test: gcd(u^{p^i} - u, m) = 1 for i < deg m and m | u^{p^n} - u."""
    n = len(m) - 1
    if n < 1 or m[-1] % p == 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    power = x
    for _ in range(1, n):
        power = _fp_powmod(power, p, m, p)
        if len(_fp_gcd(list(m), _fp_sub(power, x, p), p)) > 1:
            return False
    power = _fp_powmod(power, p, m, p)
    return not _fp_sub(power, x, p)


def canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n (constant term first)."""
    if n == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=n):
        m = tuple(low) + (1,)
        if is_irreducible_fp(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """The field F_q together with its element tables.

    Two instances compare equal iff ``(p, n, modulus)`` agree.  Use
    :func:`make_field` rather than the constructor so instances are shared.
    """

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.modulus = tuple(modulus)
        self.q = p**n
        self._build_tables()

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.n, self.modulus) == (
            other.p,
            other.n,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.q}, modulus={format_fp_poly(self.modulus, 'u')})"

    # -- construction -------------------------------------------------------

    def coeffs(self, code: int) -> tuple[int, ...]:
        """Coefficient tuple of an element, constant term first, length n."""
        out = []
        for _ in range(self.n):
            code, c = divmod(code, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)[: self.n]):
            code = code * self.p + (c % self.p)
        return code

    def lex_key(self, code: int) -> tuple[int, ...]:
        return self.coeffs(code)

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        if self.n == 1:
            self._add = None
            self._neg = None
        else:
            digits = [self.coeffs(v) for v in range(q)]
            self._add = [
                [self.from_coeffs([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)]
                for a in range(q)
            ]
            self._neg = [self.from_coeffs([(-x) % p for x in digits[a]]) for a in range(q)]
        # canonical generator: lexicographically smallest coefficient tuple of order q - 1
        order = q - 1
        factors = prime_factors(order) if order > 1 else []
        gen = None
        for code in sorted(range(1, q), key=self.lex_key):
            poly = list(self.coeffs(code))
            if all(_fp_powmod(poly, order // r, self.modulus, p) != [1] for r in factors):
                gen = code
                break
        assert gen is not None
        self.generator = gen
        self._exp = [0] * order
        self._log = [None] * q
        cur = [1]
        g_poly = _trim(list(self.coeffs(gen)))
        for i in range(order):
            code = self.from_coeffs(cur + [0] * (self.n - len(cur)))
            self._exp[i] = code
            self._log[code] = i
            cur = _fp_mulmod(cur, g_poly, self.modulus, p)

    # -- arithmetic on codes --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is None:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a: int) -> int:
        if self._neg is None:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log to the canonical generator."""
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def from_int(self, k: int) -> int:
        return k % self.p

    @property
    def minus_one(self) -> int:
        return self.neg(1)

    # -- l-th powers -----------------------------------------------------------

    def is_lth_power(self, a: int, l: int) -> bool:
        if a == 0:
            raise ZeroDivisionError("zero is excluded from the l-th power test")
        g = gcd(l, self.q - 1)
        return self.pow(a, (self.q - 1) // g) == 1

    def power_class(self, a: int, l: int) -> int:
        """Index i in [0, gcd(l, q-1)) with a = g0^i modulo l-th powers."""
        g = gcd(l, self.q - 1)
        return self.log(a) % g

    def class_representative(self, c: int, l: int) -> int:
        """Canonical transversal element g0^c for the class c."""
        return self.pow(self.generator, c % gcd(l, self.q - 1))

    # -- text ----------------------------------------------------------------

    def format(self, a: int) -> str:
        if self.n == 1:
            return str(a)
        return format_fp_poly(self.coeffs(a), "u")

    def parse(self, text: str) -> int:
        from .grammar import parse_element

        return parse_element(self, text)

    def elements(self):
        return range(self.q)

    def elem(self, value) -> "FqElem":
        if isinstance(value, FqElem):
            return value
        if isinstance(value, str):
            return FqElem(self, self.parse(value))
        return FqElem(self, self.from_int(value) if self.n == 1 else value)


def format_fp_poly(coeffs, var: str) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def _cached_field(p: int, n: int, modulus: tuple[int, ...]) -> FiniteField:
    return FiniteField(p, n, modulus)


def make_field(p: int, n: int = 1, modulus=None) -> FiniteField:
    """Return F_{p^n}; the canonical modulus is used when none is given.

    >>> make_field(2, 2).modulus
    (1, 1, 1)
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {n}")
    if (p**n) ** MAX_DEGREE_FOR_BOUND - 1 >= MAX_EXPONENT_BOUND:
        raise FieldTooLarge(f"q = {p}^{n} exceeds the supported bound (q^8 - 1 < 2^63)")
    if modulus is None:
        modulus = canonical_modulus(p, n)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        while len(modulus) > 1 and modulus[-1] == 0:
            modulus = modulus[:-1]
        if len(modulus) - 1 != n:
            raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {n}")
        if modulus[-1] != 1:
            raise ReducibleModulus("modulus must be monic")
        if not is_irreducible_fp(modulus, p):
            raise ReducibleModulus(f"{format_fp_poly(modulus, 'u')} is reducible over F_{p}")
    return _cached_field(p, n, modulus)


def field_of_order(q: int) -> FiniteField:
    p, n = prime_power(q)
    return make_field(p, n)


class FqElem:
    """An element of a :class:`FiniteField`; immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FqElem is immutable")

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldMismatch("operands live in different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return FqElem(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FqElem(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FqElem(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FqElem(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FqElem(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FqElem(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FqElem(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FqElem(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"FqElem({self}, {self.field!r})"


def arith(a: FqElem, b, kind: str) -> FqElem:
    """Dispatch one of add/sub/mul/div/pow/inv; ``b`` is an int exponent for pow."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "pow":
        return a ** int(b)
    if kind == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {kind!r}")


def is_lth_power(x: FqElem, l: int) -> bool:
    return x.field.is_lth_power(x.value, l)


def power_class(x: FqElem, l: int) -> int:
    return x.field.power_class(x.value, l)
