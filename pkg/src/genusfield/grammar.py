"""Recursive-descent parser for the polynomial text format.

Grammar (whitespace ignored)::

    expr   := ["-"|"+"] term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" INT)?
    atom   := INT | "u" | "T" | "(" expr ")"

Integers are reduced mod p, ``u`` is the field generator (only when n > 1) and
``T`` is the polynomial variable.  The result is a dense coefficient list of
element codes, constant term first.
"""

from __future__ import annotations

import re

from .errors import PolySyntaxError, UnknownCoefficient

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, field, text: str, allow_t: bool):
        self.f = field
        self.text = text
        self.allow_t = allow_t
        self.tokens = _tokenize(text)
        self.i = 0

    # dense polynomial helpers over the field
    def _trim(self, a):
        while a and a[-1] == 0:
            a.pop()
        return a

    def _add(self, a, b):
        out = [0] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] = x
        for i, y in enumerate(b):
            out[i] = self.f.add(out[i], y)
        return self._trim(out)

    def _neg(self, a):
        return [self.f.neg(x) for x in a]

    def _mul(self, a, b):
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = self.f.add(out[i + j], self.f.mul(x, y))
        return self._trim(out)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise PolySyntaxError(f"expected {want}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty expression", self.text, 0)
        value = self.expr()
        self.take("end")
        return value

    def expr(self):
        sign = None
        if self.peek()[0] in "+-":
            sign = self.take()[0]
        value = self.term()
        if sign == "-":
            value = self._neg(value)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = self._add(value, rhs if op == "+" else self._neg(rhs))
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = self._mul(value, self.factor())
        return value

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            result = [1]
            for _ in range(int(tok[1])):
                result = self._mul(result, base)
            return result
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return self._trim([self.f.from_int(int(val))])
        if kind == "name":
            self.take()
            if val == "u" and self.f.n > 1:
                return self._trim([self.f.from_coeffs([0, 1])])
            if val == "T" and self.allow_t:
                return [0, 1]
            raise UnknownCoefficient(f"unknown symbol {val!r} at position {pos} in {self.text!r}")
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise PolySyntaxError(f"unexpected {val or 'end of input'!r}", self.text, pos)


def parse_coefficients(field, text: str) -> list[int]:
    return _Parser(field, text, allow_t=True).parse()


def parse_element(field, text: str) -> int:
    coeffs = _Parser(field, str(text), allow_t=False).parse()
    return coeffs[0] if coeffs else 0
