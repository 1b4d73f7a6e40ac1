"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is ignored)::

    expr        := ['-'] term (('+' | '-') term)*
    term        := factor ('*' factor)*
    factor      := atom ('^' nat)*
    atom        := coefficient | var | '(' expr ')'
    coefficient := int ['/' int] | 's'
    var         := 'x' nat

``s`` stands for the square root of ``m`` when the field is Q(sqrt m).
Implicit multiplication is rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .field import Field, QuadraticElement
from .polynomial import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = "") -> None:
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))


_TOKEN = re.compile(r"\s*(?:(x\d+)|(\d+)|(s)|([-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, text)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("var", m.group(1), start))
        elif m.group(2):
            tokens.append(("int", m.group(2), start))
        elif m.group(3):
            tokens.append(("s", "s", start))
        else:
            tokens.append((m.group(4), m.group(4), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int, field: Field) -> None:
        self.text = text
        self.n = nvars
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = {"int": "an integer", "end": "end of input"}.get(kind, repr(kind))
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", tok[2], self.text)
        self.i += 1
        return tok

    def error(self, message: str):
        raise ParseError(message, self.peek()[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("var", "int", "s", "("):
                self.error("implicit multiplication is not allowed")
            self.error(f"unexpected {tok[1]!r}")
        return result

    def expr(self) -> Polynomial:
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        result = self.atom()
        while self.peek()[0] == "^":
            self.take()
            e = int(self.take("int")[1])
            result = result ** e
        return result

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            c = Fraction(int(value))
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", den_tok[2], self.text)
                c = Fraction(int(value), den)
            return Polynomial.constant(self.n, c)
        if kind == "s":
            self.take()
            if not self.field.is_quadratic:
                raise ParseError("'s' (square root) used over the rational field", pos, self.text)
            return Polynomial.constant(self.n, self.field.sqrt())
        if kind == "var":
            self.take()
            i = int(value[1:])
            if not 1 <= i <= self.n:
                raise ParseError(f"unknown variable {value} (ring has x1..x{self.n})", pos, self.text)
            return Polynomial.variable(self.n, i)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {value!r}")


def parse_polynomial(text: str, nvars: int, field: Field | str = Field()) -> Polynomial:
    """Parse ``text`` into a polynomial in ``x1..x{nvars}`` over ``field``."""
    if isinstance(field, str):
        field = Field.parse(field)
    f = _Parser(text, nvars, field).parse()
    if field.is_quadratic:
        f = Polynomial._from_dict(
            nvars,
            {
                m: c if isinstance(c, QuadraticElement) else QuadraticElement(c, 0, field.m)
                for m, c in f.terms
            },
        )
    return f


def parse_coefficient(text: str, field: Field | str = Field()):
    """Parse a constant expression such as ``"4/3"`` or ``"(4/3)*s"``."""
    if isinstance(field, str):
        field = Field.parse(field)
    f = parse_polynomial(text, 1, field)
    if not f:
        return field.element(0)
    if len(f) != 1 or any(f.terms[0][0]):
        raise ParseError("expected a constant", 0, text)
    return f.terms[0][1]
