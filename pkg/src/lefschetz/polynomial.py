"""Monomials, term orders and sparse multivariate polynomials.

A monomial is a tuple of non-negative exponents ``(e1, ..., en)``; index 0 is
the variable ``x1``.  Python's tuple comparison is exactly the lexicographic
order with ``x1 > x2 > ... > xn``, which is what most of the library uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .field import QuadraticElement, as_element, field_of

Monomial = tuple


class RingMismatchError(ValueError):
    """Raised when polynomials from rings with different variable counts meet."""


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u: Monomial, v: Monomial) -> bool:
    """True if ``u`` divides ``v``."""
    for a, b in zip(u, v):
        if a > b:
            return False
    return True


def mono_quotient(v: Monomial, u: Monomial) -> Monomial:
    return tuple(b - a for a, b in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(u, v))


def mono_coprime(u: Monomial, v: Monomial) -> bool:
    for a, b in zip(u, v):
        if a and b:
            return False
    return True


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All degree-``d`` monomials in ``n`` variables, lex-descending."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return out


def compare_lex(u: Monomial, v: Monomial) -> int:
    """Return 1, 0 or -1 as ``u`` is greater than, equal to or less than ``v`` in lex."""
    if len(u) != len(v):
        raise RingMismatchError(f"monomials of lengths {len(u)} and {len(v)}")
    for a, b in zip(u, v):
        if a != b:
            return 1 if a > b else -1
    return 0


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class TermOrder:
    """A monomial order, identified by name; ``key`` sorts monomials ascending."""

    name: str

    @property
    def key(self) -> Callable[[Monomial], object]:
        if self.name == "lex":
            return tuple
        if self.name == "grevlex":
            return _grevlex_key
        raise ValueError(f"unknown term order {self.name!r}")

    def compare(self, u: Monomial, v: Monomial) -> int:
        if len(u) != len(v):
            raise RingMismatchError(f"monomials of lengths {len(u)} and {len(v)}")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def __str__(self) -> str:
        return self.name


LEX = TermOrder("lex")
GREVLEX = TermOrder("grevlex")


def _clean(terms: Mapping) -> dict:
    return {m: c for m, c in terms.items() if c}


class Polynomial:
    """An immutable polynomial in ``nvars`` variables with exact coefficients.

    ``terms`` is a tuple of ``(monomial, coefficient)`` pairs sorted
    lex-descending, so the lex leading term is ``terms[0]``.
    """

    __slots__ = ("nvars", "terms", "_dict", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()) -> None:
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise RingMismatchError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, 0) + as_element(coeff)
        self._init(nvars, _clean(acc))

    def _init(self, nvars: int, d: dict) -> None:
        self.nvars = nvars
        self._dict = d
        self.terms = tuple(sorted(d.items(), reverse=True, key=lambda t: t[0]))
        self._hash = None

    @classmethod
    def _from_dict(cls, nvars: int, d: dict) -> Polynomial:
        """Trusted constructor: ``d`` already has no zero coefficients."""
        obj = object.__new__(cls)
        obj._init(nvars, d)
        return obj

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._from_dict(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        c = as_element(c)
        return cls._from_dict(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> Polynomial:
        """The variable ``x_i`` (1-based, as in ``x1``)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"x{i} is not a variable of a ring with {nvars} variables")
        mono = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return cls._from_dict(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, c=1) -> Polynomial:
        c = as_element(c)
        return cls._from_dict(len(mono), {tuple(mono): c} if c else {})

    @classmethod
    def linear_form(cls, coefficients) -> Polynomial:
        n = len(coefficients)
        d = {}
        for i, c in enumerate(coefficients):
            c = as_element(c)
            if c:
                d[tuple(1 if k == i else 0 for k in range(n))] = c
        return cls._from_dict(n, d)

    def as_dict(self) -> dict:
        return dict(self._dict)

    def coefficient(self, mono: Monomial):
        return self._dict.get(tuple(mono), Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self._dict)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._dict}) <= 1

    def coefficients(self):
        return [c for _, c in self.terms]

    def field(self):
        return field_of(self.coefficients())

    @property
    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    @property
    def leading_coefficient(self):
        return self.leading_term()[1]

    def leading_term(self, order: TermOrder = LEX):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        if order is LEX or order.name == "lex":
            return self.terms[0]
        key = order.key
        return max(self.terms, key=lambda t: key(t[0]))

    def _check(self, other: Polynomial) -> None:
        if self.nvars != other.nvars:
            raise RingMismatchError(
                f"polynomials in {self.nvars} and {other.nvars} variables"
            )

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, QuadraticElement)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self._dict)
        for m, c in o._dict.items():
            v = d.get(m)
            if v is None:
                d[m] = c
            else:
                v = v + c
                if v:
                    d[m] = v
                else:
                    del d[m]
        return Polynomial._from_dict(self.nvars, d)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._from_dict(self.nvars, {m: -c for m, c in self._dict.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> Polynomial:
        c = as_element(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._from_dict(self.nvars, {m: c * v for m, v in self._dict.items()})

    def mul_term(self, mono: Monomial, c=1) -> Polynomial:
        """Multiply by the single term ``c * mono``."""
        c = as_element(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._from_dict(
            self.nvars,
            {tuple(a + b for a, b in zip(m, mono)): c * v for m, v in self._dict.items()},
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadraticElement)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        d: dict = {}
        for m1, c1 in self._dict.items():
            for m2, c2 in other._dict.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = d.get(m)
                d[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._from_dict(self.nvars, _clean(d))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QuadraticElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def monic(self, order: TermOrder = LEX) -> Polynomial:
        lc = self.leading_term(order)[1]
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def substitute(self, images: list[Polynomial]) -> Polynomial:
        """Replace ``x_i`` by ``images[i-1]``; all images must share one ring."""
        if len(images) != self.nvars:
            raise RingMismatchError(f"need {self.nvars} images, got {len(images)}")
        target = images[0].nvars if images else 0
        result = Polynomial.zero(target)
        powers: dict = {}
        for mono, c in self.terms:
            term = Polynomial.constant(target, c)
            for i, e in enumerate(mono):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._dict == other._dict
        if isinstance(other, (int, Fraction, QuadraticElement)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.nvars, frozenset(self._dict.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {str(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


def leading_term(f: Polynomial, order: TermOrder = LEX):
    """The ``(monomial, coefficient)`` pair of ``f`` that is largest under ``order``."""
    return f.leading_term(order)


def poly_arith(f: Polynomial, g, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        if isinstance(g, Polynomial):
            f._check(g)
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def format_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def _format_rational(c: Fraction) -> str:
    return str(c)


def format_coefficient(c) -> tuple[bool, str]:
    """Split a coefficient into (negative, text) for the polynomial printer.

    The text parses back under the expression grammar: quadratic elements with
    both parts nonzero are parenthesised, the square root prints as ``s``.
    """
    if isinstance(c, QuadraticElement):
        if c.q == 0:
            return format_coefficient(c.p)
        if c.p == 0:
            neg = c.q < 0
            q = abs(c.q)
            return neg, "s" if q == 1 else f"{q}*s"
        q = abs(c.q)
        qs = "s" if q == 1 else f"{q}*s"
        sign = "-" if c.q < 0 else "+"
        return False, f"({c.p} {sign} {qs})"
    c = Fraction(c)
    return c < 0, _format_rational(abs(c))


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    pieces = []
    for k, (mono, c) in enumerate(f.terms):
        neg, text = format_coefficient(c)
        m = format_monomial(mono)
        if m:
            body = m if text == "1" else f"{text}*{m}"
        else:
            body = text
        if k == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)
