"""Exact coefficient fields: the rationals and real quadratic extensions Q(sqrt m).

Rationals are plain :class:`fractions.Fraction` values.  Elements of
Q(sqrt m) are :class:`QuadraticElement` instances holding ``p + q*sqrt(m)``
with rational ``p`` and ``q``.  Mixed arithmetic between the two works in the
obvious way (a rational is an element of every extension).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union


class FieldMismatchError(ValueError):
    """Raised when elements of two different quadratic extensions are combined."""


def is_squarefree(m: int) -> bool:
    if m < 1:
        return False
    k = 2
    while k * k <= m:
        if m % (k * k) == 0:
            return False
        k += 1
    return True


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


_set = object.__setattr__


class QuadraticElement:
    """The element ``p + q*sqrt(m)`` of the real quadratic field Q(sqrt m)."""

    __slots__ = ("p", "q", "m")

    def __init__(self, p=0, q=0, m: int = 3) -> None:
        if m < 2 or not is_squarefree(m):
            raise ValueError(f"m must be a squarefree integer >= 2, got {m}")
        self.p = _rational(p)
        self.q = _rational(q)
        self.m = m

    @classmethod
    def _make(cls, p: Fraction, q: Fraction, m: int) -> QuadraticElement:
        obj = object.__new__(cls)
        _set(obj, "p", p)
        _set(obj, "q", q)
        _set(obj, "m", m)
        return obj

    def __setattr__(self, name, value):
        if hasattr(self, "m"):
            raise AttributeError("QuadraticElement is immutable")
        object.__setattr__(self, name, value)

    def _coerce(self, other):
        if isinstance(other, QuadraticElement):
            if other.m != self.m:
                raise FieldMismatchError(
                    f"cannot combine elements of Q(sqrt {self.m}) and Q(sqrt {other.m})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticElement._make(Fraction(other), Fraction(0), self.m)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement._make(self.p + o.p, self.q + o.q, self.m)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement._make(self.p - o.p, self.q - o.q, self.m)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticElement._make(self.p * other, self.q * other, self.m)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement._make(
            self.p * o.p + self.m * self.q * o.q, self.p * o.q + self.q * o.p, self.m
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticElement:
        return QuadraticElement._make(self.p, -self.q, self.m)

    def norm(self) -> Fraction:
        return self.p * self.p - self.m * self.q * self.q

    def inverse(self) -> QuadraticElement:
        n = self.norm()
        if n == 0:
            # the norm form is anisotropic for squarefree m >= 2
            raise ZeroDivisionError("division by zero in Q(sqrt %d)" % self.m)
        return QuadraticElement._make(self.p / n, -self.q / n, self.m)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadraticElement._make(Fraction(1), Fraction(0), self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __neg__(self):
        return QuadraticElement._make(-self.p, -self.q, self.m)

    def __pos__(self):
        return self

    def __bool__(self) -> bool:
        return bool(self.p) or bool(self.q)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadraticElement):
            return self.m == other.m and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.m))

    def is_rational(self) -> bool:
        return self.q == 0

    def __repr__(self) -> str:
        return f"QuadraticElement({self.p}, {self.q}, m={self.m})"

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        root = f"sqrt({self.m})"
        q = "" if self.q == 1 else "-" if self.q == -1 else f"{self.q}*"
        if self.p == 0:
            return f"{q}{root}"
        sign = "+" if self.q > 0 else "-"
        qa = abs(self.q)
        q = "" if qa == 1 else f"{qa}*"
        return f"{self.p} {sign} {q}{root}"


FieldElement = Union[Fraction, QuadraticElement]


@dataclass(frozen=True)
class Field:
    """A coefficient field: ``Field()`` is Q, ``Field(m)`` is Q(sqrt m)."""

    m: int | None = None

    def __post_init__(self) -> None:
        if self.m is not None and (self.m < 2 or not is_squarefree(self.m)):
            raise ValueError(f"m must be a squarefree integer >= 2, got {self.m}")

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse ``"q"`` or ``"quad:<m>"``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rational"):
            return cls()
        if text.startswith("quad:"):
            return cls(int(text[5:]))
        raise ValueError(f"unknown field {text!r}; expected 'q' or 'quad:<m>'")

    @property
    def is_quadratic(self) -> bool:
        return self.m is not None

    def __str__(self) -> str:
        return "q" if self.m is None else f"quad:{self.m}"

    def element(self, p=0, q=0):
        if self.m is None:
            if q:
                raise ValueError("irrational part given for the rational field")
            return _rational(p)
        return QuadraticElement(p, q, self.m)

    def sqrt(self) -> QuadraticElement:
        if self.m is None:
            raise ValueError("the rational field has no distinguished square root")
        return QuadraticElement(0, 1, self.m)

    def contains(self, x) -> bool:
        if isinstance(x, (int, Fraction)):
            return True
        if isinstance(x, QuadraticElement):
            return x.m == self.m
        return False


def field_of(values) -> Field:
    """The field the values live in: Q(sqrt m) if any value is a QuadraticElement."""
    m = None
    for v in values:
        if isinstance(v, QuadraticElement):
            if m is None:
                m = v.m
            elif m != v.m:
                raise FieldMismatchError(f"values from Q(sqrt {m}) and Q(sqrt {v.m})")
    return Field(m)


def as_element(x):
    """Coerce ints and strings to Fraction; pass field elements through."""
    if isinstance(x, (Fraction, QuadraticElement)):
        return x
    return _rational(x)


def field_arith(a, b, op: str):
    """Exact ``a op b`` for op in add, sub, mul, div."""
    a, b = as_element(a), as_element(b)
    if isinstance(a, QuadraticElement) and isinstance(b, QuadraticElement) and a.m != b.m:
        raise FieldMismatchError(f"Q(sqrt {a.m}) vs Q(sqrt {b.m})")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")
