"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` objects. Prime-field
scalars are :class:`GFElement` instances, which support the same arithmetic
operators so polynomial code never needs to know which field it runs over.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm

from .errors import BadEntry, InputError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class GFElement:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixing elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else GFElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else GFElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else GFElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else GFElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.v, self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return "GFElement(%d, %d)" % (self.v, self.p)

    def __str__(self):
        # symmetric representative reads better for small relations
        v = self.v if self.v <= self.p // 2 else self.v - self.p
        return str(v)


_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


@dataclass(frozen=True)
class ScalarField:
    """The field of scalars; ``p == 0`` means the rationals."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise InputError("field characteristic %r is not prime" % (self.p,))

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else "GF(%d)" % self.p

    def __call__(self, value):
        """Coerce an int, Fraction, GFElement or string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.p == 0:
            if isinstance(value, GFElement):
                raise BadEntry("cannot coerce %r into Q" % (value,))
            return Fraction(value)
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise BadEntry("element of GF(%d) given for GF(%d)" % (value.p, self.p))
            return value
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise BadEntry("denominator divisible by %d" % self.p)
        return GFElement(value.numerator * pow(value.denominator, -1, self.p), self.p)

    def parse(self, text: str):
        if not isinstance(text, str) or not _RATIONAL_RE.match(text):
            raise BadEntry("not an exact scalar: %r" % (text,))
        try:
            value = Fraction(text.replace(" ", ""))
        except ZeroDivisionError:
            raise BadEntry("zero denominator in %r" % (text,)) from None
        return self(value)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def to_json(self):
        return "Q" if self.p == 0 else {"p": self.p}

    def integer_vector(self, values) -> list[int]:
        """Scale a vector to integers without changing its span.

        Over Q the vector is multiplied by the lcm of its denominators; over
        GF(p) the canonical representatives in ``[0, p)`` are returned.
        """
        if self.p:
            return [int(v) for v in values]
        den = reduce(lcm, (Fraction(v).denominator for v in values), 1)
        return [int(Fraction(v) * den) for v in values]


QQ = ScalarField(0)


def field_from_json(obj) -> ScalarField:
    if obj in (None, "Q", "QQ"):
        return QQ
    if isinstance(obj, dict) and set(obj) == {"p"} and isinstance(obj["p"], int):
        return ScalarField(obj["p"])
    raise InputError("field must be \"Q\" or {\"p\": prime}, got %r" % (obj,))
