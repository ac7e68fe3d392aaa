"""Sparse polynomials in ``x_0..x_n, y_0..y_n`` over an exact field.

A monomial is a tuple of ``2(n+1)`` exponents: positions ``0..n`` hold the
``x`` exponents and positions ``n+1..2n+1`` the ``y`` exponents.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import AmbientMismatch, BadEntry
from ..fields import QQ, ScalarField


def mono_mul(a, b):
    return tuple(i + j for i, j in zip(a, b))


def mono_div(a, b):
    return tuple(i - j for i, j in zip(a, b))


def mono_divides(a, b):
    """True when ``a`` divides ``b``."""
    return all(i <= j for i, j in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(i, j) for i, j in zip(a, b))


def mono_coprime(a, b):
    return not any(i and j for i, j in zip(a, b))


class PolyRing:
    """The bigraded ring ``k[x_0..x_n, y_0..y_n]`` with ``size = n+1``."""

    def __init__(self, size: int, field: ScalarField = QQ):
        self.size = size
        self.field = field
        self.nvars = 2 * size
        self.names = ["x%d" % i for i in range(size)] + ["y%d" % i for i in range(size)]
        self._index = {name: k for k, name in enumerate(self.names)}

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.size, self.field) == (other.size, other.field)

    def __hash__(self):
        return hash((self.size, self.field))

    def __repr__(self):
        return "PolyRing(size=%d, field=%s)" % (self.size, self.field.name)

    @property
    def one_monomial(self):
        return (0,) * self.nvars

    def monomial(self, xs=(), ys=()):
        """Monomial from iterables of x-indices and y-indices (repeats allowed)."""
        e = [0] * self.nvars
        for i in xs:
            e[i] += 1
        for i in ys:
            e[self.size + i] += 1
        return tuple(e)

    def bidegree(self, m):
        return sum(m[: self.size]), sum(m[self.size:])

    def poly(self, terms) -> MultiPoly:
        return MultiPoly(self, terms)

    def term(self, m, c=1) -> MultiPoly:
        return MultiPoly(self, {m: c})

    def x(self, i) -> MultiPoly:
        return self.term(self.monomial(xs=[i]))

    def y(self, i) -> MultiPoly:
        return self.term(self.monomial(ys=[i]))

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def mono_str(self, m) -> str:
        parts = []
        for k, e in enumerate(m):
            if e == 1:
                parts.append(self.names[k])
            elif e > 1:
                parts.append("%s^%d" % (self.names[k], e))
        return "*".join(parts) if parts else "1"

    def parse_monomial(self, text: str):
        e = [0] * self.nvars
        text = text.strip()
        if text == "1":
            return tuple(e)
        for factor in text.split("*"):
            name, _, power = factor.strip().partition("^")
            if name not in self._index:
                raise BadEntry("unknown variable %r" % name)
            try:
                e[self._index[name]] += int(power) if power else 1
            except ValueError:
                raise BadEntry("bad exponent in %r" % factor) from None
        return tuple(e)

    _TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")

    def parse(self, text: str) -> MultiPoly:
        """Parse the canonical text form, e.g. ``x1*y1 - x0*y0`` or ``2/3*x2^2``."""
        text = text.strip()
        if not text:
            raise BadEntry("empty polynomial")
        terms: dict = {}
        pos = 0
        while pos < len(text):
            m = self._TERM_RE.match(text, pos)
            if not m or m.end() == pos:
                raise BadEntry("cannot parse polynomial %r" % text)
            sign, body = m.group(1), m.group(2).strip()
            pos = m.end()
            coef, mono = Fraction(1), body
            head, sep, rest = body.partition("*")
            if re.fullmatch(r"\d+(/\d+)?", head):
                coef = Fraction(head)
                mono = rest if sep else "1"
            c = self.field(-coef if sign == "-" else coef)
            mon = self.parse_monomial(mono)
            terms[mon] = terms.get(mon, 0) + c
        return MultiPoly(self, terms)


class MultiPoly:
    """Polynomial as a dict monomial -> nonzero coefficient; treated as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        F = ring.field
        self.terms = {m: F(c) for m, c in dict(terms).items() if c != 0}

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def _same(self, other):
        if other.ring != self.ring:
            raise AmbientMismatch("%r vs %r" % (self.ring, other.ring))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.ring, out)

    def __neg__(self):
        return MultiPoly._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero()
            return MultiPoly._raw(self.ring, {m: v * c for m, v in self.terms.items()})
        self._same(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MultiPoly._raw(self.ring, out)

    __rmul__ = __mul__

    def mul_term(self, mono, c=1) -> MultiPoly:
        c = self.ring.field(c)
        return MultiPoly._raw(self.ring, {mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def lead(self, order):
        """(leading monomial, leading coefficient) under ``order``."""
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def lm(self, order):
        return max(self.terms, key=order.key)

    def monic(self, order) -> MultiPoly:
        _, c = self.lead(order)
        return self * (1 / c)

    def is_bihomogeneous(self) -> bool:
        return len({self.ring.bidegree(m) for m in self.terms}) <= 1

    def to_str(self, order) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            neg = _is_negative(c)
            mag = -c if neg else c
            mono = self.ring.mono_str(m)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%s*%s" % (mag, mono)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        from .order import TermOrder

        return "MultiPoly(%s)" % self.to_str(TermOrder.natural(self.ring.size))


def _is_negative(c) -> bool:
    if isinstance(c, Fraction):
        return c < 0
    # GF(p): print the symmetric representative
    return c.v > c.p // 2
