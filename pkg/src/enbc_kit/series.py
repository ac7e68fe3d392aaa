"""Bivariate rational functions in (q, t), Hilbert series, bidegree and K-classes."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb

from .complexes import SimplicialComplex
from .errors import DegreeMismatch, EmptyComplex, NonUnitDenominator, PoleAtZero, SignViolation
from .unipoly import UniPoly


class BivarPoly:
    """Sparse polynomial ``{(deg_q, deg_t): coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, c) -> BivarPoly:
        return cls({(0, 0): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivarPoly(out)

    def __neg__(self):
        return BivarPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            return BivarPoly({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                out[(a + c, b + d)] = out.get((a + c, b + d), 0) + u * v
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BivarPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def leading(self):
        k = max(self.terms)
        return k, self.terms[k]

    def divide_exact(self, other: BivarPoly):
        """Quotient if ``other`` divides ``self`` exactly, else None."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        (lq, lt), lc = other.leading()
        rem = BivarPoly(self.terms)
        quo: dict = {}
        while rem:
            (a, b), c = rem.leading()
            if a < lq or b < lt:
                return None
            k = (a - lq, b - lt)
            f = c / lc
            quo[k] = quo.get(k, 0) + f
            rem = rem - other * BivarPoly({k: f})
        return BivarPoly(quo)

    def subs_q0(self) -> BivarPoly:
        return BivarPoly({k: v for k, v in self.terms.items() if k[0] == 0})

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda k: (k[0] + k[1], k[0]), reverse=True):
            c = self.terms[(a, b)]
            factors = [v if e == 1 else "%s^%d" % (v, e) for v, e in (("q", a), ("t", b)) if e]
            mono = "*".join(factors)
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else "%s*%s" % (mag, mono))
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "BivarPoly(%s)" % self.to_str()


ONE = BivarPoly.const(1)
Q = BivarPoly({(1, 0): 1})
T = BivarPoly({(0, 1): 1})
ONE_MINUS_Q = BivarPoly({(0, 0): 1, (1, 0): -1})
ONE_MINUS_T = BivarPoly({(0, 0): 1, (0, 1): -1})
ONE_MINUS_QT = BivarPoly({(0, 0): 1, (1, 1): -1})
_CANCEL = (Q, T, ONE_MINUS_Q, ONE_MINUS_T, ONE_MINUS_QT)


class BivarRational:
    """``num / den`` with the factors q, t, 1-q, 1-t, 1-qt cancelled.

    Equality is decided by cross-multiplication, so cancellation only has to
    keep sizes down, not produce a unique form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, BivarPoly) else BivarPoly.const(num)
        den = ONE if den is None else (den if isinstance(den, BivarPoly) else BivarPoly.const(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = BivarPoly(), ONE
            return
        for f in _CANCEL:
            while True:
                dq = den.divide_exact(f)
                if dq is None:
                    break
                nq = num.divide_exact(f)
                if nq is None:
                    break
                num, den = nq, dq
        c = den.constant_term()
        if c == 0:
            c = den.leading()[1]
        if c != 1:
            num, den = num * (1 / c), den * (1 / c)
        self.num, self.den = num, den

    @staticmethod
    def _lift(x):
        return x if isinstance(x, BivarRational) else BivarRational(x)

    def __eq__(self, other):
        if not isinstance(other, (BivarRational, BivarPoly, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other):
        other = self._lift(other)
        if self.den == other.den:
            return BivarRational(self.num + other.num, self.den)
        return BivarRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return BivarRational(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return BivarRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return BivarRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return BivarRational(self.den ** (-k), self.num ** (-k))
        return BivarRational(self.num ** k, self.den ** k)

    def to_str(self) -> str:
        return "%s / %s" % (_paren(self.num.to_str()), _paren(self.den.to_str()))

    def __repr__(self):
        return "BivarRational(%s)" % self.to_str()


def _paren(s: str) -> str:
    return "(%s)" % s if (" " in s) else s


def q_ratio() -> BivarRational:
    """``q / (1 - q)``."""
    return BivarRational(Q, ONE_MINUS_Q)


def t_ratio() -> BivarRational:
    """``t / (1 - t)``."""
    return BivarRational(T, ONE_MINUS_T)


def sr_hilbert_series(fv: dict) -> BivarRational:
    """``sum f_ab (q/(1-q))^a (t/(1-t))^b`` over a bigraded face count."""
    if not fv:
        return BivarRational(0)
    A = max(a for a, _ in fv)
    B = max(b for _, b in fv)
    num = BivarPoly()
    for (a, b), f in fv.items():
        num = num + (Q ** a) * (ONE_MINUS_Q ** (A - a)) * (T ** b) * (ONE_MINUS_T ** (B - b)) * f
    return BivarRational(num, (ONE_MINUS_Q ** A) * (ONE_MINUS_T ** B))


def closed_hilbert_series(chi: UniPoly, r: int) -> BivarRational:
    """``1/(1-qt) * (t/(t-1))^(r+1) * chi((t-1)/((1-q) t))``."""
    if chi.degree != r + 1:
        raise DegreeMismatch("chi has degree %d, expected %d" % (chi.degree, r + 1))
    z = BivarRational(T - ONE, ONE_MINUS_Q * T)
    acc = BivarRational(0)
    for c in reversed(chi.coeffs):
        acc = acc * z + BivarRational(c)
    return acc * BivarRational(T, T - ONE) ** (r + 1) / BivarRational(ONE_MINUS_QT)


def wbar_hilbert_series(chi_bar: UniPoly, r: int) -> BivarRational:
    """``sum_i wbar_i (1 + q/(1-q))^(r+1-i) (t/(1-t))^i (1 + t/(1-t))``."""
    wbar = reduced_whitney_numbers(chi_bar, r)
    qpart = 1 + q_ratio()
    tpart = 1 + t_ratio()
    out = BivarRational(0)
    for i, w in enumerate(wbar):
        out = out + qpart ** (r + 1 - i) * t_ratio() ** i * tpart * w
    return out


def specialize_q0(H: BivarRational) -> BivarRational:
    den = H.den.subs_q0()
    if not den:
        raise PoleAtZero("denominator vanishes at q = 0")
    return BivarRational(H.num.subs_q0(), den)


def whitney_numbers(chi: UniPoly, r: int) -> list[int]:
    """``w_i`` with ``(-1)^i w_i`` the coefficient of ``q^(r+1-i)``."""
    return [int((-1) ** i * chi.coeff(r + 1 - i)) for i in range(r + 2)]


def reduced_whitney_numbers(chi_bar: UniPoly, r: int) -> list[int]:
    return [int((-1) ** i * chi_bar.coeff(r - i)) for i in range(r + 1)]


def orlik_terao_series(w) -> BivarRational:
    """``sum_i w_i (t/(1-t))^i``."""
    out = BivarRational(0)
    for i, wi in enumerate(w):
        out = out + t_ratio() ** i * wi
    return out


def expand(H: BivarRational, bound: int) -> dict:
    """Taylor coefficients ``{(a, b): h_ab}`` of ``H`` at the origin, ``a + b <= bound``."""
    d0 = H.den.constant_term()
    if d0 == 0:
        raise NonUnitDenominator("denominator has zero constant term")
    den = H.den.terms
    inv: dict = {}
    for k in range(bound + 1):
        for a in range(k + 1):
            b = k - a
            if k == 0:
                inv[(0, 0)] = 1 / d0
                continue
            s = Fraction(0)
            for (i, j), c in den.items():
                if (i, j) != (0, 0) and i <= a and j <= b:
                    s += c * inv[(a - i, b - j)]
            inv[(a, b)] = -s / d0
    out = {}
    for k in range(bound + 1):
        for a in range(k + 1):
            b = k - a
            s = Fraction(0)
            for (i, j), c in H.num.terms.items():
                if i <= a and j <= b:
                    s += c * inv[(a - i, b - j)]
            out[(a, b)] = s
    return dict(sorted(out.items()))


class CohomClass(dict):
    """``{(a, b): c}`` meaning ``sum c [P^a x P^b]``."""

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for (a, b), c in sorted(self.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            parts.append(("%s" % ("" if c == 1 else c)) + "[P^%dxP^%d]" % (a, b))
        return " + ".join(parts)


class KClass(dict):
    """``{m: c}`` meaning ``sum c [P^m]``."""

    def __str__(self):
        items = [(m, c) for m, c in sorted(self.items(), reverse=True) if c]
        if not items:
            return "0"
        parts = []
        for m, c in items:
            body = ("" if abs(c) == 1 else str(abs(c))) + "[P^%d]" % m
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def cohomology_class_from_complex(cx: SimplicialComplex) -> CohomClass:
    """Sum of ``[P^(x(F)-1) x P^(y(F)-1)]`` over faces of maximal dimension."""
    if not cx.facets:
        raise EmptyComplex("complex has no facets")
    top = max(len(F) for F in cx.facets)
    counts = Counter()
    for F in cx.facets:
        if len(F) == top:
            a = sum(1 for v in F if v.tag == "x")
            counts[(a - 1, len(F) - a - 1)] += 1
    return CohomClass(counts)


def huh_katz_class(chi_bar: UniPoly, r: int) -> CohomClass:
    if chi_bar.degree != r:
        raise DegreeMismatch("reduced chi has degree %d, expected %d" % (chi_bar.degree, r))
    out = CohomClass()
    for i, w in enumerate(reduced_whitney_numbers(chi_bar, r)):
        if w < 0:
            raise SignViolation("reduced Whitney number %d is negative (%d)" % (i, w))
        if w:
            out[(r - i, i)] = w
    return out


def k_class_reciprocal_plane(chi: UniPoly, r: int) -> KClass:
    """``sum_i w_(i+1) [(k*)^i]`` with ``[(k*)^a] = sum_j (-1)^j C(a+1, j) [P^(a-j)]``."""
    if chi.degree != r + 1:
        raise DegreeMismatch("chi has degree %d, expected %d" % (chi.degree, r + 1))
    w = whitney_numbers(chi, r)
    out = Counter()
    for i in range(r + 1):
        for j in range(i + 1):
            out[i - j] += w[i + 1] * (-1) ** j * comb(i + 1, j)
    return KClass({m: c for m, c in sorted(out.items()) if c})
