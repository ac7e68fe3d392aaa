"""Bigraded Hilbert function of ``S/I`` by direct counting or linear algebra.

For a monomial ideal the standard monomials of each bidegree are counted.
For a polynomial ideal with bihomogeneous generators, ``dim I_(a,b)`` is the
exact rank of the matrix of all monomial multiples of the generators landing
in bidegree ``(a, b)``; no Groebner basis is involved.
"""
from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

from ..errors import ResourceLimit
from ..kernels import echelon_rank
from .ideals import MonomialIdeal, PolyIdeal
from .order import TermOrder
from .polys import PolyRing, mono_mul

MAX_COLUMNS = 200_000


def monomials_of_bidegree(ring: PolyRing, a: int, b: int) -> list:
    out = []
    ys_all = list(combinations_with_replacement(range(ring.size), b))
    for xs in combinations_with_replacement(range(ring.size), a):
        for ys in ys_all:
            out.append(ring.monomial(xs, ys))
    return out


def bidegree_dimension(ring: PolyRing, a: int, b: int) -> int:
    n1 = ring.size
    return comb(a + n1 - 1, a) * comb(b + n1 - 1, b)


def _monomial_table(ideal: MonomialIdeal, bound: int) -> dict:
    ring = ideal.ring
    table = {}
    for a in range(bound + 1):
        for b in range(bound + 1 - a):
            table[(a, b)] = sum(1 for m in monomials_of_bidegree(ring, a, b) if m not in ideal)
    return table


def _integer_terms(field, poly):
    monos = list(poly.terms)
    vals = field.integer_vector([poly.terms[m] for m in monos])
    return list(zip(monos, vals))


def _bihomogeneous_generators(ideal: PolyIdeal) -> list:
    ring = ideal.ring
    gens = []
    for g in ideal.generators:
        if not g:
            continue
        degs = {ring.bidegree(m) for m in g.terms}
        if len(degs) != 1:
            raise ValueError("generator %s is not bihomogeneous" % g.to_str(TermOrder.natural(ring.size)))
        gens.append((degs.pop(), _integer_terms(ring.field, g)))
    return gens


def bidegree_matrix(ideal: PolyIdeal, a: int, b: int, gens=None, max_columns: int = MAX_COLUMNS):
    """Sparse rows spanning ``I_(a,b)`` and the column count."""
    ring = ideal.ring
    gens = _bihomogeneous_generators(ideal) if gens is None else gens
    cols = monomials_of_bidegree(ring, a, b)
    if len(cols) > max_columns:
        raise ResourceLimit("bidegree (%d,%d) has %d monomials" % (a, b, len(cols)))
    # descending term order, so pivots follow leading terms
    cols.sort(key=TermOrder.natural(ring.size).key, reverse=True)
    index = {m: k for k, m in enumerate(cols)}
    rows = []
    for (ga, gb), terms in gens:
        if ga > a or gb > b:
            continue
        for mult in monomials_of_bidegree(ring, a - ga, b - gb):
            rows.append(sorted((index[mono_mul(m, mult)], v) for m, v in terms))
    return rows, len(cols)


def _poly_table(ideal: PolyIdeal, bound: int, max_columns: int) -> dict:
    gens = _bihomogeneous_generators(ideal)
    table = {}
    for a in range(bound + 1):
        for b in range(bound + 1 - a):
            rows, ncols = bidegree_matrix(ideal, a, b, gens, max_columns)
            table[(a, b)] = ncols - (echelon_rank(rows, ideal.ring.field.p) if rows else 0)
    return table


def bigraded_hilbert_function(src, bound: int, max_columns: int = MAX_COLUMNS) -> dict:
    """``{(a, b): dim (S/I)_(a,b)}`` for all ``a + b <= bound``."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if isinstance(src, MonomialIdeal):
        return _monomial_table(src, bound)
    if isinstance(src, PolyIdeal):
        return _poly_table(src, bound, max_columns)
    raise TypeError("expected MonomialIdeal or PolyIdeal, got %r" % type(src).__name__)
