"""Ideals of the reciprocal graph and their monomial degenerations."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..complexes import (OrderSpec, SimplicialComplex, Vertex, rnbc_faces, sorted_face, up_set)
from ..errors import NotAGenerator
from ..matroid import Matroid
from .groebner import reduce
from .order import TermOrder
from .polys import MultiPoly, PolyRing, mono_divides


def minimalize(monomials) -> frozenset:
    """The divisibility-minimal elements of a set of monomials."""
    ms = sorted(set(monomials), key=sum)
    out = []
    for m in ms:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return frozenset(out)


class MonomialIdeal:
    """Monomial ideal kept as its unique minimal generating set."""

    def __init__(self, ring: PolyRing, generators):
        self.ring = ring
        self.generators = minimalize(generators)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring.size == other.ring.size and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __len__(self):
        return len(self.generators)

    def __contains__(self, m):
        return any(mono_divides(g, m) for g in self.generators)

    def sorted_generators(self, order) -> list:
        return sorted(self.generators, key=order.key, reverse=True)

    def to_strs(self, order) -> list[str]:
        return [self.ring.mono_str(m) for m in self.sorted_generators(order)]

    def __repr__(self):
        return "MonomialIdeal(%s)" % ", ".join(sorted(self.ring.mono_str(m) for m in self.generators))


@dataclass(frozen=True)
class PolyIdeal:
    ring: PolyRing
    generators: tuple
    labels: tuple = ()

    def __len__(self):
        return len(self.generators)


def polynomial_ring(M: Matroid) -> PolyRing:
    return PolyRing(M.size, M.field)


def x_relation(ring: PolyRing, C) -> MultiPoly:
    return ring.poly({ring.monomial(xs=[i]): a for i, a in C.coeffs.items()})


def y_relation(ring: PolyRing, C) -> MultiPoly:
    return ring.poly({ring.monomial(ys=[j for j in C.support if j != i]): a for i, a in C.coeffs.items()})


def binomial(ring: PolyRing, i: int) -> MultiPoly:
    """``x_i y_i - x_0 y_0``."""
    return ring.poly({ring.monomial([i], [i]): 1, ring.monomial([0], [0]): -1})


def gamma_ideal_generators(M: Matroid) -> PolyIdeal:
    """Circuit x-relations, circuit y-relations, and ``x_i y_i - x_0 y_0``."""
    ring = polynomial_ring(M)
    gens, labels = [], []
    for C in M.circuits:
        gens.append(x_relation(ring, C))
        labels.append(("x-circuit", C.support))
    for C in M.circuits:
        gens.append(y_relation(ring, C))
        labels.append(("y-circuit", C.support))
    for i in range(1, M.size):
        gens.append(binomial(ring, i))
        labels.append(("binomial", (i,)))
    return PolyIdeal(ring, tuple(gens), tuple(labels))


def _x_condition(M: Matroid, order: OrderSpec, j: int, I) -> bool:
    up = up_set(order, j)
    return M.rank(up | I) == M.rank((up - {j}) | I)


def claimed_initial_generators(M: Matroid, order: OrderSpec, exhaustive: bool = False) -> MonomialIdeal:
    """Broken-circuit y-products and the qualifying ``x_j * prod(y_i, i in I)``.

    By default ``I`` runs over reduced-NBC faces only, since any other ``I``
    contains a broken circuit already in the list. ``exhaustive=True`` scans
    every ``I`` in ``{1..n}`` instead.
    """
    ring = polynomial_ring(M)
    gens = [ring.monomial(ys=B) for B in M.broken_circuits]
    if exhaustive:
        candidates = [frozenset(S) for k in range(M.size) for S in combinations(range(1, M.size), k)]
    else:
        candidates = rnbc_faces(M)
    for I in candidates:
        for j in range(M.size):
            if _x_condition(M, order, j, I):
                gens.append(ring.monomial([j], sorted(I)))
    return MonomialIdeal(ring, gens)


def vertex_variable(ring: PolyRing, v) -> int:
    """Exponent position of a vertex; bare integers are read as ``y`` vertices."""
    if isinstance(v, Vertex):
        return v.index if v.tag == "x" else ring.size + v.index
    return ring.size + v


def minimal_nonfaces(cx: SimplicialComplex) -> list[frozenset]:
    faces = set(cx.faces())
    out = set()
    for G in faces:
        for v in cx.vertices:
            if v in G:
                continue
            A = G | {v}
            if A in faces:
                continue
            if all((A - {u}) in faces for u in A):
                out.add(A)
    return sorted(out, key=lambda A: (len(A), [str(v) for v in sorted_face(A)]))


def stanley_reisner_ideal(cx: SimplicialComplex, ring: PolyRing) -> MonomialIdeal:
    gens = []
    for A in minimal_nonfaces(cx):
        e = [0] * ring.nvars
        for v in A:
            e[vertex_variable(ring, v)] += 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


def initial_ideal(gb, order) -> MonomialIdeal:
    gb = [g for g in gb if g]
    if not gb:
        raise ValueError("initial_ideal needs a nonempty basis to know the ring")
    return MonomialIdeal(gb[0].ring, [g.lm(order) for g in gb])


def _split_generator(ring: PolyRing, g):
    xs = [i for i in range(ring.size) if g[i]]
    ys = [i for i in range(ring.size) if g[ring.size + i]]
    if any(e > 1 for e in g):
        raise NotAGenerator("%s is not squarefree" % ring.mono_str(g))
    return xs, frozenset(ys)


def witness_combination(M: Matroid, order: OrderSpec, g) -> list[tuple[MultiPoly, MultiPoly]]:
    """Cofactors and generators ``[(c_k, f_k)]`` whose sum ``c_k f_k`` leads with ``g``.

    Broken-circuit products come from the circuit's y-relation; ``x_j y_I``
    comes from the circuit x-relation through ``j`` times ``y_I`` with each
    ``x_k y_k`` outside the up-set of ``j`` traded for ``x_0 y_0``.
    """
    ring = polynomial_ring(M)
    xs, I = _split_generator(ring, g)
    if not xs:
        for C in M.circuits:
            if frozenset(C.support[1:]) == I:
                return [(ring.term(ring.one_monomial), y_relation(ring, C))]
        raise NotAGenerator("%s is not a broken-circuit product" % ring.mono_str(g))
    if len(xs) != 1 or 0 in I:
        raise NotAGenerator("%s has the wrong shape" % ring.mono_str(g))
    (j,) = xs
    if j in I:
        return [(ring.term(ring.monomial(ys=sorted(I - {j}))), binomial(ring, j))]
    if not _x_condition(M, order, j, I):
        raise NotAGenerator("%s fails the rank condition" % ring.mono_str(g))
    up = up_set(order, j)
    allowed = up | I
    C = next(C for C in M.circuits if j in C.support and set(C.support) <= allowed)
    terms = [(ring.term(ring.monomial(ys=sorted(I))), x_relation(ring, C))]
    for k in C.support:
        if k in up:
            continue
        # k precedes j, so k lies in I
        cof = ring.term(ring.monomial(ys=sorted(I - {k})), -C.coeffs[k])
        terms.append((cof, binomial(ring, k)))
    return terms


def leading_witness(M: Matroid, order: OrderSpec, g) -> MultiPoly:
    """An explicit element of the ideal whose leading monomial is ``g``."""
    ring = polynomial_ring(M)
    out = ring.zero()
    for cof, gen in witness_combination(M, order, g):
        out = out + cof * gen
    return out


def in_ideal(f: MultiPoly, gb, order: TermOrder) -> bool:
    return not reduce(f, gb, order)
