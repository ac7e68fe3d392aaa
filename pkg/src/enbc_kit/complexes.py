"""NBC, reduced NBC and extended NBC complexes of a represented matroid."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import DegreeTooSmall, DependentInput, IndexOutOfRange, InputError
from .matroid import Matroid
from .unipoly import UniPoly


@dataclass(frozen=True)
class OrderSpec:
    """Total order ``perm[0] < perm[1] < ... < perm[n]`` on ``0..n``."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise InputError("order %r is not a permutation of 0..%d" % (perm, len(perm) - 1))
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "_pos", {v: k for k, v in enumerate(perm)})

    @classmethod
    def natural(cls, size: int) -> OrderSpec:
        return cls(tuple(range(size)))

    @classmethod
    def reversed_natural(cls, size: int) -> OrderSpec:
        return cls(tuple(range(size - 1, -1, -1)))

    def __len__(self):
        return len(self.perm)

    def position(self, i: int) -> int:
        try:
            return self._pos[i]
        except KeyError:
            raise IndexOutOfRange("%r is not in 0..%d" % (i, len(self.perm) - 1)) from None

    def precedes(self, i: int, j: int) -> bool:
        return self.position(i) < self.position(j)

    def __str__(self):
        return ",".join(map(str, self.perm))


def up_set(order: OrderSpec, i: int) -> frozenset:
    """All ``j`` with ``i`` weakly preceding ``j``; contains ``i``."""
    return frozenset(order.perm[order.position(i):])


class Vertex(NamedTuple):
    tag: str
    index: int

    def __str__(self):
        return "%s%d" % (self.tag, self.index)


def X(i: int) -> Vertex:
    return Vertex("x", i)


def Y(i: int) -> Vertex:
    return Vertex("y", i)


def _vertex_key(v):
    return (v.tag, v.index) if isinstance(v, Vertex) else ("", v)


def sorted_face(face) -> list:
    return sorted(face, key=_vertex_key)


class SimplicialComplex:
    """A complex stored by its facets over an explicit vertex universe.

    ``intervals`` optionally lists disjoint ``(low, high)`` pairs whose
    Boolean intervals partition the face set; face iteration then walks the
    intervals instead of deduplicating subsets of facets.
    """

    def __init__(self, facets, vertices=None, intervals=None):
        facets = {frozenset(F) for F in facets}
        maximal = [F for F in facets if not any(F < G for G in facets)]
        self.facets = sorted(maximal, key=lambda F: [_vertex_key(v) for v in sorted_face(F)])
        universe = set().union(*self.facets) if self.facets else set()
        if vertices is not None:
            if not universe <= set(vertices):
                raise InputError("facet vertices outside the vertex universe")
            universe = set(vertices)
        self.vertices = sorted_face(universe)
        self.intervals = intervals

    def __repr__(self):
        return "SimplicialComplex(%d facets on %d vertices)" % (len(self.facets), len(self.vertices))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.facets) == set(other.facets) and self.vertices == other.vertices

    def is_face(self, S) -> bool:
        S = frozenset(S)
        return any(S <= F for F in self.facets)

    def faces(self):
        """Iterate every face once (the empty face included)."""
        if self.intervals is not None:
            for low, high in self.intervals:
                free = sorted_face(high - low)
                for k in range(len(free) + 1):
                    for extra in combinations(free, k):
                        yield low | frozenset(extra)
            return
        if not self.facets:
            return
        seen = set()
        for F in self.facets:
            Fs = sorted_face(F)
            for k in range(len(Fs) + 1):
                for S in combinations(Fs, k):
                    S = frozenset(S)
                    if S not in seen:
                        seen.add(S)
                        yield S

    @property
    def dimension(self) -> int:
        return max((len(F) for F in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(F) for F in self.facets}) <= 1

    def f_vector(self) -> list[int]:
        """``f[i]`` = number of faces with ``i`` vertices."""
        counts = Counter(len(S) for S in self.faces())
        return [counts[i] for i in range(max(counts, default=-1) + 1)]

    def cone_points(self) -> set:
        if not self.facets:
            return set()
        return set.intersection(*(set(F) for F in self.facets))


def _nbc_sets(M: Matroid, allowed) -> list[frozenset]:
    # NBC sets are independent, so depth is bounded by the rank
    out = [frozenset()]
    frontier = [frozenset()]
    allowed = sorted(allowed)
    while frontier:
        nxt = []
        for S in frontier:
            top = max(S, default=-1)
            for e in allowed:
                if e <= top:
                    continue
                T = S | {e}
                if not M.contains_broken_circuit(T):
                    nxt.append(T)
        out.extend(nxt)
        frontier = nxt
    return out


def nbc_complex(M: Matroid) -> SimplicialComplex:
    return SimplicialComplex(_nbc_sets(M, range(M.size)), vertices=range(M.size))


def rnbc_complex(M: Matroid) -> SimplicialComplex:
    return SimplicialComplex(_nbc_sets(M, range(1, M.size)), vertices=range(1, M.size))


def rnbc_faces(M: Matroid) -> list[frozenset]:
    """Faces of the reduced NBC complex by size, then lexicographically."""
    return sorted(_nbc_sets(M, range(1, M.size)), key=lambda F: (len(F), sorted(F)))


def whitney_poly(cx: SimplicialComplex, top_degree: int) -> UniPoly:
    """``sum_i (-1)^i f_i q^(top_degree - i)``."""
    f = cx.f_vector()
    if len(f) - 1 > top_degree:
        raise DegreeTooSmall("complex has faces with %d vertices, top degree %d" % (len(f) - 1, top_degree))
    coeffs = [0] * (top_degree + 1)
    for i, fi in enumerate(f):
        coeffs[top_degree - i] = (-1) ** i * fi
    return UniPoly(coeffs)


def lex_max_basis(M: Matroid, order: OrderSpec, F) -> frozenset:
    """The basis containing independent ``F`` that is lex-largest for ``order``.

    ``i`` is kept when it lies in ``F`` or raises the rank of
    ``F`` together with the elements strictly after ``i``.
    """
    F = frozenset(F)
    if not M.is_independent(F):
        raise DependentInput("%s is dependent" % sorted(F))
    if len(order) != M.size:
        raise InputError("order has %d elements, matroid has %d" % (len(order), M.size))
    out = set(F)
    for i in range(M.size):
        if i in F:
            continue
        up = up_set(order, i)
        if M.rank(up | F) > M.rank((up - {i}) | F):
            out.add(i)
    return frozenset(out)


def enbc_facet(M: Matroid, order: OrderSpec, F) -> frozenset:
    F = frozenset(F)
    L = lex_max_basis(M, order, F)
    return frozenset({Y(i) for i in F} | {X(j) for j in L - F} | {Y(0)})


def enbc_vertices(size: int) -> list[Vertex]:
    return [X(i) for i in range(size)] + [Y(i) for i in range(size)]


def jf_partition(M: Matroid, order: OrderSpec) -> dict[frozenset, tuple[frozenset, frozenset]]:
    """Map each reduced-NBC face ``F`` to its interval ``(y-part of F, facet of F)``."""
    return {F: (frozenset(Y(i) for i in F), enbc_facet(M, order, F)) for F in rnbc_faces(M)}


def enbc_complex(M: Matroid, order: OrderSpec | None = None) -> SimplicialComplex:
    if order is None:
        order = OrderSpec.natural(M.size)
    parts = jf_partition(M, order)
    facets = [high for _, high in parts.values()]
    return SimplicialComplex(facets, vertices=enbc_vertices(M.size), intervals=list(parts.values()))


def bigraded_f_vector(cx: SimplicialComplex) -> dict[tuple[int, int], int]:
    """Counts of faces by (number of x-vertices, number of y-vertices)."""
    counts = Counter()
    for S in cx.faces():
        a = sum(1 for v in S if v.tag == "x")
        counts[(a, len(S) - a)] += 1
    return dict(sorted(counts.items()))
