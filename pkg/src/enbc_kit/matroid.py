"""Represented matroids: rank oracle, flats, Moebius function, circuits.

The matroid is always built from a matrix whose column ``j`` is the linear
form ``x_j``; circuits carry the linear relation among their columns, which
the ideal generators need.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import EmptyMatrix, IndexOutOfRange, LoopDetected, ParallelDetected, BadEntry
from .fields import QQ, ScalarField
from .kernels import echelon_rank
from .linalg import nullspace
from .unipoly import UniPoly


@dataclass(frozen=True)
class RepMatrix:
    """A ``d x (n+1)`` matrix over ``field``; entries are field elements."""

    field: ScalarField
    rows: tuple

    @classmethod
    def from_rows(cls, rows, field: ScalarField = QQ) -> RepMatrix:
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise EmptyMatrix("matrix has no rows or no columns")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise BadEntry("matrix rows have different lengths")
        return cls(field, tuple(tuple(field(v) for v in r) for r in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)


@dataclass(frozen=True)
class CircuitData:
    """A circuit with its relation ``sum(coeffs[i] * column_i) == 0``."""

    support: tuple
    coeffs: dict

    @property
    def least(self) -> int:
        return self.support[0]


class Matroid:
    """Matroid of the columns of a :class:`RepMatrix`.

    ``size`` is ``n+1``; ``rank_total`` is ``r+1``; ``r`` is the projective
    dimension used throughout the series formulas.
    """

    def __init__(self, matrix: RepMatrix):
        self.matrix = matrix
        self.field = matrix.field
        self.size = matrix.ncols
        self._int_cols = [matrix.field.integer_vector(matrix.column(j)) for j in range(self.size)]
        self._rank_cache: dict[frozenset, int] = {}
        self._lock = threading.RLock()
        self.rank_total = self.rank(range(self.size))

    def __repr__(self):
        return "Matroid(size=%d, rank=%d, field=%s)" % (self.size, self.rank_total, self.field.name)

    @property
    def r(self) -> int:
        return self.rank_total - 1

    @property
    def ground(self) -> frozenset:
        return frozenset(range(self.size))

    def _check(self, S) -> frozenset:
        S = frozenset(S)
        for i in S:
            if not (isinstance(i, int) and 0 <= i < self.size):
                raise IndexOutOfRange("element %r not in ground set 0..%d" % (i, self.size - 1))
        return S

    def rank(self, S) -> int:
        S = self._check(S)
        cached = self._rank_cache.get(S)
        if cached is not None:
            return cached
        rows = [[(k, v) for k, v in enumerate(self._int_cols[j]) if v] for j in sorted(S)]
        value = echelon_rank(rows, self.field.p)
        self._rank_cache[S] = value
        return value

    def is_independent(self, S) -> bool:
        S = frozenset(S)
        return self.rank(S) == len(S)

    def closure(self, S) -> frozenset:
        S = self._check(S)
        k = self.rank(S)
        return frozenset(S | {i for i in range(self.size) if i not in S and self.rank(S | {i}) == k})

    # cached_property writes are idempotent; the lock keeps the enumeration single-shot
    @cached_property
    def flats(self) -> list[frozenset]:
        with self._lock:
            bottom = self.closure(())
            seen = {bottom}
            layer = [bottom]
            out = [bottom]
            while layer:
                nxt = []
                for F in layer:
                    for e in range(self.size):
                        if e in F:
                            continue
                        G = self.closure(F | {e})
                        if G not in seen:
                            seen.add(G)
                            nxt.append(G)
                layer = sorted(nxt, key=lambda s: (len(s), sorted(s)))
                out.extend(layer)
            return sorted(out, key=lambda s: (self.rank(s), sorted(s)))

    @cached_property
    def bases(self) -> list[frozenset]:
        return [frozenset(B) for B in combinations(range(self.size), self.rank_total)
                if self.rank(B) == self.rank_total]

    @cached_property
    def circuits(self) -> list[CircuitData]:
        """All circuits by increasing size, then lexicographically.

        Subsets of size up to ``rank+1`` are scanned; exponential in the
        ground-set size, fine up to about 14 elements.
        """
        with self._lock:
            found: list[frozenset] = []
            out = []
            for k in range(1, self.rank_total + 2):
                for C in combinations(range(self.size), k):
                    Cs = frozenset(C)
                    if self.rank(Cs) == k or any(D <= Cs for D in found):
                        continue
                    found.append(Cs)
                    out.append(self._circuit_data(C))
            return out

    def _circuit_data(self, C) -> CircuitData:
        one = self.field.one()
        rows = [[self.matrix.rows[i][j] for j in C] for i in range(self.matrix.nrows)]
        (vec,) = nullspace(rows, len(C), one)
        scale = one / vec[0]
        return CircuitData(tuple(C), {i: v * scale for i, v in zip(C, vec)})

    @cached_property
    def broken_circuits(self) -> list[frozenset]:
        out = []
        for C in self.circuits:
            B = frozenset(C.support[1:])
            if B not in out:
                out.append(B)
        return out

    def contains_broken_circuit(self, S) -> bool:
        S = frozenset(S)
        return any(B <= S for B in self.broken_circuits)


def matroid_from_matrix(rows, field: ScalarField = QQ) -> Matroid:
    """Build a simple matroid from matrix rows, rejecting loops and parallels."""
    m = rows if isinstance(rows, RepMatrix) else RepMatrix.from_rows(rows, field)
    M = Matroid(m)
    for j in range(M.size):
        if M.rank({j}) == 0:
            raise LoopDetected("column %d is zero" % j)
    for i, j in combinations(range(M.size), 2):
        if M.rank({i, j}) < 2:
            raise ParallelDetected("columns %d and %d are proportional" % (i, j))
    return M


def mobius_values(M: Matroid) -> dict[frozenset, int]:
    """``mu(bottom, F)`` for every flat ``F``, by memoized recursion."""
    flats = M.flats
    memo: dict[frozenset, int] = {}

    def mu(F):
        if F not in memo:
            if F == flats[0]:
                memo[F] = 1
            else:
                memo[F] = -sum(mu(G) for G in flats if G < F)
        return memo[F]

    for F in flats:
        mu(F)
    return memo


def mobius_char_poly(M: Matroid) -> UniPoly:
    coeffs = [0] * (M.rank_total + 1)
    for F, mu in mobius_values(M).items():
        coeffs[M.rank_total - M.rank(F)] += mu
    return UniPoly(coeffs)


def reduced_char_poly(M: Matroid) -> UniPoly:
    return mobius_char_poly(M).exact_div_linear(1)


def circuits(M: Matroid) -> list[CircuitData]:
    return M.circuits


def broken_circuits(M: Matroid) -> list[frozenset]:
    return M.broken_circuits


def rank(M: Matroid, S) -> int:
    return M.rank(S)


def closure(M: Matroid, S) -> frozenset:
    return M.closure(S)


def flats(M: Matroid) -> list[frozenset]:
    return M.flats
