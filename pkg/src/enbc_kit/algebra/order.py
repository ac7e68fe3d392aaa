"""The term order on ``k[x_0..x_n, y_0..y_n]`` attached to a total order on ``0..n``.

Monomials are compared first by degree with ``y_0`` weighted zero, then
lexicographically with ``x_{p(0)} > ... > x_{p(n)} > y_n > ... > y_0`` where
``p`` is the permutation. The weight step puts every multiple of ``y_0`` below
all monomials of the same total degree that avoid ``y_0``.
"""
from __future__ import annotations

from ..complexes import OrderSpec
from ..errors import AmbientMismatch


class TermOrder:
    def __init__(self, spec: OrderSpec):
        self.spec = spec
        self.size = len(spec)
        n1 = self.size
        self._y0 = n1
        # exponent positions from most to least significant
        self._seq = tuple(spec.perm) + tuple(n1 + i for i in range(n1 - 1, -1, -1))
        self._cache: dict = {}

    @classmethod
    def natural(cls, size: int) -> TermOrder:
        return cls(OrderSpec.natural(size))

    def __repr__(self):
        return "TermOrder(%s)" % self.spec

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            if len(m) != 2 * self.size:
                raise AmbientMismatch("monomial of length %d for %d variables" % (len(m), 2 * self.size))
            k = (sum(m) - m[self._y0],) + tuple(m[i] for i in self._seq)
            if len(self._cache) < 1 << 20:
                self._cache[m] = k
        return k

    def compare(self, m1, m2) -> int:
        """-1, 0 or 1 as ``m1`` is smaller than, equal to or greater than ``m2``."""
        if len(m1) != len(m2):
            raise AmbientMismatch("monomials from different rings")
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)


def compare(order: TermOrder, m1, m2) -> int:
    return order.compare(m1, m2)
