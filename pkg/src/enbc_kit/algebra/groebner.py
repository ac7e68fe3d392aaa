"""Buchberger's algorithm with the coprime and chain criteria.

Desk-scale only: pairs are processed smallest-lcm first (degree, then the
term order), every S-polynomial reduction counts against ``budget``, and the
result is the reduced monic Groebner basis.
"""
from __future__ import annotations

import heapq
import os

from ..errors import ResourceLimit
from .polys import MultiPoly, mono_coprime, mono_div, mono_divides, mono_lcm, mono_mul

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    env = os.environ.get("ENBC_KIT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _normal_form(terms, basis, key):
    """Fully reduce ``terms`` by ``basis`` = list of (lm, lc, terms)."""
    p = dict(terms)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for g_lm, g_lc, g in basis:
            if mono_divides(g_lm, m):
                q = mono_div(m, g_lm)
                f = c / g_lc
                for gm, gc in g.items():
                    t = mono_mul(gm, q)
                    v = p.get(t, 0) - f * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def reduce(f: MultiPoly, basis, order) -> MultiPoly:
    """Remainder of ``f`` on multivariate division by ``basis``."""
    key = order.key
    triples = []
    for g in basis:
        if g:
            lm, lc = g.lead(order)
            triples.append((lm, lc, g.terms))
    return MultiPoly._raw(f.ring, _normal_form(f.terms, triples, key))


def _spoly(f, g, key):
    (fm, ft), (gm, gt) = f, g
    lcm = mono_lcm(fm, gm)
    qf, qg = mono_div(lcm, fm), mono_div(lcm, gm)
    out = {}
    for m, c in ft.items():
        out[mono_mul(m, qf)] = c
    for m, c in gt.items():
        t = mono_mul(m, qg)
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def buchberger(generators, order, budget: int | None = None) -> list[MultiPoly]:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Raises ResourceLimit once more than ``budget`` pairs have been reduced.
    """
    gens = [g for g in generators if g]
    if not gens:
        return []
    ring = gens[0].ring
    key = order.key
    budget = default_budget() if budget is None else budget

    G = []  # (lm, monic terms); entries are never removed until the end
    heap = []
    pending = set()

    def add(terms):
        lm = max(terms, key=key)
        c = terms[lm]
        terms = {m: v / c for m, v in terms.items()}
        k = len(G)
        G.append((lm, terms))
        for i in range(k):
            lcm = mono_lcm(G[i][0], lm)
            heapq.heappush(heap, (sum(lcm), key(lcm), i, k))
            pending.add((i, k))

    def basis_triples():
        return [(lm, 1, t) for lm, t in G]

    for g in gens:
        r = _normal_form(g.terms, basis_triples(), key)
        if r:
            add(r)

    steps = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lm_i, lm_j = G[i][0], G[j][0]
        if mono_coprime(lm_i, lm_j):
            continue
        lcm = mono_lcm(lm_i, lm_j)
        if any(
            k != i and k != j
            and mono_divides(G[k][0], lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(G))
        ):
            continue
        steps += 1
        if steps > budget:
            raise ResourceLimit("Buchberger budget of %d pair reductions exhausted" % budget)
        s = _spoly(G[i], G[j], key)
        r = _normal_form(s, basis_triples(), key)
        if r:
            add(r)

    return _interreduce(ring, G, order)


def _interreduce(ring, G, order):
    key = order.key
    lms = [lm for lm, _ in G]
    keep = []
    for idx, lm in enumerate(lms):
        redundant = any(
            (j != idx and mono_divides(other, lm) and (other != lm or j < idx))
            for j, other in enumerate(lms)
        )
        if not redundant:
            keep.append(G[idx])
    out = []
    for idx, (lm, terms) in enumerate(keep):
        others = [(m, 1, t) for k, (m, t) in enumerate(keep) if k != idx]
        tail = {m: c for m, c in terms.items() if m != lm}
        red = _normal_form(tail, others, key)
        red[lm] = terms[lm]
        out.append(MultiPoly._raw(ring, red))
    out.sort(key=lambda p: key(p.lm(order)), reverse=True)
    return out


def is_groebner(basis, order) -> bool:
    """Every S-polynomial of ``basis`` reduces to zero."""
    key = order.key
    pairs = [(g.lm(order), g.monic(order).terms) for g in basis if g]
    triples = [(lm, 1, t) for lm, t in pairs]
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if _normal_form(_spoly(pairs[i], pairs[j], key), triples, key):
                return False
    return True
