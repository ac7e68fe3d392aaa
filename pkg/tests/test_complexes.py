from itertools import combinations, permutations

import pytest

from enbc_kit.complexes import (OrderSpec, SimplicialComplex, X, Y, bigraded_f_vector, enbc_complex,
                                jf_partition, lex_max_basis, nbc_complex, rnbc_complex, rnbc_faces,
                                up_set, whitney_poly)
from enbc_kit.errors import DegreeTooSmall, DependentInput, IndexOutOfRange, InputError
from enbc_kit.matroid import matroid_from_matrix, mobius_char_poly, reduced_char_poly

from conftest import random_simple_matrices


def facet_sets(cx):
    return {frozenset(F) for F in cx.facets}


def brute_lex_max_basis(M, order, F):
    """Enumerate all bases containing F; keep the one whose order-sorted
    (largest first) sequence is lexicographically largest."""
    pos = {v: k for k, v in enumerate(order.perm)}
    cands = [B for B in map(frozenset, combinations(range(M.size), M.rank_total))
             if F <= B and M.rank(B) == M.rank_total]
    return max(cands, key=lambda B: sorted((pos[i] for i in B), reverse=True))


def test_order_spec_and_up_sets():
    nat = OrderSpec.natural(6)
    assert up_set(nat, 3) == {3, 4, 5}
    assert up_set(nat, 5) == {5}
    assert up_set(OrderSpec((2, 0, 1)), 0) == {0, 1}
    assert up_set(OrderSpec((2, 0, 1)), 2) == {0, 1, 2}
    with pytest.raises(IndexOutOfRange):
        up_set(nat, 6)
    with pytest.raises(InputError):
        OrderSpec((0, 0, 1))


def test_k4_nbc_rnbc(k4):
    nbc = nbc_complex(k4)
    assert facet_sets(nbc) == {frozenset(s) for s in
                               [{0, 1, 2}, {0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 3, 4}, {0, 3, 5}]}
    assert nbc.cone_points() == {0}
    rnbc = rnbc_complex(k4)
    assert facet_sets(rnbc) == {frozenset(s) for s in [{1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {3, 5}]}
    assert rnbc.f_vector() == [1, 5, 6]
    assert str(whitney_poly(nbc, 3)) == "q^3 - 6*q^2 + 11*q - 6"
    assert str(whitney_poly(rnbc, 2)) == "q^2 - 5*q + 6"


def test_small_nbc(u22, u23):
    assert facet_sets(nbc_complex(u22)) == {frozenset({0, 1})}
    assert set(rnbc_complex(u22).faces()) == {frozenset(), frozenset({1})}
    assert facet_sets(nbc_complex(u23)) == {frozenset({0, 1}), frozenset({0, 2})}
    assert set(rnbc_complex(u23).faces()) == {frozenset(), frozenset({1}), frozenset({2})}


def test_whitney_poly_edge_cases():
    empty = SimplicialComplex([frozenset()])
    assert str(whitney_poly(empty, 0)) == "1"
    with pytest.raises(DegreeTooSmall):
        whitney_poly(SimplicialComplex([{0, 1}]), 1)


def test_lex_max_basis_examples(k4, u23):
    nat = OrderSpec.natural(6)
    assert lex_max_basis(k4, nat, set()) == {2, 4, 5}
    assert lex_max_basis(k4, nat, {0, 1, 2}) == {0, 1, 2}
    assert lex_max_basis(u23, OrderSpec.natural(3), {1}) == {1, 2}
    with pytest.raises(DependentInput):
        lex_max_basis(k4, nat, {3, 4, 5})


K4_ENBC_FACETS = [
    "y0 x2 x4 x5", "y0 y1 x4 x5", "y0 y2 x4 x5", "y0 y3 x2 x5",
    "y0 y4 x2 x5", "y0 y5 x2 x4", "y0 y1 y2 x4", "y0 y1 y4 x5",
    "y0 y1 y5 x4", "y0 y2 y3 x5", "y0 y3 y4 x2", "y0 y3 y5 x2",
]


def parse_face(text):
    return frozenset((X if tok[0] == "x" else Y)(int(tok[1:])) for tok in text.split())


def test_k4_enbc_facets(k4):
    E = enbc_complex(k4, OrderSpec.natural(6))
    assert facet_sets(E) == {parse_face(s) for s in K4_ENBC_FACETS}
    assert E.is_pure() and E.dimension == 3
    assert Y(0) in E.cone_points()
    fv = bigraded_f_vector(E)
    assert sum(fv.values()) == 80


def test_small_enbc(u22, rank1):
    E = enbc_complex(u22)
    assert facet_sets(E) == {frozenset({Y(0), X(0), X(1)}), frozenset({Y(0), Y(1), X(0)})}
    # enumerated by hand from the two facets
    assert bigraded_f_vector(E) == {(0, 0): 1, (1, 0): 2, (0, 1): 2, (2, 0): 1, (1, 1): 3,
                                    (0, 2): 1, (2, 1): 1, (1, 2): 1}
    E1 = enbc_complex(rank1)
    assert facet_sets(E1) == {frozenset({Y(0), X(0)})}
    assert bigraded_f_vector(SimplicialComplex([frozenset()])) == {(0, 0): 1}


def test_jf_partition_sizes(k4, u22, rank1):
    def sizes(M):
        return sorted((len(F), 2 ** len(high - low)) for F, (low, high) in jf_partition(M, OrderSpec.natural(M.size)).items())

    assert sizes(k4) == [(0, 16)] + [(1, 8)] * 5 + [(2, 4)] * 6
    assert sizes(u22) == [(0, 8), (1, 4)]
    assert sizes(rank1) == [(0, 4)]


def catalog_cases(catalog_inputs_names=("u22", "u23", "u24", "u34", "k4")):
    from enbc_kit.inputs import load_input

    out = []
    for name in catalog_inputs_names:
        M = load_input(name).matroid()
        perms = list(permutations(range(M.size)))
        picks = [perms[0], perms[-1], perms[len(perms) // 3]]
        out.extend((name, M, OrderSpec(p)) for p in dict.fromkeys(picks))
    for k, rows in enumerate(random_simple_matrices(5, seed=11)):
        M = matroid_from_matrix(rows)
        out.append(("rand%d" % k, M, OrderSpec.natural(M.size)))
        out.append(("rand%d-rev" % k, M, OrderSpec.reversed_natural(M.size)))
    return out


CASES = catalog_cases()


@pytest.mark.parametrize("name,M,order", CASES, ids=[c[0] + ":" + str(c[2]) for c in CASES])
def test_enbc_invariants(name, M, order):
    E = enbc_complex(M, order)
    faces = rnbc_faces(M)
    # one facet per reduced-NBC face, all of size r+2, with y0 a cone point
    assert len(E.facets) == len(faces)
    assert all(len(F) == M.r + 2 for F in E.facets)
    assert Y(0) in E.cone_points()
    for F in faces:
        L = lex_max_basis(M, order, F)
        assert L == brute_lex_max_basis(M, order, F)
        assert len(L) == M.rank_total
    for F in faces:
        for H in faces:
            if F < H:
                assert lex_max_basis(M, order, F) - F >= lex_max_basis(M, order, H) - H
    # interval partition: disjoint, covering, of the expected sizes
    brute = set()
    for G in E.facets:
        for k in range(len(G) + 1):
            brute.update(frozenset(S) for S in combinations(sorted(G), k))
    parts = jf_partition(M, order)
    seen = []
    for F, (low, high) in parts.items():
        block = [S for S in brute if low <= S <= high]
        assert len(block) == 2 ** (M.r + 2 - len(F))
        assert all({v.index for v in S if v.tag == "y" and v.index} == F for S in block)
        seen.extend(block)
    assert len(seen) == len(set(seen)) == len(brute)
    assert set(E.faces()) == brute


@pytest.mark.parametrize("name,M,order", CASES[::2], ids=[c[0] for c in CASES[::2]])
def test_whitney_equals_mobius(name, M, order):
    assert whitney_poly(nbc_complex(M), M.rank_total) == mobius_char_poly(M)
    assert whitney_poly(rnbc_complex(M), M.r) == reduced_char_poly(M)
