"""Polynomials, the term order, Groebner bases and ideals of the reciprocal graph."""
from .groebner import buchberger, is_groebner, reduce
from .hilbert import bigraded_hilbert_function
from .ideals import (MonomialIdeal, PolyIdeal, claimed_initial_generators, gamma_ideal_generators,
                     initial_ideal, leading_witness, minimalize, stanley_reisner_ideal, witness_combination)
from .order import TermOrder, compare
from .polys import MultiPoly, PolyRing

__all__ = [
    "MonomialIdeal", "MultiPoly", "PolyIdeal", "PolyRing", "TermOrder", "bigraded_hilbert_function",
    "buchberger", "claimed_initial_generators", "compare", "gamma_ideal_generators", "initial_ideal",
    "is_groebner", "leading_witness", "minimalize", "reduce", "stanley_reisner_ideal", "witness_combination",
]
