"""Exact arithmetic: rationals, polynomials, Groebner bases, Laurent polynomials."""
from fractions import Fraction as Rational

from .poly import MultiPoly, ParseError, PolyRing, RingMismatch, parse_poly
from .groebner import (Ideal, UnitIdeal, ZeroDivisor, buchberger, divide,
                       hilbert_function, ideal_eq, ideal_intersect, ideal_member,
                       ideal_quotient, ideal_saturate, krull_dim, poly_mul,
                       radical_member, reduce)
from .laurent import LaurentPoly

__all__ = [
    "Rational", "PolyRing", "MultiPoly", "RingMismatch", "ParseError", "parse_poly",
    "Ideal", "UnitIdeal", "ZeroDivisor", "buchberger", "divide", "reduce",
    "poly_mul", "ideal_member", "ideal_eq", "ideal_intersect", "ideal_quotient",
    "ideal_saturate", "krull_dim", "radical_member", "hilbert_function",
    "LaurentPoly",
]
