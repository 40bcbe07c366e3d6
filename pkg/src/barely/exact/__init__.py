"""Exact arithmetic: rationals, q-polynomials, (a, q) rational functions."""

from fractions import Fraction

from .mpoly import (
    MPoly,
    QSeries,
    alternant,
    pochhammer,
    q_simplex_integrate,
    simplex_integrate,
)
from .polyq import PolyQ, poly_gcd, q_binomial, q_pochhammer
from .ratfun import PolyAQ, RatFunAQ, cyclotomic

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "Fraction",
    "MPoly",
    "PolyAQ",
    "PolyQ",
    "QSeries",
    "RatFunAQ",
    "alternant",
    "cyclotomic",
    "pochhammer",
    "poly_gcd",
    "q_binomial",
    "q_pochhammer",
    "q_simplex_integrate",
    "simplex_integrate",
]
