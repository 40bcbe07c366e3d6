"""Exact checks of the summation identities, generating functions and bijections."""

from .bijections import BijectionCheck, CountCheck, check_bijection, check_lemmas, low_column_sum, extended_weighted_sum
from .gf import (
    IntegralCheck,
    SeriesCheck,
    abar,
    alternant_series,
    check_gf_alternant,
    check_integral_formulas,
    check_lemma_gf,
    check_ssyt_gf,
    iter_ssyt,
    ssyt_series,
)
from .hyper import HyperSpec, hyper_sum, hyper_terms
from .identities import (
    CLASSICAL,
    SHAPE_IDENTITIES,
    Check,
    check_classical,
    check_identity,
    check_shape_identity,
)

__all__ = [
    "BijectionCheck",
    "CLASSICAL",
    "Check",
    "CountCheck",
    "HyperSpec",
    "IntegralCheck",
    "SHAPE_IDENTITIES",
    "SeriesCheck",
    "abar",
    "alternant_series",
    "check_bijection",
    "check_classical",
    "check_gf_alternant",
    "check_identity",
    "check_integral_formulas",
    "check_lemma_gf",
    "check_lemmas",
    "check_shape_identity",
    "check_ssyt_gf",
    "hyper_sum",
    "hyper_terms",
    "iter_ssyt",
    "ssyt_series",
    "low_column_sum",
    "extended_weighted_sum",
]
