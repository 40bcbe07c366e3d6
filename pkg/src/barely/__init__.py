"""Exact counting of standard and barely set-valued tableaux, down-degree
expectations on Young's lattice, and checks of the supporting identities."""

from .cde import closed_form, expect_x, expect_y, expectations, is_cde, scan
from .shapes import SHIFTED, STRAIGHT, Diagram, DomainError, classify, parse_shape

__version__ = "0.1.0"

__all__ = [
    "SHIFTED",
    "STRAIGHT",
    "Diagram",
    "DomainError",
    "classify",
    "closed_form",
    "expect_x",
    "expect_y",
    "expectations",
    "is_cde",
    "parse_shape",
    "scan",
]
