"""Exact sparse polynomial arithmetic in q, a, b over the rationals."""

from .cyclotomic import cyclotomic
from .gcd import normalize, poly_gcd
from .mpoly import (A, B, ONE, Q, VARIABLES, ZERO, ExponentBudget,
                    ExponentOverflow, MPoly, NotDivisible, coefficient,
                    divides, exact_div, get_exponent_budget, poly_eval,
                    set_exponent_budget)

__all__ = [
    "A", "B", "ONE", "Q", "VARIABLES", "ZERO", "ExponentBudget",
    "ExponentOverflow", "MPoly", "NotDivisible", "coefficient", "cyclotomic",
    "divides", "exact_div", "get_exponent_budget", "normalize", "poly_eval",
    "poly_gcd", "set_exponent_budget",
]
