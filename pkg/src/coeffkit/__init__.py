"""Exact coefficients of ``(x^n + ... + 1)^l`` from closed-form relation functions.

The :mod:`~coeffkit.relations` module evaluates coefficients in constant
time for l = 2, 3, 4; :mod:`~coeffkit.oracle` recomputes them by plain
convolution for any power and is the reference the closed forms are held to.
"""
from .errors import (CoefficientOverflowError, CoeffkitError, DomainError,
                     PositionError)
from .models import PatternSpec, RelationQuery, UniqueRow, row_width
from .oracle import (bounded_composition_count, expand_power_sum,
                     first_occurrence_values, unique_row_oracle)
from .polyops import (IntPolynomial, coefficient_of_product, multiply,
                      power_sum_poly, product_terms)
from .relations import (coefficient_closed, expansion_closed, g2, g3, g3_edge,
                        g4, g4_edge, unique_row_closed, unique_value)

__version__ = "0.1.0"

__all__ = [
    "CoefficientOverflowError", "CoeffkitError", "DomainError", "PositionError",
    "PatternSpec", "RelationQuery", "UniqueRow", "row_width",
    "bounded_composition_count", "expand_power_sum", "first_occurrence_values",
    "unique_row_oracle", "IntPolynomial", "coefficient_of_product", "multiply",
    "power_sum_poly", "product_terms", "coefficient_closed", "expansion_closed",
    "g2", "g3", "g3_edge", "g4", "g4_edge", "unique_row_closed", "unique_value",
]
