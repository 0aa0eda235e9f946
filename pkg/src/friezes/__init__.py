"""Exact frieze patterns and four-sign-change experiments."""
from .core import (Frieze, FriezeError, HillSolution, build_from_first_row, chebyshev_frieze,
                   continuant, hill_basis, hill_solution, validate)
from .signs import CyclicSeq, problem1_check, row_difference, sign_changes
from .triangulations import Triangulation, catalan, enumerate_triangulations, triangulation_to_frieze

__all__ = [
    "CyclicSeq", "Frieze", "FriezeError", "HillSolution", "Triangulation", "build_from_first_row",
    "catalan", "chebyshev_frieze", "continuant", "enumerate_triangulations", "hill_basis",
    "hill_solution", "problem1_check", "row_difference", "sign_changes", "triangulation_to_frieze",
    "validate",
]
