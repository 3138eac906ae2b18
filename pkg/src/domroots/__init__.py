"""Domination polynomials of friendship, book and corona graphs, and their roots."""

from .exactpoly import IntPolynomial, RatPolynomial, count_real_roots, squarefree_part
from .families import CoronaVariant, FamilyId, Kind, book_poly, corona_poly, friendship_poly, join_poly
from .graphs import Graph, brute_force_dompoly

__all__ = [
    "CoronaVariant",
    "FamilyId",
    "Graph",
    "IntPolynomial",
    "Kind",
    "RatPolynomial",
    "book_poly",
    "brute_force_dompoly",
    "corona_poly",
    "count_real_roots",
    "friendship_poly",
    "join_poly",
    "squarefree_part",
]

__version__ = "0.1.0"
