"""Closed-form domination polynomials for friendship, book and corona graphs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .exactpoly import IntPolynomial, pow

X = IntPolynomial.x()
ONE = IntPolynomial.const(1)


class Kind(str, Enum):
    FRIENDSHIP = "friendship"
    BOOK = "book"
    CORONA_BF = "corona"


class CoronaVariant(str, Enum):
    """The three book-over-friendship corona families, indexed by m >= 1."""

    ODD_ODD = "B(2m-1)oF(2m-1)"
    EVEN_ODD = "B(2m)oF(2m+1)"
    ODD_EVEN = "B(2m+1)oF(2m)"

    def indices(self, m: int) -> tuple[int, int]:
        """(book index, friendship index) for parameter m."""
        if m < 1:
            raise ValueError("corona parameter m must be >= 1")
        return {
            CoronaVariant.ODD_ODD: (2 * m - 1, 2 * m - 1),
            CoronaVariant.EVEN_ODD: (2 * m, 2 * m + 1),
            CoronaVariant.ODD_EVEN: (2 * m + 1, 2 * m),
        }[self]


@dataclass(frozen=True)
class FamilyId:
    kind: Kind
    n: int
    variant: CoronaVariant | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"family index must be positive, got {self.n}")
        if (self.kind is Kind.CORONA_BF) != (self.variant is not None):
            raise ValueError("a corona variant is required exactly for corona families")

    def __str__(self):
        if self.kind is Kind.CORONA_BF:
            b, f = self.variant.indices(self.n)
            return f"B{b}oF{f}"
        return f"{'F' if self.kind is Kind.FRIENDSHIP else 'B'}{self.n}"

    def poly(self) -> IntPolynomial:
        if self.kind is Kind.FRIENDSHIP:
            return friendship_poly(self.n)
        if self.kind is Kind.BOOK:
            return book_poly(self.n)
        return corona_bf_poly(self.variant, self.n)


@lru_cache(maxsize=None)
def friendship_poly(n: int) -> IntPolynomial:
    """(2x + x^2)^n + x(1 + x)^(2n)."""
    if n < 1:
        raise ValueError("friendship polynomial needs n >= 1")
    return pow(2 * X + X * X, n) + X * pow(ONE + X, 2 * n)


@lru_cache(maxsize=None)
def book_poly(n: int) -> IntPolynomial:
    """(x^2 + 2x)^n (2x + 1) + x^2 (1 + x)^(2n) - 2x^n."""
    if n < 1:
        raise ValueError("book polynomial needs n >= 1")
    return pow(X * X + 2 * X, n) * (2 * X + 1) + X * X * pow(ONE + X, 2 * n) - 2 * pow(X, n)


def join_poly(dg: IntPolynomial, ng: int, dh: IntPolynomial, nh: int) -> IntPolynomial:
    """D(G + H) from the domination polynomials and orders of G and H."""
    return (pow(ONE + X, ng) - 1) * (pow(ONE + X, nh) - 1) + dg + dh


def union_poly(dg: IntPolynomial, dh: IntPolynomial) -> IntPolynomial:
    return dg * dh


def corona_poly(dh: IntPolynomial, nh: int, ng: int) -> IntPolynomial:
    """D(G o H) = (x(1+x)^|H| + D(H))^|G|.

    Each vertex of G together with its copy of H is dominated independently:
    either the vertex is chosen (any subset of its copy is allowed) or it is
    not, and then the chosen part of the copy must dominate the copy, which
    also covers the vertex itself.
    """
    if ng < 1:
        raise ValueError("corona needs a nonempty base graph")
    return pow(X * pow(ONE + X, nh) + dh, ng)


@lru_cache(maxsize=None)
def corona_bf_poly(variant: CoronaVariant, m: int) -> IntPolynomial:
    b, f = variant.indices(m)
    return corona_poly(friendship_poly(f), 2 * f + 1, 2 * b + 2)
