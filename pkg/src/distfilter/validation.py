"""Input validation helpers: coerce user-facing values into exact rational form."""

from __future__ import annotations

import numbers
from fractions import Fraction

from .errors import DimensionMismatchError, NonSquareError
from .matrices import Matrix, Vector


def as_fraction(value) -> Fraction:
    """Exact Fraction from ints, strings ('p/q', decimals), Fractions, or floats.

    Floats convert to their exact binary value; pass strings for exact
    decimal semantics.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, numbers.Real):
        return Fraction(float(value))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def as_fraction_vector(values, n: int | None = None) -> Vector:
    vec = [as_fraction(v) for v in values]
    if n is not None and len(vec) != n:
        raise DimensionMismatchError(f"expected a length-{n} vector, got {len(vec)}")
    return vec


def as_fraction_matrix(rows) -> Matrix:
    matrix = [[as_fraction(v) for v in row] for row in rows]
    check_square(matrix)
    return matrix


def check_square(matrix: Matrix) -> int:
    """Return n for an n-by-n matrix; raise NonSquareError otherwise."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise NonSquareError(f"expected a square matrix, got {n} rows")
    return n
