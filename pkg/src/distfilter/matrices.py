"""Dense exact-rational matrices plus the text formats for matrices and signal vectors.

Matrices are plain lists of lists of ``fractions.Fraction``; all arithmetic in
this package is exact, so equality of two matrices is plain ``==``.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import ParseError

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def parse_scalar(token: str) -> Fraction:
    """Parse an integer, an exact decimal, or a ``p/q`` rational token."""
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid numeric token {token!r}") from exc


def format_scalar(value: Fraction) -> str:
    return str(value)


def identity_matrix(n: int) -> Matrix:
    return [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]


def zero_matrix(n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(n)]


def copy_matrix(matrix: Matrix) -> Matrix:
    return [row[:] for row in matrix]


def is_diagonal(matrix: Matrix) -> bool:
    return all(v == 0 for r, row in enumerate(matrix) for c, v in enumerate(row) if r != c)


def diagonal_of(matrix: Matrix) -> Vector:
    return [matrix[k][k] for k in range(len(matrix))]


def _data_lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def parse_matrix_text(text: str) -> Matrix:
    """Parse the matrix format: first line ``n``, then n lines of n entries."""
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"expected node count on first line, got {lines[0]!r}") from exc
    if n < 1:
        raise ParseError(f"matrix size must be at least 1, got {n}")
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows: Matrix = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries per row, got {len(tokens)} in {line!r}")
        rows.append([parse_scalar(tok) for tok in tokens])
    return rows


def parse_vector_text(text: str) -> Vector:
    """Parse the signal format: first line ``n``, then n entries."""
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty vector file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"expected length on first line, got {lines[0]!r}") from exc
    if n < 1:
        raise ParseError(f"vector length must be at least 1, got {n}")
    tokens = " ".join(lines[1:]).split()
    if len(tokens) != n:
        raise ParseError(f"expected {n} vector entries, found {len(tokens)}")
    return [parse_scalar(tok) for tok in tokens]


def load_matrix(path: str | Path) -> Matrix:
    return parse_matrix_text(Path(path).read_text())


def load_vector(path: str | Path) -> Vector:
    return parse_vector_text(Path(path).read_text())
