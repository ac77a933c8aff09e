"""Row-operation factors, the one-hop locality test, and exact factor application.

A factor stands for an n-by-n matrix that a round of distributed execution can
realize. The elementary kinds are AddRow (add m times row j to row i),
ScaleRow, and Swap; Diagonal covers arbitrary diagonal matrices and DenseLocal
holds merged blocks as sparse (row, col, value) triplets. A matrix is
*directly implementable* on a graph when every off-diagonal nonzero sits at an
adjacent node pair, so each node's new value needs only neighbor values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    DimensionMismatchError,
    IndexRangeError,
    SingularFactorError,
    UnsupportedFactorError,
)
from .graph import Graph
from .matrices import Matrix, identity_matrix, zero_matrix


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class AddRow:
    """Identity plus ``m`` at (i, j); on the left it adds m times row j to row i."""

    i: int
    j: int
    m: Fraction

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("AddRow requires i != j")
        if min(self.i, self.j) < 1:
            raise IndexRangeError(f"AddRow indices must be positive, got ({self.i},{self.j})")
        object.__setattr__(self, "m", _fraction(self.m))


@dataclass(frozen=True)
class ScaleRow:
    """Identity with (i, i) replaced by ``m``; m may be zero."""

    i: int
    m: Fraction

    def __post_init__(self):
        if self.i < 1:
            raise IndexRangeError(f"ScaleRow index must be positive, got {self.i}")
        object.__setattr__(self, "m", _fraction(self.m))


@dataclass(frozen=True)
class Swap:
    """Identity with rows i and j exchanged; stored with i < j."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("Swap requires i != j")
        if min(self.i, self.j) < 1:
            raise IndexRangeError(f"Swap indices must be positive, got ({self.i},{self.j})")
        if self.i > self.j:
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)


@dataclass(frozen=True)
class Diagonal:
    """Arbitrary diagonal matrix; entry k applies to node k."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(_fraction(v) for v in self.entries))


@dataclass(frozen=True)
class DenseLocal:
    """Sparse matrix as (row, col, value) triplets; zeros dropped, keys unique."""

    entries: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        norm = []
        seen: set[tuple[int, int]] = set()
        for r, c, v in self.entries:
            v = _fraction(v)
            if v == 0:
                continue
            if min(r, c) < 1:
                raise IndexRangeError(f"DenseLocal entry at ({r},{c}) must be positive")
            if (r, c) in seen:
                raise ValueError(f"duplicate DenseLocal entry at ({r},{c})")
            seen.add((r, c))
            norm.append((int(r), int(c), v))
        object.__setattr__(self, "entries", tuple(sorted(norm)))

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> "DenseLocal":
        n = len(matrix)
        return cls(
            tuple(
                (r + 1, c + 1, matrix[r][c])
                for r in range(n)
                for c in range(n)
                if matrix[r][c] != 0
            )
        )


Factor = Union[AddRow, ScaleRow, Swap, Diagonal, DenseLocal]


def max_index(f: Factor) -> int:
    """Largest row/column index the factor touches (its minimum dimension)."""
    if isinstance(f, AddRow):
        return max(f.i, f.j)
    if isinstance(f, ScaleRow):
        return f.i
    if isinstance(f, Swap):
        return f.j
    if isinstance(f, Diagonal):
        return len(f.entries)
    return max((max(r, c) for r, c, _ in f.entries), default=1)


def factor_entries(f: Factor, n: int) -> list[tuple[int, int, Fraction]]:
    """Nonzero entries of the materialized factor, implicit diagonal included."""
    _check_fits(f, n)
    one = Fraction(1)
    if isinstance(f, AddRow):
        out = [(k, k, one) for k in range(1, n + 1)]
        if f.m != 0:
            out.append((f.i, f.j, f.m))
        return out
    if isinstance(f, ScaleRow):
        return [(k, k, f.m if k == f.i else one) for k in range(1, n + 1) if k != f.i or f.m != 0]
    if isinstance(f, Swap):
        out = [(k, k, one) for k in range(1, n + 1) if k not in (f.i, f.j)]
        out.extend([(f.i, f.j, one), (f.j, f.i, one)])
        return out
    if isinstance(f, Diagonal):
        return [(k, k, v) for k, v in enumerate(f.entries, start=1) if v != 0]
    return list(f.entries)


def off_diagonal_count(f: Factor, n: int) -> int:
    """Number of off-diagonal nonzeros, i.e. messages one round of ``f`` costs."""
    return sum(1 for r, c, _ in factor_entries(f, n) if r != c)


def _check_fits(f: Factor, n: int) -> None:
    if isinstance(f, Diagonal):
        if len(f.entries) != n:
            raise DimensionMismatchError(f"Diagonal of length {len(f.entries)} used with n={n}")
        return
    if max_index(f) > n:
        raise IndexRangeError(f"factor {f!r} exceeds dimension {n}")


def materialize(f: Factor, n: int) -> Matrix:
    """Explicit n-by-n matrix of the factor."""
    _check_fits(f, n)
    out = zero_matrix(n)
    for r, c, v in factor_entries(f, n):
        out[r - 1][c - 1] = v
    return out


def apply_left(f: Factor, matrix: Matrix) -> Matrix:
    """``materialize(f) @ matrix`` using row updates instead of a dense multiply."""
    n = len(matrix)
    _check_fits(f, n)
    if isinstance(f, AddRow):
        out = [row[:] for row in matrix]
        out[f.i - 1] = [a + f.m * b for a, b in zip(matrix[f.i - 1], matrix[f.j - 1])]
        return out
    if isinstance(f, ScaleRow):
        out = [row[:] for row in matrix]
        out[f.i - 1] = [f.m * a for a in matrix[f.i - 1]]
        return out
    if isinstance(f, Swap):
        out = [row[:] for row in matrix]
        out[f.i - 1], out[f.j - 1] = out[f.j - 1], out[f.i - 1]
        return out
    if isinstance(f, Diagonal):
        return [[d * a for a in row] for d, row in zip(f.entries, matrix)]
    out = zero_matrix(n)
    for r, c, v in f.entries:
        src = matrix[c - 1]
        dst = out[r - 1]
        for k in range(n):
            dst[k] += v * src[k]
    return out


def apply_right(f: Factor, matrix: Matrix) -> Matrix:
    """``matrix @ materialize(f)``; an AddRow adds m times column i to column j."""
    n = len(matrix)
    _check_fits(f, n)
    if isinstance(f, AddRow):
        out = [row[:] for row in matrix]
        for row in out:
            row[f.j - 1] += f.m * row[f.i - 1]
        return out
    if isinstance(f, ScaleRow):
        out = [row[:] for row in matrix]
        for row in out:
            row[f.i - 1] *= f.m
        return out
    if isinstance(f, Swap):
        out = [row[:] for row in matrix]
        for row in out:
            row[f.i - 1], row[f.j - 1] = row[f.j - 1], row[f.i - 1]
        return out
    if isinstance(f, Diagonal):
        return [[a * d for a, d in zip(row, f.entries)] for row in matrix]
    out = zero_matrix(n)
    for k, c, v in f.entries:
        for r in range(n):
            out[r][c - 1] += matrix[r][k - 1] * v
    return out


def invert_factor(f: Factor) -> Factor:
    """Exact inverse factor; DenseLocal blocks are not invertible here."""
    if isinstance(f, AddRow):
        return AddRow(f.i, f.j, -f.m)
    if isinstance(f, ScaleRow):
        if f.m == 0:
            raise SingularFactorError(f"ScaleRow({f.i}, 0) has no inverse")
        return ScaleRow(f.i, Fraction(1) / f.m)
    if isinstance(f, Swap):
        return f
    if isinstance(f, Diagonal):
        if any(v == 0 for v in f.entries):
            raise SingularFactorError("Diagonal with a zero entry has no inverse")
        return Diagonal(tuple(Fraction(1) / v for v in f.entries))
    raise UnsupportedFactorError("DenseLocal factors cannot be inverted")


def is_directly_implementable(matrix: Matrix, g: Graph) -> bool:
    """True iff every off-diagonal nonzero of ``matrix`` sits at an adjacent pair."""
    if len(matrix) != g.n or any(len(row) != g.n for row in matrix):
        raise DimensionMismatchError(f"matrix is not {g.n}x{g.n}")
    for r in range(g.n):
        for c in range(g.n):
            if r != c and matrix[r][c] != 0 and not g.has_edge(r + 1, c + 1):
                return False
    return True


def factor_is_implementable(f: Factor, g: Graph) -> bool:
    """Sparse equivalent of :func:`is_directly_implementable` for a factor."""
    return all(r == c or g.has_edge(r, c) for r, c, _ in factor_entries(f, g.n))
