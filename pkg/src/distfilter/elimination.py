"""Exact Gauss-Jordan elimination into elementary factors and full decomposition.

``eliminate_to_diagonal`` reduces any square rational matrix M to a 0/1
diagonal D with row operations on the left and column operations on the right:

    (Rk ... R1) M (C1 ... Cm) = D

Pivoting is anchored to the diagonal: the pivot for column c is searched first
at rows c..n (and swapped up to row c), and only if that fails among the
not-yet-pivoted rows above c (leaving an off-diagonal pivot that a final
column swap moves into place). Each pivot is scaled to 1 and every other
nonzero in its column is cleared, above and below, in ascending row order.
Afterwards the only nonzeros outside the pivots are in pivot rows at
non-pivot columns; column AddRows remove them (each pivot column is a unit
vector by then, so these never cascade), and column swaps align off-diagonal
pivots. No magnitude pivoting is needed: arithmetic is exact.

``decompose`` inverts the operations to write M = R1' ... Rk' D Cm' ... C1',
lifts every factor into one-hop form, and packages the result as a Schedule
in application order.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatchError, DisconnectedGraphError, NonSquareError
from .factors import AddRow, Diagonal, Factor, ScaleRow, Swap, apply_left, apply_right, invert_factor
from .graph import Graph
from .lifting import lift
from .matrices import Matrix, copy_matrix, diagonal_of, is_diagonal
from .schedule import Schedule, ScheduleStats

TaggedOp = tuple[Factor, str]


def _check_square(matrix: Matrix) -> int:
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise NonSquareError(f"expected a square matrix, got {n} rows")
    return n


def _eliminate(matrix: Matrix) -> tuple[list[TaggedOp], Diagonal, list[TaggedOp]]:
    n = _check_square(matrix)
    a = copy_matrix(matrix)
    row_ops: list[TaggedOp] = []
    col_ops: list[TaggedOp] = []
    pivot_rows: set[int] = set()
    pivots: list[tuple[int, int]] = []  # (row, col), row <= col

    def emit_row(f: Factor, stage: str) -> None:
        nonlocal a
        row_ops.append((f, stage))
        a = apply_left(f, a)

    def emit_col(f: Factor, stage: str) -> None:
        nonlocal a
        col_ops.append((f, stage))
        a = apply_right(f, a)

    for c in range(1, n + 1):
        stage = f"pivot:{c}"
        prow = next((r for r in range(c, n + 1) if a[r - 1][c - 1] != 0), None)
        if prow is not None:
            if prow != c:
                emit_row(Swap(c, prow), stage)
            prow = c
        else:
            prow = next(
                (r for r in range(1, c) if r not in pivot_rows and a[r - 1][c - 1] != 0),
                None,
            )
            if prow is None:
                continue
        if a[prow - 1][c - 1] != 1:
            emit_row(ScaleRow(prow, Fraction(1) / a[prow - 1][c - 1]), stage)
        for t in range(1, n + 1):
            if t != prow and a[t - 1][c - 1] != 0:
                emit_row(AddRow(t, prow, -a[t - 1][c - 1]), stage)
        pivot_rows.add(prow)
        pivots.append((prow, c))

    # Pivot columns are unit vectors now; clear pivot-row residue with column adds.
    for prow, pcol in sorted(pivots):
        for c2 in range(1, n + 1):
            if c2 != pcol and a[prow - 1][c2 - 1] != 0:
                emit_col(AddRow(pcol, c2, -a[prow - 1][c2 - 1]), f"colclean:{prow}")

    # Move off-diagonal pivots onto the diagonal; the target column is empty.
    for prow, pcol in sorted(pivots):
        if pcol != prow:
            emit_col(Swap(prow, pcol), "align")

    diag = diagonal_of(a)
    assert all(v in (0, 1) for v in diag) and is_diagonal(a), "elimination left a non-diagonal residue"
    return row_ops, Diagonal(tuple(diag)), col_ops


def eliminate_to_diagonal(matrix: Matrix) -> tuple[list[Factor], Diagonal, list[Factor]]:
    """Row ops, 0/1 residual diagonal, and column ops, each in application order."""
    row_ops, diag, col_ops = _eliminate(matrix)
    return [f for f, _ in row_ops], diag, [f for f, _ in col_ops]


def factor_count_bound(g: Graph) -> int:
    """Worst-case schedule length n*((2D - 1)*n + 1) for diameter D."""
    d = g.diameter()
    return g.n * ((2 * d - 1) * g.n + 1)


def decompose(matrix: Matrix, g: Graph) -> Schedule:
    """Factor ``matrix`` into a schedule of one-hop factors over ``g``.

    The product of the schedule's materialized factors, read in reverse
    application order, equals ``matrix`` exactly.
    """
    n = _check_square(matrix)
    if n != g.n:
        raise DimensionMismatchError(f"{n}x{n} matrix with a {g.n}-node graph")
    missing = g.first_unreachable()
    if missing is not None:
        raise DisconnectedGraphError(
            f"graph is disconnected: node {missing} unreachable from node 1",
            unreachable=missing,
        )

    if is_diagonal(matrix):
        # Any diagonal matrix is already one round of local work.
        factor = Diagonal(tuple(diagonal_of(matrix)))
        return Schedule((factor,), g, ScheduleStats(1, 1, 1), ("diagonal",))

    row_ops, diag, col_ops = _eliminate(matrix)

    # Multiplication order: inverted row ops as applied, the residual diagonal,
    # then inverted column ops in reverse application order.
    product: list[TaggedOp] = [(invert_factor(f), tag) for f, tag in row_ops]
    product.append((diag, "residual"))
    product.extend((invert_factor(f), tag) for f, tag in reversed(col_ops))

    lifted: list[TaggedOp] = []
    for f, tag in product:
        lifted.extend((piece, tag) for piece in lift(f, g).factors)

    factors = tuple(f for f, _ in reversed(lifted))
    provenance = tuple(tag for _, tag in reversed(lifted))
    stats = ScheduleStats(raw=len(product), lifted=len(factors), optimized=len(factors))
    return Schedule(factors, g, stats, provenance)
