"""Schedule shrinking: cancel adjacent inverse pairs, then merge one-hop blocks.

Both passes work in multiplication order and preserve the realized product
exactly. Cancellation removes adjacent mutually-inverse elementary pairs with
a single stack sweep (which already reaches the fixpoint). Merging greedily
absorbs the next factor into the running block while the block's product
still passes the one-hop locality test; a finished multi-factor block becomes
a Diagonal when its product is diagonal and a DenseLocal block otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError
from .factors import (
    AddRow,
    DenseLocal,
    Diagonal,
    Factor,
    ScaleRow,
    Swap,
    apply_right,
    is_directly_implementable,
    materialize,
)
from .graph import Graph
from .matrices import Matrix, diagonal_of, is_diagonal
from .schedule import Schedule


@dataclass(frozen=True)
class OptimizationReport:
    before: int
    after: int
    cancellations: int
    merges: int


def _is_inverse_pair(a: Factor, b: Factor) -> bool:
    if isinstance(a, Swap) and isinstance(b, Swap):
        return a == b
    if isinstance(a, AddRow) and isinstance(b, AddRow):
        return (a.i, a.j) == (b.i, b.j) and a.m == -b.m
    if isinstance(a, ScaleRow) and isinstance(b, ScaleRow):
        return a.i == b.i and a.m * b.m == 1
    return False


def cancel_inverse_pairs(s: Schedule) -> tuple[Schedule, int]:
    """Remove adjacent inverse pairs until fixpoint; returns (schedule, pairs removed)."""
    # Multiplication order = reverse of application order.
    stack: list[tuple[Factor, str]] = []
    removed = 0
    for item in zip(reversed(s.factors), reversed(s.provenance)):
        if stack and _is_inverse_pair(stack[-1][0], item[0]):
            stack.pop()
            removed += 1
        else:
            stack.append(item)
    factors = [f for f, _ in reversed(stack)]
    provenance = [tag for _, tag in reversed(stack)]
    return s.with_factors(factors, provenance), removed


def merge_adjacent(s: Schedule, g: Graph) -> tuple[Schedule, int]:
    """Greedily fuse consecutive factors while the fused block stays one-hop.

    Returns (schedule, number of absorptions). Single-factor blocks keep
    their original kind and provenance.
    """
    if g.n != s.n:
        raise DimensionMismatchError(f"schedule for n={s.n} with a {g.n}-node graph")
    out: list[tuple[Factor, str]] = []
    merges = 0

    block: list[tuple[Factor, str]] = []
    block_product: Matrix | None = None

    def flush() -> None:
        nonlocal block, block_product
        if not block:
            return
        if len(block) == 1:
            out.append(block[0])
        elif is_diagonal(block_product):
            out.append((Diagonal(tuple(diagonal_of(block_product))), "merged"))
        else:
            out.append((DenseLocal.from_matrix(block_product), "merged"))
        block, block_product = [], None

    for f, tag in zip(reversed(s.factors), reversed(s.provenance)):
        if not block:
            block = [(f, tag)]
            block_product = materialize(f, s.n)
            continue
        candidate = apply_right(f, block_product)
        if is_directly_implementable(candidate, g):
            block.append((f, tag))
            block_product = candidate
            merges += 1
        else:
            flush()
            block = [(f, tag)]
            block_product = materialize(f, s.n)
    flush()

    factors = [f for f, _ in reversed(out)]
    provenance = [tag for _, tag in reversed(out)]
    return s.with_factors(factors, provenance), merges


def optimize_schedule(s: Schedule, g: Graph | None = None) -> tuple[Schedule, OptimizationReport]:
    """Run cancellation then merging; returns the schedule and a size report."""
    g = g if g is not None else s.graph
    before = len(s.factors)
    cancelled, pairs = cancel_inverse_pairs(s)
    merged, merges = merge_adjacent(cancelled, g)
    report = OptimizationReport(
        before=before, after=len(merged.factors), cancellations=pairs, merges=merges
    )
    return merged, report
