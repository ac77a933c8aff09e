"""Rewrite non-local elementary factors as swap-conjugated one-hop chains.

An AddRow(i, j, m) whose (i, j) entry sits at a non-adjacent pair is replaced
by walking the column index from j along a shortest path until it reaches a
neighbor of i: with path j = u0, u1, ..., ut = i the chain is

    Swap(u0,u1) ... Swap(u_{t-2},u_{t-1}) AddRow(i, u_{t-1}, m) Swap(u_{t-2},u_{t-1}) ... Swap(u0,u1)

in multiplication order. The swap prefix is a permutation that sends u_{t-1}
back to j and fixes i, so the product equals the original factor exactly.
Non-adjacent swaps lift the same way with an inner Swap(i, u_{t-1}).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedFactorError
from .factors import AddRow, DenseLocal, Factor, Swap, factor_is_implementable
from .graph import Graph


@dataclass(frozen=True)
class LiftedSequence:
    """Replacement chain in multiplication order (leftmost factor first)."""

    factors: tuple[Factor, ...]
    source: Factor
    path: tuple[int, ...] | None


def lift(f: Factor, g: Graph) -> LiftedSequence:
    """Express ``f`` as a product of factors that are each one-hop on ``g``.

    Already-implementable factors (including every ScaleRow and Diagonal)
    come back as a length-1 chain. A pair at shortest-path distance d lifts
    to exactly 2*(d-1)+1 factors.
    """
    if isinstance(f, DenseLocal):
        raise UnsupportedFactorError("DenseLocal factors cannot be lifted")
    if factor_is_implementable(f, g):
        return LiftedSequence((f,), f, None)

    # Walk from the column-index node toward the row-index node.
    route = g.shortest_path(f.j, f.i)
    hinge = route[-2]
    inner: Factor = AddRow(f.i, hinge, f.m) if isinstance(f, AddRow) else Swap(f.i, hinge)
    prefix = tuple(Swap(route[k], route[k + 1]) for k in range(len(route) - 2))
    chain = prefix + (inner,) + tuple(reversed(prefix))
    return LiftedSequence(chain, f, tuple(route))
