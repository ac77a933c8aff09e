"""Round-synchronous distributed execution of a schedule.

One factor is one communication round. Within a round every node reads only
its own and its neighbors' previous-round values -- the gather below iterates
over the closed neighborhood, so a non-local read is structurally impossible;
factors carrying an entry at a non-adjacent pair are rejected up front. In
exact mode the final vector equals the dense matrix-vector product exactly;
float mode evaluates the same structure in binary floating point.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, NonLocalFactorError
from .factors import factor_entries, factor_is_implementable
from .graph import Graph
from .matrices import Matrix, Vector, format_scalar
from .schedule import Schedule


@dataclass(frozen=True)
class RoundRecord:
    """One round: which factor ran (1-based), messages sent, values afterwards."""

    factor_index: int
    messages: int
    values: tuple


@dataclass(frozen=True)
class SimTrace:
    records: tuple[RoundRecord, ...]
    total_messages: int

    @property
    def rounds(self) -> int:
        return len(self.records)


def _check_factors(s: Schedule, g: Graph) -> None:
    for idx, f in enumerate(s.factors, start=1):
        if not factor_is_implementable(f, g):
            raise NonLocalFactorError(
                f"factor {idx} has an entry at a non-adjacent node pair"
            )


def simulate(s: Schedule, g: Graph, x: Vector, mode: str = "exact") -> tuple[list, SimTrace]:
    """Run the schedule on signal ``x``; returns (output vector, trace)."""
    if mode not in ("exact", "float"):
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    if g.n != s.n:
        raise DimensionMismatchError(f"schedule for n={s.n} with a {g.n}-node graph")
    if len(x) != g.n:
        raise DimensionMismatchError(f"signal of length {len(x)} with a {g.n}-node graph")
    _check_factors(s, g)

    if mode == "float":
        values = [float(v) for v in x]
    else:
        values = [Fraction(v) for v in x]

    records = []
    total = 0
    for idx, f in enumerate(s.factors, start=1):
        rows: dict[int, dict[int, Fraction]] = {}
        messages = 0
        for r, c, v in factor_entries(f, g.n):
            rows.setdefault(r, {})[c] = v
            if r != c:
                messages += 1
        new_values = []
        for v in range(1, g.n + 1):
            coeffs = rows.get(v, {})
            acc = 0
            # Gather over the closed neighborhood only.
            for u in (v, *g.adjacency[v]):
                cv = coeffs.get(u)
                if cv is not None:
                    acc += (float(cv) if mode == "float" else cv) * values[u - 1]
            new_values.append(acc)
        values = [float(v) if mode == "float" else Fraction(v) for v in new_values]
        total += messages
        records.append(RoundRecord(idx, messages, tuple(values)))

    trace = SimTrace(tuple(records), total)
    return list(values), trace


def _matrix_vector(matrix: Matrix, x: Vector) -> Vector:
    return [sum((row[k] * x[k] for k in range(len(x))), Fraction(0)) for row in matrix]


def random_rational_vector(rng: random.Random, n: int) -> Vector:
    return [Fraction(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(n)]


def check_schedule(
    s: Schedule, g: Graph, matrix: Matrix, trials: int = 10, seed: int = 0
) -> str | None:
    """Full verification; returns None on success or the first failing check."""
    if len(matrix) != s.n or any(len(row) != s.n for row in matrix):
        raise DimensionMismatchError(f"matrix is not {s.n}x{s.n}")
    product = s.product_matrix()
    for r in range(s.n):
        for c in range(s.n):
            if product[r][c] != matrix[r][c]:
                return (
                    f"product mismatch at ({r + 1},{c + 1}): "
                    f"schedule gives {format_scalar(product[r][c])}, "
                    f"filter has {format_scalar(matrix[r][c])}"
                )
    rng = random.Random(seed)
    for t in range(trials):
        x = random_rational_vector(rng, s.n)
        y, _ = simulate(s, g, x)
        expected = _matrix_vector(matrix, x)
        for v in range(s.n):
            if y[v] != expected[v]:
                return (
                    f"simulation mismatch on trial {t + 1} at node {v + 1}: "
                    f"got {format_scalar(y[v])}, expected {format_scalar(expected[v])}"
                )
    return None


def verify(s: Schedule, g: Graph, matrix: Matrix, trials: int = 10, seed: int = 0) -> bool:
    """True iff the schedule reproduces ``matrix`` exactly, by product and by simulation."""
    return check_schedule(s, g, matrix, trials, seed) is None


def trace_to_json(trace: SimTrace, include_values: bool = False) -> str:
    rounds = []
    for rec in trace.records:
        obj: dict = {"round": rec.factor_index, "messages": rec.messages}
        if include_values:
            obj["values"] = [
                format_scalar(v) if isinstance(v, Fraction) else repr(v) for v in rec.values
            ]
        rounds.append(obj)
    doc = {"rounds": trace.rounds, "total_messages": trace.total_messages, "per_round": rounds}
    return json.dumps(doc)
