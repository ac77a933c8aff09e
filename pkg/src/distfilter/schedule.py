"""Schedules: ordered one-hop factor sequences with stats, provenance, and JSON form.

Factors are stored in application order: the first list element is the first
round executed, so the matrix realized by a schedule is the product of the
materialized factors read in *reverse* list order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ParseError
from .factors import (
    AddRow,
    DenseLocal,
    Diagonal,
    Factor,
    ScaleRow,
    Swap,
    apply_right,
    max_index,
)
from .graph import Graph, build_graph
from .matrices import Matrix, format_scalar, identity_matrix, parse_scalar

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ScheduleStats:
    raw: int
    lifted: int
    optimized: int


@dataclass(frozen=True)
class Schedule:
    """A directly implementable factorization of some filter over ``graph``."""

    factors: tuple[Factor, ...]
    graph: Graph
    stats: ScheduleStats
    provenance: tuple[str, ...]

    def __post_init__(self):
        if len(self.factors) != len(self.provenance):
            raise ValueError("provenance must tag every factor")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def graph_id(self) -> str:
        return self.graph.checksum()

    def product_matrix(self) -> Matrix:
        """The filter this schedule realizes (reverse-application product)."""
        acc = identity_matrix(self.n)
        for f in reversed(self.factors):
            acc = apply_right(f, acc)
        return acc

    def with_factors(self, factors, provenance, optimized: int | None = None) -> "Schedule":
        stats = replace(self.stats, optimized=optimized if optimized is not None else len(factors))
        return Schedule(tuple(factors), self.graph, stats, tuple(provenance))


def _factor_to_obj(f: Factor, stage: str) -> dict:
    if isinstance(f, AddRow):
        return {"kind": "add", "i": f.i, "j": f.j, "m": format_scalar(f.m), "stage": stage}
    if isinstance(f, ScaleRow):
        return {"kind": "scale", "i": f.i, "m": format_scalar(f.m), "stage": stage}
    if isinstance(f, Swap):
        return {"kind": "swap", "i": f.i, "j": f.j, "stage": stage}
    if isinstance(f, Diagonal):
        return {"kind": "diagonal", "d": [format_scalar(v) for v in f.entries], "stage": stage}
    return {
        "kind": "dense",
        "entries": [[r, c, format_scalar(v)] for r, c, v in f.entries],
        "stage": stage,
    }


def _factor_from_obj(obj: dict, n: int) -> tuple[Factor, str]:
    try:
        kind = obj["kind"]
        stage = obj.get("stage", "")
        if kind == "add":
            f: Factor = AddRow(int(obj["i"]), int(obj["j"]), parse_scalar(obj["m"]))
        elif kind == "scale":
            f = ScaleRow(int(obj["i"]), parse_scalar(obj["m"]))
        elif kind == "swap":
            f = Swap(int(obj["i"]), int(obj["j"]))
        elif kind == "diagonal":
            f = Diagonal(tuple(parse_scalar(v) for v in obj["d"]))
        elif kind == "dense":
            f = DenseLocal(tuple((int(r), int(c), parse_scalar(v)) for r, c, v in obj["entries"]))
        else:
            raise ParseError(f"unknown factor kind {kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed factor object {obj!r}") from exc
    if isinstance(f, Diagonal):
        if len(f.entries) != n:
            raise ParseError(f"diagonal factor of length {len(f.entries)} in schedule for n={n}")
    elif max_index(f) > n:
        raise ParseError(f"factor {obj!r} exceeds schedule dimension {n}")
    return f, stage


def schedule_to_json(s: Schedule) -> str:
    doc = {
        "schema": SCHEMA_VERSION,
        "n": s.n,
        "graph": [[i, j] for i, j in s.graph.edges],
        "order": "application",
        "factors": [_factor_to_obj(f, tag) for f, tag in zip(s.factors, s.provenance)],
        "stats": {"raw": s.stats.raw, "lifted": s.stats.lifted, "optimized": s.stats.optimized},
    }
    return json.dumps(doc, indent=1)


def schedule_from_json(text: str) -> Schedule:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid schedule JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("schedule JSON must be an object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schedule schema {doc.get('schema')!r}")
    if doc.get("order") != "application":
        raise ParseError(f"unsupported factor order {doc.get('order')!r}")
    try:
        n = int(doc["n"])
        graph = build_graph(n, [(int(i), int(j)) for i, j in doc["graph"]])
        pairs = [_factor_from_obj(obj, n) for obj in doc["factors"]]
        stats_obj = doc["stats"]
        stats = ScheduleStats(
            int(stats_obj["raw"]), int(stats_obj["lifted"]), int(stats_obj["optimized"])
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed schedule JSON: {exc}") from exc
    factors = tuple(f for f, _ in pairs)
    provenance = tuple(tag for _, tag in pairs)
    return Schedule(factors, graph, stats, provenance)


def save_schedule(s: Schedule, path: str | Path) -> None:
    Path(path).write_text(schedule_to_json(s) + "\n")


def load_schedule(path: str | Path) -> Schedule:
    return schedule_from_json(Path(path).read_text())
