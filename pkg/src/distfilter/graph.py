"""Undirected simple graphs: connectivity, shortest paths, diameter, file format.

Nodes are 1-based everywhere in the public API. BFS visits neighbors in
ascending order, which makes every returned shortest path the
lexicographically smallest node sequence among the equal-length candidates;
schedules derived from these paths are therefore identical across runs.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .errors import DisconnectedGraphError, IndexRangeError, ParseError, SelfLoopError

Edge = tuple[int, int]
Path_ = list[int]


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on nodes 1..n with normalized edges (i < j)."""

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return self.adjacency[v]

    def has_edge(self, i: int, j: int) -> bool:
        self._check_node(i)
        self._check_node(j)
        return (min(i, j), max(i, j)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def _check_node(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise IndexRangeError(f"node {v} outside 1..{self.n}")

    def _bfs(self, source: int) -> tuple[dict[int, int], dict[int, int]]:
        """Distances and BFS-tree parents from ``source`` (ascending neighbor order)."""
        dist = {source: 0}
        parent: dict[int, int] = {}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        return dist, parent

    def is_connected(self) -> bool:
        return self.first_unreachable() is None

    def first_unreachable(self) -> int | None:
        """Smallest node not reachable from node 1, or None when connected."""
        dist, _ = self._bfs(1)
        for v in range(1, self.n + 1):
            if v not in dist:
                return v
        return None

    def shortest_path(self, i: int, j: int) -> Path_:
        """Lexicographically smallest shortest path from i to j (inclusive)."""
        self._check_node(i)
        self._check_node(j)
        if i == j:
            return [i]
        dist, parent = self._bfs(i)
        if j not in dist:
            raise DisconnectedGraphError(f"no path from {i} to {j}", unreachable=j)
        path = [j]
        while path[-1] != i:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def distance(self, i: int, j: int) -> int:
        return len(self.shortest_path(i, j)) - 1

    def diameter(self) -> int:
        """Edge count of the longest shortest path (0 for a single node)."""
        worst = 0
        for v in range(1, self.n + 1):
            dist, _ = self._bfs(v)
            if len(dist) != self.n:
                missing = min(u for u in range(1, self.n + 1) if u not in dist)
                raise DisconnectedGraphError(
                    f"graph is disconnected: node {missing} unreachable from node {v}",
                    unreachable=missing,
                )
            worst = max(worst, max(dist.values()))
        return worst

    def checksum(self) -> str:
        """Stable short digest of (n, edges); identifies the target of a schedule."""
        canon = f"{self.n};" + ",".join(f"{i}-{j}" for i, j in self.edges)
        return hashlib.sha256(canon.encode()).hexdigest()[:16]


def build_graph(n: int, edge_list) -> Graph:
    """Normalize an edge list into a Graph: collapse duplicates, reject self-loops."""
    if n < 1:
        raise ParseError(f"node count must be at least 1, got {n}")
    seen: set[Edge] = set()
    for i, j in edge_list:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexRangeError(f"edge ({i},{j}) outside 1..{n}")
        if i == j:
            raise SelfLoopError(f"self-loop ({i},{i}) not allowed")
        seen.add((min(i, j), max(i, j)))
    return Graph(n, tuple(sorted(seen)))


def parse_graph_text(text: str) -> Graph:
    """Parse the graph format: line 1 is n; then ``i j`` lines; ``#`` lines are comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"expected node count on first line, got {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'i j' edge line, got {ln!r}")
        try:
            edges.append((int(tokens[0]), int(tokens[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer node in edge line {ln!r}") from exc
    return build_graph(n, edges)


def load_graph(path: str | Path) -> Graph:
    return parse_graph_text(Path(path).read_text())


def graph_to_dot(g: Graph) -> str:
    """Graphviz text for the graph; no node is marked specially."""
    out = ["graph G {"]
    out.extend(f"  {v};" for v in range(1, g.n + 1))
    out.extend(f"  {i} -- {j};" for i, j in g.edges)
    out.append("}")
    return "\n".join(out) + "\n"
