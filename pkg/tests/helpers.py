"""Shared test oracles and generators, independent of the package internals.

The multiply/rank/path oracles here are deliberately written from scratch
(dense triple loops, plain row reduction, exhaustive path enumeration) so the
code paths under test are checked against something they do not share.
"""

from __future__ import annotations

import random
from fractions import Fraction

from distfilter import AddRow, Diagonal, ScaleRow, Swap, build_graph

F = Fraction


def frac_matrix(rows):
    return [[F(v) for v in row] for row in rows]


def identity(n):
    return [[F(int(r == c)) for c in range(n)] for r in range(n)]


def mat_mul(a, b):
    n = len(a)
    out = [[F(0)] * n for _ in range(n)]
    for r in range(n):
        for k in range(n):
            if a[r][k] == 0:
                continue
            for c in range(n):
                out[r][c] += a[r][k] * b[k][c]
    return out


def mat_vec(a, x):
    return [sum((row[k] * x[k] for k in range(len(x))), F(0)) for row in a]


def product_of(matrices, n):
    acc = identity(n)
    for m in matrices:
        acc = mat_mul(acc, m)
    return acc


def rank_oracle(matrix):
    """Rank by plain row-echelon reduction on a scratch copy."""
    a = [row[:] for row in matrix]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    rank = 0
    for c in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if a[r][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = F(1) / a[rank][c]
        a[rank] = [v * inv for v in a[rank]]
        for r in range(n_rows):
            if r != rank and a[r][c] != 0:
                factor = a[r][c]
                a[r] = [v - factor * p for v, p in zip(a[r], a[rank])]
        rank += 1
    return rank


def floyd_warshall(n, edges):
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for i, j in edges:
        dist[i - 1][j - 1] = dist[j - 1][i - 1] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = dist[i][k] + dist[k][j]
                if via < dist[i][j]:
                    dist[i][j] = via
    return dist


def all_shortest_paths(n, edges, start, goal):
    """All shortest start->goal node sequences by exhaustive simple-path search."""
    adj = {v: set() for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    best: list[list[int]] = []

    def walk(path):
        nonlocal best
        node = path[-1]
        if node == goal:
            if not best or len(path) < len(best[0]):
                best = [path[:]]
            elif len(path) == len(best[0]):
                best.append(path[:])
            return
        if best and len(path) >= len(best[0]):
            return
        for nxt in sorted(adj[node]):
            if nxt not in path:
                path.append(nxt)
                walk(path)
                path.pop()

    walk([start])
    return best


def random_tree_edges(rng: random.Random, n: int):
    return [(rng.randint(1, v - 1), v) for v in range(2, n + 1)]


def cycle_edges(n: int):
    return [(v, v + 1) for v in range(1, n)] + [(1, n)]


def complete_edges(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def random_connected_graph(rng: random.Random, n: int, kind: str | None = None):
    kind = kind or rng.choice(["tree", "cycle", "random"])
    if n < 3 and kind == "cycle":
        kind = "tree"
    if kind == "tree":
        edges = random_tree_edges(rng, n)
    elif kind == "cycle":
        edges = cycle_edges(n)
    else:
        edges = random_tree_edges(rng, n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if rng.random() < 0.3:
                    edges.append((i, j))
    return build_graph(n, edges)


def random_rational(rng: random.Random, lo=-4, hi=4, max_den=3):
    return F(rng.randint(lo, hi), rng.randint(1, max_den))


def random_matrix(rng: random.Random, n: int):
    return [[random_rational(rng) for _ in range(n)] for _ in range(n)]


def random_matrix_with_rank(rng: random.Random, n: int, rank: int):
    if rank == 0:
        return [[F(0)] * n for _ in range(n)]
    while True:
        a = [[F(rng.randint(-3, 3)) for _ in range(rank)] for _ in range(n)]
        b = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(rank)]
        m = [[sum((a[r][k] * b[k][c] for k in range(rank)), F(0)) for c in range(n)] for r in range(n)]
        if rank_oracle(m) == rank:
            return m


def random_vector(rng: random.Random, n: int):
    return [random_rational(rng, -9, 9, 4) for _ in range(n)]


# ---------------------------------------------------------------------------
# Frozen five-node reference example: filter, graph, elimination snapshots,
# and the known-good factor chain its decomposition must reproduce.
# ---------------------------------------------------------------------------

REF5_EDGES = [(1, 2), (2, 3), (3, 4), (3, 5)]

REF5_MATRIX = frac_matrix(
    [
        [0, 0, 0, 0, 0],
        [1, 0, 0, 3, 0],
        [2, 5, 0, 0, 0],
        [3, 6, 0, 0, 0],
        [4, 0, 0, 4, 0],
    ]
)

# State after clearing column 1 and after clearing column 2.
REF5_STAGE1 = frac_matrix(
    [
        [1, 0, 0, 3, 0],
        [0, 0, 0, 0, 0],
        [0, 5, 0, -6, 0],
        [0, 6, 0, -9, 0],
        [0, 0, 0, -8, 0],
    ]
)

REF5_STAGE2 = [
    [F(1), F(0), F(0), F(3), F(0)],
    [F(0), F(1), F(0), F(-6, 5), F(0)],
    [F(0), F(0), F(0), F(0), F(0)],
    [F(0), F(0), F(0), F(-9, 5), F(0)],
    [F(0), F(0), F(0), F(-8), F(0)],
]

REF5_RESIDUAL = (F(1), F(1), F(0), F(1), F(0))

REF5_ROW_OPS = [
    Swap(1, 2),
    AddRow(3, 1, -2),
    AddRow(4, 1, -3),
    AddRow(5, 1, -4),
    Swap(2, 3),
    ScaleRow(2, F(1, 5)),
    AddRow(4, 2, -6),
    ScaleRow(4, F(-5, 9)),
    AddRow(1, 4, -3),
    AddRow(2, 4, F(6, 5)),
    AddRow(5, 4, 8),
]

# Inverted elimination in multiplication order: the factor chain whose product
# is REF5_MATRIX.
REF5_CHAIN = [
    Swap(1, 2),
    AddRow(3, 1, 2),
    AddRow(4, 1, 3),
    AddRow(5, 1, 4),
    Swap(2, 3),
    ScaleRow(2, 5),
    AddRow(4, 2, 6),
    ScaleRow(4, F(-9, 5)),
    AddRow(1, 4, 3),
    AddRow(2, 4, F(-6, 5)),
    AddRow(5, 4, -8),
    Diagonal(REF5_RESIDUAL),
]

# Known one-hop rewrites of the non-local chain factors on REF5_EDGES.
REF5_LIFTS = {
    AddRow(3, 1, 2): [Swap(1, 2), AddRow(3, 2, 2), Swap(1, 2)],
    AddRow(4, 1, 3): [Swap(1, 2), Swap(2, 3), AddRow(4, 3, 3), Swap(2, 3), Swap(1, 2)],
    AddRow(5, 1, 4): [Swap(1, 2), Swap(2, 3), AddRow(5, 3, 4), Swap(2, 3), Swap(1, 2)],
    AddRow(4, 2, 6): [Swap(2, 3), AddRow(4, 3, 6), Swap(2, 3)],
    AddRow(1, 4, 3): [Swap(3, 4), Swap(2, 3), AddRow(1, 2, 3), Swap(2, 3), Swap(3, 4)],
    AddRow(2, 4, F(-6, 5)): [Swap(3, 4), AddRow(2, 3, F(-6, 5)), Swap(3, 4)],
    AddRow(5, 4, -8): [Swap(3, 4), AddRow(5, 3, -8), Swap(3, 4)],
}


def ref5_graph():
    return build_graph(5, REF5_EDGES)
