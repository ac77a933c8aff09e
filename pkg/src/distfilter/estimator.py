"""scikit-learn style front end: fit compiles a filter, transform runs it on signals."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .elimination import decompose, factor_count_bound
from .graph import Graph, build_graph
from .optimize import optimize_schedule
from .simulate import simulate
from .validation import as_fraction_matrix, as_fraction_vector


class DistributedGraphFilter(TransformerMixin, BaseEstimator):
    """Compile a linear graph filter into one-hop rounds and apply it to signals.

    Parameters
    ----------
    graph : Graph or iterable of (i, j) edges
        Connected undirected communication graph on nodes 1..n, where n is
        taken from the filter matrix passed to :meth:`fit`.
    optimize : bool, default True
        Cancel inverse pairs and merge adjacent one-hop blocks after
        decomposition.
    mode : {'exact', 'float'}, default 'exact'
        'exact' transforms with rational arithmetic and returns an object
        array of Fractions; 'float' runs the rounds in floating point.

    Attributes
    ----------
    schedule_ : Schedule
        The compiled factor sequence in application order.
    graph_ : Graph
        The validated graph used for compilation.
    report_ : OptimizationReport or None
        Size report when ``optimize`` is on.

    Examples
    --------
    >>> f = DistributedGraphFilter(graph=[(1, 2), (2, 3)])
    >>> f.fit([[1, 0, 0], [0, 2, 0], [1, 0, 1]]).transform([[1, 1, 1]])
    array([[Fraction(1, 1), Fraction(2, 1), Fraction(2, 1)]], dtype=object)
    """

    def __init__(self, graph=None, optimize: bool = True, mode: str = "exact"):
        self.graph = graph
        self.optimize = optimize
        self.mode = mode

    def _build_graph(self, n: int) -> Graph:
        if self.graph is None:
            raise ValueError("graph must be set before fitting")
        if isinstance(self.graph, Graph):
            if self.graph.n != n:
                raise ValueError(f"graph has {self.graph.n} nodes but the filter is {n}x{n}")
            return self.graph
        return build_graph(n, list(self.graph))

    def fit(self, X, y=None):
        """Compile the n-by-n filter matrix ``X`` over the configured graph."""
        matrix = as_fraction_matrix(np.asarray(X, dtype=object).tolist())
        g = self._build_graph(len(matrix))
        schedule = decompose(matrix, g)
        report = None
        if self.optimize:
            schedule, report = optimize_schedule(schedule, g)
        self.graph_ = g
        self.schedule_ = schedule
        self.report_ = report
        self.bound_ = factor_count_bound(g)
        self.n_features_in_ = g.n
        return self

    def transform(self, X):
        """Apply the compiled filter to each row of ``X`` via simulated rounds."""
        check_is_fitted(self, "schedule_")
        rows = np.asarray(X, dtype=object)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if rows.shape[1] != self.n_features_in_:
            raise ValueError(f"expected signals of length {self.n_features_in_}, got {rows.shape[1]}")
        outputs = []
        for row in rows.tolist():
            x = as_fraction_vector(row, self.n_features_in_)
            y, _ = simulate(self.schedule_, self.graph_, x, mode=self.mode)
            outputs.append(y)
        if self.mode == "float":
            return np.asarray(outputs, dtype=float)
        return np.asarray(
            [[Fraction(v) for v in row] for row in outputs], dtype=object
        )
