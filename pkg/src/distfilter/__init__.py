"""distfilter: compile linear graph filters into schedules of one-hop factors.

Any square rational matrix over a connected undirected graph factors exactly
into a sequence of matrices whose off-diagonal nonzeros all sit on graph
edges, so each factor is one round of neighbor-only message passing. The
package provides the eliminator that builds such schedules, a path-lifting
rewriter for non-local elementary factors, schedule optimization, a
round-synchronous simulator, JSON serialization, a CLI, and a scikit-learn
style estimator facade.
"""

from .elimination import decompose, eliminate_to_diagonal, factor_count_bound
from .errors import (
    DimensionMismatchError,
    DisconnectedGraphError,
    DistFilterError,
    IndexRangeError,
    NonLocalFactorError,
    NonSquareError,
    ParseError,
    ScheduleGraphMismatchError,
    SelfLoopError,
    SingularFactorError,
    UnsupportedFactorError,
)
from .estimator import DistributedGraphFilter
from .factors import (
    AddRow,
    DenseLocal,
    Diagonal,
    Factor,
    ScaleRow,
    Swap,
    apply_left,
    apply_right,
    factor_is_implementable,
    invert_factor,
    is_directly_implementable,
    materialize,
    off_diagonal_count,
)
from .graph import Graph, build_graph, graph_to_dot, load_graph, parse_graph_text
from .lifting import LiftedSequence, lift
from .matrices import (
    format_scalar,
    identity_matrix,
    load_matrix,
    load_vector,
    parse_matrix_text,
    parse_scalar,
    parse_vector_text,
)
from .optimize import OptimizationReport, cancel_inverse_pairs, merge_adjacent, optimize_schedule
from .schedule import (
    Schedule,
    ScheduleStats,
    load_schedule,
    save_schedule,
    schedule_from_json,
    schedule_to_json,
)
from .simulate import RoundRecord, SimTrace, check_schedule, simulate, trace_to_json, verify
from .validation import as_fraction, as_fraction_matrix, as_fraction_vector, check_square

__version__ = "0.1.0"

__all__ = [
    "AddRow",
    "DenseLocal",
    "Diagonal",
    "DimensionMismatchError",
    "DisconnectedGraphError",
    "DistFilterError",
    "DistributedGraphFilter",
    "Factor",
    "Graph",
    "IndexRangeError",
    "LiftedSequence",
    "NonLocalFactorError",
    "NonSquareError",
    "OptimizationReport",
    "ParseError",
    "RoundRecord",
    "ScaleRow",
    "Schedule",
    "ScheduleGraphMismatchError",
    "ScheduleStats",
    "SelfLoopError",
    "SimTrace",
    "SingularFactorError",
    "Swap",
    "UnsupportedFactorError",
    "apply_left",
    "apply_right",
    "as_fraction",
    "as_fraction_matrix",
    "as_fraction_vector",
    "build_graph",
    "cancel_inverse_pairs",
    "check_schedule",
    "check_square",
    "decompose",
    "eliminate_to_diagonal",
    "factor_count_bound",
    "factor_is_implementable",
    "format_scalar",
    "graph_to_dot",
    "identity_matrix",
    "invert_factor",
    "is_directly_implementable",
    "lift",
    "load_graph",
    "load_matrix",
    "load_schedule",
    "load_vector",
    "materialize",
    "merge_adjacent",
    "off_diagonal_count",
    "optimize_schedule",
    "parse_graph_text",
    "parse_matrix_text",
    "parse_scalar",
    "parse_vector_text",
    "save_schedule",
    "schedule_from_json",
    "schedule_to_json",
    "simulate",
    "trace_to_json",
    "verify",
]
