"""Pauli-flow detection and extraction for labelled open graphs.

Decides whether a labelled open graph (graph + inputs + outputs +
per-vertex measurement labels) admits Pauli flow, and when it does,
returns a focused correction function together with the induced
measurement order.  Built on dense GF(2) linear algebra with bit-packed
rows; flow existence reduces to finding a right inverse of the
flow-demand matrix whose order-demand product is acyclic.
"""

from .analysis import (
    FocusedSetBasis,
    ReversalReport,
    check_reversal_properties,
    focused_sets_basis,
    graph_from_matrix,
    max_focus_region,
    reverse_graph,
    satisfies_focusing_conditions,
)
from .demand import flow_demand_matrix, order_demand_matrix
from .documents import (
    DocumentError,
    export_dot,
    parse_flow,
    parse_graph,
    serialize_flow,
    serialize_graph,
)
from .finder import FlowResult, NoFlowReason, find_flow, find_flow_general, find_flow_square
from .flow import (
    FlowCheckReport,
    OrderRelation,
    check_pauli_flow,
    correction_to_matrix,
    induced_relation,
    matrix_to_correction,
)
from .gf2 import (
    BitMatrix,
    DagCheck,
    EchelonResult,
    inverse,
    is_dag,
    kernel_basis,
    mat_mul,
    rank,
    right_inverse,
    row_echelon,
    transitive_closure,
)
from .instances import exhaustive_instances, random_instance, sampled_instances
from .open_graph import (
    InvalidGraphError,
    LabelledOpenGraph,
    MeasurementLabel,
    VertexClasses,
    Violation,
)
from .oracle import OracleLimits, OracleResult, brute_force_find

__all__ = [
    "BitMatrix",
    "DagCheck",
    "DocumentError",
    "EchelonResult",
    "FlowCheckReport",
    "FlowResult",
    "FocusedSetBasis",
    "InvalidGraphError",
    "LabelledOpenGraph",
    "MeasurementLabel",
    "NoFlowReason",
    "OracleLimits",
    "OracleResult",
    "OrderRelation",
    "ReversalReport",
    "VertexClasses",
    "Violation",
    "brute_force_find",
    "check_pauli_flow",
    "check_reversal_properties",
    "correction_to_matrix",
    "exhaustive_instances",
    "export_dot",
    "find_flow",
    "find_flow_general",
    "find_flow_square",
    "flow_demand_matrix",
    "focused_sets_basis",
    "graph_from_matrix",
    "induced_relation",
    "inverse",
    "is_dag",
    "kernel_basis",
    "mat_mul",
    "matrix_to_correction",
    "max_focus_region",
    "order_demand_matrix",
    "parse_flow",
    "parse_graph",
    "random_instance",
    "rank",
    "reverse_graph",
    "right_inverse",
    "row_echelon",
    "sampled_instances",
    "satisfies_focusing_conditions",
    "serialize_flow",
    "serialize_graph",
    "transitive_closure",
]

__version__ = "0.1.0"
