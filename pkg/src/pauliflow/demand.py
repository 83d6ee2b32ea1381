"""Flow-demand and order-demand matrices of a labelled open graph.

Both matrices have one row per non-output and one column per non-input,
in canonical vertex order, and are derived from the reduced adjacency
matrix by rewriting each row according to the vertex's measurement
label.  The flow-demand matrix encodes the per-vertex correction
requirements; right-multiplying the order-demand matrix by a correction
matrix yields the induced measurement-order constraints.
"""

from __future__ import annotations

from .gf2 import BitMatrix
from .open_graph import LabelledOpenGraph, MeasurementLabel

L = MeasurementLabel

# Which labels contribute the neighbourhood row / the diagonal 1.
_FLOW_NEIGHBOURS = frozenset({L.X, L.XY, L.Y})
_FLOW_DIAGONAL = frozenset({L.Y, L.Z, L.YZ, L.XZ})
_ORDER_NEIGHBOURS = frozenset({L.YZ, L.XZ})
_ORDER_DIAGONAL = frozenset({L.XY, L.XZ})


def _demand(g: LabelledOpenGraph, neighbours: frozenset[L], diagonal: frozenset[L]) -> BitMatrix:
    g.require_valid()
    rows = g.measured
    cols = g.non_inputs
    col_pos = {c: j for j, c in enumerate(cols)}
    adjacency = g.adjacency
    bits = []
    for v in rows:
        label = g.labels[v]
        row = 0
        if label in neighbours:
            for w in adjacency[v]:
                j = col_pos.get(w)
                if j is not None:
                    row |= 1 << j
        if label in diagonal:
            j = col_pos.get(v)
            # The diagonal entry exists only when v has a column (v not an
            # input); labels confined to non-inputs always do.
            if j is not None:
                row |= 1 << j
        bits.append(row)
    return BitMatrix(rows, cols, bits)


def flow_demand_matrix(g: LabelledOpenGraph) -> BitMatrix:
    """Per-row encoding: X/XY -> neighbourhood (zero diagonal);
    Z/YZ/XZ -> single diagonal 1; Y -> neighbourhood plus diagonal 1
    where the vertex's own column exists."""
    return _demand(g, _FLOW_NEIGHBOURS, _FLOW_DIAGONAL)


def order_demand_matrix(g: LabelledOpenGraph) -> BitMatrix:
    """Per-row encoding: X/Y/Z -> zero row; YZ -> neighbourhood (zero
    diagonal); XZ -> neighbourhood plus diagonal 1; XY -> single diagonal
    1 where the vertex's own column exists, else zero row."""
    return _demand(g, _ORDER_NEIGHBOURS, _ORDER_DIAGONAL)
