"""Focused sets, graph reversal and the matrix-to-graph reduction.

A focused set is a set of non-inputs whose net correction effect is
invisible on every measured vertex; the focused sets are exactly the
column supports of the kernel of the flow-demand matrix, so they form a
vector space under symmetric difference.  Reversing a graph with
equally many inputs and outputs swaps the two sets and relabels the old
outputs XY; flow existence is preserved, correction sets correspond
across X-like vertices and the measurement order inverts on the planar
internal vertices.  Finally, any square bit matrix embeds as a
bipartite instance whose flow-demand matrix is the matrix itself, which
turns flow finding into matrix inversion.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .demand import flow_demand_matrix
from .finder import find_flow
from .gf2 import BitMatrix
from .open_graph import LabelledOpenGraph, MeasurementLabel

L = MeasurementLabel

#: Basis of the focused-set space: one vertex set per kernel basis column.
FocusedSetBasis = tuple[frozenset[str], ...]


def focused_sets_basis(g: LabelledOpenGraph) -> FocusedSetBasis:
    """Supports of a kernel basis of the flow-demand matrix.

    Empty when the matrix is injective; together with the empty set, the
    closure of the returned sets under symmetric difference is exactly
    the collection of focused sets.
    """
    g.require_valid()
    kernel = gf2.kernel_basis(flow_demand_matrix(g))
    return tuple(kernel.col_support(c) for c in kernel.cols)


def max_focus_region(g: LabelledOpenGraph, subset: frozenset[str] | set[str]) -> frozenset[str]:
    """Largest set of measured vertices the given set is focused over.

    These are the vertices whose flow-demand row pairs to zero with the
    subset's indicator vector; the subset is focused over every subset
    of the result and nothing larger.
    """
    g.require_valid()
    subset = frozenset(subset)
    unknown = subset - set(g.non_inputs)
    if unknown:
        raise ValueError(f"not non-input vertices: {sorted(unknown)}")
    m_mat = flow_demand_matrix(g)
    col_pos = {c: j for j, c in enumerate(m_mat.cols)}
    mask = 0
    for v in subset:
        mask |= 1 << col_pos[v]
    return frozenset(
        v for v, row in zip(m_mat.rows, m_mat.bits) if not (row & mask).bit_count() & 1
    )


def satisfies_focusing_conditions(
    g: LabelledOpenGraph,
    subset: frozenset[str] | set[str],
    over: frozenset[str] | set[str] | None = None,
) -> bool:
    """Definition-level focusing check, straight from the neighbourhoods.

    Checks, for every vertex w of ``over`` (default: all measured
    vertices): w in the set implies an X-like label; w in its odd
    neighbourhood implies a Z-like or Y label; a Y-labelled w is not in
    the closed odd neighbourhood.  Used as the independent cross-check
    for the kernel characterisation.
    """
    g.require_valid()
    subset = frozenset(subset)
    scope = frozenset(g.measured) if over is None else frozenset(over)
    odd = g.odd_neighbourhood(subset)
    codd = odd ^ subset
    for w in scope:
        label = g.labels[w]
        if w in subset and label not in (L.XY, L.X, L.Y):
            return False
        if w in odd and label not in (L.XZ, L.YZ, L.Y, L.Z):
            return False
        if label is L.Y and w in codd:
            return False
    return True


# -- reversal -----------------------------------------------------------


def reverse_graph(g: LabelledOpenGraph) -> LabelledOpenGraph:
    """Swap inputs and outputs; old outputs become XY-measured inputs.

    Requires equally many inputs and outputs and disjoint input/output
    sets (otherwise the swapped labelling is not well defined).
    """
    g.require_valid()
    if g.n_inputs != g.n_outputs:
        raise ValueError("reversal requires equally many inputs and outputs")
    if g.inputs & g.outputs:
        raise ValueError("reversal requires disjoint inputs and outputs")
    labels = {v: g.labels[v] for v in g.vertex_order if v not in g.inputs and v not in g.outputs}
    labels.update({v: L.XY for v in g.outputs})
    return LabelledOpenGraph(
        vertices=g.vertices,
        edges=g.edges,
        inputs=g.outputs,
        outputs=g.inputs,
        labels=labels,
    )


@dataclass(frozen=True)
class ReversalReport:
    """Observable reversal properties of a graph and its reverse.

    ``correspondence_holds`` covers correction sets across the X-like
    vertices (u corrects with w iff, reversed, w corrects with u);
    ``order_inversion_holds`` covers the transitively closed measurement
    order on the planar internal vertices.  Both are None unless both
    directions admit flow.
    """

    forward_found: bool
    reverse_found: bool
    existence_agrees: bool
    correspondence_holds: bool | None
    order_inversion_holds: bool | None

    @property
    def passed(self) -> bool:
        return self.existence_agrees and self.correspondence_holds is not False and (
            self.order_inversion_holds is not False
        )


def check_reversal_properties(g: LabelledOpenGraph) -> ReversalReport:
    """Run the finder on the graph and its reverse and compare the flows."""
    reversed_g = reverse_graph(g)
    forward = find_flow(g, want_closure=True)
    backward = find_flow(reversed_g, want_closure=True)
    agrees = forward.found == backward.found
    if not (forward.found and backward.found):
        return ReversalReport(forward.found, backward.found, agrees, None, None)

    classes = g.classify()
    x_like = classes.x_like
    correspondence = True
    for u in sorted(g.inputs | x_like):
        for w in sorted(x_like | g.outputs):
            if (w in forward.correction[u]) != (u in backward.correction[w]):
                correspondence = False
                break
        if not correspondence:
            break

    planar = classes.planar_internal
    fwd_edges = forward.closure.edges
    bwd_edges = backward.closure.edges
    inversion = True
    for u in sorted(planar):
        for w in sorted(planar):
            if ((u, w) in fwd_edges) != ((w, u) in bwd_edges):
                inversion = False
                break
        if not inversion:
            break
    return ReversalReport(True, True, agrees, correspondence, inversion)


# -- reduction from matrix inversion -------------------------------------


def graph_from_matrix(matrix: BitMatrix) -> LabelledOpenGraph:
    """Bipartite instance whose flow-demand matrix is the given matrix.

    Row k becomes input ``i<k>``, column l becomes output ``o<l>``
    (1-based, zero padded so the canonical vertex order matches the
    positional order), with an edge wherever the matrix has a 1 and
    every input measured X.  The order-demand matrix of the result is
    zero, so the instance has flow iff the matrix is invertible, and the
    correction matrix of the flow is the inverse.
    """
    n = len(matrix.rows)
    if n != len(matrix.cols):
        raise ValueError("reduction requires a square matrix")
    width = len(str(n))
    input_names = [f"i{k + 1:0{width}d}" for k in range(n)]
    output_names = [f"o{k + 1:0{width}d}" for k in range(n)]
    edges = [
        (input_names[k], output_names[j])
        for k in range(n)
        for j in range(n)
        if (matrix.bits[k] >> j) & 1
    ]
    return LabelledOpenGraph.make(
        vertices=input_names + output_names,
        edges=edges,
        inputs=input_names,
        outputs=output_names,
        labels={name: L.X for name in input_names},
    )
