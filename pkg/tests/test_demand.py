"""Tests for the demand-matrix constructions."""

from __future__ import annotations

from pauliflow import (
    BitMatrix,
    LabelledOpenGraph,
    MeasurementLabel,
    flow_demand_matrix,
    order_demand_matrix,
    sampled_instances,
)

L = MeasurementLabel

# Relabelling under which an order-demand row coincides with the
# flow-demand row of the relabelled vertex.
DUAL = {L.XY: L.Z, L.YZ: L.X, L.XZ: L.Y}


def test_flow_demand_matches_worked_matrix(example_graph, flow_demand_expected):
    assert flow_demand_matrix(example_graph) == flow_demand_expected


def test_order_demand_matches_worked_matrix(example_graph, order_demand_expected):
    assert order_demand_matrix(example_graph) == order_demand_expected


def test_all_outputs_gives_empty_matrix():
    g = LabelledOpenGraph.make(
        vertices=["a", "b"], edges=[("a", "b")], inputs=[], outputs=["a", "b"], labels={}
    )
    m = flow_demand_matrix(g)
    assert m.shape == (0, 2)
    assert order_demand_matrix(g).shape == (0, 2)


def test_y_input_row_has_no_diagonal_entry():
    # A Y-measured input has no own column, so only the neighbourhood
    # part of its row can appear.
    g = LabelledOpenGraph.make(
        vertices=["i", "o"], edges=[("i", "o")], inputs=["i"], outputs=["o"],
        labels={"i": "Y"},
    )
    m = flow_demand_matrix(g)
    assert m.rows == ("i",) and m.cols == ("o",)
    assert m.row_support("i") == frozenset({"o"})
    assert order_demand_matrix(g).is_zero()


def test_isolated_xz_vertex_rows():
    g = LabelledOpenGraph.make(
        vertices=["v", "o"], edges=[], inputs=[], outputs=["o"], labels={"v": "XZ"}
    )
    assert flow_demand_matrix(g).row_support("v") == frozenset({"v"})
    assert order_demand_matrix(g).row_support("v") == frozenset({"v"})


def test_pauli_and_xy_input_rows_are_zero_in_order_demand():
    g = LabelledOpenGraph.make(
        vertices=["i", "x", "y", "z", "o"],
        edges=[("i", "x"), ("x", "y"), ("y", "z"), ("z", "o")],
        inputs=["i"],
        outputs=["o"],
        labels={"i": "XY", "x": "X", "y": "Y", "z": "Z"},
    )
    assert order_demand_matrix(g).is_zero()


def test_order_demand_zero_rows_on_random_instances():
    for g in sampled_instances(30, seed=21):
        n = order_demand_matrix(g)
        for v in g.measured:
            if g.labels[v].is_pauli or (g.labels[v] is L.XY and v in g.inputs):
                assert n.row_bits(v) == 0


def test_label_swap_duality_on_random_instances():
    # The order-demand row of a planar vertex equals the flow-demand row
    # it would have under the dual (Pauli) label.
    checked = 0
    for g in sampled_instances(40, seed=33):
        n = order_demand_matrix(g)
        for v in g.measured:
            if g.labels[v] not in DUAL or v in g.inputs:
                continue
            relabelled = LabelledOpenGraph(
                g.vertices,
                g.edges,
                g.inputs,
                g.outputs,
                {**g.labels, v: DUAL[g.labels[v]]},
            )
            assert n.row_bits(v) == flow_demand_matrix(relabelled).row_bits(v)
            checked += 1
    assert checked > 20


def test_edges_among_outputs_do_not_matter(example_graph):
    with_output_edge = LabelledOpenGraph(
        example_graph.vertices, example_graph.edges + (("o1", "o2"),), example_graph.inputs, example_graph.outputs, example_graph.labels
    )
    assert flow_demand_matrix(with_output_edge) == flow_demand_matrix(example_graph)
    assert order_demand_matrix(with_output_edge) == order_demand_matrix(example_graph)


def test_demand_shapes_on_random_instances():
    for g in sampled_instances(20, seed=41):
        m = flow_demand_matrix(g)
        assert m.shape == (g.n - g.n_outputs, g.n - g.n_inputs)
        assert m.rows == g.measured and m.cols == g.non_inputs
        assert isinstance(m, BitMatrix)
