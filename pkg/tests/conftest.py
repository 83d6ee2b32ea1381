"""Shared fixtures: the two worked-example graphs and their matrices."""

from __future__ import annotations

import pytest

from pauliflow import BitMatrix, LabelledOpenGraph

FIXTURE_DIR = "tests/fixtures"


def matrix_from_supports(rows, cols, supports) -> BitMatrix:
    """Build a matrix from {row label: iterable of column labels with a 1}."""
    entries = [(r, c) for r, support in supports.items() for c in support]
    return BitMatrix.from_entries(rows, cols, entries)


def make_example_graph() -> LabelledOpenGraph:
    return LabelledOpenGraph.make(
        vertices=["i", "a", "b", "e", "d", "o1", "o2"],
        edges=[
            ("i", "b"),
            ("a", "d"),
            ("a", "o2"),
            ("b", "e"),
            ("b", "d"),
            ("b", "o2"),
            ("e", "d"),
            ("e", "o1"),
            ("e", "o2"),
            ("d", "o2"),
        ],
        inputs=["i"],
        outputs=["o1", "o2"],
        labels={"i": "XY", "a": "XZ", "b": "Y", "e": "XY", "d": "Z"},
    )


def make_triangle_graph() -> LabelledOpenGraph:
    return LabelledOpenGraph.make(
        vertices=["i", "a", "o"],
        edges=[("i", "a"), ("i", "o"), ("a", "o")],
        inputs=["i"],
        outputs=["o"],
        labels={"i": "X", "a": "YZ"},
    )


@pytest.fixture
def example_graph() -> LabelledOpenGraph:
    return make_example_graph()


@pytest.fixture
def triangle_graph() -> LabelledOpenGraph:
    return make_triangle_graph()


#: Correction function of the worked flow on the example_graph graph.
EXAMPLE_CORRECTION = {
    "i": frozenset({"b", "e", "o1"}),
    "a": frozenset({"a", "e", "o1", "o2"}),
    "b": frozenset({"e"}),
    "e": frozenset({"o1"}),
    "d": frozenset({"d", "o2"}),
}

#: Its order DAG: i, a and b each precede e.
EXAMPLE_ORDER_EDGES = frozenset({("i", "e"), ("a", "e"), ("b", "e")})

# Row supports of the worked example's matrices, indexed by label so tests stay
# independent of the canonical storage order.
FLOW_DEMAND_SUPPORTS = {
    "i": {"b"},
    "a": {"a"},
    "b": {"b", "e", "d", "o2"},
    "e": {"b", "d", "o1", "o2"},
    "d": {"d"},
}
ORDER_DEMAND_SUPPORTS = {
    "i": set(),
    "a": {"a", "d", "o2"},
    "b": set(),
    "e": {"e"},
    "d": set(),
}
CORRECTION_MATRIX_SUPPORTS = {  # rows = non-inputs, support = measured columns
    "a": {"a"},
    "b": {"i"},
    "e": {"i", "a", "b"},
    "d": {"d"},
    "o1": {"i", "a", "e"},
    "o2": {"a", "d"},
}
ORDER_PRODUCT_SUPPORTS = {
    "i": set(),
    "a": set(),
    "b": set(),
    "e": {"i", "a", "b"},
    "d": set(),
}

# A specific right inverse and kernel basis for the example_graph flow-demand
# matrix, used to reproduce the worked layered run bit for bit.
INJECTED_C0_SUPPORTS = {
    "a": {"a"},
    "b": {"i"},
    "e": {"i", "b", "d"},
    "d": {"d"},
    "o1": {"i", "e", "d"},
    "o2": set(),
}
INJECTED_KERNEL_SUPPORT = {"e", "o1", "o2"}
INJECTED_RUN_SOLUTION = {"i": 0, "a": 1, "b": 0, "e": 0, "d": 1}
INJECTED_RUN_LAYERS = ({"e", "d"}, {"i", "a", "b"})


@pytest.fixture
def example_correction():
    return dict(EXAMPLE_CORRECTION)


@pytest.fixture
def flow_demand_expected(example_graph) -> BitMatrix:
    return matrix_from_supports(example_graph.measured, example_graph.non_inputs, FLOW_DEMAND_SUPPORTS)


@pytest.fixture
def order_demand_expected(example_graph) -> BitMatrix:
    return matrix_from_supports(example_graph.measured, example_graph.non_inputs, ORDER_DEMAND_SUPPORTS)


@pytest.fixture
def correction_matrix_expected(example_graph) -> BitMatrix:
    return matrix_from_supports(example_graph.non_inputs, example_graph.measured, CORRECTION_MATRIX_SUPPORTS)


@pytest.fixture
def order_product_expected(example_graph) -> BitMatrix:
    return matrix_from_supports(example_graph.measured, example_graph.measured, ORDER_PRODUCT_SUPPORTS)


@pytest.fixture
def injected_basis(example_graph) -> tuple[BitMatrix, BitMatrix]:
    c0 = matrix_from_supports(example_graph.non_inputs, example_graph.measured, INJECTED_C0_SUPPORTS)
    kernel = matrix_from_supports(
        example_graph.non_inputs,
        (("ker", 0),),
        {v: [("ker", 0)] for v in INJECTED_KERNEL_SUPPORT},
    )
    return c0, kernel
