"""Tests for the brute-force oracle and the instance generators."""

from __future__ import annotations

import pytest

from pauliflow import (
    LabelledOpenGraph,
    OracleLimits,
    brute_force_find,
    check_pauli_flow,
    exhaustive_instances,
    find_flow,
    sampled_instances,
    serialize_graph,
)


def test_oracle_on_worked_examples(example_graph, triangle_graph):
    assert brute_force_find(example_graph).status == "flow"
    assert brute_force_find(triangle_graph).status == "no_flow"


def test_oracle_single_vertex_flow():
    g = LabelledOpenGraph.make(
        vertices=["v", "o"], edges=[("v", "o")], inputs=["v"], outputs=["o"],
        labels={"v": "XY"},
    )
    result = brute_force_find(g)
    assert result.status == "flow"
    assert result.correction == {"v": frozenset({"o"})}


def test_oracle_trivial_instance():
    g = LabelledOpenGraph.make(vertices=[], edges=[], inputs=[], outputs=[], labels={})
    assert brute_force_find(g).status == "flow"


def test_oracle_witness_passes_checker(example_graph):
    rng_instances = list(sampled_instances(40, seed=151, n_min=2, n_max=5))
    hits = 0
    for g in rng_instances + [example_graph]:
        result = brute_force_find(g)
        if result.status != "flow":
            continue
        hits += 1
        report = check_pauli_flow(g, result.correction, result.order)
        assert report.passed
    assert hits >= 8


def test_oracle_witness_is_deterministic(example_graph):
    first = brute_force_find(example_graph)
    second = brute_force_find(example_graph)
    assert first.correction == second.correction
    assert first.order.edges == second.order.edges


def test_oracle_subset_budget():
    # Nine non-inputs blow the default per-vertex subset cap.
    names = [f"m{i}" for i in range(9)] + ["o"]
    g = LabelledOpenGraph.make(
        vertices=names,
        edges=[(names[i], names[i + 1]) for i in range(9)],
        inputs=[],
        outputs=["o"],
        labels={v: "XY" for v in names[:-1]},
    )
    assert brute_force_find(g).status == "limit_exceeded"
    wide = brute_force_find(g, OracleLimits(max_orders=500_000, max_subsets=1 << 10))
    assert wide.status == "flow"


def test_oracle_order_budget(triangle_graph):
    # The triangle has no flow; with a single permitted order the search
    # cannot prove exhaustion.
    capped = brute_force_find(triangle_graph, OracleLimits(max_orders=1))
    assert capped.status == "limit_exceeded"
    assert brute_force_find(triangle_graph, OracleLimits(max_orders=2)).status == "no_flow"


def test_oracle_agrees_with_finder_when_not_right_invertible():
    count = 0
    for g in sampled_instances(80, seed=157, n_min=2, n_max=5):
        result = find_flow(g)
        if result.reason is not None and result.reason.value == "NotRightInvertible":
            count += 1
            assert brute_force_find(g).status == "no_flow"
    assert count >= 10


def test_exhaustive_count_single_vertex():
    # Hand count: the empty graph gives one instance; one vertex gives
    # 6 (plain) + 3 (input) + 1 (output) labelled variants.
    assert sum(1 for _ in exhaustive_instances(1)) == 11


def test_exhaustive_count_two_vertices():
    # Per vertex: input -> 3 labellings, output -> 1, plain -> 6, so each
    # of the two graphs on two vertices contributes (3 + 1 + 6)^2.
    assert sum(1 for _ in exhaustive_instances(2)) == 1 + 10 + 2 * 10**2


def test_exhaustive_instances_are_valid_and_unique():
    seen = set()
    for g in exhaustive_instances(2):
        assert g.validate() == []
        key = serialize_graph(g) + str(sorted(g.inputs)) + str(sorted(g.outputs))
        assert key not in seen
        seen.add(key)


def test_exhaustive_budget_exhaustion():
    gen = exhaustive_instances(1, budget=5)
    for _ in range(5):
        next(gen)
    with pytest.raises(RuntimeError):
        next(gen)


def test_exhaustive_rejects_large_n():
    with pytest.raises(ValueError):
        list(exhaustive_instances(5))


def test_sampled_instances_reproducible():
    first = [serialize_graph(g) for g in sampled_instances(20, seed=3)]
    second = [serialize_graph(g) for g in sampled_instances(20, seed=3)]
    assert first == second
    other = [serialize_graph(g) for g in sampled_instances(20, seed=4)]
    assert first != other


def test_sampled_instances_sizes():
    for g in sampled_instances(30, seed=11):
        assert 4 <= g.n <= 7
        assert not g.inputs & g.outputs
        assert g.validate() == []
