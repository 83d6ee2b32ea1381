"""Tests for document parsing, canonical serialization and DOT export."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from pauliflow import (
    BitMatrix,
    DocumentError,
    OrderRelation,
    export_dot,
    find_flow,
    parse_flow,
    parse_graph,
    serialize_flow,
    serialize_graph,
)

from conftest import EXAMPLE_ORDER_EDGES, FIXTURE_DIR

EXAMPLE_TEXT = Path(FIXTURE_DIR, "example_graph.json").read_text()


def test_parse_example_graph_fixture(example_graph):
    parsed = parse_graph(EXAMPLE_TEXT)
    assert set(parsed.vertices) == set(example_graph.vertices)
    assert parsed.inputs == example_graph.inputs and parsed.outputs == example_graph.outputs
    assert parsed.labels == example_graph.labels
    assert {frozenset(e) for e in parsed.edges} == {frozenset(e) for e in example_graph.edges}


def test_serialize_is_canonical_roundtrip(example_graph):
    # The fixture is already canonical, so parsing and reserializing is
    # the identity; a scrambled but equivalent document normalises to it.
    assert serialize_graph(parse_graph(EXAMPLE_TEXT)) == EXAMPLE_TEXT
    scrambled = json.loads(EXAMPLE_TEXT)
    scrambled["edges"] = [list(reversed(e)) for e in reversed(scrambled["edges"])]
    scrambled["vertices"] = list(reversed(scrambled["vertices"]))
    assert serialize_graph(parse_graph(json.dumps(scrambled))) == EXAMPLE_TEXT


def test_parse_rejects_unknown_fields():
    doc = json.loads(EXAMPLE_TEXT)
    doc["colour"] = "blue"
    with pytest.raises(DocumentError) as excinfo:
        parse_graph(json.dumps(doc))
    assert "colour" in str(excinfo.value)


def test_parse_rejects_missing_fields():
    doc = json.loads(EXAMPLE_TEXT)
    del doc["labels"]
    with pytest.raises(DocumentError):
        parse_graph(json.dumps(doc))


def test_parse_rejects_missing_label():
    doc = json.loads(EXAMPLE_TEXT)
    del doc["labels"]["a"]
    with pytest.raises(DocumentError) as excinfo:
        parse_graph(json.dumps(doc))
    assert "missing_label" in str(excinfo.value)


def test_parse_rejects_bad_label_value():
    doc = json.loads(EXAMPLE_TEXT)
    doc["labels"]["a"] = "XW"
    with pytest.raises(DocumentError) as excinfo:
        parse_graph(json.dumps(doc))
    assert excinfo.value.path == "$.labels"


def test_parse_rejects_bad_json_and_shapes():
    with pytest.raises(DocumentError):
        parse_graph("{not json")
    with pytest.raises(DocumentError):
        parse_graph('["a list"]')
    doc = json.loads(EXAMPLE_TEXT)
    doc["edges"] = [["a", "b", "c"]]
    with pytest.raises(DocumentError) as excinfo:
        parse_graph(json.dumps(doc))
    assert excinfo.value.path == "$.edges[0]"


def test_flow_document_roundtrip(example_graph):
    result = find_flow(example_graph, want_closure=True)
    text = serialize_flow(result)
    parsed = parse_flow(text)
    assert parsed.status == "flow"
    assert parsed.correction == result.correction
    assert parsed.order_edges == result.relation.edges
    assert parsed.closure == result.closure.edges


def test_flow_document_no_flow(triangle_graph):
    result = find_flow(triangle_graph)
    text = serialize_flow(result)
    doc = json.loads(text)
    assert doc == {"cycle": ["a"], "reason": "CyclicNC", "status": "no_flow"}
    parsed = parse_flow(text)
    assert parsed.status == "no_flow" and parsed.reason == "CyclicNC"


def test_flow_document_rejects_unknown_fields():
    with pytest.raises(DocumentError):
        parse_flow('{"status":"flow","correction":{},"order_edges":[],"bogus":1}')
    with pytest.raises(DocumentError):
        parse_flow('{"status":"maybe"}')
    with pytest.raises(DocumentError):
        parse_flow('{"status":"flow"}')


def test_export_dot_golden(example_graph):
    relation = OrderRelation.from_edges(example_graph.measured, EXAMPLE_ORDER_EDGES)
    expected = (
        "digraph order {\n"
        '  "a";\n'
        '  "b";\n'
        '  "d";\n'
        '  "e";\n'
        '  "i";\n'
        '  "a" -> "e";\n'
        '  "b" -> "e";\n'
        '  "i" -> "e";\n'
        "}\n"
    )
    assert export_dot(relation) == expected
    assert export_dot(relation) == export_dot(relation)


def test_export_dot_nodes_only():
    relation = OrderRelation.from_edges(("x", "y"), ())
    assert export_dot(relation) == 'digraph order {\n  "x";\n  "y";\n}\n'


def test_export_dot_accepts_order_product_matrix(order_product_expected):
    text = export_dot(order_product_expected)
    assert '"a" -> "e";' in text
    assert '"i" -> "e";' in text


def test_export_dot_rejects_cycles():
    cyclic = BitMatrix.from_entries("ab", "ab", [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        export_dot(cyclic)


def test_export_dot_quotes_awkward_names():
    relation = OrderRelation.from_edges(('he"llo', "w\\orld"), ())
    text = export_dot(relation)
    assert '"he\\"llo";' in text
    assert '"w\\\\orld";' in text
