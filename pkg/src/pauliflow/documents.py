"""Graph and flow documents (canonical JSON), plus DOT export.

Documents are single-line JSON objects with sorted keys and no
incidental whitespace, so identical inputs always produce byte-identical
output and fixtures diff cleanly.  Parsing is strict: unknown or
missing fields are rejected with a JSON-path-style location.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .finder import FlowResult
from .flow import FlowCheckReport, OrderRelation
from .gf2 import BitMatrix
from .open_graph import LabelledOpenGraph, MeasurementLabel


class DocumentError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")


_GRAPH_KEYS = ("vertices", "edges", "inputs", "outputs", "labels")
_LABEL_VALUES = {lab.value for lab in MeasurementLabel}


def _dump(document: dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"


def _expect_object(value: Any, keys: tuple[str, ...], path: str) -> None:
    if not isinstance(value, dict):
        raise DocumentError("expected a JSON object", path)
    unknown = sorted(set(value) - set(keys))
    if unknown:
        raise DocumentError(f"unknown fields {unknown}", path)
    missing = sorted(set(keys) - set(value))
    if missing:
        raise DocumentError(f"missing fields {missing}", path)


def _expect_str_list(value: Any, path: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise DocumentError("expected a list of strings", path)
    return value


def _expect_pair_list(value: Any, path: str) -> list[tuple[str, str]]:
    if not isinstance(value, list):
        raise DocumentError("expected a list of pairs", path)
    out = []
    for i, item in enumerate(value):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, str) for x in item)
        ):
            raise DocumentError("expected a pair of strings", f"{path}[{i}]")
        out.append((item[0], item[1]))
    return out


# -- graphs ---------------------------------------------------------------


def parse_graph(text: str) -> LabelledOpenGraph:
    """Parse a graph document; the result is guaranteed valid."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}", "$") from exc
    _expect_object(doc, _GRAPH_KEYS, "$")
    vertices = _expect_str_list(doc["vertices"], "$.vertices")
    edges = _expect_pair_list(doc["edges"], "$.edges")
    inputs = _expect_str_list(doc["inputs"], "$.inputs")
    outputs = _expect_str_list(doc["outputs"], "$.outputs")
    if not isinstance(doc["labels"], dict):
        raise DocumentError("expected an object", "$.labels")
    labels = {}
    for key, value in doc["labels"].items():
        if not isinstance(key, str) or not isinstance(value, str):
            raise DocumentError("expected string keys and values", "$.labels")
        if value not in _LABEL_VALUES:
            raise DocumentError(
                f"unknown measurement label {value!r} for {key!r}", "$.labels"
            )
        labels[key] = MeasurementLabel(value)
    graph = LabelledOpenGraph.make(vertices, edges, inputs, outputs, labels)
    violations = graph.validate()
    if violations:
        raise DocumentError("; ".join(str(v) for v in violations), "$")
    return graph


def serialize_graph(g: LabelledOpenGraph) -> str:
    """Canonical single-line JSON for a graph (sorted everything)."""
    document = {
        "vertices": sorted(set(g.vertices)),
        "edges": sorted(sorted(edge) for edge in {frozenset(e) for e in g.edges}),
        "inputs": sorted(g.inputs),
        "outputs": sorted(g.outputs),
        "labels": {v: lab.value for v, lab in sorted(g.labels.items())},
    }
    return _dump(document)


# -- flows ----------------------------------------------------------------


def flow_result_document(result: FlowResult) -> dict[str, Any]:
    if result.found:
        document: dict[str, Any] = {
            "status": "flow",
            "correction": {v: sorted(s) for v, s in result.correction.items()},
            "order_edges": sorted([u, v] for u, v in result.relation.edges),
            "layers": [sorted(layer) for layer in result.layers],
        }
        if result.closure is not None:
            document["closure"] = sorted([u, v] for u, v in result.closure.edges)
        return document
    document = {"status": "no_flow", "reason": result.reason.value}
    if result.cycle is not None:
        document["cycle"] = list(result.cycle)
    if result.stuck is not None:
        document["stuck"] = sorted(result.stuck)
    return document


def serialize_flow(result: FlowResult) -> str:
    return _dump(flow_result_document(result))


@dataclass(frozen=True)
class FlowDocument:
    """Parsed flow document, as accepted by verification."""

    status: str
    correction: dict[str, frozenset[str]] | None
    order_edges: frozenset[tuple[str, str]] | None
    closure: frozenset[tuple[str, str]] | None
    layers: tuple[tuple[str, ...], ...] | None
    reason: str | None


def parse_flow(text: str) -> FlowDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}", "$") from exc
    if not isinstance(doc, dict) or "status" not in doc:
        raise DocumentError("expected an object with a status field", "$")
    status = doc["status"]
    if status == "flow":
        allowed = ("status", "correction", "order_edges", "closure", "layers")
        unknown = sorted(set(doc) - set(allowed))
        if unknown:
            raise DocumentError(f"unknown fields {unknown}", "$")
        if "correction" not in doc or "order_edges" not in doc:
            raise DocumentError("flow documents need correction and order_edges", "$")
        if not isinstance(doc["correction"], dict):
            raise DocumentError("expected an object", "$.correction")
        correction = {}
        for key, value in doc["correction"].items():
            correction[key] = frozenset(_expect_str_list(value, f"$.correction.{key}"))
        order_edges = frozenset(_expect_pair_list(doc["order_edges"], "$.order_edges"))
        closure = None
        if "closure" in doc:
            closure = frozenset(_expect_pair_list(doc["closure"], "$.closure"))
        layers = None
        if "layers" in doc:
            if not isinstance(doc["layers"], list):
                raise DocumentError("expected a list", "$.layers")
            layers = tuple(
                tuple(_expect_str_list(layer, f"$.layers[{i}]"))
                for i, layer in enumerate(doc["layers"])
            )
        return FlowDocument(status, correction, order_edges, closure, layers, None)
    if status == "no_flow":
        allowed = ("status", "reason", "cycle", "stuck")
        unknown = sorted(set(doc) - set(allowed))
        if unknown:
            raise DocumentError(f"unknown fields {unknown}", "$")
        if "reason" not in doc or not isinstance(doc["reason"], str):
            raise DocumentError("no_flow documents need a reason", "$")
        return FlowDocument(status, None, None, None, None, doc["reason"])
    raise DocumentError(f"unknown status {status!r}", "$.status")


def check_report_document(report: FlowCheckReport) -> dict[str, Any]:
    return {
        "status": "pass" if report.passed else "fail",
        "order_valid": report.order_valid,
        "focused_checked": report.focused_checked,
        "failed_conditions": list(report.failed_conditions()),
        "counterexamples": {
            name: list(pair) for name, pair in sorted(report.counterexamples.items())
        },
    }


# -- DOT ------------------------------------------------------------------


def _dot_quote(name: str) -> str:
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def export_dot(relation: OrderRelation | BitMatrix) -> str:
    """Deterministic DOT digraph of an acyclic precedence relation.

    Accepts an order relation or a square bit matrix (read with the
    order-product convention: entry (u, v) = 1 means v precedes u).
    Vertices and edges are emitted in sorted order; an edge u -> v means
    u comes before v.  Cyclic input raises ``ValueError``.
    """
    if isinstance(relation, BitMatrix):
        relation = OrderRelation.from_matrix(relation)
    if not relation.acyclic:
        raise ValueError("cannot export a cyclic relation as a DAG")
    lines = ["digraph order {"]
    for v in sorted(relation.elements):
        lines.append(f"  {_dot_quote(v)};")
    for u, v in sorted(relation.edges):
        lines.append(f"  {_dot_quote(u)} -> {_dot_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
