"""Correction functions, measurement-order relations and the flow checker.

A correction function assigns to every non-output vertex a set of
non-inputs to correct with; a Pauli flow is a correction function plus a
strict partial order on the non-outputs satisfying the nine per-vertex
conditions P1-P9.  A flow is focused when the three extra conditions
F1-F3 hold.  The checker evaluates every condition verbatim against the
transitive closure of a supplied relation and reports pass/fail per
vertex and per condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Mapping

from . import gf2
from .gf2 import BitMatrix
from .open_graph import LabelledOpenGraph, MeasurementLabel

L = MeasurementLabel

#: Correction function: every non-output maps to a set of non-inputs.
Correction = Mapping[str, AbstractSet[str]]

# Condition identifiers in report order.  P4-P6 are evaluated in their
# split forms (the "a" half constrains the vertex's own correction set,
# the "b" half its own diagonal order entry), which makes the reports
# line up with what the demand-matrix products can and cannot see.
ORDER_CONDITIONS = ("P1", "P2", "P3")
SELF_CONDITIONS = ("P4a", "P4b", "P5a", "P5b", "P6a", "P6b", "P7", "P8", "P9")
FOCUS_CONDITIONS = ("F1", "F2", "F3")


@dataclass(frozen=True)
class OrderRelation:
    """Directed precedence relation over the measured vertices.

    ``edges`` contains pairs (u, v) meaning u strictly precedes v.  The
    acyclicity verdict and (when acyclic) a layer index per vertex are
    computed at construction; layers satisfy layer[u] < layer[v] for
    every edge (u, v), with layer 0 the vertices nothing precedes.
    """

    elements: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    acyclic: bool
    layers: dict[str, int] | None

    @classmethod
    def from_edges(
        cls, elements: Iterable[str], edges: Iterable[tuple[str, str]]
    ) -> OrderRelation:
        elements = tuple(elements)
        edges = frozenset((u, v) for u, v in edges)
        known = set(elements)
        for u, v in edges:
            if u not in known or v not in known:
                raise ValueError(f"edge ({u}, {v}) is not over the relation's elements")
        check = gf2.is_dag(_matrix_from_edges(elements, edges))
        layers = _layer_index(check.layers) if check.acyclic else None
        return cls(elements, edges, check.acyclic, layers)

    @classmethod
    def from_matrix(cls, adj: BitMatrix) -> OrderRelation:
        """Read a relation off a square bit matrix.

        Entry (u, v) = 1 is taken to mean v precedes u, matching the
        convention of the order-demand matrix product.
        """
        if adj.rows != adj.cols:
            raise ValueError("relation matrix requires identical row and column labels")
        edges = set()
        for w in adj.rows:
            for v in adj.row_support(w):
                edges.add((v, w))
        check = gf2.is_dag(adj)
        layers = _layer_index(check.layers) if check.acyclic else None
        return cls(tuple(adj.rows), frozenset(edges), check.acyclic, layers)

    def to_matrix(self) -> BitMatrix:
        return _matrix_from_edges(self.elements, self.edges)

    def closure(self) -> OrderRelation:
        """Transitive closure; raises ``ValueError`` on a cyclic relation."""
        closed = gf2.transitive_closure(self.to_matrix())
        return OrderRelation.from_matrix(closed)

    def precedes(self, u: str, v: str) -> bool:
        return (u, v) in self.edges


def _matrix_from_edges(
    elements: tuple[str, ...], edges: Iterable[tuple[str, str]]
) -> BitMatrix:
    pos = {v: i for i, v in enumerate(elements)}
    bits = [0] * len(elements)
    for u, v in edges:
        bits[pos[v]] |= 1 << pos[u]
    return BitMatrix(elements, elements, bits)


def _layer_index(layers: tuple[tuple[str, ...], ...]) -> dict[str, int]:
    return {v: k for k, layer in enumerate(layers) for v in layer}


# -- correction function <-> matrix -----------------------------------


def validate_correction(g: LabelledOpenGraph, correction: Correction) -> None:
    """Raise ``ValueError`` unless the correction function is well formed:
    domain exactly the non-outputs, values subsets of the non-inputs."""
    measured = set(g.measured)
    domain = set(correction)
    if domain != measured:
        missing = sorted(measured - domain)
        extra = sorted(domain - measured)
        raise ValueError(
            f"correction domain mismatch (missing {missing}, unexpected {extra})"
        )
    allowed = set(g.non_inputs)
    for v in g.measured:
        bad = sorted(set(correction[v]) - allowed)
        if bad:
            raise ValueError(f"correction set of {v} contains non-correctable {bad}")


def correction_to_matrix(g: LabelledOpenGraph, correction: Correction) -> BitMatrix:
    """Matrix with rows over non-inputs, columns over non-outputs;
    entry (u, v) = 1 iff u belongs to the correction set of v."""
    g.require_valid()
    validate_correction(g, correction)
    return BitMatrix.from_entries(
        g.non_inputs,
        g.measured,
        ((u, v) for v in g.measured for u in correction[v]),
    )


def matrix_to_correction(g: LabelledOpenGraph, c_matrix: BitMatrix) -> dict[str, frozenset[str]]:
    """Inverse of ``correction_to_matrix``; label layout must match the graph."""
    if c_matrix.rows != g.non_inputs or c_matrix.cols != g.measured:
        raise ValueError("correction matrix labels do not match the graph's canonical layout")
    return {v: c_matrix.col_support(v) for v in g.measured}


# -- induced relation ---------------------------------------------------


def induced_relation(g: LabelledOpenGraph, correction: Correction) -> OrderRelation:
    """Minimal precedence relation forced by P1-P3 for this correction.

    u must precede v whenever correcting u touches v in a way v's
    measurement cannot absorb: v is X-corrected with a non-Pauli-X/Y
    label, Z-corrected (odd neighbourhood) with a non-Pauli-Y/Z label,
    or net-corrected with a Pauli-Y label.
    """
    g.require_valid()
    validate_correction(g, correction)
    measured = g.measured
    measured_set = set(measured)
    edges: set[tuple[str, str]] = set()
    for u in measured:
        cset = frozenset(correction[u])
        odd = g.odd_neighbourhood(cset)
        codd = odd ^ cset
        for v in cset & measured_set:
            if v != u and g.labels[v] not in (L.X, L.Y):
                edges.add((u, v))
        for v in odd & measured_set:
            if v != u and g.labels[v] not in (L.Y, L.Z):
                edges.add((u, v))
        for v in codd & measured_set:
            if v != u and g.labels[v] is L.Y:
                edges.add((u, v))
    return OrderRelation.from_edges(measured, edges)


# -- checker ------------------------------------------------------------


@dataclass(frozen=True)
class FlowCheckReport:
    """Outcome of a flow check: per-condition, per-vertex booleans.

    ``order_valid`` is False when the supplied relation's transitive
    closure is not a strict partial order; the order conditions P1-P3
    are then omitted from ``conditions``.  ``counterexamples`` holds the
    first failing vertex pair per condition (for the per-vertex
    conditions both components name the vertex itself).
    """

    order_valid: bool
    conditions: dict[str, dict[str, bool]]
    counterexamples: dict[str, tuple[str, str]]
    focused_checked: bool

    @property
    def passed(self) -> bool:
        return self.order_valid and all(
            ok for per_vertex in self.conditions.values() for ok in per_vertex.values()
        )

    def failed_conditions(self) -> tuple[str, ...]:
        failed = [
            name
            for name, per_vertex in self.conditions.items()
            if not all(per_vertex.values())
        ]
        return tuple(failed)


def check_pauli_flow(
    g: LabelledOpenGraph,
    correction: Correction,
    order: OrderRelation,
    require_focused: bool = False,
) -> FlowCheckReport:
    """Evaluate the Pauli flow conditions for (correction, order).

    The relation is closed transitively first; a cyclic relation yields
    an order-validity failure rather than a condition failure.  With
    ``require_focused`` the focusing conditions F1-F3 are evaluated too.
    """
    g.require_valid()
    validate_correction(g, correction)
    measured = g.measured
    measured_set = set(measured)
    for u, v in order.edges:
        if u not in measured_set or v not in measured_set:
            raise ValueError(f"order edge ({u}, {v}) is not over the measured vertices")

    base = OrderRelation.from_edges(measured, order.edges)
    order_valid = base.acyclic
    closure = base.closure().edges if order_valid else frozenset()

    conditions: dict[str, dict[str, bool]] = {}
    counterexamples: dict[str, tuple[str, str]] = {}
    names = (ORDER_CONDITIONS if order_valid else ()) + SELF_CONDITIONS
    if require_focused:
        names = names + FOCUS_CONDITIONS
    for name in names:
        conditions[name] = {}

    def record(name: str, u: str, ok: bool, witness: str) -> None:
        conditions[name][u] = conditions[name].get(u, True) and ok
        if not ok and name not in counterexamples:
            counterexamples[name] = (u, witness)

    labels = g.labels
    for u in measured:
        cset = frozenset(correction[u])
        odd = g.odd_neighbourhood(cset)
        codd = odd ^ cset
        label = labels[u]

        if order_valid:
            for name in ORDER_CONDITIONS:
                conditions[name].setdefault(u, True)
            for v in sorted(cset & measured_set):
                if v != u and labels[v] not in (L.X, L.Y):
                    record("P1", u, (u, v) in closure, v)
            for v in sorted(odd & measured_set):
                if v != u and labels[v] not in (L.Y, L.Z):
                    record("P2", u, (u, v) in closure, v)
            for v in sorted(measured_set):
                if v != u and labels[v] is L.Y and (u, v) not in closure:
                    record("P3", u, v not in codd, v)

        for name in SELF_CONDITIONS:
            conditions[name].setdefault(u, True)
        if label is L.XY:
            record("P4a", u, u in odd, u)
            record("P4b", u, u not in cset, u)
        elif label is L.XZ:
            record("P5a", u, u in cset, u)
            record("P5b", u, u not in codd, u)
        elif label is L.YZ:
            record("P6a", u, u in cset, u)
            record("P6b", u, u not in odd, u)
        elif label is L.X:
            record("P7", u, u in odd, u)
        elif label is L.Z:
            record("P8", u, u in cset, u)
        elif label is L.Y:
            record("P9", u, u in codd, u)

        if require_focused:
            for name in FOCUS_CONDITIONS:
                conditions[name].setdefault(u, True)
            for w in sorted(cset & measured_set):
                if w != u:
                    record("F1", u, labels[w] in (L.XY, L.X, L.Y), w)
            for w in sorted(odd & measured_set):
                if w != u:
                    record("F2", u, labels[w] in (L.XZ, L.YZ, L.Y, L.Z), w)
            for w in sorted(measured_set):
                if w != u and labels[w] is L.Y:
                    record("F3", u, w not in codd, w)

    return FlowCheckReport(order_valid, conditions, counterexamples, require_focused)
