"""Labelled open graphs: the problem instances for flow finding.

A labelled open graph is a simple undirected graph together with a set
of input vertices, a set of output vertices, and a measurement label on
every non-output vertex.  Inputs that are not outputs may only carry
labels from {X, Y, XY}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping


class MeasurementLabel(Enum):
    """One of the three measurement planes or three Pauli axes."""

    X = "X"
    Y = "Y"
    Z = "Z"
    XY = "XY"
    XZ = "XZ"
    YZ = "YZ"

    @property
    def is_pauli(self) -> bool:
        return self in PAULI_LABELS

    @property
    def is_planar(self) -> bool:
        return self in PLANAR_LABELS


PAULI_LABELS = frozenset({MeasurementLabel.X, MeasurementLabel.Y, MeasurementLabel.Z})
PLANAR_LABELS = frozenset({MeasurementLabel.XY, MeasurementLabel.XZ, MeasurementLabel.YZ})
INPUT_LABELS = frozenset({MeasurementLabel.X, MeasurementLabel.Y, MeasurementLabel.XY})


@dataclass(frozen=True)
class Violation:
    """One structural problem found by validation."""

    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class InvalidGraphError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class VertexClasses:
    """Partition of the internal (non-input, non-output) vertices."""

    internal: frozenset[str]
    x_like: frozenset[str]
    z_like: frozenset[str]
    pauli_internal: frozenset[str]
    planar_internal: frozenset[str]


@dataclass(frozen=True)
class LabelledOpenGraph:
    """Simple graph with inputs, outputs and per-vertex measurement labels.

    The stored tuples keep whatever the caller supplied; ``validate``
    reports problems instead of raising, so documents can be inspected
    before use.  All derived views (adjacency, canonical vertex orders)
    assume a valid graph.  Instances are immutable and safe to share.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    inputs: frozenset[str]
    outputs: frozenset[str]
    labels: Mapping[str, MeasurementLabel]

    @classmethod
    def make(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]],
        inputs: Iterable[str],
        outputs: Iterable[str],
        labels: Mapping[str, MeasurementLabel | str],
    ) -> LabelledOpenGraph:
        return cls(
            vertices=tuple(vertices),
            edges=tuple((u, v) for u, v in edges),
            inputs=frozenset(inputs),
            outputs=frozenset(outputs),
            labels={v: MeasurementLabel(lab) for v, lab in labels.items()},
        )

    # -- validation ---------------------------------------------------

    def validate(self) -> list[Violation]:
        """Check all structural invariants; empty list means valid."""
        out: list[Violation] = []
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            dupes = sorted({v for v in self.vertices if self.vertices.count(v) > 1})
            out.append(Violation("duplicate_vertex", f"repeated vertex ids {dupes}"))
        seen_edges: set[frozenset[str]] = set()
        for u, v in self.edges:
            if u not in vset or v not in vset:
                out.append(Violation("unknown_endpoint", f"edge ({u}, {v}) uses unknown vertex"))
                continue
            if u == v:
                out.append(Violation("self_loop", f"self-loop at {u}"))
                continue
            key = frozenset((u, v))
            if key in seen_edges:
                out.append(Violation("duplicate_edge", f"edge ({u}, {v}) repeated"))
            seen_edges.add(key)
        for v in sorted(self.inputs - vset):
            out.append(Violation("unknown_input", f"input {v} is not a vertex"))
        for v in sorted(self.outputs - vset):
            out.append(Violation("unknown_output", f"output {v} is not a vertex"))
        non_outputs = vset - self.outputs
        for v in sorted(set(self.labels) - vset):
            out.append(Violation("unknown_labelled_vertex", f"label given for unknown vertex {v}"))
        for v in sorted(self.outputs & set(self.labels)):
            out.append(Violation("labelled_output", f"output {v} must not carry a label"))
        for v in sorted(non_outputs - set(self.labels)):
            out.append(Violation("missing_label", f"non-output {v} has no label"))
        for v in sorted((self.inputs - self.outputs) & set(self.labels) & vset):
            if self.labels[v] not in INPUT_LABELS:
                out.append(
                    Violation(
                        "bad_input_label",
                        f"input {v} has label {self.labels[v].value}, not in {{X, Y, XY}}",
                    )
                )
        return out

    @cached_property
    def _violations(self) -> list[Violation]:
        return self.validate()

    @property
    def is_valid(self) -> bool:
        return not self._violations

    def require_valid(self) -> None:
        if self._violations:
            raise InvalidGraphError(self._violations)

    # -- derived views (assume validity) --------------------------------

    @cached_property
    def vertex_order(self) -> tuple[str, ...]:
        """Canonical (lexicographic) vertex order used for all matrix layouts."""
        return tuple(sorted(set(self.vertices)))

    @cached_property
    def measured(self) -> tuple[str, ...]:
        """Non-outputs in canonical order (the rows of the demand matrices)."""
        return tuple(v for v in self.vertex_order if v not in self.outputs)

    @cached_property
    def non_inputs(self) -> tuple[str, ...]:
        """Non-inputs in canonical order (the columns of the demand matrices)."""
        return tuple(v for v in self.vertex_order if v not in self.inputs)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertex_order}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @property
    def n(self) -> int:
        return len(self.vertex_order)

    @property
    def n_inputs(self) -> int:
        return len(self.inputs)

    @property
    def n_outputs(self) -> int:
        return len(self.outputs)

    # -- neighbourhood operators ----------------------------------------

    def odd_neighbourhood(self, subset: Iterable[str]) -> frozenset[str]:
        """Vertices adjacent to an odd number of members of ``subset``.

        Linear over symmetric difference: Odd(A ^ B) = Odd(A) ^ Odd(B).
        """
        adjacency = self.adjacency
        acc: set[str] = set()
        for v in set(subset):
            if v not in adjacency:
                raise ValueError(f"unknown vertex {v!r} in subset")
            acc.symmetric_difference_update(adjacency[v])
        return frozenset(acc)

    def closed_odd_neighbourhood(self, subset: Iterable[str]) -> frozenset[str]:
        """Odd neighbourhood, symmetric-differenced with the subset itself."""
        subset = frozenset(subset)
        return self.odd_neighbourhood(subset) ^ subset

    def classify(self) -> VertexClasses:
        """Split the internal vertices by measurement character."""
        self.require_valid()
        internal = frozenset(self.vertex_order) - self.inputs - self.outputs
        x_like = frozenset(
            v
            for v in internal
            if self.labels[v]
            in (MeasurementLabel.XY, MeasurementLabel.X, MeasurementLabel.Y)
        )
        pauli = frozenset(v for v in internal if self.labels[v].is_pauli)
        return VertexClasses(
            internal=internal,
            x_like=x_like,
            z_like=internal - x_like,
            pauli_internal=pauli,
            planar_internal=internal - pauli,
        )
