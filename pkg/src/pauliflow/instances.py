"""Instance generators: exhaustive small graphs and seeded random graphs."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .open_graph import INPUT_LABELS, LabelledOpenGraph, MeasurementLabel

_ALL_LABELS = tuple(MeasurementLabel)
_INPUT_LABELS = tuple(lab for lab in MeasurementLabel if lab in INPUT_LABELS)


def exhaustive_instances(n_max: int, budget: int | None = None) -> Iterator[LabelledOpenGraph]:
    """Every labelled open graph with at most ``n_max`` vertices.

    Covers all simple graphs (including the empty one), all disjoint
    input/output assignments and all valid labellings.  ``budget`` caps
    the number of yielded instances; hitting the cap with instances left
    raises ``RuntimeError``.  Exhaustive enumeration is only intended
    for n_max <= 4.
    """
    if n_max > 4:
        raise ValueError("exhaustive enumeration is limited to n_max <= 4")
    count = 0
    for n in range(n_max + 1):
        vertices = [f"v{i}" for i in range(n)]
        pairs = list(itertools.combinations(vertices, 2))
        for edge_mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (edge_mask >> i) & 1]
            # 0 = plain vertex, 1 = input, 2 = output (inputs and outputs disjoint)
            for roles in itertools.product((0, 1, 2), repeat=n):
                inputs = [v for v, r in zip(vertices, roles) if r == 1]
                outputs = [v for v, r in zip(vertices, roles) if r == 2]
                choices = [
                    _INPUT_LABELS if r == 1 else _ALL_LABELS
                    for v, r in zip(vertices, roles)
                    if r != 2
                ]
                labelled = [v for v, r in zip(vertices, roles) if r != 2]
                for labelling in itertools.product(*choices):
                    if budget is not None and count >= budget:
                        raise RuntimeError("instance budget exhausted")
                    count += 1
                    yield LabelledOpenGraph.make(
                        vertices,
                        edges,
                        inputs,
                        outputs,
                        dict(zip(labelled, labelling)),
                    )


def sampled_instances(
    count: int, seed: int, n_min: int = 4, n_max: int = 7
) -> Iterator[LabelledOpenGraph]:
    """Seeded stream of random instances with n_min <= n <= n_max.

    Input and output sets are disjoint with sizes drawn uniformly under
    that constraint, edges appear with probability 1/2, labels are
    uniform subject to the input restriction.  Reproducible for a fixed
    seed.
    """
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        n_out = rng.randint(0, n)
        n_in = rng.randint(0, n - n_out)
        yield _random_graph(rng, n, n_in, n_out, 0.5)


def random_instance(
    n: int, n_inputs: int, n_outputs: int, seed: int, edge_prob: float = 0.5
) -> LabelledOpenGraph:
    """One seeded Erdos-Renyi instance with disjoint inputs and outputs."""
    if n_inputs + n_outputs > n:
        raise ValueError("disjoint inputs and outputs do not fit")
    rng = random.Random(seed)
    return _random_graph(rng, n, n_inputs, n_outputs, edge_prob)


def _random_graph(
    rng: random.Random, n: int, n_inputs: int, n_outputs: int, edge_prob: float
) -> LabelledOpenGraph:
    width = len(str(max(n - 1, 0)))
    vertices = [f"v{i:0{width}d}" for i in range(n)]
    edges: list[tuple[str, str]] = []
    if edge_prob == 0.5:
        # One random word per row is much faster than a coin per pair.
        for i in range(n - 1):
            row = rng.getrandbits(n - i - 1)
            while row:
                low = row & -row
                edges.append((vertices[i], vertices[i + low.bit_length()]))
                row ^= low
    else:
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < edge_prob:
                    edges.append((vertices[i], vertices[j]))
    special = rng.sample(vertices, n_inputs + n_outputs)
    inputs = set(special[:n_inputs])
    outputs = set(special[n_inputs:])
    labels = {}
    for v in vertices:
        if v in outputs:
            continue
        labels[v] = rng.choice(_INPUT_LABELS) if v in inputs else rng.choice(_ALL_LABELS)
    return LabelledOpenGraph.make(vertices, edges, inputs, outputs, labels)
