"""Brute-force flow decision for small instances.

Ground truth for validating the algebraic finder: works straight from
the flow definition with no matrix machinery.  Total measurement orders
are enumerated; for a fixed total order each vertex can be treated
independently, because the order conditions only relate a vertex's own
correction set to the fixed order.  A vertex's candidate correction
sets are enumerated as subsets of the non-inputs.  Exponential, so only
usable for a handful of vertices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .flow import OrderRelation
from .open_graph import LabelledOpenGraph, MeasurementLabel

L = MeasurementLabel


@dataclass(frozen=True)
class OracleLimits:
    """Search budgets; exceeding either yields a limit_exceeded verdict."""

    max_orders: int = 40320  # 8!
    max_subsets: int = 128  # 2**7 candidate correction sets per vertex


@dataclass(frozen=True)
class OracleResult:
    status: str  # "flow" | "no_flow" | "limit_exceeded"
    correction: dict[str, frozenset[str]] | None = None
    order: OrderRelation | None = None

    @property
    def found(self) -> bool:
        return self.status == "flow"


def brute_force_find(
    g: LabelledOpenGraph, limits: OracleLimits | None = None
) -> OracleResult:
    """Search every total order and correction-set assignment.

    Returns the first witness in enumeration order (orders lexicographic
    over the canonical vertex order, correction sets in subset-bitmask
    order), a no-flow verdict after exhausting the space, or
    limit_exceeded when a budget stops the search early.
    """
    g.require_valid()
    limits = limits or OracleLimits()
    measured = g.measured
    if not measured:
        return OracleResult("flow", {}, OrderRelation.from_edges((), ()))
    non_inputs = g.non_inputs
    if 1 << len(non_inputs) > limits.max_subsets:
        return OracleResult("limit_exceeded")

    position = {v: i for i, v in enumerate(measured)}
    labels = g.labels
    # Per candidate subset: which vertices must come strictly after any
    # vertex corrected with it (independent of that vertex, bar itself).
    menus: list[list[tuple[int, frozenset[str]]]] = [[] for _ in measured]
    for s_bits in range(1 << len(non_inputs)):
        subset = frozenset(
            non_inputs[j] for j in range(len(non_inputs)) if (s_bits >> j) & 1
        )
        odd = g.odd_neighbourhood(subset)
        codd = odd ^ subset
        after_mask = 0
        for v in measured:
            lab = labels[v]
            if (
                (v in subset and lab not in (L.X, L.Y))
                or (v in odd and lab not in (L.Y, L.Z))
                or (v in codd and lab is L.Y)
            ):
                after_mask |= 1 << position[v]
        for i, u in enumerate(measured):
            if _self_conditions_ok(labels[u], u, subset, odd, codd):
                menus[i].append((after_mask & ~(1 << i), subset))
    if any(not menu for menu in menus):
        return OracleResult("no_flow")

    # Minimal requirement masks decide satisfiability fast; the full
    # menus are kept to recover the first witness.
    minimal: list[list[int]] = []
    for menu in menus:
        kept: list[int] = []
        for req in sorted({mask for mask, _ in menu}, key=lambda m: (m.bit_count(), m)):
            if not any(prev & ~req == 0 for prev in kept):
                kept.append(req)
        minimal.append(kept)

    k = len(measured)
    total_orders = math.factorial(k)
    tried = 0
    for perm in itertools.permutations(range(k)):
        if tried >= limits.max_orders:
            break
        tried += 1
        after = [0] * k
        mask = 0
        for idx in reversed(perm):
            after[idx] = mask
            mask |= 1 << idx
        if all(
            any(req & ~after[i] == 0 for req in minimal[i]) for i in range(k)
        ):
            correction = {}
            for i, u in enumerate(measured):
                for req, subset in menus[i]:
                    if req & ~after[i] == 0:
                        correction[u] = subset
                        break
            chain = [
                (measured[perm[t]], measured[perm[t + 1]]) for t in range(k - 1)
            ]
            return OracleResult(
                "flow", correction, OrderRelation.from_edges(measured, chain)
            )
    if total_orders > limits.max_orders:
        return OracleResult("limit_exceeded")
    return OracleResult("no_flow")


def _self_conditions_ok(
    label: L, u: str, subset: frozenset[str], odd: frozenset[str], codd: frozenset[str]
) -> bool:
    if label is L.XY:
        return u not in subset and u in odd
    if label is L.XZ:
        return u in subset and u in odd
    if label is L.YZ:
        return u in subset and u not in odd
    if label is L.X:
        return u in odd
    if label is L.Z:
        return u in subset
    return u in codd  # label Y
