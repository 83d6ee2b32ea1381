"""Pauli-flow finding in O(n^3) via the demand-matrix characterisation.

A labelled open graph has Pauli flow exactly when its flow-demand matrix
M admits a right inverse C such that the product of the order-demand
matrix N with C is the adjacency matrix of a DAG.  With equally many
inputs and outputs M is square, so the candidate C is unique and the
check is a single inversion plus a DAG test (``find_flow_square``).
With fewer inputs than outputs the right inverse is not unique;
``find_flow_general`` parametrises all right inverses through a change
of basis built from one right inverse and a kernel basis of M, then
fixes the free part layer by layer, peeling vertices that can be made
maximal in the measurement order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from . import gf2
from .demand import flow_demand_matrix, order_demand_matrix
from .flow import OrderRelation, matrix_to_correction
from .gf2 import BitMatrix
from .open_graph import LabelledOpenGraph


class NoFlowReason(Enum):
    """Machine-checkable causes for a no-flow verdict."""

    #: The flow-demand matrix has dependent rows, so no right inverse exists.
    NOT_RIGHT_INVERTIBLE = "NotRightInvertible"
    #: The unique candidate correction induces a cyclic order (square case).
    CYCLIC_ORDER = "CyclicNC"
    #: No remaining vertex could be made maximal (general case).
    LAYER_STUCK = "LayerStuck"
    #: More inputs than outputs: the flow-demand matrix is too tall.
    MORE_INPUTS_THAN_OUTPUTS = "MoreInputsThanOutputs"


@dataclass(frozen=True)
class FlowResult:
    """Either a focused Pauli flow witness or a refusal with a reason.

    On success the correction function is focused extensive: its matrix
    is a right inverse of the flow-demand matrix and ``order_matrix``
    (the order-demand product) is acyclic.  ``relation`` is the induced
    minimal precedence relation, ``closure`` its transitive closure when
    requested, and ``layers`` the solved vertex sets in solve order
    (first entry = vertices maximal in the measurement order).

    On failure, ``cycle`` carries the offending cycle for CyclicNC
    (together with the intermediate correction and order matrices) and
    ``stuck`` the unsolved vertices for LayerStuck.
    """

    found: bool
    reason: NoFlowReason | None = None
    correction: dict[str, frozenset[str]] | None = None
    correction_matrix: BitMatrix | None = None
    order_matrix: BitMatrix | None = None
    relation: OrderRelation | None = None
    closure: OrderRelation | None = None
    layers: tuple[frozenset[str], ...] | None = None
    cycle: tuple[str, ...] | None = None
    stuck: frozenset[str] | None = None


def find_flow(g: LabelledOpenGraph, want_closure: bool = False) -> FlowResult:
    """Decide Pauli flow existence and return a witness when one exists.

    Dispatches on the input/output balance: more inputs than outputs can
    never have flow; equal counts use the direct inversion algorithm;
    otherwise the general layered algorithm runs.  The transitive
    closure of the returned relation is computed only on request.
    """
    g.require_valid()
    if g.n_outputs < g.n_inputs:
        return FlowResult(found=False, reason=NoFlowReason.MORE_INPUTS_THAN_OUTPUTS)
    if not g.measured:
        result = _trivial_flow(g)
    elif g.n_inputs == g.n_outputs:
        result = find_flow_square(g)
    else:
        result = find_flow_general(g)
    if want_closure and result.found:
        result = replace(result, closure=result.relation.closure())
    return result


def _trivial_flow(g: LabelledOpenGraph) -> FlowResult:
    # Every vertex is an output: nothing to measure, nothing to correct.
    empty_relation = OrderRelation.from_edges((), ())
    return FlowResult(
        found=True,
        correction={},
        correction_matrix=BitMatrix(g.non_inputs, ()),
        order_matrix=BitMatrix((), ()),
        relation=empty_relation,
        layers=(),
    )


def find_flow_square(g: LabelledOpenGraph) -> FlowResult:
    """Flow finding for equally many inputs and outputs.

    The flow-demand matrix is square, so the only possible correction
    matrix is its inverse; flow exists iff that inverse exists and the
    order-demand product is acyclic.
    """
    g.require_valid()
    if g.n_inputs != g.n_outputs:
        raise ValueError("square-case finder requires equally many inputs and outputs")
    m_mat = flow_demand_matrix(g)
    n_mat = order_demand_matrix(g)
    c_mat = gf2.inverse(m_mat)
    if c_mat is None:
        return FlowResult(found=False, reason=NoFlowReason.NOT_RIGHT_INVERTIBLE)
    product = n_mat @ c_mat
    check = gf2.is_dag(product)
    if not check.acyclic:
        return FlowResult(
            found=False,
            reason=NoFlowReason.CYCLIC_ORDER,
            correction_matrix=c_mat,
            order_matrix=product,
            cycle=check.cycle,
        )
    return _success(g, c_mat, product)


def find_flow_general(
    g: LabelledOpenGraph,
    injected: tuple[BitMatrix, BitMatrix] | None = None,
) -> FlowResult:
    """Flow finding for at most as many inputs as outputs.

    Puts the right-inverse search into a basis where it becomes the
    search for one free block P: writing C' = [C0 | F] with C0 any right
    inverse of the flow-demand matrix and F a kernel basis, every right
    inverse is C' stacked-identity-over-P for exactly one P, and the
    order-demand product equals N_L + N_R P where [N_L | N_R] splits the
    rebased order-demand matrix.  The loop solves one measurement-order
    layer at a time: a vertex is solvable when its constants column is
    consistent with the current echelon of the coefficient block, and
    solved vertices have their original row removed from every remaining
    system using the elimination record kept in a third block.  All
    vertices solved means some P makes the product acyclic; a round with
    no solvable vertex proves no right inverse works.

    ``injected`` optionally supplies a specific (right inverse, kernel
    basis) pair, so runs can be reproduced against externally chosen
    bases; the pair is validated before use.
    """
    g.require_valid()
    if g.n_outputs < g.n_inputs:
        raise ValueError("general finder requires at most as many inputs as outputs")
    measured = g.measured
    if not measured:
        return _trivial_flow(g)
    m_mat = flow_demand_matrix(g)
    n_mat = order_demand_matrix(g)

    if injected is not None:
        c0, kernel = injected
        _validate_injected(g, m_mat, c0, kernel)
    else:
        c0 = gf2.right_inverse(m_mat)
        if c0 is None:
            return FlowResult(found=False, reason=NoFlowReason.NOT_RIGHT_INVERTIBLE)
        kernel = gf2.kernel_basis(m_mat)

    n_measured = len(measured)
    n_free = len(kernel.cols)  # = n_outputs - n_inputs
    c_prime = gf2.hstack(c0, kernel)
    rebased = n_mat @ c_prime  # columns: measured constants, then kernel coefficients

    # One int per row: [coefficients | constants | elimination record].
    coeff_mask = (1 << n_free) - 1
    const_shift = n_free
    track_shift = n_free + n_measured
    measured_mask = (1 << n_measured) - 1
    k_ls = [
        ((row >> n_measured) & coeff_mask)
        | ((row & measured_mask) << const_shift)
        | (1 << (track_shift + i))
        for i, row in enumerate(rebased.bits)
    ]
    k_ils = list(k_ls)
    gf2._gauss(k_ls, track_shift + n_measured, n_pivot_cols=n_free)

    position = {v: i for i, v in enumerate(measured)}
    solved: set[str] = set()
    solution = [0] * n_measured  # per measured vertex: chosen kernel coefficients
    layers: list[frozenset[str]] = []

    while len(solved) < n_measured:
        if __debug__:
            _assert_echelon(k_ls, coeff_mask)
        first_zero = n_measured
        for r, row in enumerate(k_ls):
            if not (row & coeff_mask):
                first_zero = r
                break
        tail_or = 0
        for r in range(first_zero, n_measured):
            tail_or |= k_ls[r]
        layer = [
            v
            for v in measured
            if v not in solved and not (tail_or >> (const_shift + position[v])) & 1
        ]
        if not layer:
            return FlowResult(
                found=False,
                reason=NoFlowReason.LAYER_STUCK,
                stuck=frozenset(v for v in measured if v not in solved),
            )

        # Solve every vertex of the layer before touching the systems:
        # removing rows first could order vertices of one layer against
        # each other.
        for v in layer:
            solution[position[v]] = _back_substitute(
                k_ls, first_zero, coeff_mask, const_shift + position[v]
            )
        for v in layer:
            solved.add(v)
            _retire_row(k_ls, k_ils, position[v], coeff_mask, track_shift)
        layers.append(frozenset(layer))

    # Stack the identity over the solved coefficients and map back.
    stacked = BitMatrix(
        c_prime.cols,
        measured,
        [1 << i for i in range(n_measured)]
        + [
            sum(((solution[i] >> k) & 1) << i for i in range(n_measured))
            for k in range(n_free)
        ],
    )
    c_mat = c_prime @ stacked
    product = n_mat @ c_mat
    return _success(g, c_mat, product, tuple(layers))


def _back_substitute(k_ls: list[int], n_rows: int, coeff_mask: int, const_pos: int) -> int:
    """Solve the echelon coefficient block against one constants column,
    free variables pinned to zero."""
    x = 0
    for r in range(n_rows - 1, -1, -1):
        row = k_ls[r]
        coeff = row & coeff_mask
        lead = coeff & -coeff
        value = (row >> const_pos) & 1
        value ^= ((coeff ^ lead) & x).bit_count() & 1
        if value:
            x |= lead
    return x


def _retire_row(
    k_ls: list[int], k_ils: list[int], index: int, coeff_mask: int, track_shift: int
) -> None:
    """Rewrite the systems as if the given original row never existed.

    The elimination record tells which current rows depend on the
    original row; the bottom-most dependent row absorbs the others'
    dependency, cancels the original row itself, is reduced against the
    remaining echelon rows and finally moved back to an echelon
    position.
    """
    track_bit = 1 << (track_shift + index)
    dependents = [r for r, row in enumerate(k_ls) if row & track_bit]
    last = dependents[-1]
    for r in dependents[:-1]:
        k_ls[r] ^= k_ls[last]
    k_ls[last] ^= k_ils[index]
    for r, row in enumerate(k_ls):
        if r == last:
            continue
        coeff = row & coeff_mask
        if not coeff:
            break
        last_coeff = k_ls[last] & coeff_mask
        if not last_coeff:
            break
        if (last_coeff & -last_coeff) < (coeff & -coeff):
            # The surviving leading 1 precedes every remaining pivot, so
            # no further row can eliminate it; echelon only needs leads.
            break
        if k_ls[last] & (coeff & -coeff):
            k_ls[last] ^= row
    row = k_ls.pop(last)
    coeff = row & coeff_mask
    pos = len(k_ls)
    if coeff:
        lead = coeff & -coeff
        for r, other in enumerate(k_ls):
            other_coeff = other & coeff_mask
            if not other_coeff or (other_coeff & -other_coeff) > lead:
                pos = r
                break
    else:
        for r, other in enumerate(k_ls):
            if not (other & coeff_mask):
                pos = r
                break
    k_ls.insert(pos, row)


def _assert_echelon(k_ls: list[int], coeff_mask: int) -> None:
    # Loop invariant: coefficient block in row echelon form.
    previous = 0
    seen_zero = False
    for row in k_ls:
        coeff = row & coeff_mask
        if not coeff:
            seen_zero = True
            continue
        assert not seen_zero, "nonzero coefficient row below a zero row"
        lead = coeff & -coeff
        assert lead > previous, "leading columns not strictly increasing"
        previous = lead


def _validate_injected(
    g: LabelledOpenGraph, m_mat: BitMatrix, c0: BitMatrix, kernel: BitMatrix
) -> None:
    if c0.rows != g.non_inputs or c0.cols != g.measured:
        raise ValueError("injected right inverse has wrong label layout")
    if kernel.rows != g.non_inputs:
        raise ValueError("injected kernel basis has wrong row labels")
    if len(kernel.cols) != g.n_outputs - g.n_inputs:
        raise ValueError("injected kernel basis has wrong dimension")
    if gf2.mat_mul(m_mat, c0).bits != BitMatrix.identity(g.measured).bits:
        raise ValueError("injected matrix is not a right inverse")
    if not gf2.mat_mul(m_mat, kernel).is_zero():
        raise ValueError("injected kernel columns are not in the kernel")
    if gf2.rank(kernel) != len(kernel.cols):
        raise ValueError("injected kernel columns are not independent")


def _success(
    g: LabelledOpenGraph,
    c_mat: BitMatrix,
    product: BitMatrix,
    layers: tuple[frozenset[str], ...] | None = None,
) -> FlowResult:
    relation = OrderRelation.from_matrix(product)
    assert relation.acyclic, "internal error: accepted correction induces a cycle"
    if layers is None:
        # Solve order = peel vertices nothing else depends on, i.e. the
        # layering of the transposed order product.
        check = gf2.is_dag(product.transpose())
        layers = tuple(frozenset(layer) for layer in check.layers)
    return FlowResult(
        found=True,
        correction=matrix_to_correction(g, c_mat),
        correction_matrix=c_mat,
        order_matrix=product,
        relation=relation,
        layers=layers,
    )
