"""Dense GF(2) linear algebra on label-indexed bit matrices.

Rows are stored as arbitrary-precision Python integers used as bit
vectors: bit ``j`` of a row int is the entry in column position ``j``.
Row operations are therefore single int XORs, which CPython executes
word-by-word, so elimination costs O(n^3 / w) word operations instead
of O(n^3) bit operations.

Rows and columns carry labels (any hashable values).  Entries are
addressed by label; access with an unknown label raises ``KeyError``
rather than returning zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

Label = Hashable


def _bit_positions(value: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``value``, lowest first."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


class BitMatrix:
    """Matrix over GF(2) with named rows and columns.

    The positional layout follows the order in which the labels were
    supplied; that order is part of the value (two matrices with the same
    entries but permuted label sequences are not equal).
    """

    __slots__ = ("rows", "cols", "bits", "_row_pos", "_col_pos")

    def __init__(
        self,
        rows: Iterable[Label],
        cols: Iterable[Label],
        bits: Sequence[int] | None = None,
    ):
        self.rows: tuple[Label, ...] = tuple(rows)
        self.cols: tuple[Label, ...] = tuple(cols)
        self._row_pos = {r: i for i, r in enumerate(self.rows)}
        self._col_pos = {c: j for j, c in enumerate(self.cols)}
        if len(self._row_pos) != len(self.rows):
            raise ValueError("duplicate row labels")
        if len(self._col_pos) != len(self.cols):
            raise ValueError("duplicate column labels")
        if bits is None:
            self.bits = [0] * len(self.rows)
        else:
            self.bits = list(bits)
            if len(self.bits) != len(self.rows):
                raise ValueError("row count does not match row labels")
            limit = 1 << len(self.cols)
            for value in self.bits:
                if value < 0 or value >= limit:
                    raise ValueError("row bits outside column range")

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, rows: Iterable[Label], cols: Iterable[Label]) -> BitMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, labels: Iterable[Label]) -> BitMatrix:
        labels = tuple(labels)
        return cls(labels, labels, [1 << i for i in range(len(labels))])

    @classmethod
    def from_entries(
        cls,
        rows: Iterable[Label],
        cols: Iterable[Label],
        entries: Iterable[tuple[Label, Label]],
    ) -> BitMatrix:
        """Build a matrix with a 1 at each (row, col) pair in ``entries``."""
        out = cls(rows, cols)
        for r, c in entries:
            out.bits[out._row_pos[r]] |= 1 << out._col_pos[c]
        return out

    def copy(self) -> BitMatrix:
        return BitMatrix(self.rows, self.cols, self.bits)

    # -- access -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def get(self, row: Label, col: Label) -> int:
        """Entry at (row, col); unknown labels raise ``KeyError``."""
        return (self.bits[self._row_pos[row]] >> self._col_pos[col]) & 1

    def row_bits(self, row: Label) -> int:
        return self.bits[self._row_pos[row]]

    def row_support(self, row: Label) -> frozenset[Label]:
        """Column labels carrying a 1 in the given row."""
        value = self.bits[self._row_pos[row]]
        return frozenset(self.cols[j] for j in _bit_positions(value))

    def col_support(self, col: Label) -> frozenset[Label]:
        """Row labels carrying a 1 in the given column."""
        bit = 1 << self._col_pos[col]
        return frozenset(r for r, v in zip(self.rows, self.bits) if v & bit)

    def is_zero(self) -> bool:
        return not any(self.bits)

    def transpose(self) -> BitMatrix:
        out_bits = [0] * len(self.cols)
        for i, value in enumerate(self.bits):
            bit = 1 << i
            for j in _bit_positions(value):
                out_bits[j] |= bit
        return BitMatrix(self.cols, self.rows, out_bits)

    # -- algebra ------------------------------------------------------

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix addition requires identical label layout")
        return BitMatrix(self.rows, self.cols, [a ^ b for a, b in zip(self.bits, other.bits)])

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.bits == other.bits

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.bits)))

    def __repr__(self) -> str:
        return f"BitMatrix({len(self.rows)}x{len(self.cols)})"

    def to_grid(self, name: str = "") -> str:
        """Render a labelled bit grid (rows and columns shown by label)."""
        head = [str(name)] + [str(c) for c in self.cols]
        lines = [head]
        for r, value in zip(self.rows, self.bits):
            lines.append([str(r)] + [str((value >> j) & 1) for j in range(len(self.cols))])
        widths = [max(len(line[k]) for line in lines) for k in range(len(head))]
        rendered = []
        for line in lines:
            cells = [line[0].ljust(widths[0])] + [
                line[k].rjust(widths[k]) for k in range(1, len(head))
            ]
            rendered.append(cells[0] + " | " + " ".join(cells[1:]))
        return "\n".join(rendered)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Product over GF(2).

    Requires the column label sequence of ``a`` to equal the row label
    sequence of ``b``.  Each result row is the XOR of the rows of ``b``
    selected by the set bits of the corresponding row of ``a``.
    """
    if a.cols != b.rows:
        raise ValueError("inner label sequences do not match")
    b_bits = b.bits
    out = []
    for value in a.bits:
        acc = 0
        for k in _bit_positions(value):
            acc ^= b_bits[k]
        out.append(acc)
    return BitMatrix(a.rows, b.cols, out)


def hstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Concatenate columns; row label sequences must be identical."""
    if a.rows != b.rows:
        raise ValueError("row label sequences do not match")
    width = len(a.cols)
    bits = [x | (y << width) for x, y in zip(a.bits, b.bits)]
    return BitMatrix(a.rows, a.cols + b.cols, bits)


def _gauss(
    bits: list[int],
    n_cols: int,
    *,
    n_pivot_cols: int | None = None,
    reduce_above: bool = False,
    track: bool = False,
) -> tuple[list[int] | None, list[int]]:
    """Eliminate ``bits`` in place; return (transform rows, pivot positions).

    Pivot rule: sweep columns left to right in stored order, picking the
    top-most remaining row with a 1 in the pivot column.  Only rows below
    the pivot are cleared unless ``reduce_above`` is set (then the result
    is the reduced echelon form).
    """
    m = len(bits)
    if n_pivot_cols is None:
        n_pivot_cols = n_cols
    transform = [1 << i for i in range(m)] if track else None
    pivots: list[int] = []
    pivot_row = 0
    for col in range(n_pivot_cols):
        col_bit = 1 << col
        found = -1
        for r in range(pivot_row, m):
            if bits[r] & col_bit:
                found = r
                break
        if found < 0:
            continue
        if found != pivot_row:
            bits[pivot_row], bits[found] = bits[found], bits[pivot_row]
            if track:
                transform[pivot_row], transform[found] = transform[found], transform[pivot_row]
        start = 0 if reduce_above else pivot_row + 1
        for r in range(start, m):
            if r != pivot_row and bits[r] & col_bit:
                bits[r] ^= bits[pivot_row]
                if track:
                    transform[r] ^= transform[pivot_row]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == m:
            break
    return transform, pivots


@dataclass(frozen=True)
class EchelonResult:
    """Row echelon form plus the row-operation record that produced it.

    ``transform`` (present when tracking was requested) satisfies
    ``transform @ original == echelon`` exactly; its columns are labelled
    by the original row labels while echelon rows get positional integer
    labels, since row operations destroy the original row identities.
    """

    echelon: BitMatrix
    transform: BitMatrix | None
    pivot_cols: tuple[Label, ...]
    rank: int


def row_echelon(a: BitMatrix, track: bool = False) -> EchelonResult:
    """Bring ``a`` to row echelon form (not reduced)."""
    bits = list(a.bits)
    transform, pivots = _gauss(bits, len(a.cols), track=track)
    row_labels = tuple(range(len(a.rows)))
    echelon = BitMatrix(row_labels, a.cols, bits)
    tmat = BitMatrix(row_labels, a.rows, transform) if track else None
    return EchelonResult(echelon, tmat, tuple(a.cols[j] for j in pivots), len(pivots))


def rank(a: BitMatrix) -> int:
    bits = list(a.bits)
    _, pivots = _gauss(bits, len(a.cols))
    return len(pivots)


def inverse(a: BitMatrix) -> BitMatrix | None:
    """Two-sided inverse of a square matrix, or None if singular.

    A non-square input is a usage error and raises ``ValueError``.
    The result has rows labelled by ``a.cols`` and columns by ``a.rows``.
    """
    n = len(a.rows)
    if n != len(a.cols):
        raise ValueError("inverse requires a square matrix")
    bits = list(a.bits)
    transform, pivots = _gauss(bits, n, reduce_above=True, track=True)
    if len(pivots) < n:
        return None
    return BitMatrix(a.cols, a.rows, transform)


def right_inverse(a: BitMatrix) -> BitMatrix | None:
    """Canonical right inverse ``c`` with ``a @ c == identity``, or None.

    Exists iff the rows of ``a`` are linearly independent.  The result is
    deterministic: reduce to reduced echelon form, set every free variable
    to zero and read the solutions off the transform record.  Rows of the
    result are labelled by ``a.cols``, columns by ``a.rows``.
    """
    bits = list(a.bits)
    transform, pivots = _gauss(bits, len(a.cols), reduce_above=True, track=True)
    if len(pivots) < len(a.rows):
        return None
    out_bits = [0] * len(a.cols)
    for r, pivot_col in enumerate(pivots):
        out_bits[pivot_col] = transform[r]
    return BitMatrix(a.cols, a.rows, out_bits)


def kernel_basis(a: BitMatrix) -> BitMatrix:
    """Basis of the right kernel of ``a`` as matrix columns.

    One basis column per free column of the reduced echelon form, taken
    in stored column order (each sets a single free variable to 1).  The
    returned matrix has rows labelled by ``a.cols`` and synthetic column
    labels ``("ker", 0)``, ``("ker", 1)``, ... so they cannot collide
    with caller labels.  Column count equals ``len(a.cols) - rank(a)``.
    """
    n_cols = len(a.cols)
    bits = list(a.bits)
    _, pivots = _gauss(bits, n_cols, reduce_above=True)
    pivot_set = set(pivots)
    vectors = []
    for free_col in range(n_cols):
        if free_col in pivot_set:
            continue
        free_bit = 1 << free_col
        vec = free_bit
        for r, pivot_col in enumerate(pivots):
            if bits[r] & free_bit:
                vec |= 1 << pivot_col
        vectors.append(vec)
    out_bits = [0] * n_cols
    for k, vec in enumerate(vectors):
        for j in _bit_positions(vec):
            out_bits[j] |= 1 << k
    labels = tuple(("ker", k) for k in range(len(vectors)))
    return BitMatrix(a.cols, labels, out_bits)


@dataclass(frozen=True)
class DagCheck:
    """Outcome of an acyclicity check on a square adjacency matrix.

    Entry (u, v) = 1 is read as "v precedes u": a row lists the vertices
    that must come before the row's vertex.  When acyclic, ``layers``
    groups the vertices so that every vertex's prerequisites sit in
    strictly earlier layers (layer 0 = rows that are identically zero).
    Otherwise ``cycle`` is a directed cycle: consecutive elements (and
    the wrap-around pair) satisfy ``adj(cycle[k], cycle[k+1]) == 1``;
    a self-loop shows up as a single-element cycle.
    """

    acyclic: bool
    layers: tuple[tuple[Label, ...], ...] | None
    cycle: tuple[Label, ...] | None


def is_dag(adj: BitMatrix) -> DagCheck:
    """Check acyclicity of a square relation matrix (see ``DagCheck``)."""
    if adj.rows != adj.cols:
        raise ValueError("adjacency matrix requires identical row and column labels")
    n = len(adj.rows)
    bits = adj.bits
    live_mask = (1 << n) - 1
    pending = list(range(n))
    layers: list[tuple[Label, ...]] = []
    while pending:
        ready = [i for i in pending if not (bits[i] & live_mask)]
        if not ready:
            return DagCheck(False, None, _trace_cycle(adj, pending, live_mask))
        layers.append(tuple(adj.rows[i] for i in ready))
        for i in ready:
            live_mask &= ~(1 << i)
        ready_set = set(ready)
        pending = [i for i in pending if i not in ready_set]
    return DagCheck(True, tuple(layers), None)


def _trace_cycle(adj: BitMatrix, pending: list[int], live_mask: int) -> tuple[Label, ...]:
    # Every pending vertex still points at a live vertex, so a walk along
    # lowest-numbered live out-edges must revisit a vertex within n steps.
    seen: dict[int, int] = {}
    path: list[int] = []
    u = pending[0]
    while u not in seen:
        seen[u] = len(path)
        path.append(u)
        succ = adj.bits[u] & live_mask
        u = (succ & -succ).bit_length() - 1
    cycle = path[seen[u]:]
    return tuple(adj.rows[i] for i in cycle)


def transitive_closure(adj: BitMatrix) -> BitMatrix:
    """Smallest transitive relation containing ``adj``.

    The input must be acyclic (the closure is required to stay a strict
    partial order); a cyclic input raises ``ValueError``.
    """
    check = is_dag(adj)
    if not check.acyclic:
        raise ValueError(f"relation contains a cycle: {list(check.cycle)}")
    row_pos = adj._row_pos
    closure = [0] * len(adj.rows)
    for layer in check.layers:
        for label in layer:
            i = row_pos[label]
            acc = adj.bits[i]
            for j in _bit_positions(adj.bits[i]):
                acc |= closure[j]
            closure[i] = acc
    return BitMatrix(adj.rows, adj.cols, closure)
