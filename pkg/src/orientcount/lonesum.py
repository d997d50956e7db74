"""Lonesum matrices and their correspondence with acyclic orientations.

A zero-one matrix is lonesum when it is uniquely determined by its row and
column sums; equivalently, it avoids [[1,0],[0,1]] and [[0,1],[1,0]] as
(not necessarily contiguous) 2x2 submatrices. Orientations of K_{n1,n2}
encode as n1 x n2 matrices, and an orientation is acyclic exactly when its
matrix is lonesum.
"""

from __future__ import annotations

from .graphcore import Graph, Orientation, bipartite_blocks, complete_bipartite

MAX_LONESUM_CELLS = 24

__all__ = [
    "MAX_LONESUM_CELLS",
    "BinaryMatrix",
    "is_lonesum",
    "find_forbidden_submatrix",
    "count_lonesum_bruteforce",
    "orientation_to_matrix",
    "matrix_to_orientation",
    "has_directed_4cycle",
]


class BinaryMatrix:
    """n1 x n2 zero-one matrix packed into one int.

    Bit layout is row-major with the column index fastest: entry (i, j)
    lives at bit i*cols + j. This matches the canonical edge order of
    complete_bipartite, so converting an orientation to a matrix is a bit
    reinterpretation, not a permutation.
    """

    __slots__ = ("rows", "cols", "bits")

    def __init__(self, rows: int, cols: int, bits: int = 0):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if not 0 <= bits < (1 << (rows * cols)):
            raise ValueError("bits out of range for this matrix shape")
        self.rows = rows
        self.cols = cols
        self.bits = bits

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) out of range")
        return (self.bits >> (i * self.cols + j)) & 1

    def row_mask(self, i: int) -> int:
        """Row i as an int whose bit j is entry (i, j)."""
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} out of range")
        return (self.bits >> (i * self.cols)) & ((1 << self.cols) - 1)

    @classmethod
    def from_rows(cls, rows) -> "BinaryMatrix":
        """Build from an iterable of equal-length 0/1 iterables."""
        rows = [list(r) for r in rows]
        n1 = len(rows)
        n2 = len(rows[0]) if rows else 0
        bits = 0
        for i, row in enumerate(rows):
            if len(row) != n2:
                raise ValueError("rows have unequal lengths")
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError(f"entry ({i},{j}) is {x!r}, not 0/1")
                bits |= x << (i * n2 + j)
        return cls(n1, n2, bits)

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        """Parse the CLI matrix format: one '0'/'1' line per row, no
        separators; a blank line (or end of input) terminates. Empty input
        is the 0 x 0 matrix."""
        lines = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                break
            if set(line) - {"0", "1"}:
                raise ValueError(f"matrix line {line!r} has characters other than 0/1")
            lines.append([int(c) for c in line])
        return cls.from_rows(lines)

    def to_text(self) -> str:
        return "\n".join(
            "".join(str(self.entry(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        )

    def __eq__(self, other):
        return (
            isinstance(other, BinaryMatrix)
            and (self.rows, self.cols, self.bits)
            == (other.rows, other.cols, other.bits)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.bits))

    def __repr__(self):
        return f"BinaryMatrix({self.rows}, {self.cols}, {self.bits:#x})"


def is_lonesum(m: BinaryMatrix) -> bool:
    """Staircase test: sort rows by row sum descending, then the matrix is
    lonesum iff each row's support contains the next one's.

    Two incomparable rows always induce a forbidden 2x2 pattern, and rows
    with equal sums must have identical support, which the containment
    check enforces for free.
    """
    return _rows_are_chain([m.row_mask(i) for i in range(m.rows)])


def _rows_are_chain(row_masks) -> bool:
    if len(row_masks) < 2:
        return True
    row_masks.sort(key=int.bit_count, reverse=True)
    prev = row_masks[0]
    for r in row_masks[1:]:
        if r | prev != prev:
            return False
        prev = r
    return True


def find_forbidden_submatrix(m: BinaryMatrix):
    """Locate a forbidden 2x2 pattern, or None if the matrix is lonesum.

    Returns ((i, i2), (j, j2)) with i < i2 and j < j2 such that rows i, i2
    and columns j, j2 induce [[1,0],[0,1]] or [[0,1],[1,0]]; the first
    witness in row-pair order.
    """
    masks = [m.row_mask(i) for i in range(m.rows)]
    for i in range(m.rows):
        for i2 in range(i + 1, m.rows):
            only_i = masks[i] & ~masks[i2]
            only_i2 = masks[i2] & ~masks[i]
            if only_i and only_i2:
                j = (only_i & -only_i).bit_length() - 1
                j2 = (only_i2 & -only_i2).bit_length() - 1
                return (i, i2), (min(j, j2), max(j, j2))
    return None


def count_lonesum_bruteforce(n1: int, n2: int) -> int:
    """Count n1 x n2 lonesum matrices by enumerating all 2^(n1*n2) bitmasks."""
    cells = n1 * n2
    if n1 < 0 or n2 < 0:
        raise ValueError("matrix dimensions must be non-negative")
    if cells > MAX_LONESUM_CELLS:
        raise ValueError(
            f"{n1}x{n2} means 2^{cells} matrices; enumeration is capped at "
            f"{MAX_LONESUM_CELLS} cells"
        )
    if cells == 0:
        return 1  # the empty matrix is lonesum
    mask = (1 << n2) - 1
    popcount = [r.bit_count() for r in range(1 << n2)]
    count = 0
    row_range = range(0, cells, n2)
    for bits in range(1 << cells):
        rows = sorted(
            ((bits >> s) & mask for s in row_range),
            key=popcount.__getitem__,
            reverse=True,
        )
        prev = rows[0]
        for r in rows[1:]:
            if r | prev != prev:
                break
            prev = r
        else:
            count += 1
    return count


def orientation_to_matrix(o: Orientation, n1: int, n2: int) -> BinaryMatrix:
    """Encode an orientation of K_{n1,n2} as a matrix: entry (i, j) is 1
    iff the edge from A-vertex i to B-vertex j points from A to B."""
    if o.graph != complete_bipartite(n1, n2):
        raise ValueError(f"orientation is not over K_{{{n1},{n2}}}")
    # Edge (i, n1+j) has index i*n2 + j and low-to-high means A to B, so the
    # direction bits already are the matrix bits.
    return BinaryMatrix(n1, n2, o.bits)


def matrix_to_orientation(m: BinaryMatrix) -> Orientation:
    """Inverse encoding: the unique orientation of K_{rows,cols} whose
    matrix is m. Round-trips exactly in both directions."""
    return Orientation(complete_bipartite(m.rows, m.cols), m.bits)


def has_directed_4cycle(o: Orientation) -> bool:
    """True iff some vertex pair (a1,a2) x (b1,b2) induces a directed
    4-cycle. On complete bipartite graphs every directed cycle shortens to
    a 4-cycle, so this equals not is_acyclic(o)."""
    if not o.graph.edges:
        return False
    n1, n2 = bipartite_blocks(o.graph)
    bits = o.bits
    for a1 in range(n1):
        for a2 in range(a1 + 1, n1):
            r1 = (bits >> (a1 * n2)) & ((1 << n2) - 1)
            r2 = (bits >> (a2 * n2)) & ((1 << n2) - 1)
            # Directed 4-cycle through b1, b2 <=> entries (a1,b1),(a2,b2)
            # agree, entries (a1,b2),(a2,b1) agree, and the two differ:
            # some column has r1=1, r2=0 and another has r1=0, r2=1.
            if (r1 & ~r2) and (r2 & ~r1):
                return True
    return False
