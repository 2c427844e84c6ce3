"""Dense GF(2) linear algebra on bit-packed rows.

A row is a Python ``int`` whose bit ``j`` holds the entry in column ``j``.
Elimination is XOR of whole rows, so a matrix with a few dozen columns costs
one machine word per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when a vector or matrix has the wrong number of columns."""


@dataclass(frozen=True)
class Gf2Matrix:
    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise DimensionError("matrix dimensions must be non-negative")
        if len(self.rows) != self.n_rows:
            raise DimensionError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        limit = 1 << self.n_cols
        for row in self.rows:
            if row < 0 or row >= limit:
                raise DimensionError(f"row {row:#x} does not fit in {self.n_cols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[int], n_cols: int) -> Gf2Matrix:
        rows = tuple(rows)
        return cls(len(rows), n_cols, rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], n_cols: int | None = None) -> Gf2Matrix:
        """Build from nested 0/1 lists; ``n_cols`` is needed only when there are no rows."""
        if n_cols is None:
            if not entries:
                raise DimensionError("n_cols is required for a matrix with no rows")
            n_cols = len(entries[0])
        return cls.from_rows((pack(row, n_cols) for row in entries), n_cols)

    @classmethod
    def from_strings(cls, lines: Sequence[str], n_cols: int | None = None) -> Gf2Matrix:
        """Build from strings such as ``"1101"`` (leftmost character is column 0)."""
        return cls.from_lists([[_bit_char(c) for c in line] for line in lines], n_cols)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> Gf2Matrix:
        return cls(n_rows, n_cols, (0,) * n_rows)

    def to_lists(self) -> list[list[int]]:
        return [unpack(row, self.n_cols) for row in self.rows]

    def to_strings(self) -> list[str]:
        return ["".join(map(str, r)) for r in self.to_lists()]

    def column(self, j: int) -> int:
        """Column ``j`` packed as an int whose bit ``i`` is the entry in row ``i``."""
        return sum(((row >> j) & 1) << i for i, row in enumerate(self.rows))

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.n_cols)]

    def append_row(self, v: int) -> Gf2Matrix:
        return Gf2Matrix(self.n_rows + 1, self.n_cols, self.rows + (_check_vec(v, self.n_cols),))

    def select_columns(self, cols: Sequence[int]) -> Gf2Matrix:
        """Keep the given columns, in the given order."""
        return Gf2Matrix(self.n_rows, len(cols), tuple(select_bits(r, cols) for r in self.rows))

    def __str__(self):
        return "\n".join(self.to_strings())


def pack(bits: Sequence[int], n: int | None = None) -> int:
    if n is not None and len(bits) != n:
        raise DimensionError(f"expected {n} entries, got {len(bits)}")
    v = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} is not 0 or 1")
        v |= b << j
    return v


def unpack(v: int, n: int) -> list[int]:
    return [(v >> j) & 1 for j in range(n)]


def select_bits(v: int, positions: Sequence[int]) -> int:
    """Gather bits ``positions`` of ``v`` into a dense int (``positions[k]`` -> bit ``k``)."""
    out = 0
    for k, p in enumerate(positions):
        out |= ((v >> p) & 1) << k
    return out


def _bit_char(c: str) -> int:
    if c == "0":
        return 0
    if c == "1":
        return 1
    raise ValueError(f"invalid matrix character {c!r}")


def _check_vec(v: int, n: int) -> int:
    if v < 0 or v >> n:
        raise DimensionError(f"vector {v:#x} has more than {n} bits")
    return v


def _eliminate(rows: Iterable[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Gauss-Jordan elimination; returns (nonzero reduced rows, pivot columns) in pivot order."""
    pending = [r for r in rows if r]
    basis: list[int] = []
    pivots: list[int] = []
    for col in range(n_cols):
        bit = 1 << col
        for i, r in enumerate(pending):
            if r & bit:
                pivot = pending.pop(i)
                break
        else:
            continue
        pending = [r ^ pivot if r & bit else r for r in pending]
        basis = [b ^ pivot if b & bit else b for b in basis]
        basis.append(pivot)
        pivots.append(col)
        if not pending:
            break
    return basis, pivots


def rank(m: Gf2Matrix) -> int:
    return rank_of_vectors(m.rows)


def rank_of_vectors(vectors: Iterable[int]) -> int:
    """Rank of a collection of packed vectors (XOR basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def rref(m: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus the pivot columns."""
    rows, pivots = _eliminate(m.rows, m.n_cols)
    return Gf2Matrix.from_rows(rows, m.n_cols), pivots


def in_row_space(m: Gf2Matrix, v: int | Sequence[int]) -> bool:
    if not isinstance(v, int):
        v = pack(v, m.n_cols)
    _check_vec(v, m.n_cols)
    reduced, pivots = rref(m)
    for row, col in zip(reduced.rows, pivots):
        if (v >> col) & 1:
            v ^= row
    return v == 0


def span(vectors: Sequence[int]) -> list[int]:
    """All ``2**len(vectors)`` combinations, in Gray-code order starting at zero."""
    out = [0]
    acc = 0
    for i in range(1, 1 << len(vectors)):
        acc ^= vectors[(i & -i).bit_length() - 1]
        out.append(acc)
    return out
