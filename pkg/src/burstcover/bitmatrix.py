"""Dense bit matrices with rows packed into ints (bit j = column j)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    row_masks: tuple[int, ...]

    def __post_init__(self):
        if len(self.row_masks) != self.rows:
            raise ValueError("row count mismatch")
        if any(m >> self.cols for m in self.row_masks):
            raise ValueError("row mask wider than the column count")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "BinaryMatrix":
        """Build from an iterable of rows (ints, or iterables of bits)."""
        masks = []
        for row in rows:
            if isinstance(row, int):
                masks.append(row)
            else:
                bits = list(row)
                masks.append(sum(int(b) << j for j, b in enumerate(bits)))
                if cols is None:
                    cols = len(bits)
        if cols is None:
            cols = max((m.bit_length() for m in masks), default=0)
        return cls(len(masks), cols, tuple(masks))

    @classmethod
    def from_columns(cls, columns, rows: int) -> "BinaryMatrix":
        """Build from column masks (bit i of a column = row i)."""
        columns = list(columns)
        masks = [0] * rows
        for j, c in enumerate(columns):
            for i in range(rows):
                if c >> i & 1:
                    masks[i] |= 1 << j
        return cls(rows, len(columns), tuple(masks))

    def entry(self, i: int, j: int) -> int:
        return self.row_masks[i] >> j & 1

    def column(self, j: int) -> int:
        c = 0
        for i, m in enumerate(self.row_masks):
            c |= (m >> j & 1) << i
        return c

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.cols)]

    def mul_vec(self, v: int) -> int:
        """Matrix-vector product over GF(2); v has bit j = coordinate j."""
        s = 0
        for i, m in enumerate(self.row_masks):
            s |= ((m & v).bit_count() & 1) << i
        return s

    def rank(self) -> int:
        rows = list(self.row_masks)
        rank = 0
        for col in range(self.cols):
            pivot = next((i for i in range(rank, len(rows)) if rows[i] >> col & 1), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for i in range(len(rows)):
                if i != rank and rows[i] >> col & 1:
                    rows[i] ^= rows[rank]
            rank += 1
        return rank

    def nullspace_basis(self) -> list[int]:
        """Basis vectors v (bit j = coordinate j) with self.mul_vec(v) = 0."""
        rows = list(self.row_masks)
        pivot_cols = []
        rank = 0
        for col in range(self.cols):
            pivot = next((i for i in range(rank, len(rows)) if rows[i] >> col & 1), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for i in range(len(rows)):
                if i != rank and rows[i] >> col & 1:
                    rows[i] ^= rows[rank]
            pivot_cols.append(col)
            rank += 1
        free_cols = [c for c in range(self.cols) if c not in pivot_cols]
        basis = []
        for fc in free_cols:
            v = 1 << fc
            for i, pc in enumerate(pivot_cols):
                if rows[i] >> fc & 1:
                    v |= 1 << pc
            basis.append(v)
        return basis

    def hex_rows(self) -> list[str]:
        """One hex string per row; bit j of the mask is column j."""
        return ["0x" + format(m, "X") for m in self.row_masks]

    def __str__(self):
        return "\n".join(
            "".join(str(self.entry(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        )
