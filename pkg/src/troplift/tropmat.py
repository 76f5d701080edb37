"""Min-plus matrices with exact rational entries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch


@dataclass(frozen=True)
class TropMatrix:
    entries: tuple  # tuple of row tuples of Fractions
    symmetric: bool = False

    @staticmethod
    def make(rows, symmetric: bool = False) -> "TropMatrix":
        ent = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not ent or not ent[0]:
            raise ValueError("matrix must be nonempty")
        if any(len(r) != len(ent[0]) for r in ent):
            raise ValueError("ragged rows")
        if symmetric:
            n = len(ent)
            if len(ent[0]) != n:
                raise ValueError("symmetric matrix must be square")
            for i in range(n):
                for j in range(n):
                    if ent[i][j] != ent[j][i]:
                        raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")
        return TropMatrix(ent, symmetric)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, rc):
        i, j = rc
        return self.entries[i][j]

    def row(self, i) -> tuple:
        return self.entries[i]

    def col(self, j) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "TropMatrix":
        return TropMatrix(tuple(zip(*self.entries)), self.symmetric)

    def submatrix(self, row_idx, col_idx) -> "TropMatrix":
        return TropMatrix(
            tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx), False
        )

    def scale_rows_cols(self, row_shift, col_shift) -> "TropMatrix":
        """Tropical scaling: add row_shift[i] + col_shift[j] to entry (i, j)."""
        ent = tuple(
            tuple(self.entries[i][j] + row_shift[i] + col_shift[j] for j in range(self.cols))
            for i in range(self.rows)
        )
        return TropMatrix(ent, False)

    def scale_symmetric(self, shift) -> "TropMatrix":
        """Simultaneous row k and column k scaling, preserving symmetry."""
        ent = tuple(
            tuple(self.entries[i][j] + shift[i] + shift[j] for j in range(self.cols))
            for i in range(self.rows)
        )
        return TropMatrix(ent, self.symmetric)

    def as_int_grid(self) -> tuple[int, list[list[int]]]:
        """Scale all entries by the denominator lcm; returns (scale, int rows)."""
        scale = 1
        for row in self.entries:
            for x in row:
                scale = lcm(scale, x.denominator)
        grid = [[int(x * scale) for x in row] for row in self.entries]
        return scale, grid

    def max_abs(self) -> Fraction:
        return max(abs(x) for row in self.entries for x in row)


def trop_mat_mul(b: TropMatrix, c: TropMatrix) -> TropMatrix:
    """(b ⊙ c)_{ij} = min_k (b_{ik} + c_{kj})."""
    if b.cols != c.rows:
        raise DimensionMismatch(f"inner dimensions {b.cols} and {c.rows} differ")
    ent = tuple(
        tuple(min(b[i, k] + c[k, j] for k in range(b.cols)) for j in range(c.cols))
        for i in range(b.rows)
    )
    return TropMatrix(ent, False)
