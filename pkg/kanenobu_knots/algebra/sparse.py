# sparse.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

Entry = Tuple[int, int, Fraction]


@dataclass(frozen=True)
class SparseMatrixQ:
    """
    Sparse matrix over the rationals.

    Entries are (row, col, value) with no stored zeros. Ranks go through
    sympy's DomainMatrix over QQ, so elimination is exact and deterministic.
    """

    n_rows: int
    n_cols: int
    entries: Tuple[Entry, ...] = ()

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        for r, c, v in self.entries:
            if not (0 <= r < self.n_rows and 0 <= c < self.n_cols):
                raise ValueError(f"entry ({r}, {c}) outside {self.n_rows}x{self.n_cols}")
            if v == 0:
                raise ValueError(f"stored zero at ({r}, {c})")

    @classmethod
    def from_dict(cls, n_rows: int, n_cols: int,
                  values: Mapping[Tuple[int, int], object]) -> "SparseMatrixQ":
        entries = tuple(sorted((r, c, Fraction(v)) for (r, c), v in values.items() if v != 0))
        return cls(n_rows, n_cols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrixQ":
        return cls(n, n, tuple((i, i, Fraction(1)) for i in range(n)))

    @classmethod
    def zero(cls, n_rows: int, n_cols: int) -> "SparseMatrixQ":
        return cls(n_rows, n_cols, ())

    def to_dict(self) -> Dict[Tuple[int, int], Fraction]:
        return {(r, c): v for r, c, v in self.entries}

    def is_zero(self) -> bool:
        return not self.entries

    def _domain_matrix(self) -> DomainMatrix:
        rows: Dict[int, Dict[int, object]] = {}
        for r, c, v in self.entries:
            rows.setdefault(r, {})[c] = QQ(v.numerator, v.denominator)
        return DomainMatrix(rows, (self.n_rows, self.n_cols), QQ)

    def rank(self) -> int:
        if not self.entries:
            return 0
        result = self._domain_matrix().rank()
        logger.debug("rank of %dx%d matrix with %d entries: %d",
                     self.n_rows, self.n_cols, len(self.entries), result)
        return result

    def nullity(self) -> int:
        return self.n_cols - self.rank()

    def matmul(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        if self.n_cols != other.n_rows:
            raise ValueError(f"shape mismatch: {self.n_rows}x{self.n_cols} @ "
                             f"{other.n_rows}x{other.n_cols}")
        by_row: Dict[int, Dict[int, Fraction]] = {}
        for r, c, v in other.entries:
            by_row.setdefault(r, {})[c] = v
        out: Dict[Tuple[int, int], Fraction] = {}
        for r, k, v in self.entries:
            for c, w in by_row.get(k, {}).items():
                out[(r, c)] = out.get((r, c), Fraction(0)) + v * w
        return SparseMatrixQ.from_dict(self.n_rows, other.n_cols, out)

    def restrict(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrixQ":
        """Submatrix on the given row and column index lists, renumbered in order."""
        row_pos = {r: i for i, r in enumerate(rows)}
        col_pos = {c: i for i, c in enumerate(cols)}
        entries = tuple((row_pos[r], col_pos[c], v) for r, c, v in self.entries
                        if r in row_pos and c in col_pos)
        return SparseMatrixQ(len(rows), len(cols), entries)

    def scale_row(self, row: int, factor) -> "SparseMatrixQ":
        factor = Fraction(factor)
        if factor == 0:
            raise ValueError("row scaling factor must be nonzero")
        return SparseMatrixQ(self.n_rows, self.n_cols, tuple(
            (r, c, v * factor if r == row else v) for r, c, v in self.entries))

    def permute_rows(self, permutation: Sequence[int]) -> "SparseMatrixQ":
        """Row r moves to permutation[r]."""
        return SparseMatrixQ(self.n_rows, self.n_cols, tuple(sorted(
            (permutation[r], c, v) for r, c, v in self.entries)))


def rank(m: SparseMatrixQ) -> int:
    return m.rank()


def from_rows(rows: Iterable[Iterable[object]]) -> SparseMatrixQ:
    """Dense row lists to a sparse matrix; handy in tests."""
    rows = [list(r) for r in rows]
    n_cols = len(rows[0]) if rows else 0
    values = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v != 0}
    return SparseMatrixQ.from_dict(len(rows), n_cols, values)
