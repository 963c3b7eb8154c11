"""Exact linear algebra over the two-element field.

Matrices are stored column-wise and sparse: column ``j`` is the sorted
tuple of row indices holding a 1.  Vectors are sets of indices.  Gaussian
elimination is the column reduction keyed on the largest row index of a
column (its "low"); on boundary matrices of simplicial complexes fill-in
stays small, so a 10^5 x 10^5 boundary matrix reduces in well under a
second with memory proportional to the number of nonzeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence

Vector = frozenset  # set of coordinates equal to 1


@dataclass(frozen=True)
class F2Matrix:
    rows: int
    cols: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.columns) != self.cols:
            raise ValueError(f"expected {self.cols} columns, got {len(self.columns)}")
        for c in self.columns:
            if c and (c[0] < 0 or c[-1] >= self.rows):
                raise ValueError("column has entries outside the row range")

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[Iterable[int]]) -> "F2Matrix":
        cols = tuple(tuple(sorted(c)) for c in columns)
        return cls(rows, len(cols), cols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "F2Matrix":
        ncols = len(rows[0]) if rows else (cols or 0)
        columns: list[list[int]] = [[] for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                if x & 1:
                    columns[j].append(i)
        return cls(len(rows), ncols, tuple(tuple(c) for c in columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols, ((),) * cols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, tuple((i,) for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        return int(i in self.columns[j])

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, c in enumerate(self.columns):
            for i in c:
                out[i][j] = 1
        return out

    def transpose(self) -> "F2Matrix":
        rows: list[list[int]] = [[] for _ in range(self.rows)]
        for j, c in enumerate(self.columns):
            for i in c:
                rows[i].append(j)
        return F2Matrix(self.cols, self.rows, tuple(tuple(r) for r in rows))

    def apply(self, vec: AbstractSet[int]) -> Vector:
        """Return ``M v`` for a vector given as a set of column indices."""
        out: set[int] = set()
        for j in vec:
            out.symmetric_difference_update(self.columns[j])
        return frozenset(out)

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return F2Matrix.from_columns(self.rows, (self.apply(c) for c in other.columns))

    def is_zero(self) -> bool:
        return not any(self.columns)


def to_vector(values: Iterable[int]) -> Vector:
    """0/1 sequence -> vector."""
    return frozenset(i for i, x in enumerate(values) if x & 1)


def to_bits(vec: AbstractSet[int], length: int) -> tuple[int, ...]:
    """Vector -> 0/1 tuple of the given length."""
    return tuple(int(i in vec) for i in range(length))


def rank(M: F2Matrix) -> int:
    pivots: dict[int, set[int]] = {}
    for c in M.columns:
        if not c:
            continue
        low = c[-1]
        if low not in pivots:
            pivots[low] = set(c)
            continue
        s = set(c)
        while s:
            p = pivots.get(low)
            if p is None:
                pivots[low] = s
                break
            s ^= p
            if s:
                low = max(s)
    return len(pivots)


def kernel_basis(M: F2Matrix) -> list[Vector]:
    """A basis of ``{v : Mv = 0}``; length is ``cols - rank(M)``."""
    pivots: dict[int, tuple[set[int], set[int]]] = {}
    basis: list[Vector] = []
    for j, c in enumerate(M.columns):
        s = set(c)
        combo = {j}
        while s:
            low = max(s)
            p = pivots.get(low)
            if p is None:
                pivots[low] = (s, combo)
                break
            s ^= p[0]
            combo ^= p[1]
        else:
            basis.append(frozenset(combo))
    return basis


def coker_dim(M: F2Matrix) -> int:
    return M.rows - rank(M)


class SpanReducer:
    """Echelon basis of a growing subspace whose elements carry tags.

    Reducing a vector returns the residue and the symmetric difference of
    the tags of the basis elements used.  Tagging boundaries with the empty
    set and the ``i``-th homology representative with ``{i}`` turns
    ``reduce`` into "coordinates of a cycle's homology class".
    """

    def __init__(self) -> None:
        self._pivots: dict[int, tuple[frozenset[int], frozenset[int]]] = {}

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, vec: AbstractSet[int]) -> tuple[Vector, Vector]:
        s = set(vec)
        tags: set[int] = set()
        pivots = self._pivots
        while s:
            p = pivots.get(max(s))
            if p is None:
                break
            s ^= p[0]
            tags ^= p[1]
        return frozenset(s), frozenset(tags)

    def add(self, vec: AbstractSet[int], tag: AbstractSet[int] = frozenset()) -> bool:
        """Insert ``vec``; False if it already lies in the span."""
        residue, tags = self.reduce(vec)
        if not residue:
            return False
        self._pivots[max(residue)] = (residue, frozenset(tags ^ frozenset(tag)))
        return True
