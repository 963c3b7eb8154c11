"""Finite chain complexes over F2 and their homology with explicit bases."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import InconsistencyError
from .f2linalg import F2Matrix, SpanReducer, Vector, kernel_basis, rank


@dataclass(frozen=True)
class ChainComplex:
    """``dims[k]`` is the rank of C_k; ``boundaries[k]`` maps C_k -> C_{k-1}.

    ``boundaries[0]`` is the zero map to the zero group.
    """

    dims: tuple[int, ...]
    boundaries: tuple[F2Matrix, ...]

    def __post_init__(self) -> None:
        if len(self.dims) != len(self.boundaries):
            raise ValueError("one boundary matrix per degree")
        for k, d in enumerate(self.boundaries):
            below = self.dims[k - 1] if k else 0
            if d.cols != self.dims[k] or d.rows != below:
                raise ValueError(f"boundary {k} has shape {d.rows}x{d.cols}")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary(self, k: int) -> F2Matrix:
        if 0 <= k < len(self.dims):
            return self.boundaries[k]
        below = self.dims[k - 1] if 0 < k <= len(self.dims) else 0
        above = self.dims[k] if 0 <= k < len(self.dims) else 0
        return F2Matrix.zeros(below, above)

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        return tuple(rank(d) for d in self.boundaries)

    def betti(self) -> tuple[int, ...]:
        r = self.ranks
        out = []
        for k, n in enumerate(self.dims):
            nxt = r[k + 1] if k + 1 < len(r) else 0
            out.append(n - r[k] - nxt)
        return tuple(out)

    def homology(self, k: int) -> "Homology":
        return Homology.compute(self, k)


@dataclass
class Homology:
    """H_k with chosen cycle representatives and a coordinate map."""

    degree: int
    representatives: list[Vector]
    _reducer: SpanReducer = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    @classmethod
    def compute(cls, C: ChainComplex, k: int) -> "Homology":
        reducer = SpanReducer()
        if k < 0 or k > C.top:
            return cls(k, [], reducer)
        for col in C.boundary(k + 1).columns:
            reducer.add(col)
        reps: list[Vector] = []
        for z in kernel_basis(C.boundary(k)):
            if reducer.add(z, {len(reps)}):
                reps.append(z)
        return cls(k, reps, reducer)

    def coordinates(self, cycle) -> Vector:
        """Coordinates of a cycle's class, as a set of representative indices."""
        residue, tags = self._reducer.reduce(cycle)
        if residue:
            raise InconsistencyError(f"chain in degree {self.degree} is not a cycle")
        return tags


def induced_map(source: Homology, target: Homology, chain_map) -> F2Matrix:
    """Matrix of the map on homology induced by ``chain_map`` (cycle -> cycle)."""
    cols = (target.coordinates(chain_map(z)) for z in source.representatives)
    return F2Matrix.from_columns(target.dim, cols)
