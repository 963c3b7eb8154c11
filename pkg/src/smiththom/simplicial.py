"""Finite abstract simplicial complexes and their F2 homology.

Simplices are sorted vertex tuples.  Within each dimension they are ordered
lexicographically, which fixes the row/column layout of every boundary
matrix and therefore makes all downstream output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .chains import ChainComplex
from .errors import StructureError
from .f2linalg import F2Matrix

Simplex = tuple[int, ...]


def _closure(facets: Iterable[Simplex]) -> list[list[Simplex]]:
    by_dim: list[set[Simplex]] = []
    for f in facets:
        for size in range(1, len(f) + 1):
            while len(by_dim) < size:
                by_dim.append(set())
            by_dim[size - 1].update(combinations(f, size))
    return [sorted(s) for s in by_dim]


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward closure of ``facets`` on vertex labels ``0..vertex_count-1``.

    A vertex belongs to the complex only if some facet contains it; an
    isolated vertex is written as a one-element facet.
    """

    vertex_count: int
    facets: tuple[Simplex, ...]

    def __post_init__(self) -> None:
        norm = set()
        for f in self.facets:
            t = tuple(sorted(set(f)))
            if len(t) != len(f):
                raise StructureError(f"facet {f} repeats a vertex")
            if not t:
                raise StructureError("empty facet")
            if t[0] < 0 or t[-1] >= self.vertex_count:
                raise StructureError(f"facet {f} uses a vertex outside 0..{self.vertex_count - 1}")
            norm.add(t)
        object.__setattr__(self, "facets", tuple(sorted(norm, key=lambda s: (len(s), s))))

    @classmethod
    def from_simplices(cls, vertex_count: int, simplices: Iterable[Sequence[int]]) -> "SimplicialComplex":
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in simplices))

    @cached_property
    def simplices(self) -> tuple[tuple[Simplex, ...], ...]:
        return tuple(tuple(s) for s in _closure(self.facets))

    @cached_property
    def index(self) -> tuple[dict[Simplex, int], ...]:
        return tuple({s: i for i, s in enumerate(layer)} for layer in self.simplices)

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for (v,) in self.simplices[0]) if self.simplices else ()

    def __contains__(self, s: Sequence[int]) -> bool:
        t = tuple(sorted(s))
        k = len(t) - 1
        return 0 <= k <= self.dim and t in self.index[k]

    def count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k <= self.dim else 0

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.simplices)

    def maximal_simplices(self) -> tuple[Simplex, ...]:
        faces = set()
        for f in self.facets:
            for size in range(1, len(f)):
                faces.update(combinations(f, size))
        return tuple(f for f in self.facets if f not in faces)

    def boundary_matrix(self, k: int) -> F2Matrix:
        if k <= 0 or k > self.dim:
            return F2Matrix.zeros(self.count(k - 1), self.count(k))
        below = self.index[k - 1]
        cols = []
        for s in self.simplices[k]:
            cols.append(tuple(sorted(below[s[:i] + s[i + 1:]] for i in range(k + 1))))
        return F2Matrix(len(below), len(cols), tuple(cols))

    def chain_complex(self) -> ChainComplex:
        dims = self.f_vector()
        return ChainComplex(dims, tuple(self.boundary_matrix(k) for k in range(len(dims))))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(f in other for f in self.facets)

    def full_subcomplex(self, vertices: Iterable[int]) -> "SimplicialComplex":
        keep = set(vertices)
        faces = []
        for f in self.facets:
            t = tuple(v for v in f if v in keep)
            if t:
                faces.append(t)
        return SimplicialComplex(self.vertex_count, tuple(faces))


def betti(K: SimplicialComplex) -> tuple[int, ...]:
    """F2 Betti numbers in degrees ``0..dim K`` (empty tuple for the empty complex)."""
    return K.chain_complex().betti()


def relative_chain_complex(K: SimplicialComplex, L: SimplicialComplex) -> ChainComplex:
    if not L.is_subcomplex_of(K):
        raise StructureError("second complex is not a subcomplex of the first")
    kept = []
    for k, layer in enumerate(K.simplices):
        lk = L.index[k] if k <= L.dim else {}
        kept.append([s for s in layer if s not in lk])
    idx = [{s: i for i, s in enumerate(layer)} for layer in kept]
    mats = []
    for k, layer in enumerate(kept):
        below = idx[k - 1] if k else {}
        cols = []
        for s in layer:
            faces = (below.get(s[:i] + s[i + 1:]) for i in range(k + 1)) if k else ()
            cols.append(tuple(sorted(j for j in faces if j is not None)))
        mats.append(F2Matrix(len(below), len(cols), tuple(cols)))
    return ChainComplex(tuple(len(layer) for layer in kept), tuple(mats))


def relative_betti(K: SimplicialComplex, L: SimplicialComplex) -> tuple[int, ...]:
    """Betti numbers of C_*(K)/C_*(L), in degrees ``0..dim K``."""
    return relative_chain_complex(K, L).betti()


def barycentric_subdivision(K: SimplicialComplex) -> tuple[SimplicialComplex, list[Simplex]]:
    """Return sd(K) and the list mapping new vertex labels to simplices of K.

    New vertices are numbered in the (dimension, lexicographic) order of the
    simplices of K they are barycentres of.
    """
    labels = [s for layer in K.simplices for s in layer]
    lab = {s: i for i, s in enumerate(labels)}
    facets = []
    for f in K.maximal_simplices():
        for order in permutations(f):
            facets.append(tuple(sorted(lab[tuple(sorted(order[: i + 1]))] for i in range(len(order)))))
    return SimplicialComplex(len(labels), tuple(facets)), labels

