"""Smith theory of a finite simplicial complex with an involution.

Everything is computed at chain level over F2.  With ``c`` the involution
and ``S_*`` the simplicial chains of X, the short exact sequence

    0 -> ker(1 + c) -> S_*(X) -> im(1 + c) -> 0

splits on the left as ``ker(1 + c) = S_*(F) + im(1 + c)`` and the right
term is identified with the relative chains of (X/c, F) by sending the
orbit sum ``s + c(s)`` to the orbit of ``s``.  The long exact sequence is
assembled from explicit homology bases and the usual zigzag for the
connecting map, then checked for exactness position by position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chains import ChainComplex, Homology, induced_map
from .errors import PreconditionError, StructureError
from .f2linalg import F2Matrix, rank
from .simplicial import Simplex, SimplicialComplex, barycentric_subdivision, betti, relative_betti


@dataclass(frozen=True)
class SimplicialInvolution:
    complex: SimplicialComplex
    involution: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.involution)
        object.__setattr__(self, "involution", c)
        n = self.complex.vertex_count
        if len(c) != n:
            raise StructureError(f"involution has {len(c)} entries for {n} vertices")
        if sorted(c) != list(range(n)):
            raise StructureError("involution is not a permutation of the vertices")
        if any(c[c[v]] != v for v in range(n)):
            raise StructureError("involution does not square to the identity")
        for f in self.complex.facets:
            if self.apply(f) not in self.complex:
                raise StructureError(f"image of facet {f} is not a simplex")

    @classmethod
    def build(cls, vertex_count: int, facets: Sequence[Sequence[int]], involution: Sequence[int]) -> "SimplicialInvolution":
        return cls(SimplicialComplex(vertex_count, tuple(tuple(f) for f in facets)), tuple(involution))

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "facets": [list(f) for f in self.facets],
            "involution": list(self.involution),
        }

    @property
    def vertex_count(self) -> int:
        return self.complex.vertex_count

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return self.complex.facets

    def apply(self, s: Sequence[int]) -> Simplex:
        c = self.involution
        return tuple(sorted(c[v] for v in s))

    def fixed_vertices(self) -> list[int]:
        return [v for v in self.complex.vertices if self.involution[v] == v]

    def orbit_key(self, s: Simplex) -> frozenset[int]:
        c = self.involution
        return frozenset(min(v, c[v]) for v in s)


def regularity_defects(K: SimplicialInvolution) -> tuple[bool, bool]:
    """Report ``(cellular, simplicial_quotient)``.

    cellular: every simplex mapped to itself is fixed vertex-wise.
    simplicial_quotient: two simplices with the same set of vertex orbits
    lie in the same orbit, so X/c is the simplicial complex of orbit sets.
    """
    c = K.involution
    cellular = True
    seen: dict[frozenset[int], Simplex] = {}
    quotient_ok = True
    for layer in K.complex.simplices:
        for s in layer:
            img = K.apply(s)
            if img == s and any(c[v] != v for v in s):
                cellular = False
            key = K.orbit_key(s)
            other = seen.setdefault(key, s)
            if other != s and other != img:
                quotient_ok = False
    return cellular, quotient_ok


def is_regular(K: SimplicialInvolution) -> bool:
    return all(regularity_defects(K))


def subdivide(K: SimplicialInvolution) -> SimplicialInvolution:
    sd, labels = barycentric_subdivision(K.complex)
    lab = {s: i for i, s in enumerate(labels)}
    inv = tuple(lab[K.apply(s)] for s in labels)
    return SimplicialInvolution(sd, inv)


def regularize(K: SimplicialInvolution) -> SimplicialInvolution:
    """Barycentrically subdivide until the involution is regular (at most twice)."""
    for _ in range(3):
        if is_regular(K):
            return K
        K = subdivide(K)
    raise StructureError("involution still irregular after two subdivisions")  # pragma: no cover


def _require_regular(K: SimplicialInvolution) -> None:
    if not is_regular(K):
        raise PreconditionError("involution is not regular; call regularize() first")


def fixed_subcomplex(K: SimplicialInvolution) -> SimplicialComplex:
    _require_regular(K)
    return K.complex.full_subcomplex(K.fixed_vertices())


def quotient_complex(K: SimplicialInvolution) -> tuple[SimplicialComplex, list[int]]:
    """Orbit complex X/c and the vertex projection (labels follow the smaller vertex)."""
    _require_regular(K)
    c = K.involution
    reps = sorted({min(v, c[v]) for v in K.complex.vertices})
    label = {v: i for i, v in enumerate(reps)}
    pr = [label.get(min(v, c[v]), -1) for v in range(K.vertex_count)]
    facets = {tuple(sorted(pr[v] for v in f)) for f in K.complex.facets}
    return SimplicialComplex(len(reps), tuple(facets)), pr


@dataclass(frozen=True)
class SmithReport:
    betti_X: tuple[int, ...]
    betti_F: tuple[int, ...]
    betti_rel: tuple[int, ...]
    coker_dims: tuple[int, ...]
    deficiency: int
    maximal: bool
    exactness_verified: bool
    regularized: SimplicialInvolution

    def as_dict(self) -> dict:
        return {
            "betti_X": list(self.betti_X),
            "betti_F": list(self.betti_F),
            "betti_rel": list(self.betti_rel),
            "coker_dims": list(self.coker_dims),
            "deficiency": self.deficiency,
            "maximal": self.maximal,
            "exactness_verified": self.exactness_verified,
            "regularized_vertex_count": len(self.regularized.complex.vertices),
        }


class _SmithComplexes:
    """The three chain complexes of the Smith sequence and the maps between them."""

    def __init__(self, K: SimplicialInvolution):
        X = K.complex
        self.X = X
        top = X.dim
        self.perm: list[list[int]] = []
        self.fixed: list[list[int]] = []
        self.orbits: list[list[int]] = []
        for k in range(top + 1):
            idx = X.index[k]
            perm = [idx[K.apply(s)] for s in X.simplices[k]]
            self.perm.append(perm)
            self.fixed.append([j for j, pj in enumerate(perm) if pj == j])
            self.orbits.append([j for j, pj in enumerate(perm) if j < pj])
        self.fixed_pos = [{j: i for i, j in enumerate(f)} for f in self.fixed]
        self.orbit_pos = [
            {**{j: i for i, j in enumerate(o)}, **{p[j]: i for i, j in enumerate(o)}}
            for o, p in zip(self.orbits, self.perm)
        ]
        self.S = X.chain_complex()
        self.A = self._restricted(self.fixed, self.fixed_pos)
        self.B = self._restricted(self.orbits, self.orbit_pos)

    def _restricted(self, basis: list[list[int]], pos: list[dict[int, int]]) -> ChainComplex:
        mats = []
        for k, elems in enumerate(basis):
            if k == 0:
                mats.append(F2Matrix.zeros(0, len(elems)))
                continue
            full = self.S.boundaries[k]
            cols = [self._project(full.columns[j], pos[k - 1]) for j in elems]
            mats.append(F2Matrix.from_columns(len(basis[k - 1]), cols))
        return ChainComplex(tuple(len(b) for b in basis), tuple(mats))

    @staticmethod
    def _project(chain, pos: dict[int, int]) -> set[int]:
        # faces outside the basis are dropped; two faces in one orbit cancel
        out: set[int] = set()
        for j in chain:
            if j in pos:
                out ^= {pos[j]}
        return out

    # chain maps, all on vectors given as index sets ---------------------
    def include_fixed(self, k: int, z) -> set[int]:
        fixed = self.fixed[k]
        return {fixed[i] for i in z}

    def include_orbits(self, k: int, z) -> set[int]:
        orbits, perm = self.orbits[k], self.perm[k]
        out: set[int] = set()
        for i in z:
            out.add(orbits[i])
            out.add(perm[orbits[i]])
        return out

    def one_plus_c(self, k: int, x) -> set[int]:
        """Apply 1 + c and read the result in the orbit basis."""
        pos, perm = self.orbit_pos[k], self.perm[k]
        out: set[int] = set()
        for j in x:
            if perm[j] != j and perm[j] not in x:
                out.add(pos[j])
        return out

    def lift(self, k: int, z) -> set[int]:
        """A chain of X sent by 1 + c onto the orbit chain ``z``."""
        orbits = self.orbits[k]
        return {orbits[i] for i in z}

    def split_invariant(self, k: int, y) -> tuple[set[int], set[int]]:
        """Coordinates of an invariant chain in the (fixed, orbit) basis."""
        perm = self.perm[k]
        fixed_part: set[int] = set()
        orbit_part: set[int] = set()
        for j in y:
            if perm[j] == j:
                fixed_part.add(self.fixed_pos[k][j])
            elif perm[j] not in y:
                raise StructureError("chain is not invariant under the involution")
            else:
                orbit_part.add(self.orbit_pos[k][j])
        return fixed_part, orbit_part


def _direct_sum_coords(hA: Homology, hB: Homology, fixed_part, orbit_part) -> set[int]:
    shift = hA.dim
    return set(hA.coordinates(fixed_part)) | {shift + i for i in hB.coordinates(orbit_part)}


def smith_report(K: SimplicialInvolution) -> SmithReport:
    R = regularize(K)
    sc = _SmithComplexes(R)
    top = R.complex.dim
    HX = [sc.S.homology(k) for k in range(top + 1)]
    HA = [sc.A.homology(k) for k in range(top + 1)]
    HB = [sc.B.homology(k) for k in range(top + 1)]

    inc: list[F2Matrix] = []   # H_k(Sm X) = H_k(F) + H_k(X/c, F) -> H_k(X)
    pro: list[F2Matrix] = []   # H_k(X) -> H_k(X/c, F)
    con: list[F2Matrix] = []   # H_k(X/c, F) -> H_{k-1}(Sm X)
    for k in range(top + 1):
        a, b = HA[k], HB[k]
        cols = [HX[k].coordinates(sc.include_fixed(k, z)) for z in a.representatives]
        cols += [HX[k].coordinates(sc.include_orbits(k, z)) for z in b.representatives]
        inc.append(F2Matrix.from_columns(HX[k].dim, cols))
        pro.append(induced_map(HX[k], b, lambda x, k=k: sc.one_plus_c(k, x)))
        if k == 0:
            con.append(F2Matrix.zeros(0, b.dim))
            continue
        cols = []
        bd = sc.S.boundaries[k]
        for z in b.representatives:
            y = bd.apply(sc.lift(k, z))
            fixed_part, orbit_part = sc.split_invariant(k - 1, y)
            cols.append(_direct_sum_coords(HA[k - 1], HB[k - 1], fixed_part, orbit_part))
        con.append(F2Matrix.from_columns(HA[k - 1].dim + HB[k - 1].dim, cols))

    exact = _check_exact(inc, pro, con, HX, HA, HB)
    bX = tuple(h.dim for h in HX)
    bF = tuple(h.dim for h in HA)
    bR = tuple(h.dim for h in HB)
    coker = tuple(bX[k] - rank(inc[k]) for k in range(top + 1))
    deficiency = 2 * sum(coker)
    if deficiency != sum(bX) - sum(bF):
        exact = False
    if bX != betti(R.complex) or bF != _pad(betti(fixed_subcomplex(R)), top + 1):
        exact = False
    return SmithReport(bX, _trim(bF, R), bR, coker, deficiency, deficiency == 0, exact, R)


def _pad(v: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(v) + (0,) * (n - len(v))


def _trim(bF: tuple[int, ...], R: SimplicialInvolution) -> tuple[int, ...]:
    return bF[: fixed_subcomplex(R).dim + 1]


def _check_exact(inc, pro, con, HX, HA, HB) -> bool:
    """Image = kernel at every spot of the long sequence.

    At a spot ``U --f--> V --g--> W`` this means ``g f = 0`` and
    ``rank f + rank g = dim V``.
    """
    top = len(HX) - 1
    for k in range(top + 1):
        f, g = inc[k], pro[k]
        if not (g @ f).is_zero() or rank(f) + rank(g) != HX[k].dim:
            return False
        h = con[k]
        if not (h @ g).is_zero() or rank(g) + rank(h) != HB[k].dim:
            return False
        sm_dim = HA[k].dim + HB[k].dim
        incoming = con[k + 1] if k + 1 <= top else F2Matrix.zeros(sm_dim, 0)
        if not (f @ incoming).is_zero() or rank(incoming) + rank(f) != sm_dim:
            return False
    return True


def verify_relative_quotient(K: SimplicialInvolution, manifold_half_dim: int | None = None) -> bool:
    """Check the relative Betti identities of a maximal involution.

    The relative Betti numbers of (X/c, F) are computed directly from the
    quotient complex, independently of the Smith sequence.  With
    ``manifold_half_dim = n`` the caller declares X a closed 2n-manifold
    whose fixed components are n-dimensional, enabling the two extra checks.
    """
    report = smith_report(K)
    if not report.maximal:
        raise PreconditionError("involution is not maximal")
    R = report.regularized
    Q, pr = quotient_complex(R)
    F = fixed_subcomplex(R)
    F_image = SimplicialComplex(Q.vertex_count, tuple(tuple(sorted(pr[v] for v in f)) for f in F.facets))
    d = R.complex.dim
    rel = _pad(relative_betti(Q, F_image), d + 1)
    bX = _pad(report.betti_X, d + 1)
    bF = _pad(betti(F), d + 1)
    ok = all(rel[r] == sum(bX[k] - bF[k] for k in range(r, d + 1)) for r in range(d + 1))
    if manifold_half_dim is not None:
        n = manifold_half_dim
        if d != 2 * n:
            raise PreconditionError(f"declared half-dimension {n} but complex has dimension {d}")
        ok = ok and all(rel[r] == sum(bX[r:]) for r in range(n + 1, 2 * n + 1))
        ok = ok and 2 * sum(rel) == n * sum(bX)
    return ok
