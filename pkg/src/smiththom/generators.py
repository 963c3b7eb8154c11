"""Standard and randomized inputs: simplicial involutions and profiles.

The named constructors are the small hand-checkable models used in tests
and examples; the ``random_*`` functions feed the fuzz campaigns.
"""

from __future__ import annotations

import random
from itertools import combinations

from .ci_invariants import CompleteIntersection, complex_betti
from .profile import RealVarietyProfile, validate
from .smith import SimplicialInvolution


def hexagon(involution: str = "antipodal") -> SimplicialInvolution:
    """Hexagonal circle; ``antipodal`` (i -> i+3), ``reflection`` (i -> -i) or ``identity``."""
    facets = [(i, (i + 1) % 6) for i in range(6)]
    maps = {
        "antipodal": [(i + 3) % 6 for i in range(6)],
        "reflection": [(-i) % 6 for i in range(6)],
        "identity": list(range(6)),
    }
    return SimplicialInvolution.build(6, facets, maps[involution])


def octahedron(involution: str = "antipodal") -> SimplicialInvolution:
    """Boundary of the octahedron; vertex pairs (0,1), (2,3), (4,5) are opposite.

    ``reflection`` swaps the poles 4 and 5 and fixes the equatorial square.
    """
    facets = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    maps = {
        "antipodal": [1, 0, 3, 2, 5, 4],
        "reflection": [0, 1, 2, 3, 5, 4],
        "identity": list(range(6)),
    }
    return SimplicialInvolution.build(6, facets, maps[involution])


def segment_swap() -> SimplicialInvolution:
    return SimplicialInvolution.build(2, [(0, 1)], [1, 0])


def torus7(involution: str = "identity") -> SimplicialInvolution:
    """Seven-vertex (Moebius) torus; ``negation`` is i -> -i mod 7."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    maps = {"identity": list(range(7)), "negation": [(-i) % 7 for i in range(7)]}
    return SimplicialInvolution.build(7, facets, maps[involution])


def grid_torus_reflection() -> SimplicialInvolution:
    """A 4x3 grid torus whose reflection x -> -x fixes the circles x = 0 and x = 2.

    Diagonals alternate between columns so the triangulation is symmetric.
    """
    W, H = 4, 3

    def v(x: int, y: int) -> int:
        return (x % W) * H + (y % H)

    facets = []
    for x in range(W):
        for y in range(H):
            if x % 2 == 0:
                facets.append((v(x, y), v(x + 1, y), v(x + 1, y + 1)))
                facets.append((v(x, y), v(x, y + 1), v(x + 1, y + 1)))
            else:
                facets.append((v(x, y + 1), v(x + 1, y), v(x + 1, y + 1)))
                facets.append((v(x, y), v(x, y + 1), v(x + 1, y)))
    inv = [0] * (W * H)
    for x in range(W):
        for y in range(H):
            inv[v(x, y)] = v(-x, y)
    return SimplicialInvolution.build(W * H, facets, inv)


def identity_on(inv: SimplicialInvolution) -> SimplicialInvolution:
    return SimplicialInvolution(inv.complex, tuple(range(inv.vertex_count)))


# randomized families -------------------------------------------------------

def _random_facets(rng: random.Random, vertices: list[int], max_dim: int) -> list[tuple[int, ...]]:
    count = rng.randint(1, max(1, len(vertices)))
    facets = []
    for _ in range(count):
        size = rng.randint(1, min(max_dim + 1, len(vertices)))
        facets.append(tuple(sorted(rng.sample(vertices, size))))
    return facets


def random_double(rng: random.Random, max_vertices: int = 12, max_dim: int = 2) -> SimplicialInvolution:
    """Two copies of a random complex glued along the full subcomplex on a random vertex set."""
    m = rng.randint(2, max(2, (max_vertices + 1) // 2))
    base = list(range(m))
    facets = _random_facets(rng, base, max_dim)
    fixed = set(rng.sample(base, rng.randint(0, m)))
    free = [v for v in base if v not in fixed]
    twin = {v: m + i for i, v in enumerate(free)}
    n = m + len(free)
    inv = list(range(n))
    for v, w in twin.items():
        inv[v], inv[w] = w, v
    doubled = facets + [tuple(sorted(twin.get(v, v) for v in f)) for f in facets]
    return SimplicialInvolution.build(n, doubled, inv)


def cone(inv: SimplicialInvolution) -> SimplicialInvolution:
    """Cone with a fixed apex."""
    n = inv.vertex_count
    facets = [f + (n,) for f in inv.facets] or [(n,)]
    return SimplicialInvolution.build(n + 1, facets, list(inv.involution) + [n])


def suspension_swap(inv: SimplicialInvolution) -> SimplicialInvolution:
    """Suspension whose two apexes are exchanged."""
    n = inv.vertex_count
    facets = [f + (a,) for f in inv.facets for a in (n, n + 1)] or [(n,), (n + 1,)]
    return SimplicialInvolution.build(n + 2, facets, list(inv.involution) + [n + 1, n])


def random_symmetrized(rng: random.Random, max_vertices: int = 12, max_dim: int = 2) -> SimplicialInvolution:
    """Random facets closed under a random product of disjoint vertex swaps."""
    n = rng.randint(2, max_vertices)
    verts = list(range(n))
    rng.shuffle(verts)
    inv = list(range(n))
    for a, b in zip(verts[0::2], verts[1::2]):
        if rng.random() < 0.6:
            inv[a], inv[b] = b, a
    facets = _random_facets(rng, list(range(n)), max_dim)
    facets += [tuple(sorted(inv[v] for v in f)) for f in facets]
    return SimplicialInvolution.build(n, facets, inv)


def random_involution(rng: random.Random) -> SimplicialInvolution:
    """One draw from the mixed fuzz distribution (at most 12 vertices)."""
    kind = rng.choice(["double", "double", "cone", "suspension", "symmetrized", "identity"])
    if kind == "double":
        return random_double(rng)
    if kind == "cone":
        return cone(random_double(rng, max_vertices=11))
    if kind == "suspension":
        return suspension_swap(random_double(rng, max_vertices=10, max_dim=1))
    if kind == "symmetrized":
        return random_symmetrized(rng)
    return identity_on(random_double(rng))


# -- random real variety profiles ---------------------------------------------

def _split(rng, total, parts):
    """Random composition of ``total`` into ``parts`` positive integers."""
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def _with_spheres(n, aggregate, rng):
    """Write a palindromic aggregate vector as a main component plus spheres."""
    r = rng.randint(1, aggregate[0])
    main = list(aggregate)
    main[0] -= r - 1
    main[n] -= r - 1
    sphere = tuple(1 if i in (0, n) else 0 for i in range(n + 1))
    return [tuple(main)] + [sphere] * (r - 1)


def random_real_vector(rng, n, total, low_min=1):
    """Palindromic length n+1 vector with the given sum, or None."""
    if n % 2:
        half = (n + 1) // 2
        if total % 2 or total // 2 < half * low_min:
            return None
        h = _split(rng, total // 2, half)
        return tuple(h + h[::-1])
    k = n // 2
    mid_min = low_min
    for _ in range(20):
        # choose the middle entry with the right parity, then the rest
        room = total - 2 * k * low_min
        if room < mid_min:
            return None
        mid = rng.randint(mid_min, room)
        if (total - mid) % 2:
            continue
        rest = (total - mid) // 2
        if k == 0:
            return (mid,) if rest == 0 else None
        if rest < k:
            continue
        h = _split(rng, rest, k)
        return tuple(h + [mid] + h[::-1])
    return None


CI_POOL = [
    CompleteIntersection(N, ds)
    for N, ds in [
        (2, ()), (3, (2,)), (3, (3,)), (3, (4,)), (4, (2, 2)), (4, (2,)), (4, (3,)), (5, (2, 3)),
        (5, (2, 2)), (5, (3,)), (5, (2,)), (6, (2, 2)), (6, (3,)), (6, (2,)), (7, (2,)), (7, (3,)),
        (6, (2, 2, 2)), (4, (4,)), (5, (4,)), (8, (2,)), (7, (2, 2)),
    ]
]


def random_maximal_ci_profile(rng):
    """A validated maximal complete-intersection profile (rejection sampling)."""
    while True:
        ci = rng.choice(CI_POOL)
        b = complex_betti(ci)
        real = random_real_vector(rng, ci.n, sum(b))
        if real is None:
            continue
        comps = _with_spheres(ci.n, real, rng)
        p = RealVarietyProfile(ci.n, b, comps, True, ci, not any(b[1::2]), True)
        if not validate(p):
            return p


def random_maximal_profile(rng, n):
    """A validated maximal profile with no complete-intersection flag."""
    while True:
        total = rng.randint(n + 1, 6 * (n + 1))
        real = random_real_vector(rng, n, total)
        if real is None:
            continue
        inner = [rng.randint(0, 3) for _ in range(n - 1)]
        side = 2 + 2 * sum(inner)
        mid = total - side
        if mid < 0:
            continue
        b = tuple([1] + inner + [mid] + inner[::-1] + [1])
        comps = _with_spheres(n, real, rng)
        p = RealVarietyProfile(n, b, comps, True)
        if not validate(p):
            return p
