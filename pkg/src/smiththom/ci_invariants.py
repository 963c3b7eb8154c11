"""Topological invariants of nonsingular complete intersections in P^N.

Everything is exact integer arithmetic on truncated power series.  Only
the middle cohomology of a complete intersection is interesting; outside
the middle degree it looks like projective space (Lefschetz).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Sequence

from .errors import PreconditionError, StructureError


@dataclass(frozen=True)
class CompleteIntersection:
    """X in P^N cut out by hypersurfaces of the given degrees.

    Degree-1 factors are absorbed into the ambient space on construction,
    so ``CompleteIntersection(4, (1, 3)) == CompleteIntersection(3, (3,))``.
    """

    ambient_dim: int
    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        degrees = tuple(int(d) for d in self.degrees)
        if any(d < 1 for d in degrees):
            raise StructureError(f"degrees must be >= 1, got {degrees}")
        if self.ambient_dim < 0:
            raise StructureError("ambient dimension must be nonnegative")
        if len(degrees) > self.ambient_dim:
            raise StructureError(f"{len(degrees)} equations in P^{self.ambient_dim}")
        ones = degrees.count(1)
        object.__setattr__(self, "ambient_dim", self.ambient_dim - ones)
        object.__setattr__(self, "degrees", tuple(sorted(d for d in degrees if d != 1)))

    @property
    def n(self) -> int:
        return self.ambient_dim - len(self.degrees)

    @property
    def codim(self) -> int:
        return len(self.degrees)

    def label(self) -> str:
        body = ",".join(map(str, self.degrees)) or "linear"
        return f"P^{self.ambient_dim}({body})"


def _series_inverse(coeffs: Sequence[int], order: int) -> list[int]:
    """1/f mod h^(order+1) for f with constant term +-1."""
    c0 = coeffs[0]
    if c0 not in (1, -1):
        raise ValueError("constant term must be a unit")
    inv = [0] * (order + 1)
    inv[0] = c0
    for k in range(1, order + 1):
        s = sum(coeffs[i] * inv[k - i] for i in range(1, min(k, len(coeffs) - 1) + 1))
        inv[k] = -s * c0
    return inv


def _mul(f: Sequence[int], g: Sequence[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, a in enumerate(f[: order + 1]):
        if a:
            for j, b in enumerate(g[: order + 1 - i]):
                out[i + j] += a * b
    return out


def euler_characteristic(ci: CompleteIntersection) -> int:
    # c(TX) = (1+h)^(N+1) / prod(1 + d h); integrate c_n against deg X = prod d
    N, n = ci.ambient_dim, ci.n
    chern = [comb(N + 1, k) for k in range(n + 1)]
    for d in ci.degrees:
        chern = _mul(chern, _series_inverse([1, d], n), n)
    return chern[n] * prod(ci.degrees)


def complex_betti(ci: CompleteIntersection) -> tuple[int, ...]:
    n = ci.n
    if n < 1:
        raise PreconditionError("complex_betti needs dimension n >= 1")
    b = [1 if k % 2 == 0 else 0 for k in range(2 * n + 1)]
    b[n] = 0
    rest = sum((-1) ** k * x for k, x in enumerate(b))
    b[n] = (-1) ** n * (euler_characteristic(ci) - rest)
    return tuple(b)


# -- Hodge numbers -----------------------------------------------------------
#
# Bivariate series are dicts {(i, j): coeff} for a^i b^j, truncated at total
# degree ``order``.  The generating function used is
#
#   sum_{p,q} h^{p,q}(X) a^p b^q  (n = p + q)
#     = [prod_j N_j/D_j - 1] / ((1+a)(1+b)) + 1/(1 - ab)
#
# with N_j = (1+a)^d - (1+b)^d and D_j = a(1+b)^d - b(1+a)^d.  Both are
# divisible by (a - b); after dividing, D_j has constant term 1.

Series = dict


def _bmul(f: Series, g: Series, order: int) -> Series:
    out: Series = {}
    for (i, j), x in f.items():
        for (k, l), y in g.items():
            if i + j + k + l <= order:
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _binv(f: Series, order: int) -> Series:
    """Inverse of a series with constant term 1."""
    if f.get((0, 0)) != 1:
        raise ValueError("constant term must be 1")
    g = {k: -v for k, v in f.items() if k != (0, 0)}
    # 1/(1 - g) = sum g^m; g has no constant term so m <= order suffices
    out: Series = {(0, 0): 1}
    power: Series = {(0, 0): 1}
    for _ in range(order):
        power = _bmul(power, g, order)
        if not power:
            break
        for k, v in power.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _xy_power(k: int, m: int) -> Series:
    """(1+a)^k (1+b)^m."""
    return {(i, j): comb(k, i) * comb(m, j) for i in range(k + 1) for j in range(m + 1)}


def _add(f: Series, g: Series, sign: int = 1) -> Series:
    out = dict(f)
    for k, v in g.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def _trunc(f: Series, order: int) -> Series:
    return {k: v for k, v in f.items() if k[0] + k[1] <= order}


def _factor(d: int, order: int) -> Series:
    """N/D for one hypersurface of degree d, both divided by (a - b)."""
    num: Series = {}
    for k in range(d):
        num = _add(num, _xy_power(k, d - 1 - k))
    den = dict(num)
    for k in range(d - 1):
        den = _add(den, _xy_power(k + 1, d - 1 - k), -1)
    return _bmul(_trunc(num, order), _binv(_trunc(den, order), order), order)


def _middle_row(ci: CompleteIntersection) -> list[int]:
    n = ci.n
    total: Series = {(0, 0): 1}
    for d in ci.degrees:
        total = _bmul(total, _factor(d, n), n)
    total = _add(total, {(0, 0): 1}, -1)
    alternating = {(i, 0): (-1) ** i for i in range(n + 1)}
    total = _bmul(total, alternating, n)
    total = _bmul(total, {(0, j): (-1) ** j for j in range(n + 1)}, n)
    total = _add(total, {(i, i): 1 for i in range(n // 2 + 1)})
    return [total.get((p, n - p), 0) for p in range(n + 1)]


@dataclass(frozen=True)
class HodgeDiamond:
    n: int
    entries: tuple[tuple[int, ...], ...]  # entries[p][q] = h^{p,q}

    def h(self, p: int, q: int) -> int:
        if 0 <= p <= self.n and 0 <= q <= self.n:
            return self.entries[p][q]
        return 0

    def middle_row(self) -> tuple[int, ...]:
        return tuple(self.entries[p][self.n - p] for p in range(self.n + 1))

    def betti(self) -> tuple[int, ...]:
        return tuple(
            sum(self.h(p, k - p) for p in range(k + 1)) for k in range(2 * self.n + 1)
        )


def hodge_numbers(ci: CompleteIntersection) -> HodgeDiamond:
    n = ci.n
    if n < 1:
        raise PreconditionError("hodge_numbers needs dimension n >= 1")
    middle = _middle_row(ci)
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        rows[p][p] = 1
        rows[p][n - p] = middle[p]
    return HodgeDiamond(n, tuple(tuple(r) for r in rows))


def hkk_equals_b2k(ci: CompleteIntersection) -> bool:
    n = ci.n
    if n < 2 or n % 2:
        raise PreconditionError(f"needs even dimension n >= 2, got n = {n}")
    k = n // 2
    return hodge_numbers(ci).h(k, k) == complex_betti(ci)[n]


def d_of_n(n: int) -> int:
    if n < 2:
        raise PreconditionError(f"d(n) is defined for n >= 2, got {n}")
    return n * (n + 2) // 8 if n % 2 == 0 else (n * n - 1) // 8


def conjugation_trace(ci: CompleteIntersection, real_betti: Sequence[int]) -> int:
    """Trace of complex conjugation on H^n(X; Q) for even n.

    Off the middle degree H^{2i} is spanned by h^i and conj acts by (-1)^i,
    so the Lefschetz fixed point formula leaves the middle trace as
    chi(X(R)) - sum_{i != n/2} (-1)^i.
    """
    n = ci.n
    if n < 2 or n % 2:
        raise PreconditionError(f"needs even dimension n >= 2, got n = {n}")
    if len(real_betti) != n + 1:
        raise PreconditionError(f"real Betti vector must have length {n + 1}")
    chi = sum((-1) ** i * b for i, b in enumerate(real_betti))
    return chi - sum((-1) ** i for i in range(n + 1) if 2 * i != n)


def trace_admissible(ci: CompleteIntersection, real_betti: Sequence[int]) -> bool:
    """Whether the middle trace fits the real part of H^{k,k}.

    Conjugation swaps H^{p,q} and H^{q,p}, so only H^{k,k} contributes to
    the trace: |tr| <= h^{k,k}, and tr = b_n mod 2.
    """
    t = conjugation_trace(ci, real_betti)
    n = ci.n
    hkk = hodge_numbers(ci).h(n // 2, n // 2)
    return abs(t) <= hkk and (t - complex_betti(ci)[n]) % 2 == 0
