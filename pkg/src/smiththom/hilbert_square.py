"""Betti numbers, ranks and deficiency of the Hilbert square of a real variety.

X^[2](R) is cut into pieces: the main component, glued from H_0 (coming
from X/conj) and H_1..H_r (symmetric squares of the real components with
the diagonal blown up) along E(R) = P(T*X(R)), plus the extra components
F_s x F_t for s < t.  The functions here evaluate closed forms for the
Betti numbers of each piece and for the Mayer-Vietoris ranks, and
assemble them into the deficiency of X^[2].

Quantities that are a priori half-integers are carried doubled and only
halved after checking parity; an odd doubled value means the inputs are
inconsistent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional, Sequence

from .ci_invariants import d_of_n
from .errors import InconsistencyError, PreconditionError
from .profile import RealVarietyProfile, require_valid


def _half(doubled: int, what: str) -> int:
    if doubled % 2:
        raise InconsistencyError(f"{what} is not an integer ({doubled}/2)")
    return doubled // 2


def _at(v: Sequence[int], i: int) -> int:
    return v[i] if 0 <= i < len(v) else 0


def _require_maximal(p: RealVarietyProfile) -> None:
    require_valid(p)
    if not p.maximal:
        raise PreconditionError("formula holds only for maximal profiles")


def _require_maximal_ci(p: RealVarietyProfile) -> None:
    _require_maximal(p)
    if p.complete_intersection is None:
        raise PreconditionError("formula holds only for complete intersections")


# -- Euler characteristic and complex total ---------------------------------

def euler_char_square_real(p: RealVarietyProfile, chi_real: Optional[int] = None) -> int:
    require_valid(p)
    derived = p.chi_real if p.n % 2 == 0 else 0
    if chi_real is not None and chi_real != derived:
        raise PreconditionError(f"supplied chi(X(R)) = {chi_real} but the profile gives {derived}")
    doubled = p.beta_star - 2 * p.beta_odd + derived * derived - 2 * derived
    return _half(doubled, "chi(X^[2](R))")


def betti_total_square_complex(n: int, b: Sequence[int], torsion2_free: bool) -> tuple[int, bool]:
    """Total Betti number of X^[2]; a lower bound unless H_*(X; Z) has no 2-torsion."""
    if len(b) != 2 * n + 1:
        raise PreconditionError(f"expected {2 * n + 1} Betti numbers, got {len(b)}")
    bs = sum(b)
    b_odd = sum(b[1::2])
    return bs * (bs - 1) // 2 + n * bs - b_odd, bool(torsion2_free)


# -- strata ------------------------------------------------------------------

def betti_H0(p: RealVarietyProfile) -> tuple[tuple[int, ...], int]:
    """Degrees 0..n-1 of the piece coming from X/conj, and its total."""
    _require_maximal(p)
    n, b = p.n, p.complex_betti
    vec = tuple(sum(b[2 * n - k:]) for k in range(n))
    return vec, _half(n * p.beta_star, "total of H_0")


def betti_Hi(F: Sequence[int], n: int) -> tuple[tuple[int, ...], int]:
    """Symmetric square of one real component F, diagonal blown up."""
    F = tuple(F)
    if n < 1:
        raise PreconditionError("components must have dimension n >= 1")
    if len(F) != n + 1 or F != F[::-1] or F[0] != 1:
        raise PreconditionError(f"component vector {F} must be palindromic of length {n + 1} with beta_0 = 1")
    vec = []
    for deg in range(2 * n + 1):
        k = deg // 2
        pairs = sum(_at(F, a) * _at(F, deg - a) for a in range(0, (deg + 1) // 2) if deg - a > a)
        if deg % 2 == 0:
            diag = _half(_at(F, k) * (_at(F, k) - 1), "diagonal term")
            tail = sum(_at(F, l) for l in range(max(0, deg - n + 1), k + 1))
            vec.append(pairs + diag + tail)
        else:
            tail = sum(_at(F, l) for l in range(max(0, deg + 1 - n), k + 1))
            vec.append(pairs + tail)
    fs = sum(F)
    total = _half(fs * (fs - 1), "pair count") + sum((n - k) * x for k, x in enumerate(F))
    if sum(vec) != total:
        raise InconsistencyError(f"per-degree sum {sum(vec)} differs from closed total {total}")
    return tuple(vec), total


def betti_ER(p: RealVarietyProfile) -> tuple[tuple[int, ...], int]:
    """Projectivized tangent bundle of X(R): a P^{n-1}-bundle over X(R)."""
    n, beta = p.n, p.real_betti
    vec = tuple(sum(_at(beta, k - j) for j in range(n)) for k in range(2 * n))
    total = sum(vec)
    if total != n * sum(beta):
        raise InconsistencyError("E(R) total differs from n * beta_*(X(R))")
    return vec, total


def betti_extra(p: RealVarietyProfile, k: int) -> int:
    comps = p.real_components
    return sum(
        _at(comps[s], i) * _at(comps[t], k - i)
        for s in range(len(comps))
        for t in range(s + 1, len(comps))
        for i in range(k + 1)
    )


@dataclass(frozen=True)
class StrataReport:
    betti_H0: tuple[int, ...]
    total_H0: int
    betti_Hi: tuple[tuple[int, ...], ...]
    totals_Hi: tuple[int, ...]
    betti_ER: tuple[int, ...]
    total_ER: int
    betti_extra: tuple[int, ...]

    def as_dict(self) -> dict[str, Any]:
        return {
            "betti_H0": list(self.betti_H0),
            "total_H0": self.total_H0,
            "betti_Hi": [list(v) for v in self.betti_Hi],
            "totals_Hi": list(self.totals_Hi),
            "betti_ER": list(self.betti_ER),
            "total_ER": self.total_ER,
            "betti_extra": list(self.betti_extra),
        }


def strata_report(p: RealVarietyProfile) -> StrataReport:
    _require_maximal(p)
    n = p.n
    h0, t0 = betti_H0(p)
    his = [betti_Hi(F, n) for F in p.real_components]
    er, ter = betti_ER(p)
    # totals over the symmetric squares, doubled:
    # sum_i beta_*(F_i)^2 + (n - 1) beta_*
    doubled = sum(sum(F) ** 2 for F in p.real_components) + (n - 1) * p.beta_star
    if 2 * sum(t for _, t in his) != doubled:
        raise InconsistencyError("totals of the symmetric-square pieces do not add up")
    if ter != n * p.beta_star:
        raise InconsistencyError("E(R) total differs from n * beta_*")
    return StrataReport(
        h0, t0,
        tuple(v for v, _ in his), tuple(t for _, t in his),
        er, ter,
        tuple(betti_extra(p, k) for k in range(2 * n + 1)),
    )


# -- ranks -----------------------------------------------------------------

def rank_inc0(k: int, p: RealVarietyProfile) -> int:
    _require_maximal(p)
    if not 0 <= k < p.n:
        raise PreconditionError(f"rank of inc_0 is known only for 0 <= k < {p.n}, got {k}")
    return sum(p.complex_betti[: k + 1])


def rank_inc(m: int, p: RealVarietyProfile) -> int:
    n = p.n
    if not 0 <= m <= 2 * n:
        raise PreconditionError(f"degree must lie in [0, {2 * n}], got {m}")
    beta = p.real_betti
    return sum(beta[k] for k in range(max(0, m - n + 1), m // 2 + 1))


def rank_mu(k: int, p: RealVarietyProfile) -> int:
    _require_maximal_ci(p)
    if not 0 <= k <= p.n - 1:
        raise PreconditionError(f"rank of mu is known only for 0 <= k <= {p.n - 1}, got {k}")
    return sum(p.real_betti[: k // 2 + 1])


# -- per-degree Betti numbers of X^[2](R) ----------------------------------

def proven_degrees(n: int) -> list[int]:
    """Degrees of X^[2](R) with a closed formula: even ones below n for odd
    n, odd ones below n for even n."""
    return list(range(0, n, 2)) if n % 2 else list(range(1, n, 2))


def betti_square_real(p: RealVarietyProfile, k: int) -> int:
    _require_maximal_ci(p)
    n, beta = p.n, p.real_betti
    if k not in proven_degrees(n):
        raise PreconditionError(f"no closed formula for degree {k} when n = {n}")
    if n % 2:
        l = k // 2
        conv = sum(_at(beta, i) * _at(beta, k - i) for i in range(k + 1))
        doubled = (
            2 * (l + 1) + conv + 2 * sum(beta[:k]) - _at(beta, l) - 2 * sum(beta[:l])
        )
        return _half(doubled, f"beta_{k}(X^[2](R))")
    l = (k + 1) // 2
    pairs = sum(_at(beta, a) * _at(beta, k - a) for a in range(l))
    return l + pairs + sum(beta[: k]) - sum(beta[:l])


def betti_square_real_mv(p: RealVarietyProfile, k: int) -> int:
    """Same degrees as betti_square_real, assembled from the Mayer-Vietoris
    sequence of the main component plus the extra components."""
    _require_maximal_ci(p)
    n = p.n
    if k not in proven_degrees(n):
        raise PreconditionError(f"no closed formula for degree {k} when n = {n}")
    h0, _ = betti_H0(p)
    er, _ = betti_ER(p)
    pieces = sum(betti_Hi(F, n)[0][k] for F in p.real_components)
    prev = rank_mu(k - 1, p) if k >= 1 else 0
    e_prev = er[k - 1] if k >= 1 else 0
    return betti_extra(p, k) + h0[k] + pieces + e_prev - rank_mu(k, p) - prev


# -- deficiency ------------------------------------------------------------

class Verdict(str, Enum):
    MAXIMAL = "maximal"
    NOT_MAXIMAL = "not_maximal"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class DeficiencyReport:
    deficiency: int
    per_degree_real_betti: dict[int, int]
    total_square_complex: int
    total_square_complex_exact: bool
    chi_square_real: int
    low_betti_all_one: bool
    verdict: Verdict
    reasons: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict[str, Any]:
        return {
            "deficiency": self.deficiency,
            "per_degree_real_betti": {str(k): v for k, v in sorted(self.per_degree_real_betti.items())},
            "total_square_complex": self.total_square_complex,
            "total_square_complex_exact": self.total_square_complex_exact,
            "chi_square_real": self.chi_square_real,
            "low_betti_all_one": self.low_betti_all_one,
            "verdict": self.verdict.value,
            "reasons": list(self.reasons),
        }


def deficiency_formula(p: RealVarietyProfile) -> int:
    n, beta = p.n, p.real_betti
    nested = sum(sum(beta[:l]) for l in range(1, n // 2 + 1))
    return 4 * (nested - d_of_n(n))


def deficiency_square(p: RealVarietyProfile) -> DeficiencyReport:
    """Deficiency of X^[2] for a maximal complete intersection X, n >= 2.

    Computed three ways which must agree: the closed formula, the total
    Betti numbers (complex total minus the real total rebuilt from the
    per-degree values, Poincare duality and the Euler characteristic), and
    the criterion "beta_i(X(R)) = 1 for i < n/2 - 1" for vanishing.
    """
    _require_maximal_ci(p)
    n = p.n
    if n < 2:
        raise PreconditionError("the deficiency formula needs n >= 2")
    defi = deficiency_formula(p)
    if defi < 0:
        raise InconsistencyError(f"negative deficiency {defi}: the profile cannot be realized")

    per_degree = {k: betti_square_real(p, k) for k in proven_degrees(n)}
    for k, v in per_degree.items():
        if betti_square_real_mv(p, k) != v:
            raise InconsistencyError(f"degree {k}: Mayer-Vietoris assembly disagrees with the closed form")
    chi = euler_char_square_real(p)
    total_c, exact = betti_total_square_complex(n, p.complex_betti, True)
    # Poincare duality pairs the listed degrees with their complements, and
    # the remaining parity is recovered from chi
    paired = 2 * sum(per_degree.values())
    real_total = 2 * paired - chi if n % 2 else 2 * paired + chi
    if total_c - real_total != defi:
        raise InconsistencyError(
            f"closed formula gives {defi}, Betti totals give {total_c - real_total}"
        )
    low_ones = all(b == 1 for b in p.real_betti[: n // 2])
    if low_ones != (defi == 0):
        raise InconsistencyError("vanishing criterion disagrees with the closed formula")
    if defi % 4:
        raise InconsistencyError(f"deficiency {defi} is not divisible by 4")

    verdict = Verdict.MAXIMAL if defi == 0 else Verdict.NOT_MAXIMAL
    reason = "ci_deficiency_zero" if defi == 0 else "ci_deficiency_positive"
    return DeficiencyReport(defi, per_degree, total_c, exact, chi, low_ones, verdict, (reason,))


def deficiency_via_mu(rank_mu_total: int, n: int, beta_star: int, beta_odd: int) -> int:
    """Deficiency from the total Mayer-Vietoris rank: 2 rank - n b_* - b_odd."""
    return 2 * rank_mu_total - n * beta_star - beta_odd


def implied_rank_mu(defi: int, n: int, beta_star: int, beta_odd: int) -> int:
    return _half(defi + n * beta_star + beta_odd, "implied rank of mu")


# -- verdicts --------------------------------------------------------------

@dataclass(frozen=True)
class VerdictResult:
    verdict: Verdict
    reasons: tuple[str, ...]
    deficiency: Optional[int] = None


def maximality_verdict(p: RealVarietyProfile) -> VerdictResult:
    require_valid(p)
    n = p.n
    if n >= 2:
        if not p.real_components:
            return VerdictResult(Verdict.NOT_MAXIMAL, ("empty_real_locus",))
        if not p.maximal:
            return VerdictResult(Verdict.NOT_MAXIMAL, ("base_not_maximal",))
        if p.complete_intersection is not None:
            r = deficiency_square(p)
            return VerdictResult(r.verdict, r.reasons, r.deficiency)
    real = p.real_betti
    matches = all(real[k] == p.complex_betti[2 * k] for k in range(n + 1))
    if n >= 2 and p.h_odd_zero and not matches:
        return VerdictResult(Verdict.NOT_MAXIMAL, ("real_betti_mismatch",))
    if p.h_odd_zero and p.maximal and matches and p.real_algebraic_generation:
        return VerdictResult(Verdict.MAXIMAL, ("algebraic_generation",))
    return VerdictResult(Verdict.UNDETERMINED, ("no_criterion_applies",))


def cubic_fano_deficiency(n: int, defi_X: int, defi_square: int) -> int:
    """Deficiency of the Fano variety of lines of a cubic of dimension n."""
    if n < 1 or defi_X < 0 or defi_square < 0:
        raise PreconditionError("need n >= 1 and nonnegative deficiencies")
    out = defi_square - (n + 1) * defi_X
    if out < 0:
        raise InconsistencyError(f"deficiency of F(X) would be {out}")
    return out


def square_report(p: RealVarietyProfile) -> dict[str, Any]:
    """JSON-ready summary used by the command line."""
    v = maximality_verdict(p)
    out: dict[str, Any] = {
        "deficiency": v.deficiency,
        "verdict": v.verdict.value,
        "reasons": list(v.reasons),
        "strata": None,
        "per_degree": None,
    }
    if p.maximal and p.n >= 1:
        out["strata"] = strata_report(p).as_dict()
    if p.maximal and p.complete_intersection is not None and p.n >= 2:
        d = deficiency_square(p)
        out["per_degree"] = {str(k): x for k, x in sorted(d.per_degree_real_betti.items())}
    return out
