"""Cohomological profile of a real variety and its consistency checks.

A profile records the F2 Betti numbers of X(C), one Betti vector per
connected component of X(R), and a handful of structural flags.  The
real Betti numbers used by every formula downstream are the sums over
components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence

from .ci_invariants import CompleteIntersection, complex_betti, trace_admissible
from .errors import PreconditionError, StructureError


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class RealVarietyProfile:
    n: int
    complex_betti: tuple[int, ...]
    real_components: tuple[tuple[int, ...], ...] = ()
    maximal: bool = False
    complete_intersection: Optional[CompleteIntersection] = None
    h_odd_zero: bool = False
    torsion2_free: bool = False
    real_algebraic_generation: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "complex_betti", tuple(self.complex_betti))
        object.__setattr__(self, "real_components", tuple(tuple(c) for c in self.real_components))

    # aggregate numbers ----------------------------------------------------
    @property
    def real_betti(self) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for comp in self.real_components:
            for i, b in enumerate(comp[: self.n + 1]):
                out[i] += b
        return tuple(out)

    @property
    def beta_star(self) -> int:
        return sum(self.complex_betti)

    @property
    def beta_odd(self) -> int:
        return sum(self.complex_betti[1::2])

    @property
    def real_total(self) -> int:
        return sum(self.real_betti)

    @property
    def real_beta_odd(self) -> int:
        return sum(self.real_betti[1::2])

    @property
    def real_beta_even(self) -> int:
        return sum(self.real_betti[0::2])

    @property
    def chi_real(self) -> int:
        return self.real_beta_even - self.real_beta_odd

    @property
    def component_count(self) -> int:
        return len(self.real_components)

    # JSON ---------------------------------------------------------------
    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RealVarietyProfile":
        try:
            flags = data.get("flags") or {}
            ci = flags.get("ci")
            return cls(
                n=_count(data["n"], "n"),
                complex_betti=tuple(_count(x, "complex_betti") for x in data["complex_betti"]),
                real_components=tuple(
                    tuple(_count(x, "real_components") for x in comp) for comp in data.get("real_components", [])
                ),
                maximal=bool(flags.get("maximal", False)),
                complete_intersection=(
                    CompleteIntersection(_count(ci["ambient"], "ambient"), tuple(ci["degrees"])) if ci else None
                ),
                h_odd_zero=bool(flags.get("h_odd_zero", False)),
                torsion2_free=bool(flags.get("torsion2_free", False)),
                real_algebraic_generation=bool(flags.get("real_algebraic_generation", False)),
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise StructureError(f"malformed profile: {exc!r}") from exc

    def to_dict(self) -> dict[str, Any]:
        ci = self.complete_intersection
        return {
            "n": self.n,
            "complex_betti": list(self.complex_betti),
            "real_components": [list(c) for c in self.real_components],
            "flags": {
                "maximal": self.maximal,
                "ci": {"ambient": ci.ambient_dim, "degrees": list(ci.degrees)} if ci else None,
                "h_odd_zero": self.h_odd_zero,
                "torsion2_free": self.torsion2_free,
                "real_algebraic_generation": self.real_algebraic_generation,
            },
        }


def _count(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise StructureError(f"{what}: expected an integer, got {x!r}")
    return x


def _palindromic(v: Sequence[int]) -> bool:
    return tuple(v) == tuple(reversed(v))


def validate(p: RealVarietyProfile) -> list[Violation]:
    out: list[Violation] = []
    bad = out.append
    n, b = p.n, p.complex_betti
    if n < 0:
        return [Violation("dimension", f"n must be nonnegative, got {n}")]
    if len(b) != 2 * n + 1:
        bad(Violation("complex_betti_length", f"expected {2 * n + 1} entries, got {len(b)}"))
    if any(x < 0 for x in b):
        bad(Violation("negative_betti", "complex Betti numbers must be nonnegative"))
    if b and (b[0] != 1 or b[-1] != 1):
        bad(Violation("complex_not_connected", f"need beta_0 = beta_2n = 1, got {b[0]} and {b[-1]}"))
    if not _palindromic(b):
        bad(Violation("complex_poincare_duality", f"{b} is not palindromic"))

    for i, comp in enumerate(p.real_components):
        if len(comp) != n + 1:
            bad(Violation("component_length", f"component {i} has {len(comp)} entries, expected {n + 1}"))
            continue
        if any(x < 0 for x in comp):
            bad(Violation("negative_betti", f"component {i} has a negative entry"))
        if comp[0] != 1:
            bad(Violation("component_not_connected", f"component {i} has beta_0 = {comp[0]}"))
        if not _palindromic(comp):
            bad(Violation("component_poincare_duality", f"component {i} {comp} is not palindromic"))

    real_total = sum(sum(c) for c in p.real_components)
    if real_total > p.beta_star:
        bad(Violation("smith_inequality", f"real total {real_total} exceeds complex total {p.beta_star}"))
    if p.maximal != (real_total == p.beta_star):
        bad(Violation(
            "maximal_flag",
            f"maximal flag is {p.maximal} but real total {real_total} vs complex total {p.beta_star}",
        ))

    if p.h_odd_zero:
        if any(b[1::2]):
            bad(Violation("h_odd_zero", "odd-degree complex Betti numbers are not all zero"))
        if not p.torsion2_free:
            bad(Violation("torsion_flag", "h_odd_zero implies torsion2_free"))

    ci = p.complete_intersection
    if ci is not None:
        if ci.n != n:
            bad(Violation("ci_mismatch", f"{ci.label()} has dimension {ci.n}, profile says {n}"))
        elif n >= 1 and complex_betti(ci) != b:
            bad(Violation("ci_mismatch", f"{ci.label()} has Betti numbers {complex_betti(ci)}"))
        elif not out:
            real = p.real_betti
            low = [r for r in range(n // 2 + 1) if real[r] < 1]
            if p.maximal and low:
                bad(Violation("hyperplane_bound", f"beta_r(X(R)) = 0 for r in {low}"))
            if n >= 2 and n % 2 == 0 and not trace_admissible(ci, real):
                bad(Violation(
                    "lefschetz_trace",
                    "Euler characteristic of X(R) is incompatible with h^{k,k} via the trace formula",
                ))
    return out


def require_valid(p: RealVarietyProfile) -> None:
    problems = validate(p)
    if problems:
        raise PreconditionError("invalid profile: " + "; ".join(map(str, problems)))


def check_betti_identities(p: RealVarietyProfile) -> bool:
    """The quadratic identities a maximal real Betti vector must satisfy.

    All sums are taken over the aggregate real Betti vector, and compared
    after multiplying through by 4 so that nothing is halved.
    """
    require_valid(p)
    if not p.maximal:
        raise PreconditionError("identities hold only for maximal profiles")
    n, beta = p.n, p.real_betti
    bs = p.beta_star

    def at(i: int) -> int:
        return beta[i] if 0 <= i <= n else 0

    if n % 2:
        top = (n - 1) // 2
        squares = sum(at(i) * at(2 * l - i) for l in range(top + 1) for i in range(2 * l + 1))
        low = sum(at(l) for l in range(top + 1))
        nested = sum(at(i) for l in range(top + 1) for i in range(2 * l))
        return 4 * squares == bs * bs and 2 * low == bs and 4 * nested == (n - 1) * bs
    top = n // 2
    mixed = sum(at(a) * at(2 * l - 1 - a) for l in range(1, top + 1) for a in range(l))
    nested = sum(at(i) for l in range(1, top + 1) for i in range(2 * l - 1))
    return (
        2 * mixed == p.real_beta_even * p.real_beta_odd
        and 4 * nested == n * bs - 2 * p.real_beta_odd
    )
