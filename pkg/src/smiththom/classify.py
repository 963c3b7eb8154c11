"""Scan even-dimensional complete intersections for h^{k,k} = b_{2k}.

If X^[2] is maximal then X(R) has beta_i = 1 below the middle, and X is
maximal, so the middle real Betti number must be b_{2k}.  The trace of
conjugation on H^{2k} then equals +-b_{2k}, which only fits inside
H^{k,k} when h^{k,k} = b_{2k}.  Each row records both the Hodge
comparison and that trace check; they must agree.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .ci_invariants import CompleteIntersection, complex_betti, hodge_numbers, trace_admissible
from .errors import InconsistencyError, PreconditionError

COLUMNS = ("ambient", "degrees", "n", "h_kk", "b_2k", "equal", "verdict")


@dataclass(frozen=True)
class ScanRange:
    max_dim: int
    max_codim: int
    max_degree: int

    def __post_init__(self) -> None:
        if min(self.max_dim, self.max_codim, self.max_degree) < 1:
            raise PreconditionError("all scan bounds must be >= 1")

    def instances(self) -> list[CompleteIntersection]:
        out = []
        for n in range(2, self.max_dim + 1, 2):
            for r in range(self.max_codim + 1):
                for degrees in combinations_with_replacement(range(2, self.max_degree + 1), r):
                    out.append(CompleteIntersection(n + r, degrees))
        return out


@dataclass(frozen=True)
class ScanRow:
    ambient: int
    degrees: tuple[int, ...]
    n: int
    h_kk: int
    b_2k: int
    equal: bool
    verdict: str

    @property
    def admits_maximal_square(self) -> bool:
        return self.equal


def lefschetz_trace_check(ci: CompleteIntersection, real_betti: Sequence[int]) -> bool:
    """True iff ``real_betti`` is a maximal real vector whose conjugation
    trace fits in H^{k,k}; for the vector forced by a maximal square this
    is exactly h^{k,k} = b_{2k}."""
    n = ci.n
    if n < 2 or n % 2:
        raise PreconditionError(f"needs even dimension n >= 2, got {n}")
    real = tuple(real_betti)
    k = n // 2
    if len(real) != n + 1 or real != real[::-1] or any(real[i] != 1 for i in range(k)):
        raise PreconditionError("real Betti vector must be palindromic with beta_i = 1 below the middle")
    if sum(real) != sum(complex_betti(ci)):
        return False
    return trace_admissible(ci, real)


def scan_row(ci: CompleteIntersection) -> ScanRow:
    n = ci.n
    k = n // 2
    h_kk = hodge_numbers(ci).h(k, k)
    b_2k = complex_betti(ci)[n]
    forced = tuple(b_2k if i == k else 1 for i in range(n + 1))
    trace_ok = lefschetz_trace_check(ci, forced)
    equal = h_kk == b_2k
    if trace_ok != equal:
        raise InconsistencyError(f"{ci.label()}: trace check and Hodge comparison disagree")
    verdict = "maximal_square_possible" if equal else "no_maximal_square"
    return ScanRow(ci.ambient_dim, ci.degrees, n, h_kk, b_2k, equal, verdict)


def scan(rng: ScanRange, workers: Optional[int] = None) -> list[ScanRow]:
    """Rows sorted by (n, degrees).  ``workers`` > 1 spreads rows over processes."""
    instances = rng.instances()
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(scan_row, instances, chunksize=8))
    else:
        rows = [scan_row(ci) for ci in instances]
    return sorted(rows, key=lambda r: (r.n, r.degrees))


def equality_rows(rows: Iterable[ScanRow]) -> list[ScanRow]:
    return [r for r in rows if r.equal]


def _row_dict(r: ScanRow) -> dict:
    d = asdict(r)
    d["degrees"] = list(r.degrees)
    return d


def rows_to_json(rows: Iterable[ScanRow]) -> str:
    return json.dumps([_row_dict(r) for r in rows], indent=2)


def rows_to_csv(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([r.ambient, " ".join(map(str, r.degrees)), r.n, r.h_kk, r.b_2k, str(r.equal).lower(), r.verdict])
    return buf.getvalue()
