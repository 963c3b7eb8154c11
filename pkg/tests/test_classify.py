import random

import pytest

from smiththom.ci_invariants import CompleteIntersection
from smiththom.classify import ScanRange, equality_rows, lefschetz_trace_check, rows_to_csv, rows_to_json, scan, scan_row
from smiththom.errors import PreconditionError


def test_scan_equality_families():
    rows = scan(ScanRange(6, 3, 4))
    eq = {(r.n, r.degrees) for r in equality_rows(rows)}
    assert eq == {(n, d) for n in (2, 4, 6) for d in ((), (2,), (2, 2))} | {(2, (3,))}


def test_cubic_fourfold_row():
    r = scan_row(CompleteIntersection(5, (3,)))
    assert (r.h_kk, r.b_2k, r.equal) == (21, 23, False)
    assert scan_row(CompleteIntersection(6, (2, 2))).equal


def test_rows_sorted_and_order_independent():
    rng = ScanRange(4, 2, 4)
    rows = scan(rng)
    assert rows == sorted(rows, key=lambda r: (r.n, r.degrees))
    shuffled = rng.instances()
    random.Random(3).shuffle(shuffled)
    assert sorted(map(scan_row, shuffled), key=lambda r: (r.n, r.degrees)) == rows


def test_parallel_matches_serial():
    rng = ScanRange(6, 2, 4)
    assert scan(rng, workers=2) == scan(rng)


def test_hkk_never_exceeds_b2k():
    for r in scan(ScanRange(8, 3, 5)):
        assert r.h_kk <= r.b_2k


def test_trace_check_examples():
    assert lefschetz_trace_check(CompleteIntersection(3, (2,)), (1, 2, 1))
    assert not lefschetz_trace_check(CompleteIntersection(5, (3,)), (1, 1, 21, 1, 1))
    assert lefschetz_trace_check(CompleteIntersection(2, ()), (1, 1, 1))
    with pytest.raises(PreconditionError):
        lefschetz_trace_check(CompleteIntersection(5, (3,)), (1, 2, 21, 2, 1))
    with pytest.raises(PreconditionError):
        lefschetz_trace_check(CompleteIntersection(4, (3,)), (1, 6, 6, 1))


def test_output_formats():
    rows = scan(ScanRange(2, 1, 3))
    csv_text = rows_to_csv(rows)
    assert csv_text.splitlines()[0] == "ambient,degrees,n,h_kk,b_2k,equal,verdict"
    assert len(csv_text.splitlines()) == len(rows) + 1
    assert rows_to_json(rows) == rows_to_json(scan(ScanRange(2, 1, 3)))


def test_scan_range_validation():
    with pytest.raises(PreconditionError):
        ScanRange(0, 1, 1)
