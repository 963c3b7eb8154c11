import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import square_poincare
from smiththom.ci_invariants import CompleteIntersection, complex_betti
from smiththom.errors import InconsistencyError, PreconditionError
from smiththom.hilbert_square import (
    Verdict,
    betti_ER,
    betti_extra,
    betti_H0,
    betti_Hi,
    betti_square_real,
    betti_square_real_mv,
    betti_total_square_complex,
    cubic_fano_deficiency,
    deficiency_formula,
    deficiency_square,
    deficiency_via_mu,
    euler_char_square_real,
    implied_rank_mu,
    maximality_verdict,
    proven_degrees,
    rank_inc,
    rank_inc0,
    rank_mu,
    square_report,
    strata_report,
)
from smiththom.profile import RealVarietyProfile
from strategies import component_vectors, maximal_profiles, random_maximal_ci_profile


def ci_profile(N, ds, comps, **flags):
    ci = CompleteIntersection(N, ds)
    b = complex_betti(ci)
    maximal = sum(map(sum, comps)) == sum(b)
    return RealVarietyProfile(ci.n, b, tuple(comps), maximal, ci, not any(b[1::2]), True, **flags)


CUBIC_SURFACE = ci_profile(3, (3,), [(1, 7, 1)])
QUADRIC_TORUS = ci_profile(3, (2,), [(1, 2, 1)])
QUADRIC_EMPTY = ci_profile(3, (2,), [])
TWO_QUADRICS = ci_profile(4, (2, 2), [(1, 6, 1)])
CUBIC_THREEFOLD = ci_profile(4, (3,), [(1, 6, 6, 1)])
K3_TWO = ci_profile(3, (4,), [(1, 20, 1), (1, 0, 1)])
P2 = ci_profile(2, (), [(1, 1, 1)])


def test_euler_char_examples():
    assert euler_char_square_real(CUBIC_SURFACE, -5) == 22
    assert euler_char_square_real(QUADRIC_TORUS, 0) == 2
    assert euler_char_square_real(QUADRIC_EMPTY) == 2
    with pytest.raises(PreconditionError):
        euler_char_square_real(CUBIC_SURFACE, 3)


def test_total_complex_examples():
    assert betti_total_square_complex(2, (1, 0, 1, 0, 1), True) == (9, True)
    assert betti_total_square_complex(2, (1, 0, 7, 0, 1), True) == (54, True)
    assert betti_total_square_complex(1, (1, 2, 1), True) == (8, True)
    assert betti_total_square_complex(1, (1, 2, 1), False) == (8, False)


@given(st.integers(1, 4), st.data())
def test_total_complex_matches_poincare_oracle(n, data):
    inner = data.draw(st.lists(st.integers(0, 5), min_size=n - 1, max_size=n - 1))
    mid = data.draw(st.integers(0, 30))
    b = [1] + inner + [mid] + inner[::-1] + [1]
    assert betti_total_square_complex(n, b, True)[0] == sum(square_poincare(b))


def test_poincare_oracle_p2():
    assert square_poincare([1, 0, 1, 0, 1]) == [1, 0, 2, 0, 3, 0, 2, 0, 1]
    assert square_poincare([1, 2, 1]) == [1, 2, 2, 2, 1]


def test_H0_examples():
    assert betti_H0(CUBIC_SURFACE) == ((1, 1), 9)
    assert betti_H0(CUBIC_THREEFOLD) == ((1, 1, 2), 21)
    assert betti_H0(P2) == ((1, 1), 3)
    with pytest.raises(PreconditionError):
        betti_H0(QUADRIC_EMPTY)


def test_Hi_examples():
    assert betti_Hi((1, 7, 1), 2) == ((1, 8, 29, 7, 0), 45)
    assert betti_Hi((1, 1), 1) == ((1, 1, 0), 2)
    with pytest.raises(PreconditionError):
        betti_Hi((1,), 1)


@given(component_vectors())
def test_Hi_per_degree_sums_to_total(nv):
    n, F = nv
    vec, total = betti_Hi(F, n)
    assert sum(vec) == total
    fs = sum(F)
    assert 2 * total == fs * (fs - 1) + 2 * sum((n - k) * x for k, x in enumerate(F))


def test_ER_examples():
    assert betti_ER(CUBIC_SURFACE) == ((1, 8, 8, 1), 18)
    circle = RealVarietyProfile(1, (1, 0, 1), ((1, 1),), True)
    assert betti_ER(circle) == ((1, 1), 2)
    assert betti_ER(CUBIC_THREEFOLD) == ((1, 7, 13, 13, 7, 1), 42)


def test_extra_examples():
    assert all(betti_extra(CUBIC_SURFACE, k) == 0 for k in range(5))
    tori = RealVarietyProfile(2, (1, 0, 2, 0, 1), ((1, 2, 1), (1, 2, 1)), False)
    assert betti_extra(tori, 2) == 6
    spheres = RealVarietyProfile(2, (1, 0, 2, 0, 1), ((1, 0, 1), (1, 0, 1)), True)
    assert betti_extra(spheres, 1) == 0


def test_rank_examples():
    assert (rank_inc0(0, CUBIC_SURFACE), rank_inc0(1, CUBIC_SURFACE)) == (1, 1)
    assert rank_inc0(2, CUBIC_THREEFOLD) == 2
    with pytest.raises(PreconditionError):
        rank_inc0(2, CUBIC_SURFACE)
    assert rank_inc(2, CUBIC_SURFACE) == 7
    assert rank_inc(0, CUBIC_SURFACE) == 1
    assert rank_inc(3, CUBIC_SURFACE) == 0
    with pytest.raises(PreconditionError):
        rank_inc(5, CUBIC_SURFACE)
    assert (rank_mu(0, CUBIC_SURFACE), rank_mu(1, CUBIC_SURFACE)) == (1, 1)
    assert rank_mu(2, CUBIC_THREEFOLD) == 7
    with pytest.raises(PreconditionError):
        rank_mu(2, CUBIC_SURFACE)
    no_ci = RealVarietyProfile(2, (1, 0, 7, 0, 1), ((1, 7, 1),), True)
    with pytest.raises(PreconditionError):
        rank_mu(0, no_ci)


def test_square_real_examples():
    assert betti_square_real(CUBIC_SURFACE, 1) == 8
    assert betti_square_real(CUBIC_THREEFOLD, 0) == 1
    with pytest.raises(PreconditionError):
        betti_square_real(CUBIC_SURFACE, 2)
    with pytest.raises(PreconditionError):
        betti_square_real(CUBIC_THREEFOLD, 1)


def test_deficiency_examples():
    for p in (CUBIC_SURFACE, QUADRIC_TORUS, TWO_QUADRICS, CUBIC_THREEFOLD):
        r = deficiency_square(p)
        assert r.deficiency == 0 and r.verdict is Verdict.MAXIMAL
    r = deficiency_square(K3_TWO)
    assert r.deficiency == 4 and r.verdict is Verdict.NOT_MAXIMAL


@settings(max_examples=200)
@given(st.integers(0, 10**9))
def test_deficiency_routes_agree(seed):
    p = random_maximal_ci_profile(random.Random(seed))
    r = deficiency_square(p)  # raises if any route disagrees
    assert r.deficiency >= 0 and r.deficiency % 4 == 0
    assert (r.deficiency == 0) == all(b == 1 for b in p.real_betti[: p.n // 2])
    for k in proven_degrees(p.n):
        assert betti_square_real_mv(p, k) == r.per_degree_real_betti[k]


@settings(max_examples=100)
@given(st.integers(0, 10**9))
def test_rank_mu_bounded_by_source_and_target(seed):
    p = random_maximal_ci_profile(random.Random(seed))
    s = strata_report(p)
    for k in range(p.n):
        target = s.betti_H0[k] + sum(v[k] for v in s.betti_Hi)
        assert rank_mu(k, p) <= min(s.betti_ER[k], target)


@given(maximal_profiles())
def test_strata_totals(p):
    s = strata_report(p)
    assert 2 * s.total_H0 == p.n * p.beta_star
    assert s.total_ER == p.n * p.beta_star
    assert 2 * sum(s.totals_Hi) == sum(sum(F) ** 2 for F in p.real_components) + (p.n - 1) * p.beta_star


@given(maximal_profiles())
def test_euler_char_integral(p):
    euler_char_square_real(p)


@given(st.integers(-50, 50), st.integers(1, 8), st.integers(1, 60), st.integers(0, 40))
def test_mu_roundtrip(defi, n, bs, bo):
    if (defi + n * bs + bo) % 2:
        with pytest.raises(InconsistencyError):
            implied_rank_mu(defi, n, bs, bo)
    else:
        assert deficiency_via_mu(implied_rank_mu(defi, n, bs, bo), n, bs, bo) == defi


def test_mu_examples():
    assert implied_rank_mu(0, 2, 9, 0) == 9
    assert deficiency_via_mu(9, 2, 9, 0) == 0


def test_verdict_examples():
    v = maximality_verdict(QUADRIC_EMPTY)
    assert v.verdict is Verdict.NOT_MAXIMAL and v.reasons == ("empty_real_locus",)
    # maximal complete intersection of dimension 4 with beta_1 = 2
    cubic4 = ci_profile(5, (3,), [(1, 2, 21, 2, 1)])
    v = maximality_verdict(cubic4)
    assert v.verdict is Verdict.NOT_MAXIMAL and v.reasons == ("ci_deficiency_positive",)
    b = complex_betti(CompleteIntersection(5, (2,)))
    pn = RealVarietyProfile(4, b, ((1, 1, 2, 1, 1),), True, None, True, True, True)
    v = maximality_verdict(pn)
    assert v.verdict is Verdict.MAXIMAL and v.reasons == ("algebraic_generation",)


def test_verdict_other_branches():
    nonmax = ci_profile(3, (3,), [(1, 5, 1)])
    assert maximality_verdict(nonmax).reasons == ("base_not_maximal",)
    two = RealVarietyProfile(2, (1, 0, 2, 0, 1), ((1, 0, 1), (1, 0, 1)), True, None, True, True)
    assert maximality_verdict(two).reasons == ("real_betti_mismatch",)
    unknown = RealVarietyProfile(2, (1, 0, 2, 0, 1), ((1, 2, 1),), True, None, True, True)
    assert maximality_verdict(unknown).verdict is Verdict.UNDETERMINED
    curve = RealVarietyProfile(1, (1, 2, 1), (), False)
    assert maximality_verdict(curve).verdict is Verdict.UNDETERMINED


def test_fano_examples():
    assert cubic_fano_deficiency(3, 0, 0) == 0
    four = deficiency_square(ci_profile(5, (3,), [(1, 2, 21, 2, 1)])).deficiency
    assert cubic_fano_deficiency(4, 0, four) > 0
    assert cubic_fano_deficiency(5, 2, 12) == 0
    with pytest.raises(InconsistencyError):
        cubic_fano_deficiency(3, 2, 1)


def test_report_shape():
    rep = square_report(CUBIC_SURFACE)
    assert set(rep) == {"deficiency", "verdict", "reasons", "strata", "per_degree"}
    assert rep["deficiency"] == 0 and rep["verdict"] == "maximal"


def test_formula_never_negative_on_validated():
    # a vector violating the hyperplane bound never reaches the formula
    with pytest.raises(PreconditionError):
        deficiency_square(ci_profile(5, (2,), [(1, 0, 4, 0, 1)]))
    assert deficiency_formula(CUBIC_SURFACE) == 0
