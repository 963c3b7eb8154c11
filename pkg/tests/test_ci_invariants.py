import pytest
from hypothesis import given, strategies as st

from oracles import blowup_euler, hypersurface_euler, hypersurface_middle_hodge
from smiththom.ci_invariants import (
    CompleteIntersection,
    complex_betti,
    d_of_n,
    euler_characteristic,
    hkk_equals_b2k,
    hodge_numbers,
)
from smiththom.errors import PreconditionError, StructureError

cis = st.builds(
    lambda n, ds: CompleteIntersection(n + len(ds), tuple(ds)),
    st.integers(1, 7),
    st.lists(st.integers(2, 5), max_size=3),
)


@pytest.mark.parametrize("N, ds, chi", [(3, (2,), 4), (3, (3,), 9), (4, (3,), -6), (5, (3,), 27), (4, (2, 2), 8)])
def test_euler_examples(N, ds, chi):
    assert euler_characteristic(CompleteIntersection(N, ds)) == chi


def test_euler_del_pezzo_oracle():
    # the (2,2) surface is P^2 blown up in 5 points
    assert euler_characteristic(CompleteIntersection(4, (2, 2))) == blowup_euler(5)


@given(st.integers(1, 8), st.integers(1, 6))
def test_euler_hypersurface_oracle(n, d):
    assert euler_characteristic(CompleteIntersection(n + 1, (d,))) == hypersurface_euler(n, d)


def test_complex_betti_examples():
    assert complex_betti(CompleteIntersection(4, (3,))) == (1, 0, 1, 10, 1, 0, 1)
    assert complex_betti(CompleteIntersection(3, (2,))) == (1, 0, 2, 0, 1)
    assert complex_betti(CompleteIntersection(3, ())) == (1, 0, 1, 0, 1, 0, 1)
    with pytest.raises(PreconditionError):
        complex_betti(CompleteIntersection(1, (2,)))


def test_hodge_examples():
    assert hodge_numbers(CompleteIntersection(5, (3,))).middle_row() == (0, 1, 21, 1, 0)
    assert hodge_numbers(CompleteIntersection(3, (3,))).h(1, 1) == 7
    assert hodge_numbers(CompleteIntersection(3, (2,))).h(1, 1) == 2


@given(st.integers(1, 5), st.integers(2, 5))
def test_hodge_hypersurface_oracle(n, d):
    if (d - 1) ** (n + 2) > 20000:
        return
    ci = CompleteIntersection(n + 1, (d,))
    assert list(hodge_numbers(ci).middle_row()) == hypersurface_middle_hodge(n, d)


@given(cis)
def test_hodge_symmetries_and_row_sums(ci):
    h = hodge_numbers(ci)
    n = ci.n
    for p in range(n + 1):
        for q in range(n + 1):
            assert h.h(p, q) == h.h(q, p) == h.h(n - p, n - q) >= 0
            if p != q and p + q != n:
                assert h.h(p, q) == 0
            if p == q and 2 * p != n:
                assert h.h(p, q) == 1
    assert h.betti() == complex_betti(ci)


@given(cis)
def test_betti_palindromic_and_euler(ci):
    b = complex_betti(ci)
    assert b == b[::-1]
    assert sum((-1) ** k * x for k, x in enumerate(b)) == euler_characteristic(ci)


@given(cis, st.integers(0, 3))
def test_canonicalization(ci, ones):
    padded = CompleteIntersection(ci.ambient_dim + ones, ci.degrees + (1,) * ones)
    assert padded == ci
    assert euler_characteristic(padded) == euler_characteristic(ci)


def test_ci_validation():
    with pytest.raises(StructureError):
        CompleteIntersection(1, (2, 2))
    with pytest.raises(StructureError):
        CompleteIntersection(3, (0,))


def test_hkk_examples():
    assert hkk_equals_b2k(CompleteIntersection(3, (2,)))
    assert not hkk_equals_b2k(CompleteIntersection(5, (3,)))
    assert hkk_equals_b2k(CompleteIntersection(4, (2, 2)))
    with pytest.raises(PreconditionError):
        hkk_equals_b2k(CompleteIntersection(4, (3,)))


def test_d_of_n():
    assert (d_of_n(2), d_of_n(3), d_of_n(6)) == (1, 1, 6)
    for n in range(2, 101):
        assert d_of_n(n) == sum(range(1, n // 2 + 1))
    with pytest.raises(PreconditionError):
        d_of_n(1)
