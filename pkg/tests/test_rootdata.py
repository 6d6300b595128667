from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tff.rootdata import (
    FUNDAMENTAL,
    ROOT,
    Weight,
    build_root_datum,
    cartan_matrix,
    convert_basis,
    nilradical,
)

TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("G", 2), ("A", 4)]
COUNTS = {("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("B", 2): 4, ("B", 3): 9, ("C", 2): 4, ("C", 3): 9,
          ("D", 4): 12, ("G", 2): 6, ("A", 4): 10}


@pytest.mark.parametrize("t,n", TYPES)
def test_invariants(t, n):
    rd = build_root_datum(t, n)
    assert len(rd.positive_roots) == COUNTS[(t, n)]
    a = rd.cartan
    assert all(a[i][i] == 2 for i in range(n))
    assert all(a[i][j] <= 0 for i in range(n) for j in range(n) if i != j)
    for i in range(1, n + 1):
        assert rd.coroot_pairing(rd.rho, i) == 1
        for j in range(1, n + 1):
            assert rd.coroot_pairing(rd.fundamental_weights[i - 1], j) == (i == j)
    for r in rd.positive_roots:
        assert all(c >= 0 for c in r)
        assert rd.pairing_with_coroot(rd.rho, r) >= 1


def test_examples():
    a1 = build_root_datum("A", 1)
    assert a1.positive_roots == ((1,),) and a1.rho == (Fraction(1, 2),)
    c2 = build_root_datum("C", 2)
    assert set(c2.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1)}
    # C2 in Kac convention: alpha_1 short, alpha_2 long
    assert cartan_matrix("C", 2) == [[2, -2], [-1, 2]]
    g2 = build_root_datum("G", 2)
    assert len(g2.positive_roots) == 6


@pytest.mark.parametrize("t,n", [("A", 0), ("B", 1), ("C", 1), ("D", 3 - 1), ("G", 3), ("E", 6), ("Z", 1)])
def test_invalid(t, n):
    with pytest.raises(ValueError):
        build_root_datum(t, n)


def test_convert_basis_examples():
    a1 = build_root_datum("A", 1)
    assert convert_basis(a1, Weight((1,), FUNDAMENTAL), ROOT).coords == (Fraction(1, 2),)
    a2 = build_root_datum("A", 2)
    assert convert_basis(a2, Weight((1, 1), FUNDAMENTAL), ROOT).coords == (1, 1)
    c2 = build_root_datum("C", 2)
    # alpha in the fundamental basis is its Cartan-matrix column (<alpha, alpha_j^vee>)_j
    assert convert_basis(c2, Weight((1, 0), ROOT), FUNDAMENTAL).coords == (2, -1)
    assert convert_basis(c2, Weight((0, 1), ROOT), FUNDAMENTAL).coords == (-2, 2)


@given(st.sampled_from(TYPES), st.data())
def test_basis_round_trip(tn, data):
    rd = build_root_datum(*tn)
    coords = data.draw(st.lists(st.fractions(max_denominator=7, min_value=-10, max_value=10), min_size=tn[1], max_size=tn[1]))
    for basis, other in ((ROOT, FUNDAMENTAL), (FUNDAMENTAL, ROOT)):
        w = Weight(tuple(coords), basis)
        assert convert_basis(rd, convert_basis(rd, w, other), basis) == w


def test_nilradical_examples():
    a2 = build_root_datum("A", 2)
    assert nilradical(a2, {1, 2}).nilradical_roots == ()
    assert set(nilradical(a2, {1}).nilradical_roots) == {(0, 1), (1, 1)}
    assert nilradical(a2, {1}).delta_p == (2,)
    assert len(nilradical(build_root_datum("C", 2), set()).nilradical_roots) == 4


@given(st.sampled_from(TYPES), st.data())
def test_nilradical_partition(tn, data):
    rd = build_root_datum(*tn)
    levi = data.draw(st.sets(st.integers(1, tn[1])))
    par = nilradical(rd, levi)
    assert len(par.delta_p) + len(par.levi) == rd.rank
    assert set(par.nilradical_roots) | set(par.levi_roots) == set(rd.positive_roots)
    assert not set(par.nilradical_roots) & set(par.levi_roots)
    for r in par.nilradical_roots:
        assert any(r[a - 1] for a in par.delta_p)


def test_bad_subset():
    with pytest.raises(ValueError):
        nilradical(build_root_datum("A", 2), {3})


def test_weight_arithmetic():
    a = Weight((1, 2))
    b = Weight((Fraction(1, 2), 0))
    assert (a + b).coords == (Fraction(3, 2), 2)
    assert (a - b - a + b) == Weight((0, 0))
    assert (-a).scale(2).coords == (-2, -4)
    with pytest.raises(ValueError):
        a + Weight((1, 1), FUNDAMENTAL)
