from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tff.cyclotomic import ONE, ZERO, CycValue, Magnitude, cyclotomic_poly, euler_phi, factor

E = CycValue.root_of_unity


def test_basic_identities():
    assert E(Fraction(1, 4)) ** 2 == -1
    assert 1 + E(Fraction(1, 3)) + E(Fraction(2, 3)) == 0
    assert sum((E(Fraction(k, 5)) for k in range(5)), ZERO) == 0
    assert E(Fraction(1, 6)) == -E(Fraction(2, 3))
    assert (E(Fraction(1, 12)) * E(Fraction(11, 12))) == 1
    assert CycValue.rational(Fraction(3, 4)).is_rational()
    assert not E(Fraction(1, 3)).is_rational()
    assert (E(Fraction(1, 8)) + E(Fraction(7, 8))) ** 2 == 2


def test_radicals():
    root2 = CycValue.monomial(1, Magnitude.of(2, Fraction(1, 2)))
    assert root2 * root2 == 2
    assert root2 == E(Fraction(1, 8)) + E(Fraction(7, 8))
    root3 = CycValue.monomial(1, Magnitude.of(3, Fraction(1, 2)))
    assert root3 * root3 == 3
    # sqrt(-3) = e(1/3) - e(2/3)
    assert root3 * E(Fraction(1, 4)) == E(Fraction(1, 3)) - E(Fraction(2, 3))
    cube = CycValue.monomial(1, Magnitude.of(2, Fraction(1, 3)))
    assert cube ** 3 == 2
    assert cube != root2 and cube + 1 != 1
    assert root2.inverse() * root2 == 1


def test_magnitude():
    m = Magnitude.of(Fraction(4, 9), Fraction(1, 2))
    assert m.is_rational and m.as_fraction() == Fraction(2, 3)
    assert (m * m.inverse()) == Magnitude()
    r = Magnitude.of(12, Fraction(1, 2))
    rat, rad = r.split()
    assert rat == 2 and rad == ((3, Fraction(1, 2)),)
    with pytest.raises(ValueError):
        Magnitude.of(0)


def test_number_theory_helpers():
    assert factor(360) == ((2, 3), (3, 2), (5, 1))
    assert [euler_phi(n) for n in (1, 2, 3, 4, 12, 15)] == [1, 1, 2, 2, 4, 8]
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_display():
    v = 2 * E(Fraction(1, 12)) - E(Fraction(1, 4)) + Fraction(1, 2)
    s = str(v)
    assert str(v) == s  # deterministic
    assert complex(v) == pytest.approx(complex(CycValue.rational(Fraction(1, 2))) + 2 * complex(E(Fraction(1, 12))) - 1j)
    assert str(ZERO) == "0" and str(ONE) == "1"
    assert str(CycValue.rational(-3)) == "-3"
    assert CycValue.rational(Fraction(5, 4)).float_str() == "1.25"


phases = st.fractions(min_value=0, max_value=1, max_denominator=12)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
values = st.lists(st.tuples(coeffs, phases), max_size=4).map(
    lambda ts: sum((CycValue.monomial(c, Magnitude(), q) for c, q in ts), ZERO)
)


@settings(max_examples=80, deadline=None)
@given(values, values, values)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a) == 0
    assert complex(a * b) == pytest.approx(complex(a) * complex(b), abs=1e-9)
    assert hash(a + b) == hash(b + a)


small_values = st.lists(st.tuples(coeffs, st.sampled_from([Fraction(k, d) for d in (1, 2, 3, 4, 5, 8) for k in range(d)])),
                        max_size=4).map(lambda ts: sum((CycValue.monomial(c, Magnitude(), q) for c, q in ts), ZERO))


@settings(max_examples=60, deadline=None)
@given(small_values)
def test_inverse(a):
    if a == 0:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1


@given(values)
def test_canonical_is_basis_independent(a):
    # multiplying by e(k/n) and back does not change the value
    shifted = a * E(Fraction(1, 7)) * E(Fraction(6, 7))
    assert shifted == a and str(shifted) == str(a)


def test_conductor_and_display():
    # e(1/6) lives in Q(zeta_3); its basis there is 1, e(1/3)
    assert str(E(Fraction(1, 6))) == "1 + e(1/3)"
    assert str(-E(Fraction(2, 3))) == "1 + e(1/3)"
    assert str(E(Fraction(1, 4)) * 3 - 1) == "-1 + 3*e(1/4)"
    assert str(-E(Fraction(1, 5))) == "-e(1/5)"
    assert str(E(Fraction(1, 4)) - E(Fraction(1, 5))) == "e(1/4) - e(1/5)"
    big = E(Fraction(1, 7)) + E(Fraction(1, 11)) + E(Fraction(1, 9)) + E(Fraction(3, 8))
    assert big - E(Fraction(1, 11)) == E(Fraction(1, 7)) + E(Fraction(1, 9)) + E(Fraction(3, 8))
    assert complex(big) == pytest.approx(sum(complex(E(q)) for q in (Fraction(1, 7), Fraction(1, 11), Fraction(1, 9), Fraction(3, 8))))
