from fractions import Fraction

from hypothesis import given, strategies as st

from tff import linalg

small = st.integers(-5, 5)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
)


def test_rank_examples():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
    assert linalg.rank([]) == 0


@given(matrices)
def test_rank_matches_echelon(m):
    _, piv = linalg.row_echelon(m)
    assert linalg.rank(m) == len(piv)
    # rank-nullity
    assert len(linalg.nullspace(m)) == len(m[0]) - len(piv)


@given(matrices)
def test_nullspace_vectors_are_killed(m):
    for v in linalg.nullspace(m):
        assert all(x == 0 for x in linalg.matvec(m, v))


def test_inverse_and_solve():
    a = [[2, -1], [-1, 2]]
    inv = linalg.inverse(a)
    assert inv == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]
    assert linalg.solve(a, [1, 0]) == [Fraction(2, 3), Fraction(1, 3)]
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None
