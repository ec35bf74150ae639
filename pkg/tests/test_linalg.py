from fractions import Fraction

from hypothesis import given, strategies as st

from crnet.linalg import (
    combination,
    dot,
    independent_subset,
    integer_direction,
    nullspace,
    rank,
    rref,
    show,
    vec,
)

from conftest import F, vectors


def test_vec_converts_to_fractions():
    v = vec([1, "3/2", Fraction(1, 3)])
    assert v == (Fraction(1), Fraction(3, 2), Fraction(1, 3))
    assert all(isinstance(x, Fraction) for x in v)


def test_show_prints_rationals():
    assert show(F(1, "3/2", -2)) == "(1, 3/2, -2)"


def test_integer_direction():
    assert integer_direction(F("1/2", "-3/4")) == (2, -3)
    assert integer_direction(F(0, 6, 4)) == (0, 3, 2)


def test_rank_and_rref():
    assert rank([F(1, 2), F(2, 4)]) == 1
    assert rank([F(-3, 3), F(3, 0)]) == 2
    rows, piv = rref([F(2, 4), F(1, 3)])
    assert piv == [0, 1]
    assert rows[0] == [1, 0] and rows[1] == [0, 1]


def test_nullspace_of_parallel_rows():
    basis = nullspace([F(1, 1), F(2, 2)], 2)
    assert len(basis) == 1
    assert dot(basis[0], F(1, 1)) == 0


def test_independent_subset_is_greedy():
    assert independent_subset([F(1, 0), F(2, 0), F(0, 1)]) == [0, 2]


@given(st.lists(vectors(3), min_size=1, max_size=5))
def test_rank_nullity(rows):
    basis = nullspace(rows, 3)
    assert rank(rows) + len(basis) == 3
    for b in basis:
        assert all(dot(r, b) == 0 for r in rows)


@given(st.lists(vectors(2), min_size=1, max_size=4), st.data())
def test_combination_is_linear(vs, data):
    c = data.draw(st.lists(st.integers(-3, 3), min_size=len(vs), max_size=len(vs)))
    total = combination(c, vs, 2)
    assert total == tuple(sum(ci * v[k] for ci, v in zip(c, vs)) for k in range(2))
