from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from phtransform.feasibility import feasible_point


def satisfies(A, b, y):
    return all(sum(a * x for a, x in zip(row, y)) >= bi for row, bi in zip(A, b))


def test_simple_feasible():
    A = [[1, 0], [0, 1], [-1, -1]]
    b = [1, 1, -5]
    y = feasible_point(A, b)
    assert y is not None and satisfies(A, b, y)


def test_contradiction():
    assert feasible_point([[1, 1], [-1, -1]], [1, 0]) is None


def test_empty_system():
    assert feasible_point([], []) == []


def test_fractional_window():
    # 1/3 <= 3y <= 2/3 has no integer point; the midpoint is used
    y = feasible_point([[3], [-3]], [Fraction(1, 3), Fraction(-2, 3)])
    assert y == [Fraction(1, 6)]


rows = st.lists(st.integers(-5, 5), min_size=3, max_size=3)


@given(st.lists(rows, min_size=1, max_size=6), st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 3), min_size=6, max_size=6))
def test_feasible_by_construction(A, y0, slack):
    # b is chosen below A y0, so y0 witnesses feasibility
    b = [sum(a * x for a, x in zip(r, y0)) - s for r, s in zip(A, slack)]
    y = feasible_point(A, b)
    assert y is not None and satisfies(A, b, y)


@given(st.lists(rows, min_size=0, max_size=5), rows, st.integers(1, 4))
def test_infeasible_by_construction(A, a, gap):
    # a.y >= gap > 0 and a.y <= 0 contradict for every a, including a == 0
    system = A + [a, [-x for x in a]]
    b = [-100] * len(A) + [gap, 0]
    assert feasible_point(system, b) is None
