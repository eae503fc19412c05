from fractions import Fraction
from itertools import product

from hypothesis import given
from hypothesis import strategies as st

from lti_opacity import lp


def test_simple_optimum():
    # minimise -x - y subject to x + y + s = 4, x + t = 3
    res = lp.linprog([-1, -1, 0, 0], [[1, 1, 1, 0], [1, 0, 0, 1]], [4, 3])
    assert res.status == lp.OPTIMAL
    assert res.value == -4


def test_infeasible():
    assert lp.linprog(None, [[1, 1]], [-1]).status == lp.INFEASIBLE


def test_unbounded():
    assert lp.linprog([-1, 0], [[1, -1]], [0]).status == lp.UNBOUNDED


def test_redundant_rows():
    x = lp.feasible_point([[1, 1], [2, 2]], [1, 2])
    assert x is not None and x[0] + x[1] == 1


def test_exact_fraction_vertex():
    res = lp.linprog([-1, 0, 0], [[3, 1, 0], [0, 0, 1]], [1, 5])
    assert res.value == Fraction(-1, 3)


@given(
    st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=2),
    st.lists(st.integers(-2, 2), min_size=2, max_size=2),
)
def test_feasibility_agrees_with_grid_when_grid_hits(A, b):
    b = b[: len(A)]
    x = lp.feasible_point(A, b)
    if x is not None:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) == bi for row, bi in zip(A, b))
    else:
        for cand in product(range(4), repeat=3):
            assert any(sum(a * v for a, v in zip(row, cand)) != bi for row, bi in zip(A, b))
