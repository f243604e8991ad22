import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiish.lp import EQ, GE, GT, LE, LT, StrictSystem, feasible_strict, is_difference_system, linprog_max


def diff(n, i, j):
    a = [0] * n
    a[i - 1], a[j - 1] = 1, -1
    return a


def test_single_strict():
    s = StrictSystem(2).add([1, -1], 0, GT)
    x = feasible_strict(s)
    assert x is not None and x[0] > x[1]


@pytest.mark.parametrize("method", ["difference", "simplex"])
def test_contradiction(method):
    s = StrictSystem(2).add([1, -1], 0, GT).add([1, -1], 0, LT)
    assert feasible_strict(s, method) is None


@pytest.mark.parametrize("method", ["difference", "simplex"])
def test_thin_slab(method):
    s = StrictSystem(3).add(diff(3, 1, 2), 0, GT).add(diff(3, 2, 3), 0, GT).add(diff(3, 1, 3), 1, LT)
    x = feasible_strict(s, method)
    assert x is not None and s.satisfied_by(x)


@pytest.mark.parametrize("method", ["difference", "simplex"])
def test_equality_and_closed(method):
    s = StrictSystem(3).add(diff(3, 1, 2), 1, EQ).add(diff(3, 2, 3), 0, GE).add(diff(3, 1, 3), 1, LE)
    x = feasible_strict(s, method)
    assert x is not None and x[0] - x[1] == 1 and x[1] == x[2]
    s.add(diff(3, 2, 3), 0, GT)
    assert feasible_strict(s, method) is None


def test_non_difference_system_uses_simplex():
    s = StrictSystem(2).add([1, 1], 1, LT).add([1, 0], 0, GT).add([0, 1], 0, GT)
    assert not is_difference_system(s)
    x = feasible_strict(s)
    assert x is not None and x[0] + x[1] < 1
    s.add([2, 1], 2, GT)
    assert feasible_strict(s) is None


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        StrictSystem(2).add([0, 0], 1, LT)
    with pytest.raises(ValueError):
        StrictSystem(2).add([1, 0], 1, "!=")
    with pytest.raises(ValueError):
        StrictSystem(2).add([1, 0, 0], 1, LT)


def test_linprog_statuses():
    assert linprog_max([1, 1], [[1, 2], [3, 1]], [4, 6])[:2] == ("optimal", Fraction(14, 5))
    assert linprog_max([1], [[1]], [-1])[0] == "infeasible"
    assert linprog_max([1], [[-1]], [0])[0] == "unbounded"


def _grid_feasible(system):
    """Brute force over a fine rational grid; only used as a one-sided oracle."""
    pts = [k / 4 for k in range(-12, 13)]
    return any(system.satisfied_by(x) for x in itertools.product(pts, repeat=system.n))


pairs3 = [(i, j) for i in range(1, 4) for j in range(1, 4) if i != j]
constraint = st.tuples(st.sampled_from(pairs3), st.integers(-2, 2), st.sampled_from([LT, LE, EQ, GE, GT]))


@settings(max_examples=150, deadline=None)
@given(st.lists(constraint, min_size=1, max_size=6))
def test_difference_matches_simplex(cs):
    s = StrictSystem(3)
    for (i, j), b, rel in cs:
        s.add(diff(3, i, j), b, rel)
    x_diff = feasible_strict(s, "difference")
    x_simp = feasible_strict(s, "simplex")
    assert (x_diff is None) == (x_simp is None)
    # integer offsets with |b| <= 2 always leave a quarter-grid point when feasible
    assert (x_diff is not None) == _grid_feasible(s)
