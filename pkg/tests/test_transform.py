from fractions import Fraction as F

import pytest

from shirac import (ZERO, convolve, distance_set, hyperperiod, interference, offset,
                    periodic_train, train, transform_graph)
from shirac.bounds import extrema


def test_distance_set(three_jobs):
    assert distance_set(three_jobs, 0, 4) == (0, 1, 2, 3, 4)
    assert distance_set(three_jobs, F(3, 2), 2) == (0, F(1, 2))
    with pytest.raises(ValueError):
        distance_set(three_jobs, 2, 1)


def test_graph_points(three_jobs):
    g = transform_graph(three_jobs, (0, 4))
    assert [tuple(p) for p in g.points] == [(0, 6, 3), (1, 11, 2), (2, 15, 1), (3, 15, 0),
                                            (4, 15, 0)]
    assert g.as_pairs()[1] == (1, 11)


def test_value_at_is_a_step_function(three_jobs):
    g = transform_graph(three_jobs, (0, 4))
    assert g.value_at(F(1, 2)) == 6
    assert g.value_at(F(3, 2)) == 11
    assert g.value_at(10) == 15
    with pytest.raises(ValueError):
        g.value_at(-1)


def test_graph_midpoints_match_extrema(three_jobs):
    g = transform_graph(three_jobs, (0, 4))
    mids = [(p.d + q.d) / 2 for p, q in zip(g.points, g.points[1:])]
    for d, r in zip(mids, extrema(three_jobs, mids, (0, 4), "cc")):
        assert r.value == g.value_at(d)


def test_min_graph(three_jobs):
    g = transform_graph(three_jobs, (1, 3), "min", "co")
    assert [p.value for p in g.points] == [0, 4, 6]


def test_hyperperiod():
    assert hyperperiod(interference(periodic_train(3))) == 3
    a = interference(periodic_train(4, (2,)))
    b = offset(interference(periodic_train(F(3, 2), (1, 3))), 1)
    assert hyperperiod(a + b) == 12


def test_hyperperiod_absent():
    assert hyperperiod(ZERO) is None
    assert hyperperiod(interference(train(1, [1, 2]))) is None
    two = convolve(interference(periodic_train(2)), interference(periodic_train(3)))
    assert hyperperiod(two) is None


def test_periodic_graph_repeats():
    x = interference(periodic_train(2, (1, 3))) + offset(interference(periodic_train(3)), 1)
    period = hyperperiod(x)
    assert period == 12
    g = transform_graph(x, (0, period))
    ds = [p.d for p in g.points]
    for k in (2, 3):
        wide = extrema(x, ds, (0, k * period), "cc", "max")
        assert [r.value for r in wide] == [p.value for p in g.points]
