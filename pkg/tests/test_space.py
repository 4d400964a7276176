from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semiflows.harness.generate import random_metric, random_preorder
from semiflows.harness.instance_file import _close_opens
from semiflows.space import (FiniteTopology, MetricSpace, TopologyError, preorder_closure, scale_topology,
                             shortest_path_metric)
import random

PTS3 = ("a", "b", "c")


def test_identity_preorder_is_discrete():
    top = FiniteTopology.from_preorder(PTS3, {(i, i) for i in range(3)})
    assert top.is_discrete


def test_sierpinski_opens():
    top = FiniteTopology.from_preorder(("a", "b"), preorder_closure(2, [(0, 1)]))
    assert set(top.opens()) == {frozenset(), frozenset({1}), frozenset({0, 1})}
    assert top.closure({1}) == {0, 1}                 # the open point is dense
    assert top.closure({0}) == {0}


def test_chain_opens():
    top = FiniteTopology.from_preorder(PTS3, preorder_closure(3, [(0, 1), (1, 2)]))
    assert set(top.opens()) == {frozenset(), frozenset({2}), frozenset({1, 2}), frozenset({0, 1, 2})}


def test_from_opens_rejects_non_topology():
    with pytest.raises(TopologyError):
        FiniteTopology.from_opens(PTS3, [set(), {0}, {1}, {0, 1, 2}])


@st.composite
def topologies(draw):
    n = draw(st.integers(1, 6))
    rng = random.Random(draw(st.integers(0, 10**6)))
    return FiniteTopology.from_preorder(tuple(f"p{i}" for i in range(n)),
                                        random_preorder(rng, n, draw(st.floats(0, 1))))


@given(topologies(), st.data())
def test_closure_laws(top, data):
    A = frozenset(data.draw(st.sets(st.integers(0, top.n - 1))))
    B = frozenset(data.draw(st.sets(st.integers(0, top.n - 1))))
    cl = top.closure
    assert A <= cl(A)
    assert cl(cl(A)) == cl(A)
    if A <= B:
        assert cl(A) <= cl(B)
    assert top.interior(A) == top.full - cl(top.full - A)
    assert top.is_open(top.interior(A))
    # closure is the least closed superset, checked against all opens
    closed = [top.full - O for O in top.opens()]
    assert cl(A) == frozenset.intersection(*[C for C in closed if A <= C])


@given(topologies())
def test_min_open_is_intersection_of_opens(top):
    opens = top.opens()
    for x in range(top.n):
        assert top.min_open[x] == frozenset.intersection(*[O for O in opens if x in O])


@given(st.integers(0, 10**6), st.integers(2, 6))
def test_scale_topology_matches_generated_opens(seed, n):
    ms = random_metric(random.Random(seed), n)
    for sigma in ms.scale_menu():
        top = scale_topology(ms, sigma)
        balls = [ms.open_ball(x, sigma) for x in range(n)]
        family = _close_opens([frozenset(), frozenset(range(n))] + balls)
        assert set(top.opens()) == family


def test_scale_menu_and_balls():
    ms = MetricSpace.on_line(PTS3, [0, Fraction(1, 2), 2])
    assert ms.distances == (Fraction(1, 2), Fraction(3, 2), Fraction(2))
    assert ms.scale_menu() == (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2),
                               Fraction(7, 4), Fraction(2))
    assert ms.scale_menu(Fraction(1)) == (Fraction(1), Fraction(3, 2), Fraction(7, 4), Fraction(2))
    assert ms.entourage_ball(0, Fraction(1, 2)) == {0, 1}
    assert ms.open_ball(0, Fraction(1, 2)) == {0}


def test_circle_metric_wraps():
    ms = MetricSpace.on_circle(PTS3, [0, Fraction(1, 3), Fraction(9, 10)])
    assert ms.dist[0][2] == Fraction(1, 10)


def test_metric_validation():
    with pytest.raises(ValueError):
        MetricSpace(("a", "b", "c"), ((0, 1, 3), (1, 0, 1), (3, 1, 0)))
    repaired = shortest_path_metric([[0, 1, 3], [1, 0, 1], [3, 1, 0]])
    assert repaired[0][2] == 2
    MetricSpace(("a", "b", "c"), tuple(map(tuple, repaired)))
