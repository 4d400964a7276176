from hypothesis import given, strategies as st

from conftest import eventually_periodic
from semiflows.periodic import EventuallyPeriodic, TwoSidedPeriodic


def members(A, n):
    return [k in A for k in range(n)]


def test_from_sets_layout():
    A = EventuallyPeriodic.from_sets(3, 4, {0, 2}, {1})
    assert members(A, 12) == [True, False, True, False, True, False, False, False, True, False, False, False]


def test_radius_and_run_examples():
    evens = EventuallyPeriodic((), (True, False))
    assert evens.syndetic_radius() == 1
    assert evens.max_run() == 1
    tail = EventuallyPeriodic((False,) * 5, (True,))
    assert tail.is_cofinite() and tail.max_run() is None
    finite = EventuallyPeriodic((True, True), (False,))
    assert finite.syndetic_radius() is None and finite.max_run() == 2


@given(eventually_periodic(), eventually_periodic())
def test_boolean_ops_pointwise(A, B):
    n = 3 * (A.preperiod + B.preperiod + A.period * B.period) + 5
    for k in range(n):
        assert (k in A.intersection(B)) == (k in A and k in B)
        assert (k in A.union(B)) == (k in A or k in B)
        assert (k in A.complement()) == (k not in A)
        assert (k in A.normalized()) == (k in A)


@given(eventually_periodic())
def test_syndetic_radius_against_scan(A):
    H = 10 * (A.preperiod + A.period)
    bits = members(A, 3 * H)
    r = A.syndetic_radius()
    gaps = []
    for t in range(H):
        nxt = next((k for k in range(t, 3 * H) if bits[k]), None)
        gaps.append(None if nxt is None else nxt - t)
    if r is None:
        assert None in gaps
    else:
        assert max(gaps) == r


@given(eventually_periodic())
def test_max_run_against_scan(A):
    H = 10 * (A.preperiod + A.period)
    best = run = 0
    for b in members(A, H):
        run = run + 1 if b else 0
        best = max(best, run)
    if A.max_run() is None:
        assert best >= H - A.preperiod
    else:
        assert best == A.max_run()


@given(eventually_periodic(), eventually_periodic(), st.integers(-30, 30))
def test_two_sided_membership(pos, neg, n):
    # both halves contain 0, so they must agree there
    pos = EventuallyPeriodic((0 in neg,) + pos.prefix[1:], pos.cycle) if pos.prefix \
        else EventuallyPeriodic((0 in neg,), pos.cycle)
    Z = TwoSidedPeriodic(pos, neg)
    assert (n in Z) == ((n in pos) if n >= 0 else ((-n) in neg))
    assert (n in Z.complement()) == (n not in Z)
