import itertools
from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from semiflows import catalog
from semiflows.action import FiniteAction
from semiflows.harness.generate import generate, GenConfig
from semiflows.semigroup import SemigroupModel
from semiflows.space import FiniteTopology
from semiflows.structure import (RationalMeasure, compute_aut, invariant_measure, is_E_semiflow, is_UT,
                                 max_measure, recurrence_return_set, ut_consequences)

SMALL = GenConfig(min_points=1, max_points=4)


def _vectors(n, den):
    for parts in itertools.product(range(den + 1), repeat=n):
        if sum(parts) == den:
            yield tuple(F(p, den) for p in parts)


def _brute_measures(a, dens=(1, 2, 3, 4, 6)):
    for den in dens:
        for w in _vectors(a.n, den):
            mu = RationalMeasure(w)
            if mu.is_invariant(a):
                yield mu


def test_rotation_automorphisms_are_rotations():
    inst = catalog.build_rotation(5).instance
    aut = compute_aut(inst.action)
    aut.check_group(inst.action)
    assert len(aut.elements) == 5
    assert is_UT(inst.action).holds_


def test_free_saturating_translations_not_ut():
    inst = catalog.build_ex4_4(4).instance
    aut = compute_aut(inst.action, inst.topology, max_points=None)
    assert aut.orbit(inst.index("inf")) == {inst.index("inf")}
    assert is_UT(inst.action, inst.topology, max_points=None).fails_


def test_rotation_measure_is_uniform_and_recurrent():
    inst = catalog.build_rotation(4).instance
    mu = invariant_measure(inst.action)
    assert mu.weights == (F(1, 4),) * 4
    returns, v = recurrence_return_set(inst.action, mu, {0})
    assert v.holds_
    assert all((t in returns) == (t % 4 == 0) for t in range(12))


def test_collapse_measure_sits_on_fixed_point():
    inst = catalog.build_ex4_8().instance
    assert invariant_measure(inst.action).weights == (0, 1)
    assert max_measure(inst.action, {0}) == 0


def test_noncommuting_constants_have_no_measure():
    a = FiniteAction(SemigroupModel("free", ("f", "g")), ("a", "b"), ((0, 0), (1, 1)))
    assert invariant_measure(a) is None


def test_e_semiflow():
    rot = catalog.build_rotation(3).instance
    assert is_E_semiflow(rot.action, rot.topology).holds_
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), ("a", "b"), ((1, 1),))
    top = FiniteTopology.from_opens(("a", "b"), [set(), {0}, {0, 1}])
    # TT (a reaches b, {a} is in every nonempty open) but no invariant weight on {a}
    v = is_E_semiflow(a, top)
    assert v.fails_ and v.certificate["U"] == ["a"]


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.sampled_from(["generic", "commuting", "permutation"]))
def test_invariant_measure_against_enumeration(seed, profile):
    a = generate(seed, profile, cfg=SMALL).action
    mu = invariant_measure(a)
    found = list(_brute_measures(a))
    if mu is None:
        assert not found
        return
    assert mu.is_invariant(a)
    for nu in found:
        assert nu.support <= mu.support
        for U in ({x} for x in range(a.n)):
            assert max_measure(a, U) >= nu(U)


@given(st.integers(0, 10**6))
def test_permutation_ut_consequences_hold(seed):
    inst = generate(seed, "permutation")
    report = ut_consequences(inst.action, None, inst.topology)
    assert report["violations"] == []
