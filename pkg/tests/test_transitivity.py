from hypothesis import given, strategies as st

from semiflows import catalog
from semiflows.action import FiniteAction
from semiflows.harness.generate import generate
from semiflows.semigroup import SemigroupModel
from semiflows.space import FiniteTopology
from semiflows.transitivity import (almost_periodic_points, invariant_open_sets_dense, is_minimal, is_PT, is_ST,
                                    is_TT, is_TT_brute, is_TT_via_invariant_sets, minimal_points,
                                    prerecurrent_points, pt_implies_tt_diagnosis, transitive_points)

PROFILES = ["generic", "commuting", "surjective", "permutation"]


def _mono(pts, table, top=None):
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), pts, (table,))
    return a, top or FiniteTopology.discrete(pts)


def test_identity_on_two_points_is_not_tt():
    a, top = _mono(("a", "b"), (0, 1))
    v = is_TT(a, top)
    assert v.fails_ and v.exact
    assert not is_PT(a, top).holds_


def test_rotation_is_syndetically_transitive():
    inst = catalog.build_rotation(5).instance
    v = is_ST(inst.action, inst.topology)
    assert v.holds_ and v.exact
    assert is_minimal(inst.action, inst.topology).holds_


def test_saturating_translation_pt_without_tt():
    inst = catalog.build_ex1_3(12).instance
    a, top = inst.action, inst.topology
    assert transitive_points(a, top) == {inst.index("0")}
    v = is_TT(a, top)
    assert v.fails_
    assert v.certificate["U"] == ["1"] and v.certificate["V"] == ["0"]
    assert prerecurrent_points(a, top) == {inst.index("inf")}


@given(st.integers(0, 10**6), st.sampled_from(PROFILES))
def test_tt_against_brute_force(seed, profile):
    inst = generate(seed, profile)
    v = is_TT(inst.action, inst.topology)
    assert v.exact
    assert v.holds_ == is_TT_brute(inst.action, inst.topology)


@given(st.integers(0, 10**6), st.sampled_from(PROFILES))
def test_tt_characterizations_agree(seed, profile):
    inst = generate(seed, profile)
    a, top = inst.action, inst.topology
    tt = is_TT(a, top).holds_
    v2, v3 = is_TT_via_invariant_sets(a, top)
    assert v2.holds_ == tt == v3.holds_


@given(st.integers(0, 10**6), st.sampled_from(["permutation", "surjective"]))
def test_invariant_open_criterion_for_invertible_actions(seed, profile):
    inst = generate(seed, profile)
    a, top = inst.action, inst.topology
    if a.surjectivity_profile()["invertible"] and a.model.kind != "free":
        assert invariant_open_sets_dense(a, top).holds_ == is_TT(a, top).holds_


@given(st.integers(0, 10**6), st.sampled_from(PROFILES))
def test_point_class_inclusions(seed, profile):
    inst = generate(seed, profile)
    a, top = inst.action, inst.topology
    prerec = prerecurrent_points(a, top)
    assert minimal_points(a, top) <= prerec
    assert almost_periodic_points(a, top) <= prerec


@given(st.integers(0, 10**6), st.sampled_from(PROFILES))
def test_pt_to_tt_diagnosis_is_consistent(seed, profile):
    inst = generate(seed, profile)
    a, top = inst.action, inst.topology
    if is_PT(a, top).holds_:
        d = pt_implies_tt_diagnosis(a, top)
        assert d["consistent"]
        assert d["conditions"]["orbit_chase"] == d["tt"].holds_
