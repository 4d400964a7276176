import pytest
from hypothesis import given, strategies as st

from semiflows.action import ActionError, FiniteAction, compose, invert
from semiflows.harness.generate import generate
from semiflows.semigroup import SemigroupModel, ball_elements
from semiflows.space import FiniteTopology

FREE2 = SemigroupModel("free", ("f", "g"))
PTS = ("a", "b", "c")


def test_compose_applies_right_factor_first():
    f, g = (1, 2, 0), (0, 0, 2)
    assert compose(f, g) == (1, 1, 0)
    assert compose(invert(f), f) == (0, 1, 2)


def test_word_map_matches_pointwise_apply():
    a = FiniteAction(FREE2, PTS, ((1, 2, 0), (0, 0, 2)))
    fg = FREE2.from_word((0, 1))                  # f*g, so g acts first
    assert a.transformation(fg) == compose(a.tables[0], a.tables[1])
    for x in range(3):
        assert a.apply(fg, x) == a.tables[0][a.tables[1][x]]


def test_integer_model_letters_include_inverse():
    a = FiniteAction(SemigroupModel("integer", ("f",)), PTS, ((1, 2, 0),))
    assert a.letter_tables[1] == invert(a.tables[0])
    with pytest.raises(ActionError):
        FiniteAction(SemigroupModel("integer", ("f",)), PTS, ((0, 0, 1),))


def test_free_abelian_rejects_noncommuting_tables():
    with pytest.raises(ActionError):
        FiniteAction(SemigroupModel("free-abelian", ("f", "g")), PTS, ((1, 2, 0), (0, 0, 2)))


def test_orbits_and_invariance():
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), PTS, ((1, 1, 1),))
    assert a.orbit(0) == {0, 1}
    assert a.orbit(2) == {1, 2}
    assert a.invariance({1}) == (True, False)
    assert a.backward_orbit({1}) == {0, 1, 2}
    assert not a.surjectivity_profile()["surjective"]


@given(st.integers(0, 10**6), st.sampled_from(["generic", "commuting", "permutation"]))
def test_hitting_set_agrees_with_preimage_side(seed, profile):
    inst = generate(seed, profile)
    a, n = inst.action, inst.action.n
    U, V = frozenset(range(0, n, 2)), frozenset({n - 1})
    N = a.hitting_set(U, V)
    for t in ball_elements(a.model, 3):
        assert (t in N) == bool(a.image(t, U) & V) == a.in_hitting_set_via_preimage(t, U, V)


def test_generated_actions_are_continuous():
    for seed in range(40):
        inst = generate(seed, "generic")
        for table in inst.action.tables:
            assert inst.topology.is_continuous(table)


def test_discontinuous_generator_is_rejected():
    from semiflows.instance import Instance
    top = FiniteTopology.from_opens(("a", "b"), [set(), {1}, {0, 1}])
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), ("a", "b"), ((1, 0),))
    with pytest.raises(ActionError):
        Instance(a, top)
