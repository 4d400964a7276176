import pytest
from hypothesis import given, strategies as st

from semiflows.harness import cases
from semiflows.harness.cases import CASES, format_suite, run_case, run_suite
from semiflows.harness.cli import main
from semiflows.harness.generate import PROFILES, generate
from semiflows.harness.instance_file import InstanceParseError, canonical, parse
from semiflows.harness.report import ReportParseError, explain, format_report, parse_report
from semiflows.properties import evaluate
from semiflows.structure import RationalMeasure

COLLAPSE = """semiflow-instance 1
kind monogenic
generators f
points a b      # a is sent to the fixed point b
action f b b
metric 0 1
metric 1 0
"""

# monogenic, non-T1: p1 has an orbit without interior, yet the system is not TT
NON_T1 = """semiflow-instance 1
kind monogenic
generators f
points p0 p1 p2 p3 p4
topology preorder p0<=p1 p1<=p3 p3<=p0 p2<=p4 p4<=p2
action f p4 p2 p2 p4 p2
"""

CASE_IDS = [
    "tt_characterizations", "flow_invariant_open_dense", "minimal_points_prerecurrent",
    "ap_points_prerecurrent", "transitive_prerecurrent_tt", "orbit_chase_tt", "limit_of_prerecurrent_tt",
    "dense_recurrent_points_tt", "abelian_surjective_pt_tt", "abelian_ut_pt_tt", "tt_equi_within_tran",
    "equicontinuous_tt_iff_minimal", "minimal_abelian_surjective", "distal_invertible",
    "ut_equicontinuous_invertible", "tt_equicontinuous_abelian_ut", "abelian_ut_iff_equicontinuous",
    "ut_distal_minimal", "ut_invariant_measure", "meagre_orbit_tran_dense", "perfect_right_c_tran_dense",
    "perfect_countable_tran_dense", "tt_dense_ap_st", "thick_stability_uniform",
    "uap_iff_equicontinuous_surjective", "measure_return_syndetic", "e_semiflow_st",
    "st_nonminimal_syndetically_sensitive", "st_dichotomy_thick", "st_dichotomy_equicontinuous",
    "st_dichotomy_uap",
]


# -- generation ----------------------------------------------------------------

@pytest.mark.parametrize("profile", PROFILES)
def test_generation_is_deterministic(profile):
    assert canonical(generate(7, profile)) == canonical(generate(7, profile))


@given(st.integers(0, 10**6))
def test_profile_constraints(seed):
    com = generate(seed, "commuting").action
    assert com.generators_commute
    perm = generate(seed, "permutation").action
    assert perm.surjectivity_profile()["invertible"]
    surj = generate(seed, "surjective").action
    assert surj.surjectivity_profile()["surjective"]
    mp = generate(seed, "measure-preserving")
    assert RationalMeasure(mp.measure).is_invariant(mp.action)
    for profile in ("monogenic-sampled-interval-map", "shift"):
        inst = generate(seed, profile)
        assert inst.metric is not None and inst.floor is not None
        assert inst.metric.scale_menu(inst.floor)


def test_unknown_profile():
    with pytest.raises(ValueError):
        generate(0, "chaotic")


# -- instance files --------------------------------------------------------------

@given(st.integers(0, 10**6), st.sampled_from(PROFILES))
def test_canonical_round_trip(seed, profile):
    text = canonical(generate(seed, profile))
    assert canonical(parse(text)) == text


def test_parse_reads_comments_and_metric():
    inst = parse(COLLAPSE)
    assert inst.points == ("a", "b")
    assert inst.action.tables == ((1, 1),)
    assert inst.topology.is_discrete
    assert inst.metric.dist[0][1] == 1


@pytest.mark.parametrize("text", [
    "",
    "semiflow-instance 2\n",
    COLLAPSE.replace("action f b b", "action f b z"),
    COLLAPSE.replace("kind monogenic", "kind cyclic"),
    COLLAPSE.replace("metric 1 0", "metric 2 0"),
    COLLAPSE + "bogus line\n",
    NON_T1.replace("action f p4 p2 p2 p4 p2", "action f p2 p2 p2 p2 p0"),
])
def test_parse_errors(text):
    with pytest.raises(InstanceParseError):
        parse(text)


def test_horizon_override(monkeypatch):
    monkeypatch.setenv("SEMIFLOWS_HORIZON", "9")
    assert parse(COLLAPSE).action.model.horizon == 9
    monkeypatch.setenv("SEMIFLOWS_HORIZON", "many")
    with pytest.raises(InstanceParseError):
        parse(COLLAPSE)


# -- reports -------------------------------------------------------------------

def test_report_round_trip_and_explain():
    inst = parse(COLLAPSE, "collapse")
    text = format_report(inst.name, [evaluate(inst, p) for p in ("tt", "pt", "tran")])
    name, claims = parse_report(text)
    assert name == "collapse"
    assert [(c.id, c.value, c.exact) for c in claims] == [("tt", "Fails", True), ("pt", "Holds", True),
                                                          ("tran", "{a}", True)]
    out = explain(text, "tt")
    assert out.startswith("tt on collapse: Fails") and "witness:" in out
    with pytest.raises(KeyError):
        explain(text, "st")
    with pytest.raises(ReportParseError):
        parse_report("semiflow-report 1\nclaim tt\n")


# -- cases ---------------------------------------------------------------------

def test_registry_lists_every_case():
    assert list(CASES) == CASE_IDS
    assert all(c.streams and c.title for c in CASES.values())


def test_known_non_t1_counterexample_fails_literal_case():
    outcome, note = CASES["meagre_orbit_tran_dense"].evaluate(parse(NON_T1, "non-T1"))
    assert outcome == cases.FAIL
    assert "tt=Fails" in note


def test_suite_is_deterministic_and_replayable():
    a = format_suite(run_suite(["tt_characterizations", "orbit_chase_tt"], 15, 3), 3, 15)
    b = format_suite(run_suite(["tt_characterizations", "orbit_chase_tt"], 15, 3), 3, 15)
    assert a == b
    assert a.splitlines()[0] == "semiflow-suite 1 seed=3 count=15"


def test_failure_replay_reproduces():
    res = cases.CaseResult("meagre_orbit_tran_dense")
    case = CASES[res.case]
    res.add(parse(NON_T1, "non-T1"), *case.evaluate(parse(NON_T1, "non-T1")))
    assert res.failed == 1
    replayed = parse(res.failures[0]["replay"])
    assert case.evaluate(replayed)[0] == cases.FAIL


def test_run_case_until_applicable():
    res = run_case("abelian_surjective_pt_tt", seed=0, applicable=10)
    assert res.applicable == 10 and res.failed == 0


# -- command line ----------------------------------------------------------------

@pytest.fixture
def collapse_file(tmp_path):
    p = tmp_path / "collapse.sf"
    p.write_text(COLLAPSE)
    return p


def test_cli_check(collapse_file, capsys):
    assert main(["check", str(collapse_file), "-p", "tt", "-p", "equicontinuous"]) == 0
    out = capsys.readouterr().out
    assert "claim tt Fails exact=true" in out and "claim equicontinuous Holds" in out


def test_cli_explain(collapse_file, tmp_path, capsys):
    main(["check", str(collapse_file)])
    report = tmp_path / "r.txt"
    report.write_text(capsys.readouterr().out)
    assert main(["explain", str(report), "pt"]) == 0
    assert "pt on collapse.sf: Holds" in capsys.readouterr().out
    assert main(["explain", str(report), "ut"]) == 2


def test_cli_catalog_exit_codes(capsys):
    assert main(["catalog", "rotation", "--n", "4"]) == 0
    assert main(["catalog", "ex4_10"]) == 0           # discrepancies are reported, not failures
    assert "discrepancy" in capsys.readouterr().out
    assert main(["catalog", "ex4_8", "--N", "3"]) == 2


def test_cli_suite_exit_codes(capsys):
    assert main(["suite", "--case", "tt_characterizations", "--count", "5"]) == 0
    assert main(["suite", "--case", "nope"]) == 2
    assert main(["suite", "--count", "-1"]) == 2


@pytest.mark.parametrize("argv", [[], ["check"], ["check", "/nonexistent/file"], ["frobnicate"]])
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error:")
