"""Acceptance criteria, one test each.

Every test records a ``criterion N: PASS|FAIL ...`` line, printed again in the
terminal summary. Two criteria state implications that do not hold on the
finite instances they are run over; those tests keep their full strength and
are marked as expected failures.
"""
import itertools
import random
import time
from fractions import Fraction as F

import pytest

from semiflows import catalog
from semiflows.harness import cases
from semiflows.harness.cases import CASES, CaseResult, MONOGENIC, run_case
from semiflows.harness.cli import main
from semiflows.harness.generate import GenConfig, generate
from semiflows.periodic import EventuallyPeriodic
from semiflows.semigroup import SemigroupModel, TSubset, is_syndetic, is_thick
from semiflows.structure import RationalMeasure, invariant_measure


@pytest.fixture
def record(request):
    lines = request.config.__dict__.setdefault("acceptance_lines", [])

    def emit(n, ok, started, detail):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - started:.1f}s) {detail}"
        lines.append(line)
        print(line)
    return emit


def _summary(r: CaseResult) -> str:
    return (f"{r.case}: drawn={r.drawn} applicable={r.applicable} pass={r.passed} fail={r.failed} "
            f"inconclusive={r.inconclusive} ({float(r.inconclusive_rate):.1%})")


def _over(case_id, instances) -> CaseResult:
    case = CASES[case_id]
    res = CaseResult(case_id)
    for inst in instances:
        res.add(inst, *case.evaluate(inst))
    return res


def _findings(entry_id, **params):
    return {f.property: f for f in catalog.verify(catalog.build(entry_id, **params))}


# -- catalog -----------------------------------------------------------------------

def test_saturating_translation(record, capsys):
    t0 = time.perf_counter()
    code = main(["catalog", "ex1_3", "--N", "20"])
    out = capsys.readouterr().out
    f = _findings("ex1_3", N=20)
    elapsed = time.perf_counter() - t0
    tt = f["tt"].computed
    ok = (code == 0 and f["pt"].computed.value == "Holds" and f["tran"].computed.value == "{0}"
          and tt.value == "Fails" and bool(tt.certificate.get("U")) and bool(tt.certificate.get("V"))
          and "claim tt Fails" in out and elapsed < 1)
    record(1, ok, t0, f"tran={f['tran'].computed.value} tt witness U={tt.certificate.get('U')} "
                      f"V={tt.certificate.get('V')}")
    assert ok


def test_collapse_to_fixed_point(record):
    t0 = time.perf_counter()
    f = _findings("ex4_8")
    ok = (f["equicontinuous"].computed.value == "Holds" and f["tran"].computed.value == "{a}"
          and f["minimal"].computed.value == "Fails" and time.perf_counter() - t0 < 1)
    record(2, ok, t0, "equicontinuous=Holds tran={a} minimal=Fails" if ok else str(f))
    assert ok


def test_free_saturating_translations(record):
    t0 = time.perf_counter()
    f = _findings("ex4_4", N=20)
    ok = (all(f[p].status == "match" for p in ("tt", "pt", "ut", "aut_orbit_inf"))
          and f["aut_orbit_inf"].computed.value == "{inf}" and time.perf_counter() - t0 < 5)
    record(3, ok, t0, f"tt={f['tt'].computed.value} pt={f['pt'].computed.value} ut={f['ut'].computed.value} "
                      f"aut orbit of inf={f['aut_orbit_inf'].computed.value}")
    assert ok


def test_truncated_shift(record):
    t0 = time.perf_counter()
    f = _findings("ex6_2", alphabet=2, window=3)
    st, mix = f["st"].computed, f["strong_mixing"].computed
    st_certs = st.certificate.get("certificates") or []
    mix_certs = mix.certificate.get("certificates") or []
    ok = (st.value == "Holds" and st.exact and mix.value == "Holds" and mix.exact
          and st_certs and all(c.get("K") for c in st_certs)
          and mix_certs and all(c.get("cofinite") for c in mix_certs)
          and time.perf_counter() - t0 < 10)
    record(4, ok, t0, f"st=Holds over {len(st_certs)} cylinder pairs, strong mixing=Holds over {len(mix_certs)}")
    assert ok


def test_squaring_adjudication(record):
    t0 = time.perf_counter()
    f = _findings("ex4_10", depth=6)
    statuses = {p: f[p].status for p in ("tran", "equi_points")}
    ok = (all(s in ("match", "discrepancy") for s in statuses.values())
          and all(f[p].computed.exact for p in statuses) and time.perf_counter() - t0 < 5)
    record(5, ok, t0, f"tran {statuses['tran']} ({f['tran'].computed.value}), "
                      f"equi {statuses['equi_points']}")
    assert ok


# -- implications over random instances ------------------------------------------------

def test_tt_characterizations(record):
    t0 = time.perf_counter()
    r = run_case("tt_characterizations", count=1000, seed=0)
    ok = r.failed == 0 and r.passed == r.applicable == 1000 and time.perf_counter() - t0 < 60
    record(6, ok, t0, _summary(r))
    assert ok


def test_abelian_surjective_point_transitivity(record):
    t0 = time.perf_counter()
    r = run_case("abelian_surjective_pt_tt", seed=0, applicable=500)
    ut = run_case("abelian_ut_pt_tt", count=500, seed=0)
    ok = (r.applicable == 500 and r.failed == 0 and r.inconclusive == 0 and ut.failed == 0
          and time.perf_counter() - t0 < 60)
    record(7, ok, t0, f"{_summary(r)}; {_summary(ut)}")
    assert ok


def test_point_class_inclusions(record):
    t0 = time.perf_counter()
    rs = [run_case(c, count=1000, seed=0) for c in ("minimal_points_prerecurrent", "ap_points_prerecurrent")]
    ok = all(r.failed == 0 and r.applicable == 1000 for r in rs)
    record(8, ok, t0, "; ".join(_summary(r) for r in rs))
    assert ok


def test_universal_transitivity_consequences(record):
    t0 = time.perf_counter()
    insts = [generate(i, "permutation") for i in range(500)]
    rs = [_over(c, insts) for c in ("ut_distal_minimal", "ut_invariant_measure")]
    ok = all(r.failed == 0 and r.inconclusive == 0 for r in rs) and rs[0].applicable > 0
    record(9, ok, t0, "; ".join(_summary(r) for r in rs))
    assert ok


def _monogenic_measure_preserving(count):
    seed = 0
    while count:
        inst = generate(seed, "measure-preserving")
        seed += 1
        if inst.action.model.kind == "monogenic":
            count -= 1
            yield inst


def test_measure_recurrence(record):
    t0 = time.perf_counter()
    r = _over("measure_return_syndetic", _monogenic_measure_preserving(200))
    ok = (r.applicable == 200 and r.failed == 0 and r.inconclusive == 0 and time.perf_counter() - t0 < 120)
    record(10, ok, t0, _summary(r))
    assert ok


@pytest.mark.xfail(strict=True, reason="unconditional form fails on finite samples whose topology is "
                                       "not the metric one; the gated case st_nonminimal_syndetically_sensitive "
                                       "covers the premises under which it holds")
def test_nonminimal_st_sensitivity(record):
    t0 = time.perf_counter()
    case = cases.TheoremCase("nonminimal_st_literal", "", CASES["st_nonminimal_syndetically_sensitive"].streams,
                             cases.nonminimal_st_literal)
    r = run_case(case, count=100, seed=0)
    ok = r.applicable > 0 and r.failed == 0 and time.perf_counter() - t0 < 120
    example = r.failures[0]["instance"] if r.failures else "-"
    record(11, ok, t0, f"{_summary(r)}; first counterexample {example}")
    assert ok


def _random_ep(rng):
    prefix = tuple(rng.random() < 0.5 for _ in range(rng.randint(0, 8)))
    density = rng.choice([0.2, 0.5, 0.8, 1.0])
    cycle = tuple(rng.random() < density for _ in range(rng.randint(1, 8)))
    if rng.random() < 0.1:
        cycle = (False,) * len(cycle)
    return EventuallyPeriodic(prefix, cycle)


def _scan(desc, horizon):
    """Syndetic: every window of half the horizon meets the set; thick: some such window lies inside it."""
    bits = [t in desc for t in range(horizon)]
    w = horizon // 2
    windows = [bits[s:s + w] for s in range(horizon - w + 1)]
    return all(any(win) for win in windows), any(all(win) for win in windows)


def _brute_measure_support(a):
    support, found = set(), False
    for den in range(1, 13):
        for parts in itertools.product(range(den + 1), repeat=a.n):
            if sum(parts) == den:
                mu = RationalMeasure(tuple(F(p, den) for p in parts))
                if mu.is_invariant(a):
                    found = True
                    support |= mu.support
    return found, support


def test_oracle_equivalence(record):
    t0 = time.perf_counter()
    rng = random.Random(0)
    model = SemigroupModel("monogenic", ("f",))
    ep_bad = 0
    for _ in range(500):
        desc = _random_ep(rng)
        A = TSubset.periodic(model, desc)
        horizon = 10 * (len(desc.prefix) + len(desc.cycle))
        syndetic, thick = _scan(desc, horizon)
        s, t = is_syndetic(model, A), is_thick(model, A)
        if not (s.exact and t.exact and s.holds_ == syndetic and t.holds_ == thick):
            ep_bad += 1
    cfg = GenConfig(min_points=1, max_points=4)
    mu_bad = 0
    for i in range(100):
        a = generate(i, ("generic", "commuting", "permutation", "surjective")[i % 4], cfg=cfg).action
        mu = invariant_measure(a)
        found, support = _brute_measure_support(a)
        if (mu is not None) != found or (mu is not None and (not mu.is_invariant(a) or mu.support != support)):
            mu_bad += 1
    ok = ep_bad == 0 and mu_bad == 0
    record(12, ok, t0, f"eventually periodic disagreements {ep_bad}/500, measure disagreements {mu_bad}/100")
    assert ok


def _monogenic_pt_no_interior(seed):
    i = 0
    while True:
        inst = generate(seed * 1_000_003 + i, "generic", cfg=MONOGENIC)
        i += 1
        a, top = inst.action, inst.topology
        if top.is_discrete:
            continue
        tran = [x for x in range(a.n) if top.is_dense(a.orbit(x))]
        if tran and not top.interior(a.orbit(tran[0])):
            yield inst


@pytest.mark.xfail(strict=True, reason="needs the transitive orbit to be closed in a T1 sense; finite "
                                       "non-T1 spaces give counterexamples")
def test_orbit_without_interior(record):
    t0 = time.perf_counter()
    stream = _monogenic_pt_no_interior(0)
    r = _over("meagre_orbit_tran_dense", (next(stream) for _ in range(300)))
    ok = r.applicable == 300 and r.failed == 0
    example = r.failures[0]["instance"] if r.failures else "-"
    record(13, ok, t0, f"{_summary(r)}; first counterexample {example}")
    assert ok
