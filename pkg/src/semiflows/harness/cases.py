"""Implication checks over random instances.

Each case names a premise and a conclusion. On an instance the case is either
not applicable (premise false), inconclusive (some verdict it relies on is not
exact), or asserted, in which case it passes or fails. Failures keep the
canonical instance text so they can be replayed with ``semiflows check``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, combinations
from typing import Callable

from .. import stability as stab
from .. import structure as struct
from .. import transitivity as tr
from ..action import is_permutation
from ..instance import Instance
from ..semigroup import is_right_C, is_syndetic, is_thick
from ..verdict import Verdict
from .generate import GenConfig, generate
from .instance_file import canonical

NA, PASS, FAIL, INCONCLUSIVE = "not-applicable", "pass", "fail", "inconclusive"


class _Skip(Exception):
    """Raised inside a check to leave the instance out."""

    def __init__(self, outcome: str, note: str = ""):
        super().__init__(note)
        self.outcome = outcome
        self.note = note


def _need(cond: bool, why: str = "") -> None:
    if not cond:
        raise _Skip(NA, why)


def _exact(*vs: Verdict) -> None:
    bad = [v for v in vs if not v.exact]
    if bad:
        raise _Skip(INCONCLUSIVE, "a verdict is horizon-limited")


@dataclass(frozen=True)
class TheoremCase:
    id: str
    title: str
    streams: tuple[tuple[str, GenConfig], ...]
    check: Callable[[Instance], tuple[bool, str]]

    def evaluate(self, inst: Instance) -> tuple[str, str]:
        try:
            ok, note = self.check(inst)
        except _Skip as skip:
            return skip.outcome, skip.note
        return (PASS if ok else FAIL), note


DEFAULT = GenConfig()
MONOGENIC = GenConfig(min_points=3, max_generators=1, discrete_share=0.0, preorder_density=0.5)


def _s(*profiles, cfg=DEFAULT):
    return tuple((p, cfg) for p in profiles)


# -- checks ---------------------------------------------------------------------


def _tt_characterizations(inst):
    a, top = inst.action, inst.topology
    v1 = tr.is_TT(a, top)
    v2, v3 = tr.is_TT_via_invariant_sets(a, top)
    _exact(v1, v2, v3)
    values = {str(v.value) for v in (v1, v2, v3)}
    return len(values) == 1, f"tt={v1.value} invariant={v2.value} negative={v3.value}"


def _flow_invariant_open_dense(inst):
    a, top = inst.action, inst.topology
    _need(all(is_permutation(t) for t in a.tables), "generators not bijective")
    tt, dense = tr.is_TT(a, top), tr.invariant_open_sets_dense(a, top)
    return tt.value == dense.value, f"tt={tt.value} invariant_open_dense={dense.value}"


def _minimal_points_prerecurrent(inst):
    a, top = inst.action, inst.topology
    extra = tr.minimal_points(a, top) - tr.prerecurrent_points(a, top)
    return not extra, f"minimal but not prerecurrent: {a.label(extra)}"


def _ap_points_prerecurrent(inst):
    a, top = inst.action, inst.topology
    verdicts = tr.almost_periodic_verdicts(a, top)
    _exact(*verdicts.values())
    ap = {x for x, v in verdicts.items() if v.holds_}
    extra = ap - tr.prerecurrent_points(a, top)
    return not extra, f"almost periodic but not prerecurrent: {a.label(extra)}"


def _pt(inst):
    tran = tr.transitive_points(inst.action, inst.topology)
    _need(bool(tran), "not point-transitive")
    return tran


def _transitive_prerecurrent_tt(inst):
    a, top = inst.action, inst.topology
    tran = _pt(inst)
    _need(bool(tran & tr.prerecurrent_points(a, top)), "no prerecurrent transitive point")
    tt = tr.is_TT(a, top)
    return tt.holds_, f"tt={tt.value}"


def _orbit_chase_tt(inst):
    _pt(inst)
    d = tr.pt_implies_tt_diagnosis(inst.action, inst.topology)
    return d["conditions"]["orbit_chase"] == d["tt"].holds_, \
        f"chase={d['conditions']['orbit_chase']} tt={d['tt'].value}"


def _limit_of_prerecurrent_tt(inst):
    a, top = inst.action, inst.topology
    tran = _pt(inst)
    _need(bool(tran & top.closure(tr.prerecurrent_points(a, top))), "Tran misses cls(prerecurrent)")
    tt = tr.is_TT(a, top)
    return tt.holds_, f"tt={tt.value}"


def _dense_recurrent_points_tt(inst):
    a, top = inst.action, inst.topology
    _pt(inst)
    verdicts = tr.almost_periodic_verdicts(a, top)
    ap = frozenset(x for x, v in verdicts.items() if v.holds_)
    if not top.is_dense(tr.minimal_points(a, top)):
        _exact(*verdicts.values())
        _need(top.is_dense(ap), "neither minimal nor almost periodic points are dense")
    tt = tr.is_TT(a, top)
    return tt.holds_, f"tt={tt.value}"


def _abelian_surjective_pt_tt(inst):
    a, top = inst.action, inst.topology
    _need(a.generators_commute, "generators do not commute")
    _need(a.surjectivity_profile()["surjective"], "not surjective")
    tran = _pt(inst)
    forward, _ = a.invariance(tran)
    tt = tr.is_TT(a, top)
    return forward and tt.holds_, f"Tran forward-invariant={forward} tt={tt.value}"


def _abelian_ut_pt_tt(inst):
    a, top = inst.action, inst.topology
    _need(a.generators_commute, "generators do not commute")
    tran = _pt(inst)
    _need(struct.is_UT(a, top, max_points=None).holds_, "not UT")
    forward, _ = a.invariance(tran)
    tt = tr.is_TT(a, top)
    return forward and tt.holds_, f"Tran forward-invariant={forward} tt={tt.value}"


def _discrete_metric(inst):
    """Compact Hausdorff forms: a finite Hausdorff space is discrete, and the
    uniformity is the full metric one (no resolution floor)."""
    _need(inst.topology.is_discrete, "topology is not discrete")
    _need(inst.metric is not None, "no metric")
    return inst.action, inst.topology, inst.metric


def _equicontinuous(inst):
    a, top, ms = _discrete_metric(inst)
    return stab.is_equicontinuous(a, ms)


def _tt_equi_within_tran(inst):
    a, top, ms = _discrete_metric(inst)
    _need(tr.is_TT(a, top).holds_, "not TT")
    extra = stab.equi_points(a, ms) - tr.transitive_points(a, top)
    return not extra, f"equicontinuity points outside Tran: {a.label(extra)}"


def _equicontinuous_tt_iff_minimal(inst):
    a, top, _ = _discrete_metric(inst)
    _need(_equicontinuous(inst).holds_, "not equicontinuous")
    tt, minimal = tr.is_TT(a, top), tr.is_minimal(a, top)
    return tt.value == minimal.value, f"tt={tt.value} minimal={minimal.value}"


def _minimal_abelian_surjective(inst):
    a, top, _ = _discrete_metric(inst)
    _need(a.generators_commute, "generators do not commute")
    _need(tr.is_minimal(a, top).holds_, "not minimal")
    surjective = a.surjectivity_profile()["surjective"]
    return surjective, f"surjective={surjective}"


def _distal_invertible(inst):
    a, top, _ = _discrete_metric(inst)
    invertible = a.surjectivity_profile()["invertible"]
    distal = stab.is_distal(a)
    equi = _equicontinuous(inst)
    _need(distal.holds_ or (equi.holds_ and invertible), "neither distal nor equicontinuous surjective")
    ok = (not distal.holds_ or invertible) and (not (equi.holds_ and invertible) or distal.holds_)
    return ok, f"distal={distal.value} invertible={invertible} equicontinuous={equi.value}"


def _ut_equicontinuous_invertible(inst):
    a, top, _ = _discrete_metric(inst)
    _need(struct.is_UT(a, top, max_points=None).holds_, "not UT")
    equi = _equicontinuous(inst)
    invertible = a.surjectivity_profile()["invertible"]
    return equi.holds_ and invertible, f"equicontinuous={equi.value} invertible={invertible}"


def _tt_equicontinuous_abelian_ut(inst):
    a, top, _ = _discrete_metric(inst)
    _need(a.generators_commute, "generators do not commute")
    _need(tr.is_TT(a, top).holds_, "not TT")
    _need(_equicontinuous(inst).holds_, "not equicontinuous")
    ut = struct.is_UT(a, top, max_points=None)
    return ut.holds_, f"ut={ut.value}"


def _abelian_ut_iff_equicontinuous(inst):
    a, top, _ = _discrete_metric(inst)
    _need(a.generators_commute, "generators do not commute")
    _need(tr.is_TT(a, top).holds_, "not TT")
    ut, equi = struct.is_UT(a, top, max_points=None), _equicontinuous(inst)
    return ut.value == equi.value, f"ut={ut.value} equicontinuous={equi.value}"


def _ut_distal_minimal(inst):
    a, top = inst.action, inst.topology
    _need(struct.is_UT(a, top, max_points=None).holds_, "not UT")
    distal = stab.is_distal(a)
    pt, minimal = tr.is_PT(a, top), tr.is_minimal(a, top)
    ok = distal.holds_ and (not pt.holds_ or minimal.holds_)
    return ok, f"distal={distal.value} pt={pt.value} minimal={minimal.value}"


def _ut_invariant_measure(inst):
    a, top = inst.action, inst.topology
    _need(struct.is_UT(a, top, max_points=None).holds_, "not UT")
    mu = struct.invariant_measure(a)
    ok = mu is not None and mu.is_invariant(a)
    return ok, f"measure={None if mu is None else mu.weights}"


def _tran_dense_and_tt(inst, tran):
    a, top = inst.action, inst.topology
    dense = top.is_dense(tran)
    tt = tr.is_TT(a, top)
    return dense and tt.holds_, f"Tran={a.label(tran)} dense={dense} tt={tt.value}"


def _meagre_orbit_tran_dense(inst):
    """PT, almost right C and a transitive orbit without interior give a dense Tran and TT."""
    a, top = inst.action, inst.topology
    _need(bool(is_right_C(a.model).certificate.get("almost_right_C")), "not almost right C")
    tran = _pt(inst)
    _need(any(not top.interior(a.orbit(x)) for x in tran), "every transitive orbit has interior")
    return _tran_dense_and_tt(inst, tran)


def _perfect_tran_dense(right_c: bool):
    def check(inst):
        a, top = inst.action, inst.topology
        rc = is_right_C(a.model)
        _need(rc.holds_ if right_c else bool(rc.certificate.get("almost_right_C")), "not right C")
        _need(not top.isolated_points(), "has isolated points")
        return _tran_dense_and_tt(inst, _pt(inst))
    return check


def _tt_dense_ap_st(inst):
    a, top = inst.action, inst.topology
    _need(tr.is_TT(a, top).holds_, "not TT")
    verdicts = tr.almost_periodic_verdicts(a, top)
    _exact(*verdicts.values())
    _need(top.is_dense({x for x, v in verdicts.items() if v.holds_}), "AP points not dense")
    st = tr.is_ST(a, top)
    _exact(st)
    return st.holds_, f"st={st.value}"


def _thick_stability_uniform(inst):
    _need(inst.metric is not None, "no metric")
    a, ms = inst.action, inst.metric
    menu = ms.scale_menu(inst.floor)
    _need(bool(menu), "floor above every distance")
    verdicts = []
    for eps in menu:
        for x in range(a.n):
            # pointwise: some delta on the menu at or below eps gives a thick set
            found = None
            for delta in (d for d in menu if d <= eps):
                v = is_thick(a.model, stab.stability_times(a, ms, x, stab.ScalePair(eps, delta)).times)
                verdicts.append(v)
                if v.holds_:
                    found = v
                    break
            _need(found is not None, "not pointwise thickly stable")
    _exact(*verdicts)
    uniform = stab.is_thickly_stable(a, ms, inst.floor)
    _exact(uniform)
    return uniform.holds_, f"uniform={uniform.value} delta={uniform.certificate.get('delta')}"


def _uap_iff_equicontinuous_surjective(inst):
    a, top, ms = _discrete_metric(inst)
    uap = stab.is_uniformly_almost_periodic(a, ms)
    _exact(uap)
    equi = stab.is_equicontinuous(a, ms)
    surjective = a.surjectivity_profile()["surjective"]
    return uap.holds_ == (equi.holds_ and surjective), \
        f"uap={uap.value} equicontinuous={equi.value} surjective={surjective}"


def _subsets(n):
    return chain.from_iterable(combinations(range(n), r) for r in range(1, n + 1))


def _measure_return_syndetic(inst):
    a = inst.action
    _need(inst.measure is not None, "no measure")
    mu = struct.RationalMeasure(inst.measure)
    _need(mu.is_invariant(a), "measure is not invariant")
    bad, verdicts = [], []
    for A in _subsets(a.n):
        if mu(A) == 0:
            continue
        _, v = struct.recurrence_return_set(a, mu, A)
        verdicts.append(v)
        if v.fails_:
            bad.append(a.label(A))
    _exact(*verdicts)
    return not bad, f"{len(verdicts)} sets, non-syndetic: {bad[:3]}"


def _e_semiflow_st(inst):
    a, top = inst.action, inst.topology
    _need(struct.is_E_semiflow(a, top).holds_, "not an E-semiflow")
    st = tr.is_ST(a, top)
    _exact(st)
    return st.holds_, f"st={st.value}"


def _st_metric(inst):
    _need(inst.metric is not None, "no metric")
    a, top = inst.action, inst.topology
    st = tr.is_ST(a, top)
    _need(st.holds_, "not ST")
    _exact(st)
    return a, top, inst.metric


def balls_are_neighbourhoods(inst) -> bool:
    """Every finest admissible ball contains an open set around its centre."""
    ms, top = inst.metric, inst.topology
    delta = ms.scale_menu(inst.floor)[0]
    return all(top.min_open[x] <= ms.entourage_ball(x, delta) for x in range(inst.action.n))


def separated_nonminimality(inst) -> dict | None:
    """A proper closed invariant set and a point that some admissible eta
    keeps apart, ``eta[q] & eta[L] = {}``, with an admissible eps <= eta/4."""
    a, top, ms = inst.action, inst.topology, inst.metric
    menu = ms.scale_menu(inst.floor)
    etas = [eta for eta in menu if menu[0] * 4 <= eta]
    for L in sorted({top.closure(a.orbit(x)) for x in range(a.n)} - {top.full}, key=sorted):
        for eta in etas:
            near_L = frozenset().union(*(ms.entourage_ball(p, eta) for p in L))
            for q in sorted(set(range(a.n)) - L):
                if not ms.entourage_ball(q, eta) & near_L:
                    return {"L": a.label(L), "q": a.points[q], "eta": str(eta)}
    return None


def _uniform_premises(inst, require_separation: bool) -> None:
    """The uniformity must see what the topology sees: its balls are
    neighbourhoods and, for non-minimal systems, it separates a closed
    invariant set from a point at a scale where a quarter scale exists."""
    _need(balls_are_neighbourhoods(inst), "floor balls are not neighbourhoods")
    if require_separation:
        _need(separated_nonminimality(inst) is not None, "non-minimality not visible at the floor")


def nonminimal_st_literal(inst):
    """Non-minimal ST implies syndetic sensitivity, without the uniformity premises."""
    a, top, ms = _st_metric(inst)
    minimal = tr.is_minimal(a, top)
    _exact(minimal)
    _need(minimal.fails_, "minimal")
    ss = stab.is_syndetically_sensitive(a, ms, inst.floor)
    _exact(ss)
    return ss.holds_, f"syndetically sensitive={ss.value} floor={inst.floor}"


def _st_nonminimal_syndetically_sensitive(inst):
    a, top, _ = _st_metric(inst)
    _need(tr.is_minimal(a, top).fails_, "minimal")
    _uniform_premises(inst, require_separation=True)
    return nonminimal_st_literal(inst)


def _dichotomy(key):
    def check(inst):
        a, top, ms = _st_metric(inst)
        _uniform_premises(inst, require_separation=tr.is_minimal(a, top).fails_)
        report = stab.dichotomy_ST(a, ms, top, inst.floor)
        _need(key in report, "dichotomy does not apply")
        r = report[key]
        if not r["exact"]:
            raise _Skip(INCONCLUSIVE, "a horn is horizon-limited")
        return not r["violation"], f"first={r['first'].value} second={r['second'].value}"
    return check


CASES: dict[str, TheoremCase] = {c.id: c for c in [
    TheoremCase("tt_characterizations", "the three TT characterizations agree",
                _s("generic"), _tt_characterizations),
    TheoremCase("flow_invariant_open_dense", "for flows, TT iff nonempty open invariant sets are dense",
                _s("permutation"), _flow_invariant_open_dense),
    TheoremCase("minimal_points_prerecurrent", "minimal points are prerecurrent",
                _s("generic", "commuting", "permutation"), _minimal_points_prerecurrent),
    TheoremCase("ap_points_prerecurrent", "almost periodic points are prerecurrent",
                _s("generic", "commuting", "permutation"), _ap_points_prerecurrent),
    TheoremCase("transitive_prerecurrent_tt", "PT with a prerecurrent transitive point is TT",
                _s("generic", "commuting"), _transitive_prerecurrent_tt),
    TheoremCase("orbit_chase_tt", "under PT, TT iff one transitive orbit chases every pair of opens",
                _s("generic", "commuting"), _orbit_chase_tt),
    TheoremCase("limit_of_prerecurrent_tt", "PT with a transitive limit of prerecurrent points is TT",
                _s("generic", "commuting"), _limit_of_prerecurrent_tt),
    TheoremCase("dense_recurrent_points_tt", "PT with dense minimal or almost periodic points is TT",
                _s("generic", "commuting", "permutation"), _dense_recurrent_points_tt),
    TheoremCase("abelian_surjective_pt_tt", "abelian surjective PT: Tran is invariant and TT holds",
                _s("surjective", "commuting"), _abelian_surjective_pt_tt),
    TheoremCase("abelian_ut_pt_tt", "abelian PT and UT: TT holds",
                _s("surjective", "commuting", "permutation"), _abelian_ut_pt_tt),
    TheoremCase("tt_equi_within_tran", "TT on a compact space: equicontinuity points are transitive",
                _s("generic", "commuting", "permutation"), _tt_equi_within_tran),
    TheoremCase("equicontinuous_tt_iff_minimal", "equicontinuous: TT iff minimal",
                _s("generic", "commuting", "permutation"), _equicontinuous_tt_iff_minimal),
    TheoremCase("minimal_abelian_surjective", "minimal with abelian T is surjective",
                _s("commuting", "surjective", "generic"), _minimal_abelian_surjective),
    TheoremCase("distal_invertible", "distal is invertible; equicontinuous surjective is distal",
                _s("generic", "permutation", "commuting"), _distal_invertible),
    TheoremCase("ut_equicontinuous_invertible", "UT is equicontinuous and invertible",
                _s("permutation", "surjective", "generic"), _ut_equicontinuous_invertible),
    TheoremCase("tt_equicontinuous_abelian_ut", "TT equicontinuous with abelian T is UT",
                _s("commuting", "surjective"), _tt_equicontinuous_abelian_ut),
    TheoremCase("abelian_ut_iff_equicontinuous", "TT with abelian T: UT iff equicontinuous",
                _s("commuting", "surjective"), _abelian_ut_iff_equicontinuous),
    TheoremCase("ut_distal_minimal", "UT is distal, and UT with PT is minimal",
                _s("permutation"), _ut_distal_minimal),
    TheoremCase("ut_invariant_measure", "UT admits an invariant measure",
                _s("permutation", "surjective", "generic"), _ut_invariant_measure),
    TheoremCase("meagre_orbit_tran_dense",
                "almost right C, PT, a transitive orbit without interior: Tran dense and TT",
                _s("generic", cfg=MONOGENIC), _meagre_orbit_tran_dense),
    TheoremCase("perfect_right_c_tran_dense", "right C, PT, no isolated points: Tran dense and TT",
                _s("generic", cfg=MONOGENIC), _perfect_tran_dense(right_c=True)),
    TheoremCase("perfect_countable_tran_dense",
                "countable almost right C, PT, no isolated points: Tran dense and TT",
                _s("generic", cfg=MONOGENIC) + _s("generic"), _perfect_tran_dense(right_c=False)),
    TheoremCase("tt_dense_ap_st", "TT with dense almost periodic points is ST",
                _s("permutation", "generic", "shift"), _tt_dense_ap_st),
    TheoremCase("thick_stability_uniform", "pointwise thick stability has a uniform delta",
                _s("monogenic-sampled-interval-map", "shift", "permutation"), _thick_stability_uniform),
    TheoremCase("uap_iff_equicontinuous_surjective", "UAP iff equicontinuous surjective",
                _s("generic", "permutation", "commuting"), _uap_iff_equicontinuous_surjective),
    TheoremCase("measure_return_syndetic", "positive-measure sets return syndetically",
                _s("measure-preserving"), _measure_return_syndetic),
    TheoremCase("e_semiflow_st", "E-semiflows are ST",
                _s("permutation", "measure-preserving", "shift"), _e_semiflow_st),
    TheoremCase("st_nonminimal_syndetically_sensitive", "non-minimal ST is syndetically sensitive",
                _s("monogenic-sampled-interval-map", "shift"), _st_nonminimal_syndetically_sensitive),
    TheoremCase("st_dichotomy_thick", "ST: syndetically sensitive or minimal thickly stable",
                _s("monogenic-sampled-interval-map", "shift"), _dichotomy("syndetic_vs_thick")),
    TheoremCase("st_dichotomy_equicontinuous", "ST, almost right C: sensitive or minimal equicontinuous",
                _s("monogenic-sampled-interval-map", "shift"), _dichotomy("sensitive_vs_equicontinuous")),
    TheoremCase("st_dichotomy_uap", "ST, abelian: sensitive or minimal UAP",
                _s("monogenic-sampled-interval-map", "shift"), _dichotomy("sensitive_vs_uap")),
]}


# -- running ----------------------------------------------------------------------


@dataclass
class CaseResult:
    case: str
    drawn: int = 0
    applicable: int = 0
    passed: int = 0
    failed: int = 0
    inconclusive: int = 0
    failures: list[dict] = field(default_factory=list)

    def add(self, inst: Instance, outcome: str, note: str) -> None:
        self.drawn += 1
        if outcome == NA:
            return
        self.applicable += 1
        if outcome == PASS:
            self.passed += 1
        elif outcome == INCONCLUSIVE:
            self.inconclusive += 1
        else:
            self.failed += 1
            self.failures.append({"instance": inst.name, "note": note, "replay": canonical(inst)})

    @property
    def inconclusive_rate(self) -> Fraction:
        return Fraction(self.inconclusive, self.applicable) if self.applicable else Fraction(0)


def instance_stream(case: TheoremCase, seed: int = 0):
    """Endless deterministic stream, cycling through the case's profiles."""
    i = 0
    while True:
        profile, cfg = case.streams[i % len(case.streams)]
        yield generate(seed * 1_000_003 + i, profile, cfg=cfg)
        i += 1


def run_case(case: TheoremCase | str, count: int = 100, seed: int = 0,
             applicable: int | None = None, max_draws: int | None = None) -> CaseResult:
    """Evaluate ``count`` drawn instances, or keep drawing until ``applicable``
    instances applied (bounded by ``max_draws``)."""
    if isinstance(case, str):
        case = CASES[case]
    res = CaseResult(case.id)
    limit = max_draws if applicable is not None else count
    if applicable is not None and limit is None:
        limit = 50 * applicable
    for inst in instance_stream(case, seed):
        if res.drawn >= limit or (applicable is not None and res.applicable >= applicable):
            break
        res.add(inst, *case.evaluate(inst))
    return res


def run_suite(case_ids=None, count: int = 100, seed: int = 0) -> list[CaseResult]:
    ids = list(CASES) if not case_ids else list(case_ids)
    unknown = [c for c in ids if c not in CASES]
    if unknown:
        raise KeyError(f"unknown case {unknown[0]!r}")
    return [run_case(CASES[c], count, seed) for c in ids]


def format_suite(results: list[CaseResult], seed: int, count: int) -> str:
    lines = [f"semiflow-suite 1 seed={seed} count={count}"]
    for r in results:
        lines.append(f"case {r.case} drawn={r.drawn} applicable={r.applicable} pass={r.passed} "
                     f"fail={r.failed} inconclusive={r.inconclusive}")
    for r in results:
        for f in sorted(r.failures, key=lambda f: f["instance"]):
            lines.append(f"failure {r.case} {f['instance']}: {f['note']}")
            lines.extend("  " + line for line in f["replay"].splitlines())
    return "\n".join(lines) + "\n"
