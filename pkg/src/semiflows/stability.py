"""Stability-time sets, equicontinuity, sensitivity, distality and the ST dichotomies.

Scales range over ``ms.scale_menu(floor)``. Closed balls only change at
realized distances, so the menu is complete for every threshold at or above
the floor. Without a floor a finite space is trivially stable: any delta below
the least distance isolates each point. The floor models the resolution of a
sampled system, and every verdict records it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .action import FiniteAction
from .semigroup import StateOrbit, TSubset, is_right_C, is_syndetic, is_thick
from .space import FiniteTopology, MetricSpace
from .transitivity import is_minimal, is_ST
from .verdict import FAILS, UNKNOWN, Verdict, merge


@dataclass(frozen=True)
class ScalePair:
    eps: Fraction
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps", Fraction(self.eps))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.delta <= 0 or self.eps <= 0:
            raise ValueError("scales must be positive")
        if self.delta > self.eps:
            raise ValueError("delta must not exceed eps")


@dataclass(frozen=True)
class StabilityTimeSet:
    x: int
    scales: ScalePair
    times: TSubset

    @property
    def is_everything(self) -> bool:
        return not self.times.backing.bad


def _image_step(a: FiniteAction):
    def step(letter, state):
        table = a.letter_tables[letter]
        return tuple(table[y] for y in state)
    return step


def stability_times(a: FiniteAction, ms: MetricSpace, x: int, scales: ScalePair,
                    orbit: StateOrbit | None = None) -> StabilityTimeSet:
    """``{t : t(delta[x]) within eps of tx}``; the state is the image of ``delta[x]``, x first."""
    nbhd = (x,) + tuple(sorted(ms.entourage_ball(x, scales.delta) - {x}))
    eps = scales.eps

    def stable(state):
        row = ms.dist[state[0]]
        return all(row[y] <= eps for y in state[1:])

    times = TSubset.from_states(a.model, nbhd, _image_step(a), stable,
                                f"Ts[{a.points[x]}; eps={eps}, delta={scales.delta}]", orbit=orbit)
    return StabilityTimeSet(x, scales, times)


class _Scales:
    """Menu above the floor, with one state orbit per point at the finest delta.

    Stability sets grow as delta shrinks, so "some delta" and "every delta"
    are both decided at the least admissible delta, ``menu[0]``; it is at most
    every eps on the menu.
    """

    def __init__(self, a: FiniteAction, ms: MetricSpace, floor):
        self.a, self.ms = a, ms
        self.menu = ms.scale_menu(None if floor is None else Fraction(floor))
        if not ms.distances and floor is None:
            # a single point: every positive scale sees the same ball
            self.menu = (Fraction(1),)
        if not self.menu:
            raise ValueError("resolution floor exceeds every distance")
        self.delta = self.menu[0]
        self.orbits = {}

    def times(self, x: int, eps) -> StabilityTimeSet:
        orbit = self.orbits.get(x)
        if orbit is None:
            nbhd = (x,) + tuple(sorted(self.ms.entourage_ball(x, self.delta) - {x}))
            orbit = self.orbits[x] = StateOrbit(self.a.model, nbhd, _image_step(self.a))
        return stability_times(self.a, self.ms, x, ScalePair(eps, self.delta), orbit)

    def spread(self, x: int) -> Fraction:
        """Largest ``d(tx, ty)`` over t and y in ``delta[x]``."""
        orbit = self.times(x, self.menu[-1]).times.backing.orbit
        return max(max((self.ms.dist[s[0]][y] for y in s[1:]), default=Fraction(0))
                   for s in orbit.states)


def _scale(floor, **extra):
    return {"floor": None if floor is None else str(Fraction(floor)), **extra}


def equi_verdicts(a: FiniteAction, ms: MetricSpace, floor=None) -> dict[int, Verdict]:
    """Per point: for every eps some delta has stability set equal to T.

    At the finest delta this reads ``spread(x) <= eps`` for every eps on the
    menu, i.e. ``spread(x) <= menu[0]``. Exact: orbits are finite.
    """
    sc = _Scales(a, ms, floor)
    out = {}
    for x in range(a.n):
        spread = sc.spread(x)
        if spread <= sc.menu[0]:
            v = Verdict.holds(delta=str(sc.delta))
        else:
            eps = max(e for e in sc.menu if e < spread)
            v = Verdict.fails(eps=str(eps), spread=str(spread))
        out[x] = v.with_scale(**_scale(floor))
    return out


def equi_points(a: FiniteAction, ms: MetricSpace, floor=None) -> frozenset[int]:
    return frozenset(x for x, v in equi_verdicts(a, ms, floor).items() if v.holds_)


def is_equicontinuous(a: FiniteAction, ms: MetricSpace, floor=None) -> Verdict:
    verdicts = equi_verdicts(a, ms, floor)
    for x, v in verdicts.items():
        if v.fails_:
            return Verdict.fails(x=a.points[x], **v.certificate).with_scale(**_scale(floor))
    return Verdict.holds().with_scale(**_scale(floor))


def is_sensitive(a: FiniteAction, ms: MetricSpace, floor=None) -> Verdict:
    """Some eps such that every x and every delta has a time that separates."""
    sc = _Scales(a, ms, floor)
    least_spread = min(sc.spread(x) for x in range(a.n))
    below = [e for e in sc.menu if e < least_spread]
    if below:
        eps = below[-1]
        return Verdict.holds(eps=str(eps)).with_scale(**_scale(floor, eps=str(eps)))
    return Verdict.fails(reason="every eps has a point with a fully stable delta").with_scale(**_scale(floor))


def is_syndetically_sensitive(a: FiniteAction, ms: MetricSpace, floor=None) -> Verdict:
    """Some eps such that no stability set ``Ts(x; eps, delta)`` is thick."""
    sc = _Scales(a, ms, floor)
    pending = None
    for eps in sc.menu:
        verdicts = []
        for x in range(a.n):
            v = is_thick(a.model, sc.times(x, eps).times)
            verdicts.append(v)
            if v.holds_:
                break
        if any(v.holds_ for v in verdicts):
            continue
        if all(v.fails_ and v.exact for v in verdicts):
            return Verdict.holds(eps=str(eps)).with_scale(**_scale(floor, eps=str(eps)))
        pending = pending or next(v for v in verdicts if not (v.fails_ and v.exact))
    if pending is not None:
        return Verdict(UNKNOWN, {"reason": "thickness undecided"}, False,
                       pending.horizon or a.model.horizon, _scale(floor))
    return Verdict(FAILS, {"reason": "every eps has a thick stability set"}, True, None,
                   _scale(floor))


def is_thickly_stable(a: FiniteAction, ms: MetricSpace, floor=None) -> Verdict:
    """Every eps and x admit a delta whose stability set is thick."""
    sc = _Scales(a, ms, floor)
    verdicts = []
    for eps in sc.menu:
        for x in range(a.n):
            v = is_thick(a.model, sc.times(x, eps).times)
            if v.fails_:
                return Verdict(FAILS, {"eps": str(eps), "x": a.points[x]}, v.exact, v.horizon,
                               _scale(floor))
            verdicts.append(v)
    v = merge(verdicts, delta=str(sc.delta))
    return Verdict(v.value, v.certificate, v.exact, v.horizon, _scale(floor))


def uniform_return_set(a: FiniteAction, ms: MetricSpace, eps) -> TSubset:
    """``A_eps = {t : d(tx, x) <= eps for all x}``, the largest admissible A."""
    eps = Fraction(eps)
    return a.transformation_subset(lambda f: all(ms.dist[f[x]][x] <= eps for x in range(a.n)),
                                   f"A[{eps}]")


def is_uniformly_almost_periodic(a: FiniteAction, ms: MetricSpace, floor=None) -> Verdict:
    menu = _Scales(a, ms, floor).menu
    verdicts = []
    certs = {}
    for eps in menu:
        v = is_syndetic(a.model, uniform_return_set(a, ms, eps))
        if v.fails_:
            return Verdict(FAILS, {"eps": str(eps), **v.certificate}, v.exact, v.horizon,
                           _scale(floor))
        verdicts.append(v)
        certs[str(eps)] = v.certificate.get("K")
    v = merge(verdicts, K_for_eps=certs)
    return Verdict(v.value, v.certificate, v.exact, v.horizon, _scale(floor))


def is_distal(a: FiniteAction, ms: MetricSpace | None = None) -> Verdict:
    """No t merges a pair of distinct points. The infimum over t is a minimum
    over the finite pair orbit, so it is positive exactly when no pair merges."""
    for x in range(a.n):
        for y in range(x + 1, a.n):
            seen = {(x, y)}
            queue = deque([(x, y)])
            while queue:
                u, v = queue.popleft()
                if u == v:
                    return Verdict.fails(pair=[a.points[x], a.points[y]], merged_at=a.points[u])
                for table in a.letter_tables:
                    nxt = (table[u], table[v])
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
    return Verdict.holds()


def _exactly_one(first: Verdict, second: Verdict) -> dict:
    exact = first.decided and second.decided
    both = [first.holds_, second.holds_]
    return {"first": first, "second": second, "exact": exact,
            "violation": exact and sum(both) != 1}


def _and(*vs: Verdict) -> Verdict:
    return merge(vs)


def dichotomy_ST(a: FiniteAction, ms: MetricSpace, top: FiniteTopology, floor=None) -> dict:
    """Both horns of each dichotomy available for an ST semiflow.

    A violation is only reported when every sub-verdict is exact.
    """
    st = is_ST(a, top)
    if not st.holds_:
        raise ValueError("dichotomies need an ST semiflow")
    minimal = is_minimal(a, top)
    sens = is_sensitive(a, ms, floor)
    report = {
        "scale": _scale(floor),
        "syndetic_vs_thick": _exactly_one(is_syndetically_sensitive(a, ms, floor),
                                          _and(minimal, is_thickly_stable(a, ms, floor))),
    }
    if is_right_C(a.model).certificate.get("almost_right_C"):
        report["sensitive_vs_equicontinuous"] = _exactly_one(
            sens, _and(minimal, is_equicontinuous(a, ms, floor)))
    if a.generators_commute:
        report["sensitive_vs_uap"] = _exactly_one(
            sens, _and(minimal, is_uniformly_almost_periodic(a, ms, floor)))
    report["violation"] = any(r["violation"] for k, r in report.items() if isinstance(r, dict) and "violation" in r)
    report["inconclusive"] = any(not r["exact"] for k, r in report.items() if isinstance(r, dict) and "exact" in r)
    return report
