"""Transitivity, recurrence and prolongation predicates of a finite semiflow.

Basis reduction: ``N_T(U,V)`` shrinks when U shrinks and grows when V grows,
and ``N_T(x,U)`` likewise in U, so every "for all nonempty opens" quantifier
is decided on the minimal opens ``min_open[x]`` alone: if the property holds
for the minimal opens it holds for all opens containing them, and every
nonempty open contains one.
"""
from __future__ import annotations

from dataclasses import dataclass

from .action import FiniteAction
from .semigroup import (NotApplicable, StateOrbit, TSubset, is_cofinite, is_empty, is_infinite,
                        is_syndetic)
from .space import FiniteTopology
from .verdict import FAILS, Verdict, merge


def _pairs(top: FiniteTopology):
    for U in top.basis:
        for V in top.basis:
            yield U, V


class HittingSets:
    """Hitting sets of all basis pairs, sharing one state orbit per source open."""

    def __init__(self, a: FiniteAction, top: FiniteTopology):
        self.a, self.top = a, top
        self._orbits: dict[frozenset, StateOrbit] = {}

    def __call__(self, U: frozenset, V: frozenset) -> TSubset:
        orbit = self._orbits.get(U)
        if orbit is None:
            orbit = self._orbits[U] = StateOrbit(self.a.model, U, self.a.step_set)
        return TSubset.from_states(self.a.model, U, self.a.step_set, lambda S: bool(S & V),
                                   f"N({self.a._names(U)},{self.a._names(V)})", orbit=orbit)

    def pairs(self):
        for U, V in _pairs(self.top):
            yield U, V, self(U, V)


def _pair_cert(a, U, V) -> dict:
    return {"U": a.label(U), "V": a.label(V)}


def is_TT(a: FiniteAction, top: FiniteTopology) -> Verdict:
    hs = HittingSets(a, top)
    for U, V, N in hs.pairs():
        if is_empty(a.model, N).holds_:
            return Verdict.fails(**_pair_cert(a, U, V), reason="N(U,V) is empty")
    return Verdict.holds(pairs_checked=len(top.basis) ** 2)


def is_TT_brute(a: FiniteAction, top: FiniteTopology) -> bool:
    """TT over every pair of nonempty opens, via ``tU & V`` on the transformation monoid."""
    monoid = transformation_monoid(a)
    opens = [O for O in top.opens() if O]
    return all(any(any(f[u] in V for u in U) for f in monoid) for U in opens for V in opens)


def transformation_monoid(a: FiniteAction) -> set[tuple[int, ...]]:
    orbit = StateOrbit(a.model, a.identity_map, a.step_map)
    return set(orbit.states)


def invariant_hull(a: FiniteAction, top: FiniteTopology, x: int) -> frozenset[int]:
    """``T U_x``: the least forward-invariant set whose interior contains x."""
    return a.orbit_of_set(top.min_open[x])


def negative_invariant_open_hull(a: FiniteAction, top: FiniteTopology, x: int) -> frozenset[int]:
    """Least open, ``T^-1``-invariant set containing x."""
    S = {x}
    changed = True
    while changed:
        changed = False
        add = set()
        for y in S:
            add |= top.min_open[y]
        for table in a.letter_tables:
            add |= {z for z in range(a.n) if table[z] in S}
        if not add <= S:
            S |= add
            changed = True
    return frozenset(S)


def is_TT_via_invariant_sets(a: FiniteAction, top: FiniteTopology) -> tuple[Verdict, Verdict]:
    """(every invariant set with nonempty interior is dense,
        every nonempty open negatively invariant set is dense).

    Each family is decided on its least members, one per point, since density
    is monotone and every member contains the least member through any of its
    interior points.
    """
    v2 = Verdict.holds()
    for x in range(a.n):
        A = invariant_hull(a, top, x)
        if not top.is_dense(A):
            v2 = Verdict.fails(A=a.label(A), reason="invariant, nonempty interior, not dense")
            break
    v3 = Verdict.holds()
    for x in range(a.n):
        A = negative_invariant_open_hull(a, top, x)
        if not top.is_dense(A):
            v3 = Verdict.fails(U=a.label(A), reason="open, negatively invariant, not dense")
            break
    return v2, v3


def invariant_open_sets_dense(a: FiniteAction, top: FiniteTopology) -> Verdict:
    """Every nonempty open forward-invariant set is dense (the flow criterion)."""
    for x in range(a.n):
        S = {x}
        while True:
            grown = set(a.orbit_of_set(S))
            for y in list(grown):
                grown |= top.min_open[y]
            if grown == S:
                break
            S = grown
        if not top.is_dense(S):
            return Verdict.fails(U=a.label(S))
    return Verdict.holds()


def transitive_points(a: FiniteAction, top: FiniteTopology) -> frozenset[int]:
    return frozenset(x for x in range(a.n) if top.is_dense(a.orbit(x)))


def is_PT(a: FiniteAction, top: FiniteTopology) -> Verdict:
    tran = transitive_points(a, top)
    if tran:
        return Verdict.holds(tran=a.label(tran))
    return Verdict.fails(reason="no point has a dense orbit")


def is_minimal(a: FiniteAction, top: FiniteTopology) -> Verdict:
    for x in range(a.n):
        cl = top.closure(a.orbit(x))
        if cl != top.full:
            return Verdict.fails(x=a.points[x], orbit_closure=a.label(cl))
    return Verdict.holds()


def is_ST(a: FiniteAction, top: FiniteTopology) -> Verdict:
    hs = HittingSets(a, top)
    certs = []
    verdicts = []
    for U, V, N in hs.pairs():
        v = is_syndetic(a.model, N)
        if v.fails_:
            return Verdict(FAILS, {**_pair_cert(a, U, V), **v.certificate}, v.exact, v.horizon)
        verdicts.append(v)
        certs.append({**_pair_cert(a, U, V), "K": v.certificate.get("K")})
    return merge(verdicts, certificates=certs)


def is_strongly_mixing(a: FiniteAction, top: FiniteTopology) -> Verdict:
    if a.model.is_finite:
        raise NotApplicable("strong mixing needs an infinite phase semigroup")
    hs = HittingSets(a, top)
    verdicts = []
    certs = []
    for U, V, N in hs.pairs():
        v = is_cofinite(a.model, N)
        if v.fails_:
            return Verdict(FAILS, {**_pair_cert(a, U, V), **v.certificate}, v.exact, v.horizon)
        verdicts.append(v)
        certs.append({**_pair_cert(a, U, V), "cofinite": True})
    return merge(verdicts, certificates=certs)


def prerecurrent_points(a: FiniteAction, top: FiniteTopology) -> frozenset[int]:
    """x with ``x in cls(T s x)`` for every s; ``{sx : s in T}`` is the orbit of x."""
    out = set()
    for x in range(a.n):
        if all(x in top.closure(a.orbit(y)) for y in a.orbit(x)):
            out.add(x)
    return frozenset(out)


def minimal_points(a: FiniteAction, top: FiniteTopology) -> frozenset[int]:
    out = set()
    for x in range(a.n):
        cl = top.closure(a.orbit(x))
        if all(top.closure(a.orbit(y)) == cl for y in cl):
            out.add(x)
    return frozenset(out)


def almost_periodic_verdicts(a: FiniteAction, top: FiniteTopology) -> dict[int, Verdict]:
    return {x: is_syndetic(a.model, a.return_times(x, top.min_open[x])) for x in range(a.n)}


def almost_periodic_points(a: FiniteAction, top: FiniteTopology) -> frozenset[int]:
    return frozenset(x for x, v in almost_periodic_verdicts(a, top).items() if v.holds_)


def prolongation(a: FiniteAction, top: FiniteTopology, x: int) -> dict[int, Verdict]:
    """Per y: is y in the prolongation of x, i.e. is ``N(U_x, V_y)`` infinite.

    Outside every ball means of unbounded word length; finitely many elements
    have bounded length, so "some t outside every ball" is "infinitely many t".
    """
    if a.model.is_finite:
        raise NotApplicable("prolongation needs a non-compact (infinite) phase semigroup")
    hs = HittingSets(a, top)
    U = top.min_open[x]
    return {y: is_infinite(a.model, hs(U, top.min_open[y])) for y in range(a.n)}


def prolongation_set(a: FiniteAction, top: FiniteTopology, x: int) -> frozenset[int]:
    return frozenset(y for y, v in prolongation(a, top, x).items() if v.holds_)


def nonwandering_set(a: FiniteAction, top: FiniteTopology) -> frozenset[int]:
    if a.model.is_finite:
        raise NotApplicable("nonwandering points need an infinite phase semigroup")
    hs = HittingSets(a, top)
    out = set()
    for x in range(a.n):
        U = top.min_open[x]
        if is_infinite(a.model, hs(U, U)).holds_:
            out.add(x)
    return frozenset(out)


def pt_implies_tt_diagnosis(a: FiniteAction, top: FiniteTopology) -> dict:
    """Which sufficient condition for PT => TT applies, cross-checked against is_TT."""
    tran = transitive_points(a, top)
    if not tran:
        raise ValueError("diagnosis needs a point-transitive semiflow")
    prerec = prerecurrent_points(a, top)
    cl_prerec = top.closure(prerec)
    x0 = min(tran)
    orbit_x0 = a.orbit(x0)

    def chase(U, V):
        return any(a.orbit(y) & V for y in orbit_x0 & U)

    conditions = {
        "transitive_prerecurrent": bool(tran & prerec),
        "transitive_limit_of_prerecurrent": bool(tran & cl_prerec),
        "orbit_chase": all(chase(U, V) for U, V in _pairs(top)),
    }
    tt = is_TT(a, top)
    # the first two are sufficient; the chase is equivalent to TT under PT
    sufficient_ok = not (conditions["transitive_prerecurrent"] or conditions["transitive_limit_of_prerecurrent"]) \
        or tt.holds_
    consistent = sufficient_ok and conditions["orbit_chase"] == tt.holds_
    return {"conditions": conditions, "tt": tt, "transitive_point": a.points[x0],
            "consistent": consistent}


@dataclass
class TransitivityReport:
    tt: Verdict
    pt: Verdict
    st: Verdict
    strong_mixing: Verdict | None
    minimal: Verdict
    tran_set: frozenset[int]
    minimal_points: frozenset[int]
    ap_points: frozenset[int]
    prerec_points: frozenset[int]
    nonwandering_set: frozenset[int] | None
    exact: bool = True

    def check_invariants(self) -> list[str]:
        problems = []
        if self.tran_set and not self.pt.holds_:
            problems.append("nonempty Tran but PT does not hold")
        if self.st.holds_ and self.st.exact and self.tt.fails_:
            problems.append("ST holds but TT fails")
        if self.strong_mixing is not None and self.strong_mixing.holds_ and self.st.fails_:
            problems.append("strongly mixing but not ST")
        return problems


def transitivity_report(a: FiniteAction, top: FiniteTopology) -> TransitivityReport:
    infinite = not a.model.is_finite
    return TransitivityReport(
        tt=is_TT(a, top),
        pt=is_PT(a, top),
        st=is_ST(a, top),
        strong_mixing=is_strongly_mixing(a, top) if infinite else None,
        minimal=is_minimal(a, top),
        tran_set=transitive_points(a, top),
        minimal_points=minimal_points(a, top),
        ap_points=almost_periodic_points(a, top),
        prerec_points=prerecurrent_points(a, top),
        nonwandering_set=nonwandering_set(a, top) if infinite else None,
    )
