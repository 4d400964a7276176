"""Automorphisms, universal transitivity, invariant measures and measure recurrence."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from sympy import Matrix, Rational
from sympy.solvers.simplex import InfeasibleLPError, linprog

from .action import FiniteAction, compose, invert, is_permutation
from .semigroup import InternalLogicError, TSubset, is_syndetic
from .space import FiniteTopology, MetricSpace
from .stability import equi_points, is_distal
from .transitivity import is_minimal, is_PT, is_TT
from .verdict import Verdict

AUT_SIZE_LIMIT = 12


@dataclass(frozen=True)
class AutGroup:
    elements: tuple[tuple[int, ...], ...]
    n: int

    @property
    def orbits(self) -> tuple[frozenset[int], ...]:
        seen, out = set(), []
        for x in range(self.n):
            if x not in seen:
                orb = frozenset(g[x] for g in self.elements)
                seen |= orb
                out.append(orb)
        return tuple(out)

    def orbit(self, x: int) -> frozenset[int]:
        return frozenset(g[x] for g in self.elements)

    def check_group(self, a: FiniteAction) -> None:
        els = set(self.elements)
        if tuple(range(self.n)) not in els:
            raise AssertionError("automorphism group lacks the identity")
        for g in self.elements:
            if invert(g) not in els:
                raise AssertionError("automorphism group not closed under inverse")
            for h in self.elements:
                if compose(g, h) not in els:
                    raise AssertionError("automorphism group not closed under composition")
            for t in a.tables:
                if compose(g, t) != compose(t, g):
                    raise AssertionError("automorphism does not commute with a generator")


def compute_aut(a: FiniteAction, top: FiniteTopology | None = None,
                max_points: int | None = AUT_SIZE_LIMIT) -> AutGroup:
    """All bijections commuting with every generator (and homeomorphisms of ``top``).

    Fixing ``sigma(x) = y`` forces ``sigma(g x) = g y`` along every letter, so
    one choice per orbit-generating point determines sigma on a whole orbit.
    """
    n = a.n
    if max_points is not None and n > max_points:
        raise ValueError(f"{n} points exceed the automorphism search limit {max_points}")
    tables = a.letter_tables
    found = []

    def propagate(sigma, x, y):
        sigma = dict(sigma)
        used = set(sigma.values())
        queue = deque([(x, y)])
        while queue:
            u, v = queue.popleft()
            if u in sigma:
                if sigma[u] != v:
                    return None
                continue
            if v in used:
                return None
            sigma[u] = v
            used.add(v)
            for t in tables:
                queue.append((t[u], t[v]))
        return sigma

    def search(sigma):
        free = next((x for x in range(n) if x not in sigma), None)
        if free is None:
            found.append(tuple(sigma[x] for x in range(n)))
            return
        used = set(sigma.values())
        for y in range(n):
            if y not in used:
                nxt = propagate(sigma, free, y)
                if nxt is not None:
                    search(nxt)

    search({})
    if top is not None and not top.is_discrete:
        found = [g for g in found if top.is_homeomorphism(g)]
    return AutGroup(tuple(sorted(found)), n)


def is_UT(a: FiniteAction, top: FiniteTopology | None = None,
          max_points: int | None = AUT_SIZE_LIMIT) -> Verdict:
    aut = compute_aut(a, top, max_points)
    for x in range(a.n):
        orb = aut.orbit(x)
        if len(orb) != a.n:
            return Verdict.fails(orbit=a.label(orb), aut_size=len(aut.elements))
    return Verdict.holds(aut_size=len(aut.elements))


# -- invariant measures ------------------------------------------------------


@dataclass(frozen=True)
class RationalMeasure:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(Fraction(v) for v in self.weights)
        object.__setattr__(self, "weights", w)
        if any(v < 0 for v in w) or sum(w) != 1:
            raise ValueError("weights must be nonnegative and sum to 1")

    def __call__(self, A: Iterable[int]) -> Fraction:
        return sum((self.weights[x] for x in set(A)), Fraction(0))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for x, v in enumerate(self.weights) if v > 0)

    def is_invariant(self, a: FiniteAction) -> bool:
        return all(self(x for x in range(a.n) if t[x] == p) == self.weights[p]
                   for t in a.tables for p in range(a.n))


def _invariance_system(a: FiniteAction):
    n = a.n
    rows, rhs = [], []
    for t in a.tables:
        for p in range(n):
            row = [0] * n
            for x in range(n):
                if t[x] == p:
                    row[x] += 1
            row[p] -= 1
            if any(row):
                rows.append(row)
                rhs.append(0)
    rows.append([1] * n)
    rhs.append(1)
    return rows, rhs


def _independent(rows, rhs):
    """Row-reduce ``[rows | rhs]``; sympy's simplex can stall on redundant rows."""
    reduced, _ = Matrix([r + [h] for r, h in zip(rows, rhs)]).rref()
    keep = [list(reduced.row(i)) for i in range(reduced.rows) if any(reduced.row(i))]
    if any(all(v == 0 for v in r[:-1]) for r in keep):
        return None
    return [r[:-1] for r in keep], [r[-1] for r in keep]


def _maximize(a: FiniteAction, objective: list[int]):
    rows, rhs = _invariance_system(a)
    system = _independent(rows, rhs)
    if system is None:
        return None, None
    A_eq, b_eq = system
    try:
        # equalities as paired inequalities; sympy mishandles A_eq without A
        A = A_eq + [[-v for v in row] for row in A_eq]
        b = b_eq + [-v for v in b_eq]
        value, x = linprog([-c for c in objective], A=A, b=b)
    except InfeasibleLPError:
        return None, None
    sol = [Fraction(str(Rational(v))) for v in x]
    if any(v < 0 for v in sol) or any(sum(c * v for c, v in zip(r, sol)) != h for r, h in zip(rows, rhs)):
        raise InternalLogicError(f"LP returned an infeasible point {sol}")
    return -Fraction(str(value)), sol


def invariant_measure(a: FiniteAction) -> RationalMeasure | None:
    """An exact invariant probability vector of maximal support, or None.

    Averaging one maximizer of each coordinate keeps invariance (the polytope
    is convex) and makes every coordinate that can be positive positive.
    """
    n = a.n
    solutions = []
    covered = set()
    for p in range(n):
        if p in covered:
            continue
        obj = [1 if x == p else 0 for x in range(n)]
        value, sol = _maximize(a, obj)
        if value is None:
            return None
        if value > 0:
            solutions.append(sol)
            covered |= {x for x in range(n) if sol[x] > 0}
    if not solutions:
        value, sol = _maximize(a, [0] * n)
        if sol is None:
            return None
        solutions = [sol]
    weights = [sum(s[x] for s in solutions) / len(solutions) for x in range(n)]
    return RationalMeasure(tuple(weights))


def max_measure(a: FiniteAction, U: Iterable[int]) -> Fraction | None:
    U = set(U)
    value, _ = _maximize(a, [1 if x in U else 0 for x in range(a.n)])
    return value


def is_E_semiflow(a: FiniteAction, top: FiniteTopology) -> Verdict:
    tt = is_TT(a, top)
    if not tt.holds_:
        return Verdict.fails(reason="not TT", U=tt.certificate.get("U"), V=tt.certificate.get("V"))
    for U in top.basis:
        value = max_measure(a, U)
        if value is None:
            return Verdict.fails(reason="no invariant measure")
        if value == 0:
            return Verdict.fails(U=a.label(U), reason="every invariant measure vanishes on U")
    return Verdict.holds()


def recurrence_return_set(a: FiniteAction, mu: RationalMeasure, A: Iterable[int]) -> tuple[TSubset, Verdict]:
    """``{t : mu(t^-1 A & A) > 0}`` and its syndeticity.

    ``mu(t^-1 A & A) > 0`` iff some x in A with positive weight has tx in A, so
    the state is the image of ``A & supp(mu)``.
    """
    A = frozenset(A)
    if mu(A) == 0:
        raise ValueError("the set must have positive measure")
    start = tuple(sorted(A & mu.support))

    def step(letter, state):
        table = a.letter_tables[letter]
        return tuple(table[y] for y in state)

    returns = TSubset.from_states(a.model, start, step, lambda s: any(y in A for y in s),
                                  f"R({a._names(A)})")
    return returns, is_syndetic(a.model, returns)


def ut_consequences(a: FiniteAction, ms: MetricSpace | None, top: FiniteTopology,
                    max_points: int | None = AUT_SIZE_LIMIT) -> dict:
    """Evaluate the consequences of universal transitivity and report violated implications."""
    ut = is_UT(a, top, max_points)
    distal = is_distal(a)
    pt = is_PT(a, top)
    tt = is_TT(a, top)
    minimal = is_minimal(a, top)
    invertible = all(is_permutation(t) for t in a.tables)
    equi_all = ms is None or equi_points(a, ms) == frozenset(range(a.n))
    violations = []
    if ut.holds_:
        if not distal.holds_:
            violations.append("UT but not distal")
        if pt.holds_ and not minimal.holds_:
            violations.append("UT and PT but not minimal")
        if not invertible:
            violations.append("UT but some generator is not bijective")
        if not equi_all:
            violations.append("UT but not equicontinuous")
        if invariant_measure(a) is None:
            violations.append("UT but no invariant measure")
    if top.is_discrete and tt.holds_ and equi_all and a.generators_commute and not ut.holds_:
        violations.append("TT, equicontinuous and commuting but not UT")
    return {"ut": ut, "distal": distal, "pt": pt, "tt": tt, "minimal": minimal,
            "invertible": invertible, "equicontinuous": equi_all, "violations": violations,
            "tt_pt_not_ut": tt.holds_ and pt.holds_ and ut.fails_}
