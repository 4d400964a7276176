"""Finite models of the named examples, with their claimed properties attached.

Each expectation records where the expected value comes from: ``claimed``
values restate what the example asserts about the original system,
``computed`` values come from an independent hand calculation on the model.
Entries marked ``adjudicate`` report mismatches as findings about the claim
rather than as failures of the model.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .action import FiniteAction
from .instance import Instance
from .properties import Claim, evaluate
from .semigroup import SemigroupModel, is_empty
from .space import FiniteTopology, MetricSpace

CATALOG_IDS = ("ex1_3", "ex4_4", "ex4_8", "ex4_10", "ex6_2", "sec1_two_maps", "rotation")


@dataclass(frozen=True)
class Expectation:
    property: str
    expected: str
    source: str  # "claimed" or "computed"
    check: Callable[[Instance], Claim] | None = None


@dataclass
class CatalogEntry:
    id: str
    params: dict
    instance: Instance
    expected: list[Expectation]
    adjudicate: bool = False
    notes: list[str] = field(default_factory=list)


def _points(inst: Instance, labels) -> str:
    return "{" + ",".join(inst.action.label(inst.indices(labels))) + "}"


# -- constructors --------------------------------------------------------------


def build_ex1_3(N: int = 20) -> CatalogEntry:
    """Translation by the naturals on ``{0..N, inf}``, saturating at inf.

    Finite points are isolated; the least open of inf is ``{N, inf}``, the
    trace of a neighbourhood of infinity.
    """
    if N < 2:
        raise ValueError("ex1_3 needs N >= 2")
    pts = tuple(str(i) for i in range(N + 1)) + ("inf",)
    inf = N + 1
    step = tuple(min(i + 1, inf) for i in range(N + 1)) + (inf,)
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), pts, (step,))
    top = FiniteTopology(pts, tuple(frozenset({i}) for i in range(N + 1)) + (frozenset({N, inf}),))
    inst = Instance(a, top, name=f"ex1_3(N={N})")
    expected = [
        Expectation("pt", "Holds", "claimed"),
        Expectation("tran", "{0}", "claimed"),
        Expectation("tt", "Fails", "claimed"),
        Expectation("minimal_points", "{inf}", "computed"),
        Expectation("nonwandering", "{inf}", "computed"),
        Expectation("prerec_points", "{inf}", "computed"),
    ]
    if N >= 12:
        U, V = ("10", "11"), ("5", "6")

        def pair_check(i: Instance) -> Claim:
            N_UV = i.action.hitting_set(i.indices(U), i.indices(V))
            v = is_empty(i.action.model, N_UV)
            return Claim("hitting_set_empty", str(v.value), v.exact, {"U": list(U), "V": list(V)})

        expected.append(Expectation("hitting_set_empty", "Holds", "claimed", pair_check))
    return CatalogEntry("ex1_3", {"N": N}, inst, expected)


def build_ex4_4(N: int = 20) -> CatalogEntry:
    """Translations by +1 and -1 on ``{-N..N, inf}``; leaving the range lands on inf.

    The two saturating maps do not commute, so T is the free semigroup on
    them. Continuity at inf forces its least open to be the whole space.
    """
    if N < 1:
        raise ValueError("ex4_4 needs N >= 1")
    vals = list(range(-N, N + 1))
    pts = tuple(str(v) for v in vals) + ("inf",)
    inf = len(vals)

    def shift(d):
        return tuple(vals.index(v + d) if -N <= v + d <= N else inf for v in vals) + (inf,)

    a = FiniteAction(SemigroupModel("free", ("p", "m")), pts, (shift(1), shift(-1)))
    full = frozenset(range(len(pts)))
    top = FiniteTopology(pts, tuple(frozenset({i}) for i in range(inf)) + (full,))
    inst = Instance(a, top, name=f"ex4_4(N={N})")

    def inf_orbit(i: Instance) -> Claim:
        from .structure import compute_aut
        aut = compute_aut(i.action, i.topology, max_points=None)
        return Claim.points("aut_orbit_inf", i, aut.orbit(i.index("inf")), size=len(aut.elements))

    finite = pts[:-1]
    expected = [
        Expectation("tt", "Holds", "claimed"),
        Expectation("pt", "Holds", "claimed"),
        Expectation("tran", _points(inst, finite), "claimed"),
        Expectation("ut", "Fails", "claimed"),
        Expectation("aut_orbit_inf", "{inf}", "claimed", inf_orbit),
        Expectation("st", "Fails", "claimed"),
    ]
    return CatalogEntry("ex4_4", {"N": N}, inst, expected)


def build_ex4_8() -> CatalogEntry:
    pts = ("a", "b")
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), pts, ((1, 1),))
    ms = MetricSpace(pts, ((0, 1), (1, 0)))
    inst = Instance(a, FiniteTopology.discrete(pts), ms, name="ex4_8")
    expected = [
        Expectation("equicontinuous", "Holds", "claimed"),
        Expectation("pt", "Holds", "claimed"),
        Expectation("tran", "{a}", "claimed"),
        Expectation("minimal", "Fails", "claimed"),
        Expectation("minimal_points", "{b}", "computed"),
        Expectation("ap_points", "{b}", "computed"),
        Expectation("distal", "Fails", "computed"),
        Expectation("ut", "Fails", "computed"),
        Expectation("invariant_measure", "[0,1]", "computed"),
    ]
    return CatalogEntry("ex4_8", {}, inst, expected)


def _ex4_10_label(e: int) -> str:
    return f"2^-2^{e}"


def build_ex4_10(depth: int = 6) -> CatalogEntry:
    """Squaring on ``{0,1} u {2^-2^e : -depth <= e <= depth}``.

    Squaring maps exponent e to e+1; the last point of the lower chain goes to
    0 and the first point of the upper chain has no preimage. Points are
    placed at the nearest doubles of their real positions; the action is
    defined on labels, so the rounding only affects distances.
    """
    if depth < 1:
        raise ValueError("ex4_10 needs depth >= 1")
    exps = list(range(-depth, depth + 1))
    pts = ("0", "1") + tuple(_ex4_10_label(e) for e in exps)
    coords = [Fraction(0), Fraction(1)] + [Fraction(2.0 ** -(2.0 ** e)) for e in exps]
    table = [0, 1] + [2 + exps.index(e + 1) if e < depth else 0 for e in exps]
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), pts, (tuple(table),))
    # 0 is a limit of the lower chain; 1 must stay isolated for squaring to be continuous
    bottom = 2 + exps.index(depth)
    min_open = [frozenset({0, bottom})] + [frozenset({i}) for i in range(1, len(pts))]
    top = FiniteTopology(pts, tuple(min_open))
    ms = MetricSpace.on_line(pts, coords)
    floor = ms.dist[1][2 + exps.index(-depth)]
    inst = Instance(a, top, ms, floor=floor, name=f"ex4_10(depth={depth})")
    claimed = _points(inst, pts[2:])
    expected = [
        Expectation("tt", "Holds", "claimed"),
        Expectation("pt", "Holds", "claimed"),
        Expectation("tran", claimed, "claimed"),
        Expectation("equi_points", claimed, "claimed"),
        Expectation("minimal", "Fails", "claimed"),
    ]
    return CatalogEntry("ex4_10", {"depth": depth}, inst, expected, adjudicate=True)


def shift_space(alphabet: int, window: int):
    """Configurations ``Z/window -> {0..alphabet-1}`` under the left shift.

    The alphabet carries the topology whose only proper nonempty open is the
    top symbol's singleton, and configurations carry the product topology.
    """
    if alphabet < 2 or window < 1:
        raise ValueError("shift needs alphabet >= 2 and window >= 1")
    if alphabet ** window > 4096:
        raise ValueError("shift space too large")
    configs = list(itertools.product(range(alphabet), repeat=window))
    labels = tuple("".join(map(str, c)) for c in configs)
    index = {c: i for i, c in enumerate(configs)}
    shift = tuple(index[c[1:] + c[:1]] for c in configs)
    top_symbol = alphabet - 1

    def up(s):
        return {s, top_symbol}

    min_open = tuple(frozenset(index[d] for d in itertools.product(*(up(s) for s in c)))
                     for c in configs)
    top = FiniteTopology(labels, min_open)
    dist = tuple(tuple(Fraction(sum(x != y for x, y in zip(c, d)), window) for d in configs)
                 for c in configs)
    return labels, shift, top, MetricSpace(labels, dist)


def build_ex6_2(alphabet: int = 2, window: int = 3) -> CatalogEntry:
    labels, shift, top, ms = shift_space(alphabet, window)
    a = FiniteAction(SemigroupModel("integer", ("s",)), labels, (shift,))
    n = len(labels)
    inst = Instance(a, top, ms, measure=tuple(Fraction(1, n) for _ in labels),
                    name=f"ex6_2(alphabet={alphabet},window={window})")
    expected = [
        Expectation("st", "Holds", "claimed"),
        Expectation("strong_mixing", "Holds", "claimed"),
        Expectation("e_semiflow", "Holds", "computed"),
    ]
    return CatalogEntry("ex6_2", {"alphabet": alphabet, "window": window}, inst, expected)


def build_sec1_two_maps() -> CatalogEntry:
    pts = ("a", "b")
    a = FiniteAction(SemigroupModel("free", ("f", "g")), pts, ((1, 1), (0, 0)))
    inst = Instance(a, FiniteTopology.discrete(pts), name="sec1_two_maps")
    expected = [
        Expectation("TX_equals_X", "Holds", "claimed"),
        Expectation("surjective", "Fails", "claimed"),
    ]
    return CatalogEntry("sec1_two_maps", {}, inst, expected)


def build_rotation(n: int = 3) -> CatalogEntry:
    if n < 1:
        raise ValueError("rotation needs n >= 1")
    pts = tuple(f"x{i}" for i in range(n))
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), pts, (tuple((i + 1) % n for i in range(n)),))
    ms = MetricSpace.on_circle(pts, [Fraction(i, n) for i in range(n)])
    inst = Instance(a, FiniteTopology.discrete(pts), ms, name=f"rotation(n={n})")
    expected = [Expectation(p, "Holds", "computed")
                for p in ("tt", "pt", "st", "minimal", "ut", "distal", "equicontinuous", "uap",
                          "thickly_stable", "e_semiflow")]
    expected += [
        Expectation("sensitive", "Fails", "computed"),
        Expectation("invariant_measure", "[" + ",".join([str(Fraction(1, n))] * n) + "]", "computed"),
    ]
    if n > 1:
        expected.append(Expectation("strong_mixing", "Fails", "computed"))
    return CatalogEntry("rotation", {"n": n}, inst, expected)


BUILDERS = {
    "ex1_3": build_ex1_3,
    "ex4_4": build_ex4_4,
    "ex4_8": build_ex4_8,
    "ex4_10": build_ex4_10,
    "ex6_2": build_ex6_2,
    "sec1_two_maps": build_sec1_two_maps,
    "rotation": build_rotation,
}


def build(entry_id: str, **params) -> CatalogEntry:
    try:
        builder = BUILDERS[entry_id]
    except KeyError:
        raise KeyError(f"unknown catalog entry {entry_id!r}") from None
    return builder(**params)


# -- verification ----------------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    property: str
    expected: str
    computed: Claim
    source: str
    status: str  # match, mismatch, inconclusive, discrepancy


def verify(entry: CatalogEntry) -> list[Finding]:
    out = []
    for exp in entry.expected:
        claim = exp.check(entry.instance) if exp.check else evaluate(entry.instance, exp.property)
        if not claim.exact:
            status = "inconclusive"
        elif claim.value == exp.expected:
            status = "match"
        else:
            status = "discrepancy" if entry.adjudicate else "mismatch"
        out.append(Finding(exp.property, exp.expected, claim, exp.source, status))
    return out


def all_match(findings: list[Finding]) -> bool:
    """True when no finding is a mismatch; discrepancies are findings, not failures."""
    return all(f.status != "mismatch" for f in findings)
