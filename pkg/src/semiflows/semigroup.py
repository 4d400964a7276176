"""Discrete phase semigroups, word balls, subsets of T and their combinatorics.

Elements are kept in normal form:

* ``monogenic``     -- nonnegative int n (g^n)
* ``integer``       -- int n (the group Z generated by g, with g^-1 a second letter)
* ``free-abelian``  -- tuple of k nonnegative exponents
* ``free``          -- tuple of letter indices (a reduced word)
* ``finite-table``  -- index into the multiplication table

A word ``(w1, ..., wn)`` denotes the product ``w1 w2 ... wn``; acting on a
point, the last letter acts first, so ``(st)x = s(tx)``.

Compact subsets of a discrete T are finite; as certificates they are always
word balls ``Ball(r)``, which are cofinal among finite subsets.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable

from .periodic import EventuallyPeriodic, TwoSidedPeriodic
from .verdict import HOLDS, Verdict

KINDS = ("finite-table", "monogenic", "integer", "free-abelian", "free")
DEFAULT_HORIZON = {"monogenic": 64, "integer": 64, "free": 12, "free-abelian": 16}

Element = Any


class HorizonExceeded(ValueError):
    pass


class NotApplicable(ValueError):
    pass


class InternalLogicError(AssertionError):
    """A consistency law between two checkers was violated."""


@dataclass(frozen=True)
class SemigroupModel:
    kind: str
    generators: tuple[str, ...]
    horizon: int = 0
    table: tuple[tuple[int, ...], ...] | None = None
    element_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown semigroup kind {self.kind!r}")
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise ValueError("at least one generator is required")
        if self.kind in ("monogenic", "integer") and len(self.generators) != 1:
            raise ValueError(f"{self.kind} model takes exactly one generator")
        if self.kind == "finite-table":
            self._check_table()
            if self.horizon <= 0:
                object.__setattr__(self, "horizon", len(self.table))
        elif self.horizon <= 0:
            object.__setattr__(self, "horizon", DEFAULT_HORIZON[self.kind])

    def _check_table(self):
        if self.table is None or self.element_names is None:
            raise ValueError("finite-table model needs a table and element names")
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        m = len(table)
        if len(self.element_names) != m or any(len(row) != m for row in table):
            raise ValueError("multiplication table must be square and match the element names")
        for i, j, k in itertools.product(range(m), repeat=3):
            if table[table[i][j]][k] != table[i][table[j][k]]:
                raise ValueError(f"table is not associative at {i},{j},{k}")
        if self.identity_index is None:
            raise ValueError("finite-table model has no neutral element")
        for g in self.generators:
            if g not in self.element_names:
                raise ValueError(f"generator {g!r} is not a table element")

    # -- basic structure -------------------------------------------------

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite-table"

    @property
    def is_commutative(self) -> bool:
        if self.kind in ("monogenic", "integer", "free-abelian"):
            return True
        if self.kind == "free":
            return self.k == 1
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(len(t)) for j in range(len(t)))

    @property
    def is_group(self) -> bool:
        if self.kind == "integer":
            return True
        if self.kind == "finite-table":
            e = self.identity_index
            return all(e in row for row in self.table)
        return False

    @property
    def letters(self) -> tuple[str, ...]:
        if self.kind == "integer":
            return (self.generators[0], self.generators[0] + "^-1")
        return self.generators

    @cached_property
    def identity_index(self) -> int | None:
        t = self.table
        for e in range(len(t)):
            if all(t[e][x] == x and t[x][e] == x for x in range(len(t))):
                return e
        return None

    @property
    def identity(self) -> Element:
        if self.kind in ("monogenic", "integer"):
            return 0
        if self.kind == "free-abelian":
            return (0,) * self.k
        if self.kind == "free":
            return ()
        return self.identity_index

    def multiply(self, s: Element, t: Element) -> Element:
        if self.kind in ("monogenic", "integer"):
            return s + t
        if self.kind == "free-abelian":
            return tuple(a + b for a, b in zip(s, t))
        if self.kind == "free":
            return tuple(s) + tuple(t)
        return self.table[s][t]

    def from_word(self, word: Iterable[int]) -> Element:
        word = tuple(word)
        if self.kind == "monogenic":
            return len(word)
        if self.kind == "integer":
            return sum(1 if w == 0 else -1 for w in word)
        if self.kind == "free-abelian":
            counts = [0] * self.k
            for w in word:
                counts[w] += 1
            return tuple(counts)
        if self.kind == "free":
            return word
        gens = [self.element_names.index(g) for g in self.generators]
        acc = self.identity_index
        for w in reversed(word):
            acc = self.table[gens[w]][acc]
        return acc

    @cached_property
    def _table_words(self) -> dict[int, tuple[int, ...]]:
        gens = [self.element_names.index(g) for g in self.generators]
        words = {self.identity_index: ()}
        queue = deque([self.identity_index])
        while queue:
            s = queue.popleft()
            for letter, g in enumerate(gens):
                u = self.table[g][s]
                if u not in words:
                    words[u] = (letter,) + words[s]
                    queue.append(u)
        return words

    def word(self, t: Element) -> tuple[int, ...]:
        """A minimal-length word over ``letters`` representing t."""
        if self.kind == "monogenic":
            return (0,) * t
        if self.kind == "integer":
            return (0,) * t if t >= 0 else (1,) * (-t)
        if self.kind == "free-abelian":
            return tuple(itertools.chain.from_iterable((i,) * n for i, n in enumerate(t)))
        if self.kind == "free":
            return tuple(t)
        try:
            return self._table_words[t]
        except KeyError:
            raise ValueError(f"table element {t} is not generated by the generators") from None

    def norm(self, t: Element) -> int:
        return len(self.word(t))

    def format(self, t: Element) -> str:
        if self.kind in ("monogenic", "integer"):
            return str(t)
        if self.kind == "free-abelian":
            return "(" + ",".join(map(str, t)) + ")"
        if self.kind == "free":
            return "".join(self.generators[w] for w in t) or "e"
        return self.element_names[t]

    # -- enumeration -----------------------------------------------------

    def enumerate(self, r: int) -> "Ball":
        if r < 0:
            raise ValueError("radius must be nonnegative")
        if r > self.horizon:
            raise HorizonExceeded(f"radius {r} exceeds horizon {self.horizon}")
        return Ball(self, r, tuple(self._elements_upto(r)))

    def _elements_upto(self, r: int):
        if self.kind == "monogenic":
            yield from range(r + 1)
        elif self.kind == "integer":
            yield 0
            for n in range(1, r + 1):
                yield n
                yield -n
        elif self.kind == "free-abelian":
            for total in range(r + 1):
                for cut in itertools.combinations(range(total + self.k - 1), self.k - 1):
                    bounds = (-1,) + cut + (total + self.k - 1,)
                    yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(self.k))
        elif self.kind == "free":
            for n in range(r + 1):
                yield from itertools.product(range(self.k), repeat=n)
        else:
            words = self._table_words
            for t in sorted(words, key=lambda u: (len(words[u]), u)):
                if len(words[t]) <= r:
                    yield t

    @cached_property
    def stabilization_radius(self) -> int | None:
        """For finite-table models, the radius at which balls exhaust T."""
        if not self.is_finite:
            return None
        return max(len(w) for w in self._table_words.values())


@dataclass(frozen=True)
class Ball:
    model: SemigroupModel
    radius: int
    elements: tuple

    def __contains__(self, t):
        return t in self._set

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def _set(self):
        return frozenset(self.elements)

    def words(self) -> dict:
        return {t: self.model.word(t) for t in self.elements}


def ball_elements(model: SemigroupModel, r: int) -> tuple:
    """Like ``model.enumerate`` but ignores the horizon; used for certificates."""
    return tuple(model._elements_upto(r))


# ---------------------------------------------------------------------------
# finite state orbits


class StateOrbit:
    """The orbit ``T s0`` of a state under a letter action, closed by BFS.

    ``step(letter, state)`` must define a monoid action of T on states; for
    ``integer`` models letter 1 must act as the inverse of letter 0.
    """

    def __init__(self, model: SemigroupModel, start: Hashable,
                 step: Callable[[int, Hashable], Hashable]):
        self.model = model
        self.start = start
        self.step = step
        n_letters = len(model.letters)
        self.states: list = [start]
        self.index: dict = {start: 0}
        self.words: list[tuple[int, ...]] = [()]
        self.succ: list[list[int]] = []
        i = 0
        while i < len(self.states):
            s = self.states[i]
            row = []
            for letter in range(n_letters):
                u = step(letter, s)
                j = self.index.get(u)
                if j is None:
                    j = len(self.states)
                    self.index[u] = j
                    self.states.append(u)
                    self.words.append((letter,) + self.words[i])
                row.append(j)
            self.succ.append(row)
            i += 1

    def __len__(self):
        return len(self.states)

    def act(self, word: Iterable[int], i: int = 0) -> int:
        for letter in reversed(tuple(word)):
            i = self.succ[i][letter]
        return i

    def representative(self, i: int) -> Element:
        return self.model.from_word(self.words[i])

    def distances_to(self, targets: set[int]) -> list[int | None]:
        """For each state r, the least word length L with some length-L word k having k r in targets."""
        preds: list[list[int]] = [[] for _ in self.states]
        for i, row in enumerate(self.succ):
            for j in row:
                preds[j].append(i)
        dist: list[int | None] = [None] * len(self.states)
        queue = deque()
        for t in targets:
            dist[t] = 0
            queue.append(t)
        while queue:
            j = queue.popleft()
            for i in preds[j]:
                if dist[i] is None:
                    dist[i] = dist[j] + 1
                    queue.append(i)
        return dist

    def rho(self, letter: int = 0) -> tuple[list[int], int]:
        """States visited by iterating one letter from the start, and the index where the cycle begins."""
        seen: dict[int, int] = {}
        seq = []
        i = 0
        while i not in seen:
            seen[i] = len(seq)
            seq.append(i)
            i = self.succ[i][letter]
        return seq, seen[i]

    @cached_property
    def infinite_preimage(self) -> frozenset[int]:
        """States r for which ``{t in T : t s0 = r}`` is infinite."""
        kind = self.model.kind
        if kind == "finite-table":
            return frozenset()
        if kind == "integer":
            return frozenset(range(len(self.states)))
        if kind == "monogenic":
            seq, start = self.rho(0)
            return frozenset(seq[start:])
        if kind == "free":
            return self._free_infinite()
        return self._abelian_infinite()

    def _free_infinite(self) -> frozenset[int]:
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.states)))
        g.add_edges_from((i, j) for i, row in enumerate(self.succ) for j in row)
        cyclic = set()
        for comp in nx.strongly_connected_components(g):
            if len(comp) > 1 or any(g.has_edge(c, c) for c in comp):
                cyclic |= comp
        out = set(cyclic)
        for c in cyclic:
            out |= nx.descendants(g, c)
        return frozenset(out)

    def _abelian_infinite(self) -> frozenset[int]:
        bounds = []
        for letter in range(self.model.k):
            f = tuple(row[letter] for row in self.succ)
            powers = {tuple(range(len(f))): 0}
            cur = tuple(range(len(f)))
            n = 0
            while True:
                cur = tuple(f[c] for c in cur)
                n += 1
                if cur in powers:
                    pre = powers[cur]
                    bounds.append((pre, n - pre))
                    break
                powers[cur] = n
        out = set()
        for vec in itertools.product(*(range(p + q) for p, q in bounds)):
            if any(v >= p for v, (p, _) in zip(vec, bounds)):
                i = 0
                for letter, v in enumerate(vec):
                    for _ in range(v):
                        i = self.succ[i][letter]
                out.add(i)
        return frozenset(out)

    def periodic_descriptor(self, good: Callable[[int], bool]):
        """Exact eventually periodic descriptor for monogenic and integer models."""
        if self.model.kind == "monogenic":
            seq, start = self.rho(0)
            return EventuallyPeriodic(tuple(good(i) for i in seq[:start]),
                                      tuple(good(i) for i in seq[start:]))
        if self.model.kind == "integer":
            halves = []
            for letter in (0, 1):
                seq, start = self.rho(letter)
                if start != 0:
                    raise ValueError("integer model letter does not act invertibly on states")
                halves.append(EventuallyPeriodic((), tuple(good(i) for i in seq)))
            return TwoSidedPeriodic(*halves)
        return None


@dataclass(frozen=True, eq=False)
class StateBacking:
    orbit: StateOrbit
    predicate: Callable[[Hashable], bool]

    @cached_property
    def good(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.orbit.states) if self.predicate(s))

    @cached_property
    def bad(self) -> frozenset[int]:
        return frozenset(range(len(self.orbit))) - self.good


@dataclass(frozen=True, eq=False)
class TSubset:
    """A subset of T, known through membership and optionally exact descriptors."""

    model: SemigroupModel
    member: Callable[[Element], bool]
    symbolic: EventuallyPeriodic | TwoSidedPeriodic | None = None
    backing: StateBacking | None = None
    label: str = ""

    def __contains__(self, t: Element) -> bool:
        return self.member(t)

    @classmethod
    def from_states(cls, model: SemigroupModel, start, step, predicate, label: str = "",
                    orbit: StateOrbit | None = None) -> "TSubset":
        orbit = orbit or StateOrbit(model, start, step)
        backing = StateBacking(orbit, predicate)
        symbolic = orbit.periodic_descriptor(lambda i: i in backing.good)

        def member(t):
            return predicate(orbit.states[orbit.act(model.word(t))])

        return cls(model, member, symbolic, backing, label)

    @classmethod
    def constant(cls, model: SemigroupModel, value: bool) -> "TSubset":
        return cls.from_states(model, 0, lambda letter, s: s, lambda s: value,
                               "T" if value else "empty")

    @classmethod
    def full(cls, model):
        return cls.constant(model, True)

    @classmethod
    def empty(cls, model):
        return cls.constant(model, False)

    @classmethod
    def periodic(cls, model: SemigroupModel, desc, label: str = "") -> "TSubset":
        if model.kind == "monogenic" and not isinstance(desc, EventuallyPeriodic):
            raise TypeError("monogenic sets take an EventuallyPeriodic descriptor")
        if model.kind == "integer" and not isinstance(desc, TwoSidedPeriodic):
            raise TypeError("integer sets take a TwoSidedPeriodic descriptor")
        if model.kind not in ("monogenic", "integer"):
            raise NotApplicable("periodic descriptors exist only for monogenic and integer models")
        return cls(model, lambda t: t in desc, desc, None, label)

    @classmethod
    def predicate(cls, model: SemigroupModel, member: Callable[[Element], bool], label: str = ""):
        return cls(model, member, None, None, label)

    def complement(self) -> "TSubset":
        backing = None
        if self.backing is not None:
            pred = self.backing.predicate
            backing = StateBacking(self.backing.orbit, lambda s: not pred(s))
        symbolic = self.symbolic.complement() if self.symbolic is not None else None
        member = self.member
        return TSubset(self.model, lambda t: not member(t), symbolic, backing,
                       f"T\\({self.label})")

    def intersection(self, other: "TSubset") -> "TSubset":
        if self.backing is not None and other.backing is not None:
            a, b = self.backing, other.backing
            oa, ob = a.orbit, b.orbit
            return TSubset.from_states(
                self.model, (oa.start, ob.start),
                lambda letter, s: (oa.step(letter, s[0]), ob.step(letter, s[1])),
                lambda s: a.predicate(s[0]) and b.predicate(s[1]),
                f"({self.label})&({other.label})")
        symbolic = None
        if self.symbolic is not None and other.symbolic is not None:
            symbolic = self.symbolic.intersection(other.symbolic)
        m1, m2 = self.member, other.member
        return TSubset(self.model, lambda t: m1(t) and m2(t), symbolic, None,
                       f"({self.label})&({other.label})")


# ---------------------------------------------------------------------------
# syndetic / thick / cofinite decisions


def _k_ball(model, r):
    return {"K": f"Ball({r})", "radius": r}


def is_syndetic(model: SemigroupModel, A: TSubset) -> Verdict:
    """Does some finite K = Ball(r) meet A in ``K t`` for every t in T?"""
    if A.symbolic is not None:
        r = A.symbolic.syndetic_radius()
        if r is None:
            t = _escape_point(model, A.symbolic)
            return Verdict.fails(t=model.format(t), reason="no finite K: Kt misses A for t far out",
                                 symbolic=A.symbolic.describe())
        return Verdict.holds(**_k_ball(model, r), symbolic=A.symbolic.describe())
    if A.backing is not None:
        return _syndetic_states(model, A.backing)
    if model.is_finite:
        return _syndetic_finite(model, A)
    return _syndetic_horizon(model, A)


def _escape_point(model, desc):
    if isinstance(desc, EventuallyPeriodic):
        return desc.preperiod
    # TwoSided: pick the side that is finite
    if not desc.positive.is_infinite():
        return desc.positive.preperiod
    return -desc.negative.preperiod


def _syndetic_states(model, backing: StateBacking) -> Verdict:
    orbit = backing.orbit
    dist = orbit.distances_to(set(backing.good))
    stuck = [i for i, d in enumerate(dist) if d is None]
    if stuck:
        i = stuck[0]
        return Verdict.fails(t=model.format(orbit.representative(i)),
                             reason="no k in T has kt in A")
    return Verdict.holds(**_k_ball(model, max(dist)))


def _syndetic_finite(model, A) -> Verdict:
    T = model.enumerate(model.stabilization_radius).elements
    for t in T:
        if not any(model.multiply(k, t) in A for k in T):
            return Verdict.fails(t=model.format(t), reason="Tt misses A")
    return Verdict.holds(**_k_ball(model, model.stabilization_radius))


def _syndetic_horizon(model, A) -> Verdict:
    H = model.horizon
    cache = {}

    def mem(t):
        if t not in cache:
            cache[t] = A.member(t)
        return cache[t]

    for r in range(H + 1):
        K = model.enumerate(r).elements
        if all(any(mem(model.multiply(k, t)) for k in K) for t in model.enumerate(H - r)):
            used = _greedy_cover(model, K, model.enumerate(H - r).elements, mem)
            return Verdict(HOLDS,
                           {**_k_ball(model, r), "K_used": [model.format(k) for k in used]},
                           exact=False, horizon=H)
    return Verdict.unknown(H, reason="no ball certificate within horizon")


def _greedy_cover(model, K, ts, mem):
    remaining = set(ts)
    used = []
    for k in K:
        hit = {t for t in remaining if mem(model.multiply(k, t))}
        if hit:
            used.append(k)
            remaining -= hit
        if not remaining:
            break
    return used


def is_thick(model: SemigroupModel, A: TSubset) -> Verdict:
    """Does every finite K = Ball(r) have a translate ``K t`` inside A?"""
    if A.symbolic is not None:
        run = A.symbolic.max_run()
        if run is None:
            return Verdict.holds(rule=_thick_rule(A.symbolic), symbolic=A.symbolic.describe())
        return Verdict.fails(**_k_ball(model, run), reason="no translate of K fits inside A",
                             symbolic=A.symbolic.describe())
    if A.backing is not None:
        return _thick_states(model, A.backing)
    if model.is_finite:
        T = model.enumerate(model.stabilization_radius).elements
        for t in T:
            if all(model.multiply(k, t) in A for k in T):
                return Verdict.holds(t=model.format(t), rule="t_r = t for every r")
        return Verdict.fails(**_k_ball(model, model.stabilization_radius))
    return _thick_horizon(model, A)


def _thick_rule(desc) -> str:
    if isinstance(desc, EventuallyPeriodic):
        return f"t_r = {desc.preperiod} for every r"
    if desc.positive.is_cofinite():
        return f"t_r = {desc.positive.preperiod} + r"
    return f"t_r = -({desc.negative.preperiod} + r)"


def _thick_states(model, backing: StateBacking) -> Verdict:
    orbit = backing.orbit
    dist = orbit.distances_to(set(backing.bad))
    safe = [i for i, d in enumerate(dist) if d is None]
    if safe:
        return Verdict.holds(t=model.format(orbit.representative(safe[0])),
                             rule="t_r = t for every r")
    return Verdict.fails(**_k_ball(model, max(dist)), reason="every translate of K leaves A")


def _thick_horizon(model, A) -> Verdict:
    H = model.horizon
    translates = {}
    for r in range(H // 2 + 1):
        K = model.enumerate(r).elements
        found = next((t for t in model.enumerate(H - r)
                      if all(model.multiply(k, t) in A for k in K)), None)
        if found is None:
            return Verdict.unknown(H, reason=f"no translate of Ball({r}) within horizon")
        translates[r] = model.format(found)
    return Verdict(HOLDS, {"t_r": translates}, exact=False, horizon=H)


def is_cofinite(model: SemigroupModel, A: TSubset) -> Verdict:
    if model.is_finite:
        raise NotApplicable("cofiniteness is vacuous in a finite semigroup")
    if A.symbolic is not None:
        if A.symbolic.is_cofinite():
            return Verdict.holds(symbolic=A.symbolic.describe())
        return Verdict.fails(reason="complement is infinite", symbolic=A.symbolic.describe())
    if A.backing is not None:
        orbit = A.backing.orbit
        bad = A.backing.bad & orbit.infinite_preimage
        if bad:
            i = min(bad)
            return Verdict.fails(t=model.format(orbit.representative(i)),
                                 reason="infinitely many t share this non-member state")
        return Verdict.holds(finite_complement_states=len(A.backing.bad))
    return Verdict.unknown(model.horizon)


def is_infinite(model: SemigroupModel, A: TSubset) -> Verdict:
    if model.is_finite:
        return Verdict.fails(reason="T is finite")
    if A.symbolic is not None:
        return Verdict.holds() if A.symbolic.is_infinite() else Verdict.fails()
    if A.backing is not None:
        hit = A.backing.good & A.backing.orbit.infinite_preimage
        if hit:
            return Verdict.holds(t=model.format(A.backing.orbit.representative(min(hit))))
        return Verdict.fails(reason="every member state has finitely many preimages")
    return Verdict.unknown(model.horizon)


def is_empty(model: SemigroupModel, A: TSubset) -> Verdict:
    if A.symbolic is not None:
        return Verdict.holds() if A.symbolic.is_empty() else Verdict.fails()
    if A.backing is not None:
        if A.backing.good:
            return Verdict.fails(t=model.format(A.backing.orbit.representative(min(A.backing.good))))
        return Verdict.holds()
    hit = next((t for t in model.enumerate(model.horizon) if t in A), None)
    if hit is not None:
        return Verdict.fails(t=model.format(hit))
    if model.is_finite:
        return Verdict.holds()
    return Verdict.unknown(model.horizon)


def duality_check(model: SemigroupModel, A: TSubset) -> Verdict:
    """A syndetic set meets every thick set, so A syndetic and T\\A thick cannot both hold."""
    syn = is_syndetic(model, A)
    thick = is_thick(model, A.complement())
    if syn.holds_ and thick.holds_:
        raise InternalLogicError(f"{A.label}: syndetic and its complement thick")
    return Verdict(HOLDS,
                   {"syndetic": str(syn.value), "complement_thick": str(thick.value)},
                   exact=syn.exact and thick.exact)


def is_right_C(model: SemigroupModel) -> Verdict:
    """Is ``T \\ Ts`` finite for every s?  For discrete T this is also almost right C."""
    kind = model.kind
    if kind == "finite-table":
        return Verdict.holds(reason="T is finite", almost_right_C=True)
    if kind == "integer":
        return Verdict.holds(reason="T is a group: T \\ Ts is empty", almost_right_C=True)
    if kind == "monogenic" or model.k == 1:
        return Verdict.holds(reason="T \\ Ts = {0, ..., s-1} is finite", almost_right_C=True)
    if kind == "free-abelian":
        s = (1,) + (0,) * (model.k - 1)
        return Verdict.fails(s=model.format(s), family="(0,n,...) for n >= 0",
                             reason="first exponent 0 is never in s + T", almost_right_C=False)
    s = (0,)
    return Verdict.fails(s=model.format(s), family=f"{model.generators[1]}^n for n >= 0",
                         reason="words not ending in s are never in Ts", almost_right_C=False)
