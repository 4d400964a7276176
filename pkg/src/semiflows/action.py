"""The semiflow (T, X): one transformation table per generator of T."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .semigroup import Element, HorizonExceeded, SemigroupModel, TSubset
from .space import FiniteTopology


class ActionError(ValueError):
    pass


def compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """``f o g``: apply g first."""
    return tuple(f[x] for x in g)


def invert(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    return tuple(inv)


def is_permutation(table: Sequence[int]) -> bool:
    return len(set(table)) == len(table)


@dataclass(frozen=True)
class FiniteAction:
    model: SemigroupModel
    points: tuple[str, ...]
    tables: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "tables", tuple(tuple(t) for t in self.tables))
        n = len(self.points)
        if n < 1:
            raise ActionError("empty phase space")
        if len(self.tables) != self.model.k:
            raise ActionError(f"expected {self.model.k} generator tables, got {len(self.tables)}")
        for t in self.tables:
            if len(t) != n or any(not 0 <= y < n for y in t):
                raise ActionError("each table must be a total map on the points")
        kind = self.model.kind
        if kind == "integer" and not is_permutation(self.tables[0]):
            raise ActionError("integer model needs an invertible generator")
        if kind == "free-abelian" and not self.generators_commute:
            raise ActionError("free-abelian model needs pairwise commuting tables")
        if kind == "finite-table":
            self._check_table_homomorphism()

    def _check_table_homomorphism(self):
        m = self.model
        size = len(m.table)
        phi = [self.transformation(i) for i in range(size) if i in m._table_words]
        if len(phi) != size:
            raise ActionError("generators do not generate the whole table")
        for i, j in itertools.product(range(size), repeat=2):
            if phi[m.table[i][j]] != compose(phi[i], phi[j]):
                raise ActionError(f"tables do not respect the product {m.element_names[i]}*{m.element_names[j]}")

    # -- basic maps ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def full(self) -> frozenset[int]:
        return frozenset(range(self.n))

    @cached_property
    def letter_tables(self) -> tuple[tuple[int, ...], ...]:
        if self.model.kind == "integer":
            return (self.tables[0], invert(self.tables[0]))
        return self.tables

    @cached_property
    def identity_map(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    @cached_property
    def generators_commute(self) -> bool:
        return all(compose(f, g) == compose(g, f) for f, g in itertools.combinations(self.tables, 2))

    def word_map(self, word: Iterable[int]) -> tuple[int, ...]:
        m = self.identity_map
        for letter in word:
            m = compose(m, self.letter_tables[letter])
        return m

    def transformation(self, t: Element) -> tuple[int, ...]:
        return self.word_map(self.model.word(t))

    def apply(self, t: Element, x: int) -> int:
        if self.model.norm(t) > self.model.horizon:
            raise HorizonExceeded(f"element {self.model.format(t)} lies outside the horizon")
        for letter in reversed(self.model.word(t)):
            x = self.letter_tables[letter][x]
        return x

    def step_point(self, letter: int, x: int) -> int:
        return self.letter_tables[letter][x]

    def step_set(self, letter: int, S: frozenset[int]) -> frozenset[int]:
        table = self.letter_tables[letter]
        return frozenset(table[x] for x in S)

    def step_map(self, letter: int, m: tuple[int, ...]) -> tuple[int, ...]:
        table = self.letter_tables[letter]
        return tuple(table[y] for y in m)

    def image(self, t: Element, A: Iterable[int]) -> frozenset[int]:
        f = self.transformation(t)
        return frozenset(f[x] for x in A)

    def preimage(self, t: Element, A: Iterable[int]) -> frozenset[int]:
        f = self.transformation(t)
        A = frozenset(A)
        return frozenset(x for x in range(self.n) if f[x] in A)

    # -- orbits ----------------------------------------------------------

    def orbit(self, x: int) -> frozenset[int]:
        """``T x``, closed under every letter (horizon independent)."""
        return self.orbit_of_set({x})

    def orbit_of_set(self, A: Iterable[int]) -> frozenset[int]:
        seen = set(A)
        queue = deque(seen)
        while queue:
            y = queue.popleft()
            for table in self.letter_tables:
                z = table[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return frozenset(seen)

    def orbit_radius(self, x: int) -> int:
        """Word length at which the orbit of x stops growing."""
        depth = {x: 0}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for table in self.letter_tables:
                z = table[y]
                if z not in depth:
                    depth[z] = depth[y] + 1
                    queue.append(z)
        return max(depth.values())

    def backward_orbit(self, A: Iterable[int]) -> frozenset[int]:
        """``T^-1 A``: points whose orbit meets A."""
        A = frozenset(A)
        return frozenset(x for x in range(self.n) if self.orbit(x) & A)

    @cached_property
    def orbits(self) -> tuple[frozenset[int], ...]:
        return tuple(self.orbit(x) for x in range(self.n))

    # -- subsets of T ----------------------------------------------------

    def hitting_set(self, U: Iterable[int], V: Iterable[int]) -> TSubset:
        """``N_T(U,V) = {t : tU meets V}``, backed by the finite orbit of U under T."""
        U, V = frozenset(U), frozenset(V)
        if not U or not V:
            raise ValueError("hitting sets need nonempty U and V")
        return TSubset.from_states(self.model, U, self.step_set, lambda S: bool(S & V),
                                   f"N({self._names(U)},{self._names(V)})")

    def in_hitting_set_via_preimage(self, t: Element, U: Iterable[int], V: Iterable[int]) -> bool:
        """Membership through ``U & t^-1 V``, the other side of the definition."""
        return bool(frozenset(U) & self.preimage(t, V))

    def return_times(self, x: int, U: Iterable[int]) -> TSubset:
        U = frozenset(U)
        if not U:
            raise ValueError("return-time sets need a nonempty target")
        return TSubset.from_states(self.model, x, self.step_point, lambda y: y in U,
                                   f"N({self.points[x]},{self._names(U)})")

    def transformation_subset(self, predicate, label: str = "") -> TSubset:
        """``{t : predicate(map of t)}`` over the transformation monoid."""
        return TSubset.from_states(self.model, self.identity_map, self.step_map, predicate, label)

    def _names(self, A) -> str:
        return "{" + ",".join(self.points[i] for i in sorted(A)) + "}"

    # -- invariance and surjectivity ---------------------------------------

    def invariance(self, A: Iterable[int]) -> tuple[bool, bool]:
        """(forward ``TA <= A``, negative ``T^-1 A <= A``), checked on generators."""
        A = frozenset(A)
        forward = all(table[x] in A for table in self.letter_tables for x in A)
        negative = all(x in A for table in self.letter_tables for x in range(self.n) if table[x] in A)
        return forward, negative

    def surjectivity_profile(self) -> dict[str, bool]:
        # on a finite set a surjective table is bijective, so the two flags coincide
        surjective = all(is_permutation(t) for t in self.tables)
        # eX = X makes TX = X vacuous; the informative union is over nonidentity generators
        covered = set().union(*(set(t) for t in self.tables))
        return {
            "surjective": surjective,
            "invertible": surjective,
            "TX_equals_X": covered == set(range(self.n)),
        }

    def label(self, A: Iterable[int]) -> list[str]:
        return [self.points[i] for i in sorted(A)]


def validate_continuity(a: FiniteAction, top: FiniteTopology) -> None:
    if top.n != a.n:
        raise ActionError("topology and action have different point sets")
    for g, table in zip(a.model.generators, a.tables):
        if not top.is_continuous(table):
            raise ActionError(f"generator {g} is not continuous")
