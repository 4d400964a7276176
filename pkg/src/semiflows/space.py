"""Finite topological spaces and finite metric spaces with rational distances.

Every finite topology is Alexandrov, so a topology is stored by the least open
neighbourhood ``min_open[x]`` of each point; the opens are exactly the unions
of these. Points are indices ``0..n-1``; ``points`` holds their labels.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

PointSet = frozenset


class TopologyError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteTopology:
    points: tuple[str, ...]
    min_open: tuple[frozenset[int], ...]

    def __post_init__(self):
        n = len(self.points)
        if len(self.min_open) != n:
            raise TopologyError("one minimal open per point")
        for x, U in enumerate(self.min_open):
            if x not in U:
                raise TopologyError(f"minimal open of {self.points[x]} does not contain it")
            for y in U:
                if not self.min_open[y] <= U:
                    raise TopologyError("minimal opens are not nested: family not closed under intersection")

    # -- constructors ----------------------------------------------------

    @classmethod
    def discrete(cls, points: Sequence[str]) -> "FiniteTopology":
        return cls(tuple(points), tuple(frozenset({i}) for i in range(len(points))))

    @classmethod
    def indiscrete(cls, points: Sequence[str]) -> "FiniteTopology":
        full = frozenset(range(len(points)))
        return cls(tuple(points), tuple(full for _ in points))

    @classmethod
    def from_opens(cls, points: Sequence[str], opens: Iterable[Iterable[int]]) -> "FiniteTopology":
        n = len(points)
        family = {frozenset(O) for O in opens}
        full = frozenset(range(n))
        if frozenset() not in family or full not in family:
            raise TopologyError("opens must contain the empty set and the whole space")
        for A, B in itertools.combinations(family, 2):
            if A | B not in family or A & B not in family:
                raise TopologyError("opens are not closed under union and intersection")
        min_open = []
        for x in range(n):
            U = full
            for O in family:
                if x in O:
                    U = U & O
            min_open.append(U)
        return cls(tuple(points), tuple(min_open))

    @classmethod
    def from_preorder(cls, points: Sequence[str], le: Iterable[tuple[int, int]]) -> "FiniteTopology":
        """Opens are the up-sets of the preorder; ``le`` must be reflexive and transitive."""
        n = len(points)
        rel = set(le)
        for x in range(n):
            if (x, x) not in rel:
                raise TopologyError("relation is not reflexive")
        for (a, b), (c, d) in itertools.product(rel, rel):
            if b == c and (a, d) not in rel:
                raise TopologyError("relation is not transitive")
        up = [frozenset(y for y in range(n) if (x, y) in rel) for x in range(n)]
        return cls(tuple(points), tuple(up))

    # -- structure -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def full(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def le(self, x: int, y: int) -> bool:
        """Specialization preorder: every open containing x contains y."""
        return y in self.min_open[x]

    def is_open(self, A: Iterable[int]) -> bool:
        A = frozenset(A)
        return all(self.min_open[x] <= A for x in A)

    def closure(self, A: Iterable[int]) -> frozenset[int]:
        A = frozenset(A)
        return frozenset(x for x in range(self.n) if self.min_open[x] & A)

    def interior(self, A: Iterable[int]) -> frozenset[int]:
        A = frozenset(A)
        return frozenset(x for x in A if self.min_open[x] <= A)

    def is_dense(self, A: Iterable[int]) -> bool:
        return self.closure(A) == self.full

    @cached_property
    def basis(self) -> tuple[frozenset[int], ...]:
        """Distinct minimal nonempty opens, in a canonical order."""
        return tuple(sorted(set(self.min_open), key=lambda U: (len(U), sorted(U))))

    @cached_property
    def is_discrete(self) -> bool:
        return all(len(U) == 1 for U in self.min_open)

    def isolated_points(self) -> frozenset[int]:
        return frozenset(x for x in range(self.n) if self.min_open[x] == {x})

    def opens(self) -> list[frozenset[int]]:
        """All opens, by brute force; meant for small spaces and oracles."""
        if self.n > 16:
            raise ValueError("too many points to enumerate opens")
        out = []
        for bits in range(1 << self.n):
            A = frozenset(i for i in range(self.n) if bits >> i & 1)
            if self.is_open(A):
                out.append(A)
        return out

    def is_continuous(self, table: Sequence[int]) -> bool:
        """A map is continuous iff it is monotone for the specialization preorder."""
        return all(table[y] in self.min_open[table[x]]
                   for x in range(self.n) for y in self.min_open[x])

    def is_homeomorphism(self, perm: Sequence[int]) -> bool:
        return all(frozenset(perm[y] for y in self.min_open[x]) == self.min_open[perm[x]]
                   for x in range(self.n))

    def labels(self, A: Iterable[int]) -> list[str]:
        return [self.points[i] for i in sorted(A)]


def alexandrov_from_preorder(points: Sequence[str], le: Iterable[tuple[int, int]]) -> FiniteTopology:
    return FiniteTopology.from_preorder(points, le)


def preorder_closure(n: int, pairs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    """Reflexive-transitive closure of a relation on ``range(n)``."""
    reach = [[x == y for y in range(n)] for x in range(n)]
    for a, b in pairs:
        reach[a][b] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return {(i, j) for i in range(n) for j in range(n) if reach[i][j]}


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class MetricSpace:
    points: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.points)
        d = tuple(tuple(Fraction(v) for v in row) for row in self.dist)
        object.__setattr__(self, "dist", d)
        if len(d) != n or any(len(row) != n for row in d):
            raise ValueError("distance matrix must be n x n")
        for x in range(n):
            if d[x][x] != 0:
                raise ValueError("d(x,x) must be 0")
            for y in range(n):
                if d[x][y] != d[y][x]:
                    raise ValueError("distance matrix must be symmetric")
                if x != y and d[x][y] <= 0:
                    raise ValueError("distinct points must have positive distance")
        for x, y, z in itertools.product(range(n), repeat=3):
            if d[x][z] > d[x][y] + d[y][z]:
                raise ValueError(f"triangle inequality fails at {self.points[x]},{self.points[y]},{self.points[z]}")

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def distances(self) -> tuple[Fraction, ...]:
        """Sorted distinct positive distances."""
        return tuple(sorted({v for row in self.dist for v in row if v > 0}))

    @property
    def min_distance(self) -> Fraction:
        return self.distances[0]

    def entourage_ball(self, x: int, eps: Fraction) -> frozenset[int]:
        """Closed ball ``eps[x] = {y : d(x,y) <= eps}``."""
        return frozenset(y for y in range(self.n) if self.dist[x][y] <= eps)

    def open_ball(self, x: int, sigma: Fraction) -> frozenset[int]:
        return frozenset(y for y in range(self.n) if self.dist[x][y] < sigma)

    def scale_menu(self, floor: Fraction | None = None) -> tuple[Fraction, ...]:
        """Thresholds at which closed balls can change: half the least distance,
        every realized distance and every midpoint between consecutive ones."""
        ds = (Fraction(0),) + self.distances
        menu = set(self.distances)
        menu |= {(a + b) / 2 for a, b in zip(ds, ds[1:])}
        if floor is not None:
            menu = {v for v in menu if v >= floor}
        return tuple(sorted(menu))

    @classmethod
    def on_line(cls, labels: Sequence[str], coords: Sequence[Fraction]) -> "MetricSpace":
        c = [Fraction(v) for v in coords]
        return cls(tuple(labels), tuple(tuple(abs(a - b) for b in c) for a in c))

    @classmethod
    def on_circle(cls, labels: Sequence[str], coords: Sequence[Fraction]) -> "MetricSpace":
        """Arc-length metric on R/Z."""
        c = [Fraction(v) % 1 for v in coords]
        return cls(tuple(labels), tuple(tuple(min(abs(a - b), 1 - abs(a - b)) for b in c) for a in c))


def scale_topology(ms: MetricSpace, sigma: Fraction) -> FiniteTopology:
    """Topology generated by the open ``sigma``-balls of ``ms``."""
    sigma = Fraction(sigma)
    if sigma <= 0:
        raise ValueError("scale must be positive")
    balls = [ms.open_ball(y, sigma) for y in range(ms.n)]
    min_open = []
    for x in range(ms.n):
        U = frozenset(range(ms.n))
        for B in balls:
            if x in B:
                U &= B
        min_open.append(U)
    return FiniteTopology(ms.points, tuple(min_open))


def shortest_path_metric(weights: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Repair a symmetric positive matrix into a metric by Floyd-Warshall."""
    n = len(weights)
    d = [[Fraction(weights[i][j]) if i != j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d
