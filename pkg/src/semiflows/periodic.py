"""Eventually periodic subsets of N and Z.

These are the exact symbolic descriptors behind every hitting-time and
return-time set of a single map on a finite set: the orbit of any finite
state under one map is a rho (a tail followed by a cycle), so membership in
``{n : f^n(s) satisfies P}`` is eventually periodic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm


@dataclass(frozen=True)
class EventuallyPeriodic:
    """A subset of N: ``prefix[n]`` for ``n < len(prefix)``, else ``cycle[(n - len(prefix)) % len(cycle)]``."""

    prefix: tuple[bool, ...]
    cycle: tuple[bool, ...]

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        object.__setattr__(self, "prefix", tuple(bool(b) for b in self.prefix))
        object.__setattr__(self, "cycle", tuple(bool(b) for b in self.cycle))

    @classmethod
    def from_sets(cls, preperiod: int, period: int, members_before: set[int] | frozenset[int],
                  residues: set[int] | frozenset[int]) -> "EventuallyPeriodic":
        """Build from (preperiod, period, residues); residues are taken mod ``period`` on ``n - preperiod``."""
        prefix = tuple(n in members_before for n in range(preperiod))
        cycle = tuple(j in residues for j in range(period))
        return cls(prefix, cycle)

    @classmethod
    def constant(cls, value: bool) -> "EventuallyPeriodic":
        return cls((), (value,))

    @property
    def preperiod(self) -> int:
        return len(self.prefix)

    @property
    def period(self) -> int:
        return len(self.cycle)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            raise ValueError("negative exponent")
        p = len(self.prefix)
        if n < p:
            return self.prefix[n]
        return self.cycle[(n - p) % len(self.cycle)]

    def window(self, length: int) -> list[bool]:
        return [n in self for n in range(length)]

    def normalized(self) -> "EventuallyPeriodic":
        cycle = self.cycle
        q = len(cycle)
        for d in range(1, q + 1):
            if q % d == 0 and cycle == cycle[:d] * (q // d):
                cycle = cycle[:d]
                break
        prefix = list(self.prefix)
        # rotate the cycle backwards into the prefix while the last prefix bit matches
        while prefix and prefix[-1] == cycle[-1]:
            prefix.pop()
            cycle = (cycle[-1],) + cycle[:-1]
        return EventuallyPeriodic(tuple(prefix), cycle)

    def _aligned(self, other: "EventuallyPeriodic"):
        p = max(self.preperiod, other.preperiod)
        q = lcm(self.period, other.period)
        return p, q

    def _combine(self, other: "EventuallyPeriodic", op) -> "EventuallyPeriodic":
        p, q = self._aligned(other)
        prefix = tuple(op(n in self, n in other) for n in range(p))
        cycle = tuple(op(n in self, n in other) for n in range(p, p + q))
        return EventuallyPeriodic(prefix, cycle).normalized()

    def complement(self) -> "EventuallyPeriodic":
        return EventuallyPeriodic(tuple(not b for b in self.prefix), tuple(not b for b in self.cycle))

    def intersection(self, other: "EventuallyPeriodic") -> "EventuallyPeriodic":
        return self._combine(other, lambda a, b: a and b)

    def union(self, other: "EventuallyPeriodic") -> "EventuallyPeriodic":
        return self._combine(other, lambda a, b: a or b)

    def is_empty(self) -> bool:
        return not any(self.prefix) and not any(self.cycle)

    def is_infinite(self) -> bool:
        return any(self.cycle)

    def is_cofinite(self) -> bool:
        return all(self.cycle)

    def next_member(self, t: int) -> int | None:
        if not self.is_infinite():
            for n in range(t, self.preperiod):
                if self.prefix[n]:
                    return n
            return None
        for n in range(t, max(t, self.preperiod) + self.period):
            if n in self:
                return n
        raise AssertionError("unreachable: infinite set with no member in a full period")

    def syndetic_radius(self) -> int | None:
        """Least r with ``{t, ..., t + r}`` meeting the set for every t, or None if no r works."""
        if not self.is_infinite():
            return None
        return max(self.next_member(t) - t for t in range(self.preperiod + self.period))

    def max_run(self) -> int | None:
        """Length of the longest block of consecutive members; None when unbounded."""
        if self.is_cofinite():
            return None
        bits = self.window(self.preperiod + 2 * self.period)
        best = run = 0
        for b in bits:
            run = run + 1 if b else 0
            best = max(best, run)
        return best

    def describe(self) -> dict:
        return {
            "preperiod": self.preperiod,
            "period": self.period,
            "members_before": [n for n, b in enumerate(self.prefix) if b],
            "residues": [j for j, b in enumerate(self.cycle) if b],
        }


@dataclass(frozen=True)
class TwoSidedPeriodic:
    """A subset of Z given by its nonnegative half and its reflected nonpositive half."""

    positive: EventuallyPeriodic
    negative: EventuallyPeriodic

    def __post_init__(self):
        if (0 in self.positive) != (0 in self.negative):
            raise ValueError("halves disagree at 0")

    def __contains__(self, n: int) -> bool:
        return n in self.positive if n >= 0 else -n in self.negative

    def _span(self) -> tuple[int, int]:
        lo = self.negative.preperiod + 2 * self.negative.period
        hi = self.positive.preperiod + 2 * self.positive.period
        return -lo, hi

    def complement(self) -> "TwoSidedPeriodic":
        return TwoSidedPeriodic(self.positive.complement(), self.negative.complement())

    def intersection(self, other: "TwoSidedPeriodic") -> "TwoSidedPeriodic":
        return TwoSidedPeriodic(self.positive.intersection(other.positive),
                                self.negative.intersection(other.negative))

    def is_empty(self) -> bool:
        return self.positive.is_empty() and self.negative.is_empty()

    def is_infinite(self) -> bool:
        return self.positive.is_infinite() or self.negative.is_infinite()

    def is_cofinite(self) -> bool:
        return self.positive.is_cofinite() and self.negative.is_cofinite()

    def syndetic_radius(self) -> int | None:
        """Least r with ``[t - r, t + r]`` meeting the set for every integer t."""
        if not (self.positive.is_infinite() and self.negative.is_infinite()):
            return None
        lo, hi = self._span()
        reach = (hi - lo) + 1
        best = 0
        for t in range(lo, hi + 1):
            d = next(d for d in range(reach + 1) if (t + d) in self or (t - d) in self)
            best = max(best, d)
        return best

    def max_run(self) -> int | None:
        if self.positive.is_cofinite() or self.negative.is_cofinite():
            return None
        lo, hi = self._span()
        best = run = 0
        for n in range(lo, hi + 1):
            run = run + 1 if n in self else 0
            best = max(best, run)
        return best

    def describe(self) -> dict:
        return {"positive": self.positive.describe(), "negative": self.negative.describe()}
