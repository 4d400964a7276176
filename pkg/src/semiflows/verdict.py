from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Iterable


class Value(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


HOLDS, FAILS, UNKNOWN = Value.HOLDS, Value.FAILS, Value.UNKNOWN


@dataclass(frozen=True)
class Verdict:
    """Three-valued outcome of a property checker.

    ``exact`` is True when the decision does not depend on the enumeration
    horizon. Unknown verdicts record the horizon at which the search stopped.
    """

    value: Value
    certificate: dict[str, Any] = field(default_factory=dict)
    exact: bool = True
    horizon: int | None = None
    scale: dict[str, Any] | None = None

    def __post_init__(self):
        if self.value is UNKNOWN:
            if self.horizon is None:
                raise ValueError("Unknown verdict must carry the horizon")
            object.__setattr__(self, "exact", False)

    @classmethod
    def holds(cls, exact=True, **certificate):
        return cls(HOLDS, certificate, exact)

    @classmethod
    def fails(cls, exact=True, **witness):
        return cls(FAILS, witness, exact)

    @classmethod
    def unknown(cls, horizon: int, **info):
        return cls(UNKNOWN, info, False, horizon)

    @property
    def holds_(self) -> bool:
        return self.value is HOLDS

    @property
    def fails_(self) -> bool:
        return self.value is FAILS

    @property
    def decided(self) -> bool:
        """Decided and horizon independent."""
        return self.value is not UNKNOWN and self.exact

    def is_exactly(self, value: Value) -> bool:
        return self.exact and self.value is value

    def with_scale(self, **scale) -> "Verdict":
        return Verdict(self.value, self.certificate, self.exact, self.horizon, scale)

    def __str__(self):
        tag = "exact" if self.exact else "horizon"
        return f"{self.value} ({tag})"


def merge(verdicts: Iterable[Verdict], **holds_certificate) -> Verdict:
    """Order-independent conjunction: Fails dominates, then Unknown, then Holds.

    Among several Fails (or Unknowns) the first in iteration order is kept, so
    callers iterate in a canonical order.
    """
    first_unknown = None
    all_exact = True
    for v in verdicts:
        if v.value is FAILS:
            return v
        if v.value is UNKNOWN and first_unknown is None:
            first_unknown = v
        all_exact = all_exact and v.exact
    if first_unknown is not None:
        return first_unknown
    return Verdict(HOLDS, holds_certificate, all_exact)


def negate(v: Verdict, **certificate) -> Verdict:
    if v.value is UNKNOWN:
        return v
    return Verdict(FAILS if v.value is HOLDS else HOLDS, certificate or v.certificate, v.exact,
                   v.horizon, v.scale)
