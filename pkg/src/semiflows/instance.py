from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .action import FiniteAction, validate_continuity
from .space import FiniteTopology, MetricSpace


@dataclass(frozen=True)
class Instance:
    """An action together with the structures the checkers need.

    ``topology`` defaults to the discrete one; ``floor`` is the resolution
    below which metric scales are not examined.
    """

    action: FiniteAction
    topology: FiniteTopology | None = None
    metric: MetricSpace | None = None
    measure: tuple[Fraction, ...] | None = None
    floor: Fraction | None = None
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.topology is None:
            object.__setattr__(self, "topology", FiniteTopology.discrete(self.action.points))
        validate_continuity(self.action, self.topology)
        if self.metric is not None and self.metric.n != self.action.n:
            raise ValueError("metric and action have different point sets")
        if self.measure is not None:
            w = tuple(Fraction(v) for v in self.measure)
            if len(w) != self.action.n or any(v < 0 for v in w) or sum(w) != 1:
                raise ValueError("measure must be a probability vector on the points")
            object.__setattr__(self, "measure", w)

    @property
    def points(self) -> tuple[str, ...]:
        return self.action.points

    def index(self, label: str) -> int:
        return self.action.points.index(label)

    def indices(self, labels) -> frozenset[int]:
        return frozenset(self.index(x) for x in labels)
