"""Named checkers over an Instance, each producing a serializable Claim."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import stability, structure, transitivity
from .instance import Instance
from .semigroup import NotApplicable, is_right_C
from .verdict import Verdict


@dataclass(frozen=True)
class Claim:
    id: str
    value: str
    exact: bool = True
    certificate: dict[str, Any] = field(default_factory=dict)
    scale: dict[str, Any] | None = None

    @classmethod
    def of(cls, cid: str, v: Verdict) -> "Claim":
        return cls(cid, str(v.value), v.exact, dict(v.certificate), v.scale)

    @classmethod
    def points(cls, cid: str, inst: Instance, pts, exact=True, scale=None, **cert) -> "Claim":
        return cls(cid, "{" + ",".join(inst.action.label(pts)) + "}", exact, cert, scale)


def _scale(inst):
    return {"floor": None if inst.floor is None else str(inst.floor)}


def _need_metric(inst):
    if inst.metric is None:
        raise NotApplicable("property needs a metric")
    return inst.metric


def _tt_invariant(inst, which):
    v2, v3 = transitivity.is_TT_via_invariant_sets(inst.action, inst.topology)
    return v2 if which == 2 else v3


def _measure(inst):
    mu = structure.invariant_measure(inst.action)
    if mu is None:
        return Claim("invariant_measure", "infeasible")
    return Claim("invariant_measure", "[" + ",".join(str(w) for w in mu.weights) + "]")


def _aut_orbits(inst):
    aut = structure.compute_aut(inst.action, inst.topology, max_points=None)
    return Claim("aut_orbits", "|".join("{" + ",".join(inst.action.label(o)) + "}" for o in aut.orbits),
                 certificate={"size": len(aut.elements)})


def _profile_flag(key):
    def run(inst):
        flag = inst.action.surjectivity_profile()[key]
        return Claim(key, "Holds" if flag else "Fails")
    return run


PROPERTIES: dict[str, Callable[[Instance], Claim]] = {
    "tt": lambda i: Claim.of("tt", transitivity.is_TT(i.action, i.topology)),
    "tt_invariant": lambda i: Claim.of("tt_invariant", _tt_invariant(i, 2)),
    "tt_negative_invariant": lambda i: Claim.of("tt_negative_invariant", _tt_invariant(i, 3)),
    "pt": lambda i: Claim.of("pt", transitivity.is_PT(i.action, i.topology)),
    "st": lambda i: Claim.of("st", transitivity.is_ST(i.action, i.topology)),
    "strong_mixing": lambda i: Claim.of("strong_mixing", transitivity.is_strongly_mixing(i.action, i.topology)),
    "minimal": lambda i: Claim.of("minimal", transitivity.is_minimal(i.action, i.topology)),
    "tran": lambda i: Claim.points("tran", i, transitivity.transitive_points(i.action, i.topology)),
    "minimal_points": lambda i: Claim.points("minimal_points", i, transitivity.minimal_points(i.action, i.topology)),
    "ap_points": lambda i: Claim.points("ap_points", i, transitivity.almost_periodic_points(i.action, i.topology)),
    "prerec_points": lambda i: Claim.points("prerec_points", i, transitivity.prerecurrent_points(i.action, i.topology)),
    "nonwandering": lambda i: Claim.points("nonwandering", i, transitivity.nonwandering_set(i.action, i.topology)),
    "equi_points": lambda i: Claim.points("equi_points", i, stability.equi_points(i.action, _need_metric(i), i.floor),
                                          scale=_scale(i)),
    "equicontinuous": lambda i: Claim.of("equicontinuous", stability.is_equicontinuous(i.action, _need_metric(i), i.floor)),
    "sensitive": lambda i: Claim.of("sensitive", stability.is_sensitive(i.action, _need_metric(i), i.floor)),
    "syndetically_sensitive": lambda i: Claim.of(
        "syndetically_sensitive", stability.is_syndetically_sensitive(i.action, _need_metric(i), i.floor)),
    "thickly_stable": lambda i: Claim.of("thickly_stable", stability.is_thickly_stable(i.action, _need_metric(i), i.floor)),
    "uap": lambda i: Claim.of("uap", stability.is_uniformly_almost_periodic(i.action, _need_metric(i), i.floor)),
    "distal": lambda i: Claim.of("distal", stability.is_distal(i.action)),
    "ut": lambda i: Claim.of("ut", structure.is_UT(i.action, i.topology, max_points=None)),
    "aut_orbits": _aut_orbits,
    "invariant_measure": _measure,
    "e_semiflow": lambda i: Claim.of("e_semiflow", structure.is_E_semiflow(i.action, i.topology)),
    "surjective": _profile_flag("surjective"),
    "TX_equals_X": _profile_flag("TX_equals_X"),
    "right_c": lambda i: Claim.of("right_c", is_right_C(i.action.model)),
}


def evaluate(inst: Instance, name: str) -> Claim:
    try:
        run = PROPERTIES[name]
    except KeyError:
        raise KeyError(f"unknown property {name!r}; known: {', '.join(sorted(PROPERTIES))}") from None
    try:
        return run(inst)
    except NotApplicable as exc:
        return Claim(name, "not-applicable", True, {"reason": str(exc)})
