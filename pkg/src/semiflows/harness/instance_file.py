"""Line-based instance files.

Grammar (one directive per line, ``#`` starts a comment)::

    semiflow-instance 1
    kind monogenic|integer|free|free-abelian|finite-table
    generators f g ...
    horizon 64                     (optional)
    points a b c
    topology discrete
    topology preorder a<=b b<=c    (reflexive-transitive closure is taken)
    topology opens {a,b} {b}       (empty set and whole space implied)
    metric 0 1 1/2                 (one row per point, rationals)
    action f b b c                 (image of each point, in point order)
    measure 1/2 1/2 0
    floor 1/4
    elements e f g                 (finite-table only; identity first if present)
    table f g f                    (one row per element: product row*column)

``canonical(inst)`` prints the unique normal form that ``parse`` reads back.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction

from ..action import FiniteAction
from ..instance import Instance
from ..semigroup import SemigroupModel
from ..space import FiniteTopology, MetricSpace, preorder_closure

HEADER = "semiflow-instance 1"


class InstanceParseError(ValueError):
    pass


def _horizon_override() -> int:
    value = os.environ.get("SEMIFLOWS_HORIZON")
    if value is None:
        return 0
    try:
        return int(value)
    except ValueError:
        raise InstanceParseError(f"SEMIFLOWS_HORIZON must be an integer, got {value!r}") from None


def parse(text: str, name: str = "") -> Instance:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != HEADER:
        raise InstanceParseError(f"first line must be {HEADER!r}")
    fields: dict[str, list] = {}
    actions: dict[str, list[str]] = {}
    metric_rows, table_rows = [], []
    for line in lines[1:]:
        key, _, rest = line.partition(" ")
        words = rest.split()
        if key == "action":
            if not words:
                raise InstanceParseError("action needs a generator name")
            if words[0] in actions:
                raise InstanceParseError(f"duplicate action for {words[0]}")
            actions[words[0]] = words[1:]
        elif key == "metric":
            metric_rows.append(words)
        elif key == "table":
            table_rows.append(words)
        elif key in ("kind", "generators", "horizon", "points", "topology", "measure", "floor", "elements"):
            if key in fields:
                raise InstanceParseError(f"duplicate directive {key}")
            fields[key] = words if key != "topology" else rest
        else:
            raise InstanceParseError(f"unknown directive {key!r}")
    for req in ("kind", "generators", "points"):
        if req not in fields:
            raise InstanceParseError(f"missing directive {req}")
    try:
        return _build(fields, actions, metric_rows, table_rows, name)
    except InstanceParseError:
        raise
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        raise InstanceParseError(str(exc)) from exc


def _rationals(words) -> list[Fraction]:
    try:
        return [Fraction(w) for w in words]
    except (ValueError, ZeroDivisionError):
        raise InstanceParseError(f"bad rational in {' '.join(words)!r}") from None


def _build(fields, actions, metric_rows, table_rows, name) -> Instance:
    kind = " ".join(fields["kind"])
    gens = tuple(fields["generators"])
    horizon = _horizon_override()
    if "horizon" in fields:
        horizon = int(fields["horizon"][0])
    pts = tuple(fields["points"])
    if len(set(pts)) != len(pts):
        raise InstanceParseError("duplicate point labels")
    index = {p: i for i, p in enumerate(pts)}

    table = elements = None
    if kind == "finite-table":
        elements = tuple(fields.get("elements", ()))
        eidx = {e: i for i, e in enumerate(elements)}
        if len(table_rows) != len(elements):
            raise InstanceParseError("finite-table needs one table row per element")
        table = tuple(tuple(eidx[w] for w in row) for row in table_rows)
    model = SemigroupModel(kind, gens, horizon, table, elements)

    tables = []
    for g in gens:
        if g not in actions:
            raise InstanceParseError(f"missing action for generator {g}")
        images = actions[g]
        if len(images) != len(pts):
            raise InstanceParseError(f"action {g} must list one image per point")
        try:
            tables.append(tuple(index[y] for y in images))
        except KeyError as exc:
            raise InstanceParseError(f"action {g} mentions unknown point {exc.args[0]}") from None
    extra = set(actions) - set(gens)
    if extra:
        raise InstanceParseError(f"action for undeclared generator {sorted(extra)[0]}")
    action = FiniteAction(model, pts, tuple(tables))

    topology = _topology(fields.get("topology", "discrete"), pts, index)
    metric = None
    if metric_rows:
        metric = MetricSpace(pts, tuple(tuple(_rationals(r)) for r in metric_rows))
    measure = tuple(_rationals(fields["measure"])) if "measure" in fields else None
    floor = _rationals(fields["floor"])[0] if "floor" in fields else None
    return Instance(action, topology, metric, measure, floor, name)


def _topology(spec: str, pts, index) -> FiniteTopology:
    spec = spec.strip()
    mode, _, rest = spec.partition(" ")
    if mode == "discrete":
        return FiniteTopology.discrete(pts)
    if mode == "indiscrete":
        return FiniteTopology.indiscrete(pts)
    if mode == "preorder":
        pairs = []
        for item in rest.split():
            a, sep, b = item.partition("<=")
            if not sep or a not in index or b not in index:
                raise InstanceParseError(f"bad preorder pair {item!r}")
            pairs.append((index[a], index[b]))
        return FiniteTopology.from_preorder(pts, preorder_closure(len(pts), pairs))
    if mode == "opens":
        sets = re.findall(r"\{([^}]*)\}", rest)
        opens = [frozenset(), frozenset(range(len(pts)))]
        for body in sets:
            members = [w for w in re.split(r"[,\s]+", body) if w]
            try:
                opens.append(frozenset(index[w] for w in members))
            except KeyError as exc:
                raise InstanceParseError(f"open set mentions unknown point {exc.args[0]}") from None
        family = _close_opens(opens)
        return FiniteTopology.from_opens(pts, family)
    raise InstanceParseError(f"unknown topology mode {mode!r}")


def _close_opens(opens):
    """Close a subbasis under finite unions and intersections."""
    family = set(opens)
    changed = True
    while changed:
        changed = False
        for A in list(family):
            for B in list(family):
                for C in (A | B, A & B):
                    if C not in family:
                        family.add(C)
                        changed = True
    return family


def canonical(inst: Instance) -> str:
    a, top = inst.action, inst.topology
    m = a.model
    pts = a.points
    out = [HEADER, f"kind {m.kind}", "generators " + " ".join(m.generators), f"horizon {m.horizon}",
           "points " + " ".join(pts)]
    if m.kind == "finite-table":
        out.append("elements " + " ".join(m.element_names))
        for row in m.table:
            out.append("table " + " ".join(m.element_names[j] for j in row))
    if top.is_discrete:
        out.append("topology discrete")
    else:
        pairs = [f"{pts[x]}<={pts[y]}" for x in range(a.n) for y in sorted(top.min_open[x]) if x != y]
        out.append("topology preorder " + " ".join(pairs))
    if inst.metric is not None:
        for row in inst.metric.dist:
            out.append("metric " + " ".join(str(v) for v in row))
    for g, t in zip(m.generators, a.tables):
        out.append(f"action {g} " + " ".join(pts[y] for y in t))
    if inst.measure is not None:
        out.append("measure " + " ".join(str(v) for v in inst.measure))
    if inst.floor is not None:
        out.append(f"floor {inst.floor}")
    return "\n".join(out) + "\n"


def load(path: str) -> Instance:
    with open(path) as fh:
        return parse(fh.read(), name=os.path.basename(path))
