"""Seeded random instances.

Topologies come from random preorders (opens are up-sets); generator tables
are sampled among continuous, i.e. monotone, maps. Metrics are random
rational weights repaired by shortest paths.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..action import FiniteAction, compose
from ..catalog import shift_space
from ..instance import Instance
from ..semigroup import SemigroupModel
from ..space import FiniteTopology, MetricSpace, preorder_closure, scale_topology, shortest_path_metric

PROFILES = ("generic", "commuting", "surjective", "permutation", "measure-preserving",
            "monogenic-sampled-interval-map", "shift")


class UnsatisfiableProfile(ValueError):
    pass


@dataclass(frozen=True)
class GenConfig:
    min_points: int = 2
    max_points: int = 7
    max_generators: int = 3
    discrete_share: float = 0.25
    preorder_density: float = 0.25


def _labels(n: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(n))


def random_preorder(rng: random.Random, n: int, density: float) -> set[tuple[int, int]]:
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < density / 2]
    return preorder_closure(n, pairs)


def random_topology(rng: random.Random, n: int, cfg: GenConfig) -> FiniteTopology:
    pts = _labels(n)
    if rng.random() < cfg.discrete_share:
        return FiniteTopology.discrete(pts)
    return FiniteTopology.from_preorder(pts, random_preorder(rng, n, cfg.preorder_density))


def random_monotone_map(rng: random.Random, top: FiniteTopology, permutation: bool = False,
                        tries: int = 200) -> tuple[int, ...] | None:
    """A uniform-ish random continuous map by randomized backtracking."""
    n = top.n
    order = list(range(n))
    for _ in range(tries):
        rng.shuffle(order)
        f: dict[int, int] = {}

        def ok(x, y):
            for z, fz in f.items():
                if top.le(x, z) and not top.le(y, fz):
                    return False
                if top.le(z, x) and not top.le(fz, y):
                    return False
            return not (permutation and y in f.values())

        def extend(k):
            if k == n:
                return True
            x = order[k]
            cands = list(range(n))
            rng.shuffle(cands)
            for y in cands:
                if ok(x, y):
                    f[x] = y
                    if extend(k + 1):
                        return True
                    del f[x]
            return False

        if extend(0):
            return tuple(f[x] for x in range(n))
    return None


def random_metric(rng: random.Random, n: int) -> MetricSpace:
    w = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w[i][j] = w[j][i] = Fraction(rng.randint(1, 8), 4)
    return MetricSpace(_labels(n), tuple(tuple(r) for r in shortest_path_metric(w)))


def invariant_preorder_topology(rng: random.Random, n: int, perms, density: float) -> FiniteTopology:
    """Random preorder closed under the given permutations, so each is a homeomorphism."""
    rel = random_preorder(rng, n, density)
    while True:
        grown = set(rel)
        for p in perms:
            grown |= {(p[a], p[b]) for a, b in rel}
        grown = preorder_closure(n, grown)
        if grown == rel:
            return FiniteTopology.from_preorder(_labels(n), rel)
        rel = grown


def _model_for(rng, k: int, commuting: bool, invertible: bool) -> SemigroupModel:
    if k == 1:
        kind = "integer" if invertible and rng.random() < 0.3 else "monogenic"
        return SemigroupModel(kind, ("f",))
    gens = tuple("fgh"[:k])
    return SemigroupModel("free-abelian" if commuting else "free", gens)


# -- profiles -------------------------------------------------------------------


def _generic(rng, cfg, n):
    top = random_topology(rng, n, cfg)
    k = rng.randint(1, cfg.max_generators)
    tables = [random_monotone_map(rng, top) for _ in range(k)]
    model = _model_for(rng, k, False, False)
    return FiniteAction(model, top.points, tables), top


def _commuting(rng, cfg, n, surjective=False):
    k = rng.randint(1, cfg.max_generators)
    if surjective and rng.random() < 0.5 and n >= 4:
        # independent permutations of the two factors of a product set
        a = rng.randint(2, n // 2)
        b = n // a
        n = a * b
        pa = list(range(a))
        pb = list(range(b))
        rng.shuffle(pa)
        rng.shuffle(pb)
        base = [tuple(pa[i // b] * b + j for i, j in ((x, x % b) for x in range(n))),
                tuple((x // b) * b + pb[x % b] for x in range(n))]
        gens = [compose(base[0], base[1]) if rng.random() < 0.3 else base[i % 2] for i in range(k)]
        top = invariant_preorder_topology(rng, n, gens, cfg.preorder_density) \
            if rng.random() >= cfg.discrete_share else FiniteTopology.discrete(_labels(n))
    else:
        if surjective:
            perm = list(range(n))
            rng.shuffle(perm)
            f = tuple(perm)
            top = invariant_preorder_topology(rng, n, [f], cfg.preorder_density) \
                if rng.random() >= cfg.discrete_share else FiniteTopology.discrete(_labels(n))
        else:
            top = random_topology(rng, n, cfg)
            f = random_monotone_map(rng, top)
        gens = []
        for _ in range(k):
            g = tuple(range(n))
            for _ in range(rng.randint(1, 3)):
                g = compose(f, g)
            gens.append(g)
    model = _model_for(rng, k, True, surjective)
    return FiniteAction(model, top.points, gens), top


def _permutation(rng, cfg, n):
    k = rng.randint(1, cfg.max_generators)
    perms = []
    for _ in range(k):
        p = list(range(n))
        rng.shuffle(p)
        perms.append(tuple(p))
    top = invariant_preorder_topology(rng, n, perms, cfg.preorder_density) \
        if rng.random() >= cfg.discrete_share else FiniteTopology.discrete(_labels(n))
    model = _model_for(rng, k, False, True)
    return FiniteAction(model, top.points, perms), top


def _measure_preserving(rng, cfg, n):
    support = sorted(rng.sample(range(n), rng.randint(1, n)))
    classes: dict[int, list[int]] = {}
    for x in support:
        classes.setdefault(rng.randint(1, 3), []).append(x)
    total = sum(w * len(xs) for w, xs in classes.items())
    weights = [Fraction(0)] * n
    for w, xs in classes.items():
        for x in xs:
            weights[x] = Fraction(w, total)
    k = 1 if rng.random() < 0.6 else rng.randint(2, cfg.max_generators)
    tables = []
    for _ in range(k):
        t = list(range(n))
        for xs in classes.values():
            img = xs[:]
            rng.shuffle(img)
            for x, y in zip(xs, img):
                t[x] = y
        for x in range(n):
            if x not in support:
                t[x] = rng.randrange(n)
        tables.append(tuple(t))
    model = _model_for(rng, k, False, False)
    if model.kind == "integer":
        model = SemigroupModel("monogenic", ("f",))
    top = FiniteTopology.discrete(_labels(n))
    return FiniteAction(model, top.points, tables), top, tuple(weights)


INTERVAL_MAPS = ("doubling", "tent", "logistic")


def sampled_interval_map(name: str, n: int):
    """Monogenic action of a map of [0,1] sampled on an n-point rational grid."""
    if name == "doubling":
        coords = [Fraction(i, n) for i in range(n)]
        table = tuple(2 * i % n for i in range(n))
        ms = MetricSpace.on_circle(_labels(n), coords)
    else:
        m = n - 1
        coords = [Fraction(i, m) for i in range(n)]
        if name == "tent":
            table = tuple(m - abs(2 * i - m) for i in range(n))
        elif name == "logistic":
            table = tuple(int((Fraction(4 * i * (m - i), m) + Fraction(1, 2)) // 1) for i in range(n))
        else:
            raise ValueError(f"unknown interval map {name!r}")
        ms = MetricSpace.on_line(_labels(n), coords)
    return table, ms


def _continuous_scale(rng, ms: MetricSpace, tables):
    """A random scale whose ball topology makes every table continuous."""
    menu = list(ms.scale_menu()) + [ms.distances[-1] * 2]
    ok = []
    for sigma in menu:
        top = scale_topology(ms, sigma)
        if all(top.is_continuous(t) for t in tables):
            ok.append((sigma, top))
    return rng.choice(ok)


def _sampled(rng, cfg):
    name = rng.choice(INTERVAL_MAPS)
    n = rng.choice([5, 7, 9, 11, 13]) if name == "doubling" else rng.randint(5, 12)
    table, ms = sampled_interval_map(name, n)
    sigma, top = _continuous_scale(rng, ms, [table])
    a = FiniteAction(SemigroupModel("monogenic", ("f",)), ms.points, (table,))
    # past the diameter every scale sees the same single ball
    return Instance(a, top, ms, floor=min(sigma, ms.distances[-1]), meta={"map": name})


def _shift(rng, cfg):
    alphabet = rng.choice([2, 2, 3])
    window = rng.randint(2, 4 if alphabet == 2 else 3)
    labels, shift, top, ms = shift_space(alphabet, window)
    kind = rng.choice(["integer", "monogenic"])
    a = FiniteAction(SemigroupModel(kind, ("s",)), labels, (shift,))
    if rng.random() < 0.5:
        floor, top = _continuous_scale(rng, ms, [shift])
    else:
        floor = rng.choice(ms.scale_menu())
    n = len(labels)
    floor = min(floor, ms.distances[-1])
    return Instance(a, top, ms, measure=tuple(Fraction(1, n) for _ in labels), floor=floor,
                    meta={"alphabet": alphabet, "window": window})


def generate(seed: int, profile: str, n: int | None = None, cfg: GenConfig = GenConfig()) -> Instance:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    rng = random.Random(f"{profile}:{seed}")
    name = f"{profile}#{seed}"
    if profile == "monogenic-sampled-interval-map":
        inst = _sampled(rng, cfg)
    elif profile == "shift":
        inst = _shift(rng, cfg)
    else:
        size = n if n is not None else rng.randint(cfg.min_points, cfg.max_points)
        if size < 1:
            raise UnsatisfiableProfile("need at least one point")
        measure = None
        if profile == "generic":
            a, top = _generic(rng, cfg, size)
        elif profile == "commuting":
            a, top = _commuting(rng, cfg, size)
        elif profile == "surjective":
            a, top = _commuting(rng, cfg, size, surjective=True) if rng.random() < 0.5 \
                else _permutation(rng, cfg, size)
        elif profile == "permutation":
            a, top = _permutation(rng, cfg, size)
        else:
            a, top, measure = _measure_preserving(rng, cfg, size)
        ms = random_metric(rng, a.n)
        inst = Instance(a, top, ms, measure=measure)
    return Instance(inst.action, inst.topology, inst.metric, inst.measure, inst.floor, name,
                    {**inst.meta, "seed": seed, "profile": profile})
