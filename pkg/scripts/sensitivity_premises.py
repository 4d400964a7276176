"""Non-minimal ST and syndetic sensitivity on metric samples.

Counts, per profile, how the unconditional implication fares and how many
instances satisfy the uniformity premises. The count is then repeated with
the topology replaced by the one generated by open balls at each admissible
scale.
"""
import argparse
from collections import Counter

from semiflows.harness.cases import balls_are_neighbourhoods, separated_nonminimality
from semiflows.harness.generate import generate
from semiflows.instance import Instance
from semiflows.space import scale_topology
from semiflows.stability import is_syndetically_sensitive
from semiflows.transitivity import is_minimal, is_ST


def _classify(inst):
    a, top, ms = inst.action, inst.topology, inst.metric
    st = is_ST(a, top)
    if not (st.holds_ and st.exact) or not is_minimal(a, top).fails_:
        return None
    ss = is_syndetically_sensitive(a, ms, inst.floor)
    premises = balls_are_neighbourhoods(inst) and separated_nonminimality(inst) is not None
    return ("sensitive" if ss.holds_ else "not sensitive") + (" / premises" if premises else "")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--draws", type=int, default=300)
    args = p.parse_args()
    for profile in ("monogenic-sampled-interval-map", "shift"):
        tally, ball_tally, metric_checked = Counter(), Counter(), 0
        for seed in range(args.draws):
            inst = generate(seed, profile)
            label = _classify(inst)
            if label:
                tally[label] += 1
            ms = inst.metric
            for sigma in ms.scale_menu(inst.floor):
                try:
                    alt = Instance(inst.action, scale_topology(ms, sigma), ms, floor=inst.floor)
                except ValueError:
                    continue                    # generators not continuous at this scale
                metric_checked += 1
                label = _classify(alt)
                if label:
                    ball_tally[label] += 1
        print(f"{profile}: non-minimal ST {dict(tally)}")
        print(f"  with ball topologies ({metric_checked} checked): {dict(ball_tally)}")


if __name__ == "__main__":
    main()
