"""Search monogenic non-discrete instances for a transitive orbit without
interior whose system is nevertheless not TT, and print them for replay.

On a T1 space the orbit of a transitive point is closed, which the dense-Tran
argument uses; finite non-discrete spaces are never T1.
"""
import argparse

from semiflows.harness.cases import CASES, FAIL, MONOGENIC
from semiflows.harness.generate import generate
from semiflows.harness.instance_file import canonical


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--draws", type=int, default=3000)
    p.add_argument("--show", type=int, default=2)
    args = p.parse_args()
    case = CASES["meagre_orbit_tran_dense"]
    applicable = failed = 0
    shown = 0
    for seed in range(args.draws):
        inst = generate(seed, "generic", cfg=MONOGENIC)
        outcome, note = case.evaluate(inst)
        if outcome == "not-applicable":
            continue
        applicable += 1
        if outcome == FAIL:
            failed += 1
            top = inst.topology
            closed = [inst.points[x] for x in range(inst.action.n) if top.closure({x}) == {x}]
            if shown < args.show:
                shown += 1
                print(f"# {inst.name}: {note}; closed points {closed}")
                print(canonical(inst))
    print(f"applicable {applicable}, failing {failed} ({failed / max(applicable, 1):.1%})")


if __name__ == "__main__":
    main()
