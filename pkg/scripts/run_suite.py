"""Run implication cases over several seeds and tabulate the totals."""
import argparse
import time

from semiflows.harness.cases import CASES, run_case


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--case", action="append", dest="cases")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seeds", type=int, default=3)
    args = p.parse_args()
    print(f"{'case':40s} {'drawn':>6s} {'appl':>6s} {'fail':>5s} {'inc':>5s} {'secs':>6s}")
    for cid in args.cases or CASES:
        t0 = time.perf_counter()
        totals = [0, 0, 0, 0]
        for seed in range(args.seeds):
            r = run_case(cid, args.count, seed)
            for i, v in enumerate((r.drawn, r.applicable, r.failed, r.inconclusive)):
                totals[i] += v
            for f in r.failures:
                print(f"  failure {f['instance']}: {f['note']}")
        print(f"{cid:40s} {totals[0]:6d} {totals[1]:6d} {totals[2]:5d} {totals[3]:5d} "
              f"{time.perf_counter() - t0:6.1f}")


if __name__ == "__main__":
    main()
