#!/usr/bin/env python3
"""Compare the refinement fixpoint with the exhaustive oracle on seeded random
model pairs and report timings."""

import argparse
import random
import time

from fuzzysim.algebra import degree
from fuzzysim.model import Signature, random_flts
from fuzzysim.simulation import brute_force_largest, refine


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--max-states", type=int, default=4)
    ap.add_argument("--grid", default="0.25,0.5,0.75,1")
    ap.add_argument("--density", type=float, default=0.4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    grid = [degree(g) for g in args.grid.split(",")]
    sig = Signature(("r",), ("p",))
    mismatches = 0
    t_fix = t_oracle = 0.0
    sizes = {False: 0, True: 0}
    for _ in range(args.pairs):
        n1, n2 = rng.randint(1, args.max_states), rng.randint(1, args.max_states)
        m = random_flts(n1, sig, args.density, grid, rng.randrange(2**31), "u")
        m2 = random_flts(n2, sig, args.density, grid, rng.randrange(2**31), "v")
        for directed in (False, True):
            t0 = time.perf_counter()
            fast = refine(m, m2, directed).relation
            t1 = time.perf_counter()
            slow = brute_force_largest(m, m2, directed, bound=args.max_states ** 2)
            t2 = time.perf_counter()
            t_fix += t1 - t0
            t_oracle += t2 - t1
            sizes[directed] += len(fast)
            if fast != slow:
                mismatches += 1
                print(f"mismatch ({'directed' if directed else 'forward'}):\n{m}\n{m2}")
    print(f"{args.pairs} pairs: {mismatches} mismatches")
    print(f"fixpoint {t_fix:.3f}s, oracle {t_oracle:.3f}s")
    print(f"mean relation size: forward {sizes[False] / args.pairs:.2f}, "
          f"directed {sizes[True] / args.pairs:.2f}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
