#!/usr/bin/env python3
"""Depth at which the enumerated logical preorder reaches the fixpoint
relation, over random model pairs, per fragment and t-norm.

Under the Goedel t-norm the two must agree; under the other t-norms the
enumerated family is smaller, so a mismatch there is only reported.
"""

import argparse
import random
from collections import Counter

from fuzzysim.algebra import TNorm, degree
from fuzzysim.characterization import LogicalPreorderParams, hm_relation
from fuzzysim.model import Signature, random_flts
from fuzzysim.simulation import refine


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=50)
    ap.add_argument("--max-states", type=int, default=4)
    ap.add_argument("--grid", default="0.2,0.4,0.6,0.8,1")
    ap.add_argument("--max-depth", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    grid = [degree(g) for g in args.grid.split(",")]
    sig = Signature(("r",), ("p",))
    pairs = []
    for _ in range(args.pairs):
        n1, n2 = rng.randint(1, args.max_states), rng.randint(1, args.max_states)
        pairs.append((random_flts(n1, sig, 0.4, grid, rng.randrange(2**31), "u"),
                      random_flts(n2, sig, 0.4, grid, rng.randrange(2**31), "v")))
    for fragment, directed in (("fedKDelta", False), ("fpdK", True)):
        for kind in TNorm:
            depths, agree = Counter(), 0
            for m, m2 in pairs:
                res = hm_relation(m, m2, LogicalPreorderParams(fragment, kind, args.max_depth))
                depths[res.depth] += 1
                agree += res.relation == refine(m, m2, directed).relation
            hist = " ".join(f"d{d}:{c}" for d, c in sorted(depths.items()))
            print(f"{fragment:9s} {kind.value:11s} agree {agree}/{len(pairs)}  depths {hist}")


if __name__ == "__main__":
    main()
