#!/usr/bin/env python3
"""Largest simulations, directed simulations and witnesses for the bundled
example models (s1 vs s1_prime, s2 vs s2_prime)."""

import argparse

from fuzzysim.algebra import TNorm, format_degree
from fuzzysim.characterization import WitnessBuilder
from fuzzysim.model import builtin_model
from fuzzysim.simulation import refine

PAIRS = (("s1", "s1_prime"), ("s2", "s2_prime"))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--witnesses", action="store_true", help="print a witness per removed pair")
    args = ap.parse_args(argv)
    for a, b in PAIRS:
        m, m2 = builtin_model(a), builtin_model(b)
        for directed in (False, True):
            ref = refine(m, m2, directed)
            kind = "directed simulation" if directed else "simulation"
            print(f"{a} vs {b}, largest {kind}: {ref.relation}  ({ref.rounds} sweeps)")
            if not args.witnesses:
                continue
            wb = WitnessBuilder(m, m2, directed, ref)
            for x in m.states:
                for y in m2.states:
                    if (x, y) in ref.relation:
                        continue
                    vals = ", ".join(
                        f"{k.value} {format_degree(r.left)}>{format_degree(r.right)}"
                        for k in TNorm for r in [wb.distinguish(x, y, k)])
                    print(f"  ({x},{y}): {wb.witness(x, y)}   [{vals}]")


if __name__ == "__main__":
    main()
