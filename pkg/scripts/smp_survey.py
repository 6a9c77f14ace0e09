#!/usr/bin/env python3
"""Survey the simplest-core classification over rotational canonical
laminations.

For every rotational set with rotation-number denominator up to a bound,
build its canonical lamination and run the classifier; tally verdicts by
rotational type.
"""

import argparse
from collections import Counter
from fractions import Fraction

from trilam.lamination import canonical_of_rotational, classify_smp
from trilam.lamsets import classify_rotational, enumerate_rotational, format_lamset


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=4)
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--orbits", type=int, default=2, choices=[1, 2])
    args = ap.parse_args()

    tally = Counter()
    for q in range(2, args.max_q + 1):
        for p in range(1, q):
            rho = Fraction(p, q)
            if rho.denominator != q:
                continue
            for G in enumerate_rotational(3, rho, args.orbits):
                rep = classify_rotational(G)
                L = canonical_of_rotational(G, depth=args.depth)
                v = classify_smp(L)
                tally[(rep.type_tag, v.case_tag)] += 1
                print(f"{format_lamset(G)}  rho={p}/{q} type={rep.type_tag} "
                      f"-> {v.case_tag}")
    print()
    for (typ, verdict), n in sorted(tally.items()):
        print(f"type {typ} -> {verdict}: {n}")


if __name__ == "__main__":
    main()
