"""How long must a proof be?  Shortest proof per goal, and the budget at which search matches the closed form.

    python3 scripts/pi_proof_lengths.py [--max-depth 3]
"""
import argparse
from collections import Counter

from ultralogic.acceptance import pi_enumeration
from ultralogic.engines.formula import imp
from ultralogic.engines.perfect import C, PiLanguage, bp0, pi_close, pi_prove_bounded


def shortest_lengths(max_depth):
    print("premises -> goal: shortest proof")
    for n in range(max_depth + 1):
        top = bp0("b", n)
        direct = pi_prove_bounded([top], bp0("b", 0), 2 * max_depth + 3)
        via_c = pi_prove_bounded([C, imp(C, top)], bp0("b", 0), 2 * max_depth + 3)
        print(f"  {{{top}}} -> b: {len(direct)}    {{c, c->{top}}} -> b: {len(via_c)}")


def budget_sweep():
    lang = PiLanguage(("b", "d"), 3)
    sets = list(pi_enumeration())
    need = Counter()
    for D in sets:
        closed = pi_close(D)
        for x in lang.bpc0:
            if x in closed:
                need[len(pi_prove_bounded(D, x, 12))] += 1
    total = sum(need.values())
    print(f"\n{len(sets)} premise sets, {total} derivable (set, goal) pairs; shortest-proof histogram:")
    covered = 0
    for k in sorted(need):
        covered += need[k]
        print(f"  {k:2d} steps: {need[k]:6d}   covered by budget {k}: {covered}/{total}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-depth", type=int, default=3)
    args = ap.parse_args()
    shortest_lengths(args.max_depth)
    budget_sweep()


if __name__ == "__main__":
    main()
