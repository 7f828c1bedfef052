"""Level sizes of small superstructures, exact where they fit and symbolic beyond.

    python3 scripts/superstructure_sizes.py [--depth 4]
"""
import argparse

from ultralogic.superstructure import Superstructure, parse_vset, render

GROUNDS = ["{a}", "{a, b}", "{{}}", "{a, {a}}", "{a, b, c}"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depth", type=int, default=4)
    args = ap.parse_args()
    for text in GROUNDS:
        ss = Superstructure(parse_vset(text), args.depth)
        sizes = []
        for n in range(args.depth + 1):
            s = ss.size(n)
            sizes.append(str(s.exact) if s.exact is not None and s.exact < 10**6 else s.expr)
        print(f"{render(ss.ground):12s} " + "  ".join(f"X{n}={v}" for n, v in enumerate(sizes)))


if __name__ == "__main__":
    main()
