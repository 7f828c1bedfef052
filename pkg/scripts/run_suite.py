"""Run the acceptance battery and print one line per criterion.

    python3 scripts/run_suite.py [--seed N] [--json out.json]
"""
import argparse
import json
import sys

from ultralogic.acceptance import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", help="also write the full details here")
    args = ap.parse_args()
    results = run_suite(args.seed)
    for c in results:
        print(f"{c.line()}  ({c.seconds:.1f}s)")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([c.to_dict(timing=True) for c in results], fh, indent=2, sort_keys=True)
    return 0 if all(c.passed for c in results) else 1


if __name__ == "__main__":
    sys.exit(main())
