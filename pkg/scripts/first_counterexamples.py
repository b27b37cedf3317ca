#!/usr/bin/env python3
"""Sweep a range of moduli and print where each audited claim first breaks.

Usage: python3 scripts/first_counterexamples.py [--hi 128] [--jobs 8]
"""

import argparse
import os

from indegraph.audit import render_report, sweep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lo", type=int, default=2)
    parser.add_argument("--hi", type=int, default=128)
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = parser.parse_args()
    report = sweep(args.lo, args.hi, jobs=args.jobs)
    print(render_report(report, "md"))


if __name__ == "__main__":
    main()
