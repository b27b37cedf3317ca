#!/usr/bin/env python3
"""Measure the closed-form shortcut against the brute-force oracle.

Times the full invariant computation both ways at a few sizes and prints
the speedup. The oracle column stops where graph construction becomes
unreasonable; the closed forms keep going to billion-scale n because
they only enumerate divisors.
"""

import argparse
import time

from indegraph import closed_form, oracle


def timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--oracle-sizes", type=int, nargs="+", default=[64, 256, 1024, 4096]
    )
    parser.add_argument(
        "--closed-form-sizes", type=int, nargs="+",
        default=[10**6, 10**9 + 7, 2**40 - 1],
    )
    args = parser.parse_args()

    print(f"{'n':>14} {'closed form':>12} {'oracle':>12} {'speedup':>10}")
    for n in args.oracle_sizes:
        cf = timed(lambda: closed_form.invariants(n))
        # skip the NP-hard searches; build + polynomial invariants only
        br = timed(
            lambda: oracle.invariants(
                oracle.build(n, limit=max(n, oracle.DEFAULT_BUILD_LIMIT)),
                exact_limit=2,
                hamiltonian_limit=2,
            )
        )
        print(f"{n:>14} {cf:>11.6f}s {br:>11.6f}s {br / cf:>9.1f}x")
    for n in args.closed_form_sizes:
        cf = timed(lambda: closed_form.invariants(n))
        print(f"{n:>14} {cf:>11.6f}s {'-':>12} {'-':>10}")


if __name__ == "__main__":
    main()
