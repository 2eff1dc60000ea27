#!/usr/bin/env python3
"""Sizes of the maximal classes per vertex count, by brute force where feasible.

Brute force (enumeration + reversal oracle) covers n <= 8; beyond that only the
generated classes are reported, each member checked to attain the bound
(a soundness-only experiment).
"""

import argparse
import time

from tournament_lab.core import decode_code
from tournament_lab.enumeration import Enumerator
from tournament_lab.forms import applicable_forms, generate_class
from tournament_lab.indices import Delta_of_n, big_delta, delta_of_n, small_delta_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--soundness-to", type=int, default=10, help="generated-only rows up to this n")
    ap.add_argument("--cache-dir", default=None)
    args = ap.parse_args()
    reps = Enumerator(args.cache_dir)

    print(f"{'n':>3} {'reps':>6} {'Delta-max':>10} {'delta-max':>10} {'forms':s}")
    for n in range(3, args.max_n + 1):
        ts = reps.tournaments(n)
        dmax = sum(big_delta(t)[0] == Delta_of_n(n) for t in ts)
        smax = sum(small_delta_oracle(t)[0] == delta_of_n(n) for t in ts) if n >= 5 else "-"
        tags = [s.tag for s, _ in applicable_forms("delta", n)]
        print(f"{n:>3} {len(ts):>6} {dmax:>10} {smax!s:>10} {' '.join(tags)}")

    for n in range(args.max_n + 1, args.soundness_to + 1):
        t0 = time.perf_counter()
        cap = max(10, n)
        codes = generate_class("delta", n, reps, cap=cap)
        ok = all((big_delta(decode_code(c))[0] + 1) // 2 == delta_of_n(n) for c in codes)
        print(f"{n:>3} {'-':>6} {'-':>10} {len(codes):>10} generated, sound={ok} ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
