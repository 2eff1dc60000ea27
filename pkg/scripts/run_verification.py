#!/usr/bin/env python3
"""Run every registered check over a vertex range and print a summary table.

    python3 scripts/run_verification.py --n-range 1..8 --json out.jsonl
"""

import argparse
import json
import time

from tournament_lab.cli import parse_range
from tournament_lab.enumeration import Enumerator
from tournament_lab.verify import check_ids, run_check


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-range", type=parse_range, default=parse_range("1..8"))
    ap.add_argument("--cache-dir", default=None)
    ap.add_argument("--json", help="also write JSON lines here")
    args = ap.parse_args()

    reps = Enumerator(args.cache_dir)
    sink = open(args.json, "w") if args.json else None
    failed = 0
    t0 = time.perf_counter()
    for cid in check_ids():
        r = run_check(cid, args.n_range, reps)
        failed += not r.passed
        print(f"{r.status:4}  {cid:20} n={r.range!s:28} checked={r.checked:6}  {r.elapsed:6.2f}s")
        if sink:
            sink.write(json.dumps(r.to_json()) + "\n")
    if sink:
        sink.close()
    print(f"{len(check_ids()) - failed}/{len(check_ids())} checks pass in {time.perf_counter() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
