#!/usr/bin/env python3
"""Run every verification suite over its default grid and print one line per criterion.

    python3 scripts/run_acceptance.py [--json results.json] [--only hecke-ring,psic]
"""

from __future__ import annotations

import argparse
import json
import sys

from hecke_satake.rootdata import preset
from hecke_satake.suites import DEFAULT_GRID, Bounds, run_suite

CRITERIA = [
    (1, "hecke-ring", "Hecke ring consistency", 60.0, "per-run"),
    (2, "tstar", "T* basis", None, None),
    (3, "orientation", "orientation bases", None, None),
    (4, "theorem-star", "T* congruence mod q", 600.0, "total"),
    (5, "psic", "psi(c_w^x) closed form", None, None),
    (6, "bruhat", "cone criterion and Bruhat order", None, None),
    (7, "ej", "orientation expansion vs Levi T* sum", None, None),
    (8, "eist", "Satake round trip, triangularity, closed form", None, None),
    (9, "eist-gl2", "GL2 worked example", 1.0, "total"),
    (10, "weight-levi", "change of weight and Levi equality", 600.0, "total"),
    (11, "oracle", "cover multiply vs monomial oracle", None, None),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", default=None, help="write all reports here")
    ap.add_argument("--only", default="", help="comma-separated suite names")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    only = {s for s in args.only.split(",") if s}
    everything = {}
    all_ok = True
    for n, suite, title, budget, mode in CRITERIA:
        if only and suite not in only:
            continue
        reports = []
        for name, q in DEFAULT_GRID[suite]:
            r = run_suite(suite, preset(name, q), Bounds(seed=args.seed))
            reports.append(r)
            if not r.ok:
                print("   ", r.summary(), file=sys.stderr)
        wall = [r.wall_time for r in reports]
        timed = max(wall) if mode == "per-run" else sum(wall)
        ok = all(r.ok for r in reports) and (budget is None or timed <= budget)
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} runs={len(reports)} "
              f"cases={sum(r.cases for r in reports)} failures={sum(r.failure_count for r in reports)} "
              f"time={sum(wall):.1f}s", flush=True)
        everything[suite] = [r.to_json() for r in reports]
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(everything, fh, indent=1, sort_keys=True)
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
