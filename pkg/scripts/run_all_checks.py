#!/usr/bin/env python3
"""Run every verification sweep at desk scale and print one report per line.

The default plan covers all registered claims at their largest ungated
sizes (a few seconds of work).  Passing --long-run appends the n = 7 pair
sweeps, which walk about 37 million ordered pairs between them and write
checkpoints to the cache directory as they go.

Exit status: 0 when every report is clean, 1 when any sweep found a
counterexample.
"""

import argparse
import os
import sys
from pathlib import Path

from schubcomp.verify import SweepConfig, run_claim

DESK_PLAN = [
    ("theorem1", [3, 4, 5, 6, 7]),
    ("extremal", [6]),
    ("code-lemma", [7]),
    ("rearrangement", [7]),
    ("involution", [7]),
    ("conj1", [4, 5, 6]),
    ("conj2", [4, 5, 6]),
    ("thm1432", [4]),
    ("basis", [3, 4, 5]),
    ("methods", [5, 6]),
]

LONG_PLAN = [("conj1", [7]), ("conj2", [7])]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--cache-dir", default=".schubert-cache")
    parser.add_argument("--long-run", action="store_true",
                        help="also run the 25.4M/11.5M pair sweeps at n=7")
    parser.add_argument("--csv", action="store_true")
    parser.add_argument("--out-dir", help="write each report to <claim>-n<N>.<ext> here")
    args = parser.parse_args(argv)

    cfg = SweepConfig(
        jobs=max(1, args.jobs),
        long_run=args.long_run,
        cache_dir=Path(args.cache_dir),
    )
    plan = DESK_PLAN + (LONG_PLAN if args.long_run else [])
    all_clean = True
    for claim, sizes in plan:
        for n in sizes:
            report = run_claim(claim, n, cfg)
            text = report.to_csv() if args.csv else report.to_json()
            sys.stdout.write(text)
            sys.stdout.flush()
            if args.out_dir:
                ext = "csv" if args.csv else "json"
                out = Path(args.out_dir)
                out.mkdir(parents=True, exist_ok=True)
                (out / f"{claim}-n{n}.{ext}").write_text(text)
            all_clean = all_clean and report.ok
    return 0 if all_clean else 1


if __name__ == "__main__":
    raise SystemExit(main())
