#!/usr/bin/env python3
"""Resumable n = 7 pair sweeps for the two conjectures.

conj1 walks all 5040^2 = 25,401,600 ordered pairs; conj2 the 11,486,160
pairs whose complemented side contains the pattern 1432.  Progress is
checkpointed to the cache directory roughly every 100,000 pairs, so an
interrupted run (or one sliced with --chunks-per-session) picks up where
it stopped.

Exit status: 0 when the requested sweeps finished clean, 1 when any
counterexample was found, 75 when the session budget ran out before the
domain was exhausted (rerun to resume).
"""

import argparse
import os
import sys
from pathlib import Path

from schubcomp.verify import (
    SweepConfig,
    checkpoint_path_for,
    verify_conjecture_1432,
    verify_conjecture_partition,
)

SWEEPS = {
    "conj1": verify_conjecture_partition,
    "conj2": verify_conjecture_1432,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--claim", choices=["conj1", "conj2", "both"], default="both")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--cache-dir", default=".schubert-cache")
    parser.add_argument("--chunks-per-session", type=int, default=None,
                        help="stop after this many chunks and exit 75; rerun to resume")
    parser.add_argument("--csv", action="store_true")
    parser.add_argument("--out-dir", help="write finished reports here")
    args = parser.parse_args(argv)

    cache_dir = Path(args.cache_dir)
    cfg = SweepConfig(jobs=max(1, args.jobs), long_run=True, cache_dir=cache_dir)
    claims = ["conj1", "conj2"] if args.claim == "both" else [args.claim]

    all_clean = True
    for claim in claims:
        report = SWEEPS[claim](7, cfg, chunk_budget=args.chunks_per_session)
        if report is None:
            ckpt = checkpoint_path_for(cache_dir, claim, 7)
            print(f"{claim}: session budget exhausted, checkpoint at {ckpt}",
                  file=sys.stderr)
            return 75
        text = report.to_csv() if args.csv else report.to_json()
        sys.stdout.write(text)
        sys.stdout.flush()
        if args.out_dir:
            ext = "csv" if args.csv else "json"
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{claim}-n7.{ext}").write_text(text)
        all_clean = all_clean and report.ok
    return 0 if all_clean else 1


if __name__ == "__main__":
    raise SystemExit(main())
