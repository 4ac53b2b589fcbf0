"""Run every verification suite and write one JSON-lines file per suite.

    python scripts/run_campaigns.py --out-dir results --jobs 4
"""

import argparse
import json
import time
from pathlib import Path

from vmkit.campaigns import SUITES, CampaignConfig, run_campaign


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", default="results")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--suite", action="append", choices=SUITES)
    a = ap.parse_args()
    out = Path(a.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    bad = 0
    for suite in a.suite or SUITES:
        t0 = time.perf_counter()
        rep = run_campaign(CampaignConfig(suite, seed=a.seed, jobs=a.jobs))
        with open(out / f"{suite}.jsonl", "w") as fh:
            for rec in rep.records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.write(json.dumps({"summary": rep.summary()}, sort_keys=True) + "\n")
        s = rep.summary()
        print(f"{suite:<12} {s['passed']}/{s['checked']} passed in {time.perf_counter() - t0:.1f}s")
        bad += s["failures"]
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
