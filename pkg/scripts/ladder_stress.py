"""Guarantee-mode C7 extraction on many seeded random ladders at the size floor.

Prints one FAIL line per broken instance and a final count.
"""

import argparse
import random
import time

from vmkit import replay
from vmkit.extract import ladder_bound, ladder_to_cycle
from vmkit.families import make_ladder


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=123)
    a = ap.parse_args()
    rng = random.Random(a.seed)
    floor = ladder_bound(1)
    fails = 0
    t0 = time.perf_counter()
    for s in range(a.count):
        p_len = rng.randint(300, floor - 300)
        q_len = max(1, floor - p_len + rng.randint(0, 800))
        density = rng.choice([0.01, 0.05, 0.2, 0.5, 0.9])
        lv = make_ladder("random", p_len, q_len, density, 1000 + s)
        try:
            rep = ladder_to_cycle(lv, 1)
            ok = replay(lv.graph, rep.trace).verified
        except Exception as exc:  # report and keep going
            ok = False
            print(f"FAIL {s} a={p_len} b={q_len} d={density} {type(exc).__name__}: {exc}", flush=True)
        fails += not ok
    print(f"{a.count - fails}/{a.count} ok in {time.perf_counter() - t0:.0f}s")
    return 1 if fails else 0


if __name__ == "__main__":
    raise SystemExit(main())
