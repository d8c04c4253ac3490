"""Tilting and Coxeter checks over exhaustive and random ideal maps.

    python3 scripts/sweep_theorem.py --max-x 3 --max-y 3 --random 200 --seed 1
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from intervalcat.experiments import exhaustive_sweep, random_sweep


@dataclass
class SweepConfig:
    max_x: int = 3
    max_y: int = 3
    random_count: int = 100
    random_max: int = 4
    seed: int = 0
    tilting: bool = True
    jobs: int = 1


def main(cfg: SweepConfig):
    t0 = time.perf_counter()
    exhaustive = exhaustive_sweep(cfg.max_x, cfg.max_y, cfg.tilting, cfg.jobs)
    t1 = time.perf_counter()
    rand = random_sweep(cfg.random_count, cfg.seed, cfg.random_max, cfg.random_max, cfg.tilting, cfg.jobs)
    t2 = time.perf_counter()
    for name, results, secs in [("exhaustive", exhaustive, t1 - t0), ("random", rand, t2 - t1)]:
        sizes = Counter(r.gamma_size for r in results)
        failed = [r for r in results if not r.passed]
        print(f"{name}: {len(results)} instances in {secs:.1f}s, {len(failed)} failures")
        print("  |Gamma| histogram: " + " ".join(f"{k}:{v}" for k, v in sorted(sizes.items())))
        for r in failed:
            print("  " + r.line())


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-x", type=int, default=3)
    p.add_argument("--max-y", type=int, default=3)
    p.add_argument("--random", type=int, default=100)
    p.add_argument("--random-max", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-tilting", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    a = p.parse_args()
    main(SweepConfig(a.max_x, a.max_y, a.random, a.random_max, a.seed, not a.no_tilting, a.jobs))
