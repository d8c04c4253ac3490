"""Coxeter comparison of A_{a+b} x Dyck_{a,b} with L_{a,b} over a range of coprime pairs."""

import argparse
import time
from dataclasses import dataclass
from math import comb, gcd

from intervalcat.paths import conjecture_report


@dataclass
class TableConfig:
    max_a: int = 3
    max_b: int = 5
    max_paths: int = 60


def coprime_pairs(cfg: TableConfig):
    for a in range(1, cfg.max_a + 1):
        for b in range(a + 1, cfg.max_b + 1):
            if gcd(a, b) == 1 and comb(a + b, b) <= cfg.max_paths:
                yield a, b


def main(cfg: TableConfig):
    print(f"{'a':>3} {'b':>3} {'|L|':>5} {'|Dyck|':>6} {'secs':>6}  coxeter")
    for a, b in coprime_pairs(cfg):
        t0 = time.perf_counter()
        rep = conjecture_report(a, b)
        secs = time.perf_counter() - t0
        verdict = "equal" if rep.polynomials_equal else "DIFFER"
        print(f"{a:>3} {b:>3} {rep.comparison.left[0]:>5} {rep.dyck_count:>6} {secs:>6.2f}  {verdict}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-a", type=int, default=3)
    p.add_argument("--max-b", type=int, default=5)
    p.add_argument("--max-paths", type=int, default=60)
    a = p.parse_args()
    main(TableConfig(a.max_a, a.max_b, a.max_paths))
