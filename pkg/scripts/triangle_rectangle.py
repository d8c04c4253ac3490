"""Coxeter polynomials of A_{2n+1} x A_n and Int(A_{2n}) side by side."""

import argparse
import time

from intervalcat.experiments import triangle_rectangle


def main(max_n: int):
    for n in range(1, max_n + 1):
        t0 = time.perf_counter()
        rect, tri = triangle_rectangle(n)
        secs = time.perf_counter() - t0
        print(f"n={n} size {n * (2 * n + 1)} {'equal' if rect == tri else 'DIFFER'} ({secs:.2f}s)")
        print(f"  {rect.pretty()}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=3)
    main(p.parse_args().max_n)
