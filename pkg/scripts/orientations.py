"""Coxeter polynomials of interval posets for every orientation of a line."""

import argparse
from collections import defaultdict

from intervalcat.experiments import orientations_int_search


def main(max_n: int):
    for n in range(1, max_n + 1):
        rep = orientations_int_search(n)
        classes = defaultdict(list)
        for word, _, poly in rep.orientations:
            classes[str(poly)].append(word or "-")
        print(f"n={n}: {len(rep.orientations)} orientations, {len(classes)} distinct polynomials")
        for poly, words in sorted(classes.items()):
            print(f"  {poly}: {' '.join(words)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=5)
    main(p.parse_args().max_n)
