"""Batch checks: theorem sweeps, the triangle/rectangle comparison, orientation search."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .algebra import (
    IntPolynomial,
    coxeter_polynomial,
    gamma_zero_category,
    incidence_category,
    poset_coxeter_polynomial,
)
from .gamma import IdealMap, build_gamma, exhaustive_instances, random_instance
from .poset import chain, interval_poset, poset_from_covers, product
from .rep import verify_tilting


@dataclass(frozen=True)
class InstanceResult:
    index: int
    x_size: int
    y_size: int
    gamma_size: int
    tilting_passed: Optional[bool]
    coxeter_equal: bool

    @property
    def passed(self) -> bool:
        return self.coxeter_equal and self.tilting_passed is not False

    def line(self) -> str:
        tilt = {None: "skipped", True: "pass", False: "FAIL"}[self.tilting_passed]
        cox = "equal" if self.coxeter_equal else "DIFFER"
        return (f"instance {self.index} |X|={self.x_size} |Y|={self.y_size} |Gamma|={self.gamma_size} "
                f"tilting {tilt} coxeter {cox}")


def check_instance(args: tuple[int, IdealMap, bool]) -> InstanceResult:
    index, F, tilting = args
    g = build_gamma(F)
    cox = coxeter_polynomial(incidence_category(g.gamma)) == coxeter_polynomial(gamma_zero_category(g))
    passed = verify_tilting(g).passed if tilting else None
    return InstanceResult(index, F.X.size, F.Y.size, len(g), passed, cox)


def run_instances(instances: Iterable[IdealMap], tilting: bool = True, jobs: int = 1) -> list[InstanceResult]:
    """Check every instance; results come back in instance order whatever ``jobs`` is."""
    work = [(i, F, tilting) for i, F in enumerate(instances)]
    if jobs <= 1:
        return [check_instance(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check_instance, work, chunksize=32))


def exhaustive_sweep(max_x: int, max_y: int, tilting: bool = True, jobs: int = 1) -> list[InstanceResult]:
    return run_instances(exhaustive_instances(max_x, max_y), tilting, jobs)


def random_sweep(count: int, seed: int, max_x: int = 4, max_y: int = 4, tilting: bool = True,
                 jobs: int = 1) -> list[InstanceResult]:
    rng = random.Random(seed)
    return run_instances([random_instance(rng, max_x, max_y) for _ in range(count)], tilting, jobs)


def triangle_rectangle(n: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Coxeter polynomials of ``A_{2n+1} x A_n`` and of the interval poset of ``A_{2n}``."""
    rect = product(chain(2 * n + 1), chain(n))
    tri, _ = interval_poset(chain(2 * n))
    return poset_coxeter_polynomial(rect), poset_coxeter_polynomial(tri)


@dataclass(frozen=True)
class OrientationReport:
    n: int
    orientations: tuple  # (word, interval count, polynomial)
    differing: tuple  # index pairs with different polynomials

    def lines(self) -> list[str]:
        out = [f"orientations of the {self.n}-vertex line: {len(self.orientations)}"]
        for word, size, poly in self.orientations:
            out.append(f"orientation {word or '-'} intervals {size} coxeter {poly}")
        if self.differing:
            i, j = self.differing[0]
            same = sum(1 for a, b in self.differing if self.orientations[a][1] == self.orientations[b][1])
            out.append(f"differing pairs with equal interval counts: {same}")
            out.append(f"differing pairs: {len(self.differing)}; first {self.orientations[i][0]} "
                       f"vs {self.orientations[j][0]}")
        else:
            out.append("no differing pair")
        return out


def orientation_poset(word: str):
    """``word[i]`` is ``>`` for the edge ``i -> i+1`` (i below i+1) and ``<`` for the reverse."""
    n = len(word) + 1
    covers = [(i, i + 1) if c == ">" else (i + 1, i) for i, c in enumerate(word)]
    return poset_from_covers(n, covers)


def orientations_int_search(n: int) -> OrientationReport:
    if n < 1:
        raise ValueError("need at least one vertex")
    rows = []
    for word in ("".join(w) for w in itertools.product("><", repeat=n - 1)):
        Int, _ = interval_poset(orientation_poset(word))
        rows.append((word, Int.size, poset_coxeter_polynomial(Int)))
    differing = tuple((i, j) for i, j in itertools.combinations(range(len(rows)), 2)
                      if rows[i][2] != rows[j][2])
    return OrientationReport(n, tuple(rows), differing)
