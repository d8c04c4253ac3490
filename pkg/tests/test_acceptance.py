"""The ten acceptance criteria, one test each, all exact."""

import random
import time
from math import comb

from intervalcat.algebra import coxeter_polynomial, gamma_zero_category, incidence_category
from intervalcat.cli import EXIT_OK, run
from intervalcat.experiments import exhaustive_sweep, random_sweep, triangle_rectangle
from intervalcat.gamma import build_gamma, example_one, random_instance
from intervalcat.paths import (
    conjecture_report,
    cycling_orbits,
    dyck_paths_poset,
    lattice_paths_poset,
)
from intervalcat.poset import chain, interval_poset, is_isomorphic, small_posets

from oracles import (
    adjunction_holds,
    interval_hom_mismatches,
    projective_hom_mismatches,
    pushforward_exact,
    restricted_pushforward_mismatches,
)


def test_criterion_01_tilting_sweep(acceptance_log):
    results = exhaustive_sweep(3, 3, tilting=True)
    failed = [r.line() for r in results if r.tilting_passed is not True]
    ok = acceptance_log(1, "tilting module verified on every ideal map with |X|,|Y| <= 3",
                        not failed and len(results) > 0, f"{len(results)} instances")
    assert ok, failed[:5]


def test_criterion_02_coxeter_sweep(acceptance_log):
    results = exhaustive_sweep(3, 3, tilting=False) + random_sweep(100, seed=2024, max_x=4, max_y=4, tilting=False)
    failed = [r.line() for r in results if not r.coxeter_equal]
    ok = acceptance_log(2, "Coxeter polynomials of Gamma and kGamma_0 agree",
                        not failed, f"{len(results)} instances")
    assert ok, failed[:5]


def test_criterion_03_interval_and_projective_homs(acceptance_log):
    bad, checked = [], 0
    for n in range(1, 5):
        for X in small_posets(n):
            bad += interval_hom_mismatches(X) + projective_hom_mismatches(X)
            checked += 1
    ok = acceptance_log(3, "Hom between interval, projective and injective modules", not bad,
                        f"{checked} posets")
    assert ok, bad[:5]


def test_criterion_04_triangle_rectangle(acceptance_log):
    pairs = [triangle_rectangle(n) for n in (1, 2, 3)]
    sizes = [interval_poset(chain(2 * n))[0].size for n in (1, 2, 3)]
    ok = acceptance_log(4, "A_{2n+1} x A_n against Int(A_{2n}) for n = 1, 2, 3",
                        all(a == b for a, b in pairs) and sizes == [3, 10, 21])
    assert ok, pairs


def test_criterion_05_two_row_paths(acceptance_log):
    checks = []
    for b in (3, 5, 7):
        checks.append(is_isomorphic(lattice_paths_poset(2, b), interval_poset(chain(b + 1))[0]) is not None)
        checks.append(is_isomorphic(dyck_paths_poset(2, b), chain((b + 1) // 2)) is not None)
        checks.append(conjecture_report(2, b).polynomials_equal)
    ok = acceptance_log(5, "two-row lattice and Dyck paths for b = 3, 5, 7", all(checks))
    assert ok, checks


def test_criterion_06_counting_and_cycling(acceptance_log):
    bad = []
    for a, b in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]:
        total = comb(a + b, b)
        # (1/(a+b)) C(a+b, b) must be an integer before comparing
        if total % (a + b) or lattice_paths_poset(a, b).size != total:
            bad.append((a, b, "lattice"))
        if dyck_paths_poset(a, b).size * (a + b) != total:
            bad.append((a, b, "dyck"))
        for orbit in cycling_orbits(a, b):
            if len(orbit) != a + b or sum(p.is_dyck() for p in orbit) != 1:
                bad.append((a, b, "orbit"))
                break
    ok = acceptance_log(6, "path counts and cycling orbits", not bad)
    assert ok, bad


def test_criterion_07_pushforward_and_restriction(acceptance_log):
    rng = random.Random(77)
    checks, bad = 0, []
    while checks < 60:
        g = build_gamma(random_instance(rng, 3, 3))
        if not 0 < len(g) <= 10:
            continue
        for y in range(g.Y.size):
            if not g.fiber(y):
                continue
            seed = rng.randrange(2**31)
            checks += 1
            if not adjunction_holds(g, y, seed):
                bad.append(("adjunction", g.source.assignment, y, seed))
            if not pushforward_exact(g, y, seed):
                bad.append(("exactness", g.source.assignment, y, seed))
    bad += restricted_pushforward_mismatches(build_gamma(example_one()))
    ok = acceptance_log(7, "adjunction, exactness and restricted pushforwards", not bad,
                        f"{checks} fibers of random instances")
    assert ok, bad[:5]


def test_criterion_08_example_golden(acceptance_log):
    g = build_gamma(example_one())
    lab = g.gamma.labels
    covers = {(lab[u], lab[v]) for u, v in g.gamma.covers}
    printed = {
        (("1", "a"), ("1", "b")), (("1", "b"), ("1", "c")), (("1", "c"), ("1", "d")),
        (("1", "c"), ("3", "c")), (("1", "d"), ("3", "d")), (("3", "c"), ("3", "d")),
        (("2", "b"), ("2", "c")), (("2", "c"), ("2", "d")),
        (("2", "c"), ("3", "c")), (("2", "d"), ("3", "d")),
    }
    K = gamma_zero_category(g)
    dotted = {(lab[u], lab[v], lab[w]) for u, v in g.gamma.covers for v2, w in g.gamma.covers
              if v2 == v and not K.composes_nonzero(u, v, w)}
    expected = {(("1", "b"), ("1", "c"), ("3", "c")), (("2", "b"), ("2", "c"), ("3", "c"))}
    ok = acceptance_log(8, "nine-element Gamma, its covers and two zero relations",
                        len(g) == 9 and covers == printed and dotted == expected)
    assert ok
    assert coxeter_polynomial(K) == coxeter_polynomial(incidence_category(g.gamma))


def test_criterion_09_conjecture_run(acceptance_log):
    start = time.perf_counter()
    status, text = run(["conjecture", "3", "4"])
    elapsed = time.perf_counter() - start
    lines = text.splitlines()
    emitted = (any(l.startswith("coxeter left") for l in lines) and any(l.startswith("coxeter right") for l in lines)
               and lines[-1] in ("polynomials equal", "polynomials differ"))
    ok = acceptance_log(9, "conjecture 3 4 terminates and reports both polynomials",
                        emitted and elapsed < 60 and status in (0, 1), f"{elapsed:.1f}s, {lines[-1]}")
    assert ok, text


def test_criterion_10_orientation_search(acceptance_log):
    status, text = run(["orientations-int", "4"])
    lines = text.splitlines()
    rows = [l for l in lines if l.startswith("orientation ")]
    verdict = lines[-1]
    ok = acceptance_log(10, "orientations of the 4-vertex line searched",
                        status == EXIT_OK and len(rows) == 8
                        and (verdict.startswith("differing pairs") or verdict == "no differing pair"),
                        verdict)
    assert ok, text
