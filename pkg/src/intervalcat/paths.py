"""Lattice paths in an a x b rectangle and rational Dyck paths.

A path from ``(0, 0)`` to ``(b, a)`` uses ``b`` east steps and ``a`` north
steps. It is stored as the weakly increasing tuple of abscissas of its north
steps. Orientation convention: a path with larger abscissas turns north later
and so lies lower, hence

    lam <= mu  iff  lam.abscissas[i] >= mu.abscissas[i] for every i.

Worked 2 x 2 example (a = b = 2): ``(2, 2)`` is the path EENN, the lowest
element; ``(0, 0)`` is NNEE, the highest; ``(1, 1)`` (ENNE) and ``(0, 2)``
(NEEN) are incomparable with ``(0, 2)`` not below ``(1, 1)`` because 0 < 1
in the first coordinate, and ``(1, 1)`` not below ``(0, 2)`` because 1 < 2
in the second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, gcd

from .algebra import InvariantReport, derived_invariant_report, incidence_category
from .errors import CoprimalityError, SizeError
from .poset import Poset, chain, product

DEFAULT_PATH_BOUND = 5000


@dataclass(frozen=True, order=True)
class LatticePath:
    a: int
    b: int
    abscissas: tuple[int, ...]

    def __post_init__(self):
        xs = tuple(self.abscissas)
        object.__setattr__(self, "abscissas", xs)
        if len(xs) != self.a:
            raise ValueError("need one abscissa per north step")
        if any(not 0 <= x <= self.b for x in xs) or any(x > y for x, y in zip(xs, xs[1:])):
            raise ValueError("abscissas must be weakly increasing within [0, b]")

    def word(self) -> str:
        out, x = [], 0
        for xi in self.abscissas:
            out.append("E" * (xi - x) + "N")
            x = xi
        out.append("E" * (self.b - x))
        return "".join(out)

    @classmethod
    def from_word(cls, word: str) -> "LatticePath":
        xs, x = [], 0
        for step in word:
            if step == "E":
                x += 1
            elif step == "N":
                xs.append(x)
            else:
                raise ValueError(f"unknown step {step!r}")
        return cls(len(xs), x, tuple(xs))

    def below(self, other: "LatticePath") -> bool:
        return all(p >= q for p, q in zip(self.abscissas, other.abscissas))

    def is_dyck(self) -> bool:
        """Weakly above the line from ``(0, 0)`` to ``(b, a)``.

        The lowest point of north step i (1-based) is ``(x_i, i - 1)``; it lies
        on or above the diagonal iff ``b * (i - 1) >= a * x_i``.
        """
        return all(self.b * i >= self.a * x for i, x in enumerate(self.abscissas))

    def __str__(self) -> str:
        return self.word()


def _check_coprime(a: int, b: int) -> None:
    if gcd(a, b) != 1:
        raise CoprimalityError(f"gcd({a}, {b}) = {gcd(a, b)} != 1")


def lattice_paths(a: int, b: int) -> list[LatticePath]:
    """All paths, sorted by abscissa tuple."""
    return [LatticePath(a, b, xs) for xs in itertools.combinations_with_replacement(range(b + 1), a)]


def _path_poset(paths: list[LatticePath]) -> Poset:
    return Poset([[p.below(q) for q in paths] for p in paths], labels=paths)


def lattice_paths_poset(a: int, b: int, bound: int = DEFAULT_PATH_BOUND) -> Poset:
    if a < 1 or b < 1:
        raise ValueError("rectangle sides must be positive")
    if comb(a + b, b) > bound:
        raise SizeError(f"{comb(a + b, b)} lattice paths exceed the bound {bound}")
    return _path_poset(lattice_paths(a, b))


def dyck_paths(a: int, b: int) -> list[LatticePath]:
    _check_coprime(a, b)
    return [p for p in lattice_paths(a, b) if p.is_dyck()]


def dyck_paths_poset(a: int, b: int, bound: int = DEFAULT_PATH_BOUND) -> Poset:
    _check_coprime(a, b)
    if comb(a + b, b) > bound:
        raise SizeError(f"{comb(a + b, b)} lattice paths exceed the bound {bound}")
    return _path_poset(dyck_paths(a, b))


def rotate(path: LatticePath, k: int = 1) -> LatticePath:
    w = path.word()
    k %= len(w)
    return LatticePath.from_word(w[k:] + w[:k])


def cycling_orbits(a: int, b: int) -> list[list[LatticePath]]:
    """Orbits of cyclic rotation of step words, each listed from its least element."""
    _check_coprime(a, b)
    remaining = set(lattice_paths(a, b))
    orbits = []
    for p in lattice_paths(a, b):
        if p not in remaining:
            continue
        orbit = sorted({rotate(p, k) for k in range(a + b)})
        remaining -= set(orbit)
        orbits.append(orbit)
    return orbits


def interval_encoding_2xb(path: LatticePath) -> tuple[int, int]:
    """``(j, i)``: abscissas of the second and first north steps of a 2 x b path."""
    if path.a != 2:
        raise ValueError("encoding is defined for two north steps only")
    i, j = path.abscissas
    return (j, i)


def encoded_interval_order(u: tuple[int, int], v: tuple[int, int]) -> bool:
    """Interval order on pairs ``(j, i)``, ``i <= j``, in ``{0..b}`` with the decreasing order."""
    return u[0] >= v[0] and u[1] >= v[1]


@dataclass(frozen=True)
class ConjectureReport:
    a: int
    b: int
    rectangle_size: int
    dyck_count: int
    comparison: InvariantReport

    @property
    def polynomials_equal(self) -> bool:
        return self.comparison.polynomials_equal

    def lines(self) -> list[str]:
        left, right = self.comparison.left[2], self.comparison.right[2]
        return [
            f"A_{self.a + self.b} x Dyck_{self.a},{self.b} ({self.rectangle_size} elements) "
            f"vs L_{self.a},{self.b}",
            f"coxeter left  {left}",
            f"coxeter right {right}",
            *self.comparison.lines(),
            "evidence only: equal Coxeter polynomials are a necessary condition",
            "polynomials equal" if self.polynomials_equal else "polynomials differ",
        ]


def conjecture_report(a: int, b: int, bound: int = DEFAULT_PATH_BOUND) -> ConjectureReport:
    """Compare ``A_{a+b} x Dyck_{a,b}`` with ``L_{a,b}`` through their incidence categories."""
    _check_coprime(a, b)
    D = dyck_paths_poset(a, b, bound)
    L = lattice_paths_poset(a, b, bound)
    left = product(chain(a + b), D)
    rep = derived_invariant_report(incidence_category(left), incidence_category(L))
    return ConjectureReport(a, b, left.size, D.size, rep)
