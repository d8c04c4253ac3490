"""Generalized intervals: the poset Gamma built from a monotone ideal map.

An ideal map assigns to every element ``y`` of Y a closed subset ``F(y)`` of
X, monotonically. Gamma is the set of pairs ``(x, y)`` with ``x in F(y)``
ordered as a subposet of ``X x Y``. The zero-relation category kGamma_0 has
the same objects, with a one-dimensional Hom ``(x, y) -> (x', y')`` exactly
when ``x <= x'``, ``y <= y'`` and ``x' in F(y)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .errors import ElementError, IdealMapError, MorphismError
from .poset import (
    Poset,
    PosetMorphism,
    down_closure,
    ideals,
    is_closed,
    linear_extension,
    random_poset,
    small_posets,
)


@dataclass(frozen=True)
class IdealMap:
    X: Poset
    Y: Poset
    assignment: tuple[frozenset, ...]

    def __post_init__(self):
        assignment = tuple(frozenset(s) for s in self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if len(assignment) != self.Y.size:
            raise IdealMapError("need one subset per element of Y")
        for y, Fy in enumerate(assignment):
            if any(not 0 <= x < self.X.size for x in Fy):
                raise IdealMapError(f"F({y}) contains elements outside X")
            if not is_closed(self.X, Fy):
                raise IdealMapError(f"F({y}) = {sorted(Fy)} is not closed")
        for y in range(self.Y.size):
            for y2 in self.Y.up_sets[y]:
                if not assignment[y] <= assignment[y2]:
                    raise IdealMapError(f"F is not monotone on {y} <= {y2}")

    def __call__(self, y: int) -> frozenset:
        return self.assignment[y]


@dataclass(frozen=True)
class GammaData:
    source: IdealMap
    gamma: Poset
    pairs: tuple[tuple[int, int], ...]
    _index: dict = field(repr=False, compare=False)

    @property
    def X(self) -> Poset:
        return self.source.X

    @property
    def Y(self) -> Poset:
        return self.source.Y

    def __len__(self) -> int:
        return len(self.pairs)

    def index(self, pair: tuple[int, int]) -> int:
        try:
            return self._index[tuple(pair)]
        except KeyError:
            raise ElementError(f"{pair} is not an element of Gamma") from None

    def fiber(self, y: int) -> list[int]:
        """Sorted elements of F(y); fiber index k stands for X element ``fiber(y)[k]``."""
        return sorted(self.source(y))

    @cached_property
    def _fiber_posets(self) -> dict:
        return {}

    def fiber_poset(self, y: int) -> Poset:
        """The induced subposet of X on F(y)."""
        cache = self._fiber_posets
        if y not in cache:
            cache[y] = self.X.induced(self.fiber(y))
        return cache[y]


def build_gamma(F: IdealMap) -> GammaData:
    """Gamma with elements ordered y-major, then by x index."""
    X, Y = F.X, F.Y
    pairs = tuple((x, y) for y in range(Y.size) for x in sorted(F(y)))
    gamma = Poset(
        [[X.leq(x, x2) and Y.leq(y, y2) for (x2, y2) in pairs] for (x, y) in pairs],
        labels=[(X.labels[x], Y.labels[y]) for x, y in pairs],
    )
    return GammaData(F, gamma, pairs, {p: i for i, p in enumerate(pairs)})


def gamma_zero_hom(g: GammaData, u: tuple[int, int], v: tuple[int, int]) -> int:
    """Dimension (0 or 1) of Hom from u to v in kGamma_0."""
    g.index(u)
    g.index(v)
    (x, y), (x2, y2) = u, v
    return int(g.X.leq(x, x2) and g.Y.leq(y, y2) and x2 in g.source(y))


def ideal_map_from_triple(X: Poset, Y: Poset, Z: Poset, f: PosetMorphism, g: PosetMorphism) -> IdealMap:
    """``F(y) = {x : f(x) <= g(y)}`` for order-preserving ``f: X -> Z``, ``g: Y -> Z``."""
    for name, m, src in (("f", f, X), ("g", g, Y)):
        if m.source != src or m.target != Z:
            raise MorphismError(f"{name} has the wrong source or target")
    return IdealMap(X, Y, tuple(frozenset(x for x in range(X.size) if Z.leq(f(x), g(y)))
                                for y in range(Y.size)))


def interval_ideal_map(X: Poset) -> IdealMap:
    """``F(x) = [., x]`` on ``Y = X``; Gamma is then the interval poset of X."""
    return IdealMap(X, X, X.down_sets)


def ideal_lattice_triple(F: IdealMap) -> tuple[Poset, PosetMorphism, PosetMorphism]:
    """Return ``(J(X), x -> [., x], F)`` so that the triple form reproduces F."""
    J_sets, J = ideals(F.X)
    pos = {s: i for i, s in enumerate(J_sets)}
    f = PosetMorphism(F.X, J, [pos[F.X.down_sets[x]] for x in range(F.X.size)])
    g = PosetMorphism(F.Y, J, [pos[F(y)] for y in range(F.Y.size)])
    return J, f, g


def multichain_poset(P: Poset, length: int) -> Poset:
    """Monotone ``length``-tuples of P ordered componentwise; labels are index tuples."""
    if length < 1:
        raise ValueError("chains need length >= 1")
    tuples = [t for t in itertools.product(range(P.size), repeat=length)
              if all(P.leq(t[i], t[i + 1]) for i in range(length - 1))]
    return Poset(
        [[all(P.leq(a, b) for a, b in zip(s, t)) for t in tuples] for s in tuples],
        labels=tuples,
    )


def degeneracy(P: Poset, length: int, position: int) -> PosetMorphism:
    """Map from ``length``-chains to ``(length+1)``-chains repeating the entry at ``position``."""
    if not 0 <= position < length:
        raise ValueError("position out of range")
    src = multichain_poset(P, length)
    tgt = multichain_poset(P, length + 1)
    mapping = []
    for t in src.labels:
        t2 = t[: position + 1] + t[position:]
        mapping.append(tgt.index(t2))
    return PosetMorphism(src, tgt, mapping)


def all_ideal_maps(X: Poset, Y: Poset) -> Iterator[IdealMap]:
    """Every monotone map ``Y -> J(X)``, by backtracking along a linear extension of Y."""
    J_sets, _ = ideals(X)
    order = linear_extension(Y)
    chosen: list = [None] * Y.size

    def rec(k: int):
        if k == len(order):
            yield IdealMap(X, Y, tuple(chosen))
            return
        y = order[k]
        lower = frozenset().union(*(chosen[z] for z in Y.lower_covers[y]))
        for s in J_sets:
            if lower <= s:
                chosen[y] = s
                yield from rec(k + 1)
        chosen[y] = None

    yield from rec(0)


def random_ideal_map(X: Poset, Y: Poset, rng: random.Random) -> IdealMap:
    """Built bottom-up: F(y) is the union over lower covers plus a random down-closure."""
    assignment: list = [None] * Y.size
    for y in linear_extension(Y):
        base = frozenset().union(*(assignment[z] for z in Y.lower_covers[y]))
        extra = [x for x in range(X.size) if rng.random() < 0.3]
        assignment[y] = base | down_closure(X, extra)
    return IdealMap(X, Y, tuple(assignment))


def random_instance(rng: random.Random, max_x: int = 4, max_y: int = 4) -> IdealMap:
    X = random_poset(rng.randint(1, max_x), rng)
    Y = random_poset(rng.randint(1, max_y), rng)
    return random_ideal_map(X, Y, rng)


def exhaustive_instances(max_x: int, max_y: int, include_empty: bool = True) -> Iterator[IdealMap]:
    """All ideal maps between all posets up to isomorphism of the given sizes."""
    start = 0 if include_empty else 1
    xs = [P for n in range(start, max_x + 1) for P in small_posets(n)]
    ys = [P for n in range(start, max_y + 1) for P in small_posets(n)]
    for X in xs:
        for Y in ys:
            yield from all_ideal_maps(X, Y)


def example_triple_one() -> tuple[Poset, Poset, Poset, PosetMorphism, PosetMorphism]:
    """X = {1,2,3} with 1,2 < 3; Y = a<b<c<d; Z = i<j<k; f = (i,j,k), g = (i,j,k,k)."""
    from .poset import poset_from_covers

    X = poset_from_covers(3, [(0, 2), (1, 2)], labels=["1", "2", "3"])
    Y = poset_from_covers(4, [(0, 1), (1, 2), (2, 3)], labels=["a", "b", "c", "d"])
    Z = poset_from_covers(3, [(0, 1), (1, 2)], labels=["i", "j", "k"])
    f = PosetMorphism(X, Z, [0, 1, 2])
    g = PosetMorphism(Y, Z, [0, 1, 2, 2])
    return X, Y, Z, f, g


def example_triple_two() -> tuple[Poset, Poset, PosetMorphism]:
    """2-chains and 3-chains of {1,2,3 : 1,2 < 3}, with ``(i, j) -> (i, i, j)``."""
    from .poset import poset_from_covers

    P = poset_from_covers(3, [(0, 2), (1, 2)], labels=["1", "2", "3"])
    f = degeneracy(P, 2, 0)
    return f.source, f.target, f


def example_one() -> IdealMap:
    X, Y, Z, f, g = example_triple_one()
    return ideal_map_from_triple(X, Y, Z, f, g)


def example_two() -> IdealMap:
    X, Y, f = example_triple_two()
    ident = PosetMorphism(Y, Y, range(Y.size))
    return ideal_map_from_triple(X, Y, Y, f, ident)


def hom_matrix(g: GammaData) -> list[list[int]]:
    n = len(g)
    return [[gamma_zero_hom(g, g.pairs[u], g.pairs[v]) for v in range(n)] for u in range(n)]

