"""Finite posets on dense indices ``0..n-1``.

The order is kept as a full boolean table; covers, down-sets and ranks are
derived lazily and cached. Posets are treated as immutable values.
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Hashable, Iterable, Optional, Sequence

from .errors import CycleError, MorphismError, SizeError

DEFAULT_IDEAL_BOUND = 1 << 16


class Poset:
    __slots__ = ("size", "leq_table", "labels", "__dict__")

    def __init__(self, leq: Sequence[Sequence[bool]], labels: Optional[Sequence[Hashable]] = None):
        n = len(leq)
        table = tuple(tuple(bool(v) for v in row) for row in leq)
        if any(len(row) != n for row in table):
            raise ValueError("order table must be square")
        for u in range(n):
            if not table[u][u]:
                raise ValueError(f"order is not reflexive at {u}")
            for v in range(u + 1, n):
                if table[u][v] and table[v][u]:
                    raise CycleError(f"elements {u} and {v} are mutually comparable")
        masks = [sum(1 << v for v in range(n) if table[u][v]) for u in range(n)]
        for u in range(n):
            for v in range(n):
                if table[u][v] and masks[v] & ~masks[u]:
                    raise ValueError(f"order is not transitive at {u} <= {v}")
        self.size = n
        self.leq_table = table
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise ValueError("label count does not match poset size")

    def leq(self, u: int, v: int) -> bool:
        return self.leq_table[u][v]

    def lt(self, u: int, v: int) -> bool:
        return u != v and self.leq_table[u][v]

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def __eq__(self, other) -> bool:
        # equality of the order on indices; labels are cosmetic
        return isinstance(other, Poset) and self.leq_table == other.leq_table

    def __hash__(self) -> int:
        return hash(self.leq_table)

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, covers={list(self.covers)})"

    def index(self, label: Hashable) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def down_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(u for u in range(self.size) if self.leq_table[u][v]) for v in range(self.size))

    @cached_property
    def up_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(v for v in range(self.size) if self.leq_table[u][v]) for u in range(self.size))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse covers ``(u, v)`` with ``u < v`` and nothing strictly between."""
        n = self.size
        above = [sum(1 << v for v in range(n) if self.lt(u, v)) for u in range(n)]
        below = [sum(1 << u for u in range(n) if self.lt(u, v)) for v in range(n)]
        return tuple((u, v) for u in range(n) for v in range(n)
                     if above[u] >> v & 1 and not above[u] & below[v])

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        ups: list[list[int]] = [[] for _ in range(self.size)]
        for u, v in self.covers:
            ups[u].append(v)
        return tuple(tuple(c) for c in ups)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        dns: list[list[int]] = [[] for _ in range(self.size)]
        for u, v in self.covers:
            dns[v].append(u)
        return tuple(tuple(c) for c in dns)

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """Length of the longest chain ending at each element."""
        rank = [0] * self.size
        for v in linear_extension(self):
            for u in self.lower_covers[v]:
                rank[v] = max(rank[v], rank[u] + 1)
        return tuple(rank)

    def relation_count(self) -> int:
        return sum(sum(row) for row in self.leq_table)

    def induced(self, elements: Sequence[int]) -> "Poset":
        """Induced subposet on ``elements`` (in the given order)."""
        elements = list(elements)
        return Poset(
            [[self.leq_table[u][v] for v in elements] for u in elements],
            labels=[self.labels[u] for u in elements],
        )

    def dual(self) -> "Poset":
        n = self.size
        return Poset([[self.leq_table[v][u] for v in range(n)] for u in range(n)], labels=self.labels)


class PosetMorphism:
    """An order-preserving map between two posets, checked on construction."""

    def __init__(self, source: Poset, target: Poset, mapping: Sequence[int]):
        mapping = tuple(mapping)
        if len(mapping) != source.size:
            raise MorphismError("map must assign an image to every source element")
        if any(not 0 <= m < target.size for m in mapping):
            raise MorphismError("map sends an element outside the target")
        for u in range(source.size):
            for v in source.up_sets[u]:
                if not target.leq(mapping[u], mapping[v]):
                    raise MorphismError(f"map is not order preserving on {u} <= {v}")
        self.source = source
        self.target = target
        self.mapping = mapping

    def __call__(self, u: int) -> int:
        return self.mapping[u]

    def __repr__(self) -> str:
        return f"PosetMorphism({list(self.mapping)})"


def transitive_closure(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[bool]]:
    rel = [[u == v for v in range(n)] for u in range(n)]
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"pair ({u}, {v}) out of range for {n} elements")
        rel[u][v] = True
    # Warshall
    for w in range(n):
        roww = rel[w]
        for u in range(n):
            if rel[u][w]:
                rowu = rel[u]
                for v in range(n):
                    if roww[v]:
                        rowu[v] = True
    return rel


def poset_from_covers(n: int, covers: Iterable[tuple[int, int]], labels=None) -> Poset:
    """Reflexive-transitive closure of a cover relation.

    Raises CycleError if the relation has a directed cycle (including
    self-loops).
    """
    covers = list(covers)
    for u, v in covers:
        if u == v:
            raise CycleError(f"self-loop on {u}")
    rel = transitive_closure(n, covers)
    for u in range(n):
        for v in range(u + 1, n):
            if rel[u][v] and rel[v][u]:
                raise CycleError(f"cover relation has a cycle through {u} and {v}")
    return Poset(rel, labels)


def from_relation(elements: Sequence[Hashable], leq) -> Poset:
    """Build a poset from labelled elements and a comparison predicate."""
    elements = list(elements)
    return Poset([[bool(leq(a, b)) for b in elements] for a in elements], labels=elements)


def chain(n: int) -> Poset:
    return Poset([[u <= v for v in range(n)] for u in range(n)])


def antichain(n: int) -> Poset:
    return Poset([[u == v for v in range(n)] for u in range(n)])


def product(P: Poset, Q: Poset) -> Poset:
    """Componentwise order on ``P x Q``; element ``(p, q)`` has index ``p * |Q| + q``."""
    pairs = [(p, q) for p in range(P.size) for q in range(Q.size)]
    return Poset(
        [[P.leq(p, p2) and Q.leq(q, q2) for (p2, q2) in pairs] for (p, q) in pairs],
        labels=[(P.labels[p], Q.labels[q]) for p, q in pairs],
    )


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    n = P.size + Q.size
    rel = [[False] * n for _ in range(n)]
    for u in range(P.size):
        for v in range(P.size):
            rel[u][v] = P.leq(u, v)
    for u in range(Q.size):
        for v in range(Q.size):
            rel[P.size + u][P.size + v] = Q.leq(u, v)
    labels = [(0, lab) for lab in P.labels] + [(1, lab) for lab in Q.labels]
    return Poset(rel, labels)


def interval_poset(P: Poset) -> tuple[Poset, list[tuple[int, int]]]:
    """Poset of intervals ``[a, b]`` ordered by ``a <= c`` and ``b <= d``.

    Returns the poset and the list of ``(a, b)`` pairs giving each index.
    """
    pairs = [(a, b) for a in range(P.size) for b in range(P.size) if P.leq(a, b)]
    Int = Poset(
        [[P.leq(a, c) and P.leq(b, d) for (c, d) in pairs] for (a, b) in pairs],
        labels=[(P.labels[a], P.labels[b]) for a, b in pairs],
    )
    return Int, pairs


def is_closed(P: Poset, subset: Iterable[int]) -> bool:
    s = set(subset)
    return all(P.down_sets[x] <= s for x in s)


def down_closure(P: Poset, subset: Iterable[int]) -> frozenset:
    out: set[int] = set()
    for x in subset:
        out |= P.down_sets[x]
    return frozenset(out)


def ideals(P: Poset, bound: int = DEFAULT_IDEAL_BOUND) -> tuple[list[frozenset], Poset]:
    """All closed (downward closed) subsets of P and the inclusion poset on them.

    Ideals are listed in the order produced by a depth-first search along a
    linear extension, excluding before including; the empty set comes first.
    """
    order = linear_extension(P)
    found: list[frozenset] = []

    def rec(k: int, chosen: frozenset) -> None:
        if k == len(order):
            found.append(chosen)
            if len(found) > bound:
                raise SizeError(f"more than {bound} ideals")
            return
        x = order[k]
        rec(k + 1, chosen)
        if P.down_sets[x] - {x} <= chosen:
            rec(k + 1, chosen | {x})

    rec(0, frozenset())
    J = Poset([[a <= b for b in found] for a in found], labels=[tuple(sorted(s)) for s in found])
    return found, J


def connected_components(P: Poset) -> list[list[int]]:
    """Components of the comparability graph, each sorted, ordered by least element."""
    seen = [False] * P.size
    comps = []
    for s in range(P.size):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in P.upper_covers[u] + P.lower_covers[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def linear_extension(P: Poset) -> list[int]:
    """Topological sort, always taking the smallest available index."""
    import heapq

    indeg = [0] * P.size
    for u, v in P.covers:
        indeg[v] += 1
    heap = [u for u in range(P.size) if indeg[u] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        u = heapq.heappop(heap)
        out.append(u)
        for v in P.upper_covers[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    return out


def _signature(P: Poset, u: int) -> tuple[int, int, int]:
    return (P.ranks[u], len(P.down_sets[u]), len(P.up_sets[u]))


def is_isomorphic(P: Poset, Q: Poset) -> Optional[list[int]]:
    """Return an order isomorphism ``P -> Q`` as a list, or None.

    Backtracking over elements of P sorted by (rank, down-set size, index);
    candidates in Q must share (rank, down-set size, up-set size) and be
    consistent with every previously placed element.
    """
    if P.size != Q.size or P.relation_count() != Q.relation_count():
        return None
    sigP = [_signature(P, u) for u in range(P.size)]
    sigQ = [_signature(Q, v) for v in range(Q.size)]
    if sorted(sigP) != sorted(sigQ):
        return None
    order = sorted(range(P.size), key=lambda u: (sigP[u][0], sigP[u][1], u))
    candidates = {u: [v for v in sorted(range(Q.size), key=lambda v: (sigQ[v][0], sigQ[v][1], v))
                      if sigQ[v] == sigP[u]] for u in order}
    image = [-1] * P.size
    used = [False] * Q.size

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        u = order[k]
        for v in candidates[u]:
            if used[v]:
                continue
            ok = True
            for w in order[:k]:
                iw = image[w]
                if P.leq(u, w) != Q.leq(v, iw) or P.leq(w, u) != Q.leq(iw, v):
                    ok = False
                    break
            if ok:
                image[u] = v
                used[v] = True
                if rec(k + 1):
                    return True
                used[v] = False
                image[u] = -1
        return False

    if not rec(0):
        return None
    assert sorted(image) == list(range(Q.size))
    assert all(P.leq(u, w) == Q.leq(image[u], image[w]) for u in range(P.size) for w in range(P.size))
    return image


def random_poset(n: int, rng: random.Random, p: float = 0.3) -> Poset:
    """Random poset: each pair ``i < j`` becomes a relation with probability p, then closure."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return poset_from_covers(n, pairs)


def small_posets(n: int) -> list[Poset]:
    """One representative per isomorphism class of posets with n elements."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    reps: list[Poset] = []
    seen: set = set()
    for mask in range(1 << len(pairs)):
        P = poset_from_covers(n, [pr for k, pr in enumerate(pairs) if mask >> k & 1])
        if P.leq_table in seen:
            continue
        seen.add(P.leq_table)
        if not any(is_isomorphic(P, R) is not None for R in reps):
            reps.append(P)
    return reps


def to_dot(P: Poset, name: str = "poset") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for u in range(P.size):
        lines.append(f'  {u} [label="{P.labels[u]}"];')
    for u, v in P.covers:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
