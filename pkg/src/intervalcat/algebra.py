"""Thin k-linear categories, Cartan matrices and Coxeter polynomials.

Everything here is exact integer arithmetic. The Coxeter matrix is
``Phi = -C^{-T} C`` with ``C[u][v] = dim Hom(u, v)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .errors import AssociativityError, SingularError
from .gamma import GammaData, hom_matrix
from .poset import Poset, linear_extension


@dataclass(frozen=True)
class ThinCategory:
    """Objects ``0..n-1``, Hom dimensions in {0, 1}, and the set of zero composites.

    ``zero_composites`` holds triples ``(u, v, w)`` with ``hom[u][v] = hom[v][w] = 1``
    whose composite ``u -> v -> w`` vanishes.
    """

    hom: tuple[tuple[int, ...], ...]
    zero_composites: frozenset = frozenset()
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "hom", tuple(tuple(int(v) for v in row) for row in self.hom))
        object.__setattr__(self, "zero_composites", frozenset(self.zero_composites))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def size(self) -> int:
        return len(self.hom)

    def composes_nonzero(self, u: int, v: int, w: int) -> bool:
        if not (self.hom[u][v] and self.hom[v][w]):
            raise ValueError(f"{u} -> {v} -> {w} is not composable")
        return (u, v, w) not in self.zero_composites

    def composable_triples(self):
        n = self.size
        for u in range(n):
            for v in range(n):
                if self.hom[u][v]:
                    for w in range(n):
                        if self.hom[v][w]:
                            yield u, v, w

    def validate(self) -> "ThinCategory":
        n = self.size
        if any(len(row) != n for row in self.hom):
            raise AssociativityError("hom matrix must be square")
        if any(v not in (0, 1) for row in self.hom for v in row):
            raise AssociativityError("hom dimensions must be 0 or 1")
        for u in range(n):
            if self.hom[u][u] != 1:
                raise AssociativityError(f"object {u} has no identity")
        for u, v, w in self.zero_composites:
            if not (self.hom[u][v] and self.hom[v][w]):
                raise AssociativityError(f"zero composite {(u, v, w)} is not composable")
            if u == v or v == w:
                raise AssociativityError(f"composite with an identity vanishes at {(u, v, w)}")
        for u, v, w in self.composable_triples():
            if self.composes_nonzero(u, v, w) and not self.hom[u][w]:
                raise AssociativityError(f"nonzero composite {(u, v, w)} lands in a zero Hom")
        for u, v, w in self.composable_triples():
            for t in range(n):
                if not self.hom[w][t]:
                    continue
                left = self.composes_nonzero(u, v, w) and self.hom[u][w] and self.composes_nonzero(u, w, t)
                right = self.composes_nonzero(v, w, t) and self.hom[v][t] and self.composes_nonzero(u, v, t)
                if bool(left) != bool(right):
                    raise AssociativityError(f"composition is not associative on {(u, v, w, t)}")
        return self

    def op(self) -> "ThinCategory":
        n = self.size
        hom = [[self.hom[v][u] for v in range(n)] for u in range(n)]
        zeros = {(w, v, u) for (u, v, w) in self.zero_composites}
        return ThinCategory(hom, zeros, self.labels)

    def permuted(self, perm: Sequence[int]) -> "ThinCategory":
        """Relabel so that old object ``u`` becomes new object ``perm[u]``."""
        n = self.size
        inv = [0] * n
        for u, p in enumerate(perm):
            inv[p] = u
        hom = [[self.hom[inv[a]][inv[b]] for b in range(n)] for a in range(n)]
        zeros = {(perm[u], perm[v], perm[w]) for (u, v, w) in self.zero_composites}
        return ThinCategory(hom, zeros)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = [int(v) for v in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coefficients) if self.coefficients else "0"

    def compact(self) -> str:
        return ",".join(str(c) for c in self.coefficients) if self.coefficients else "0"

    def pretty(self, var: str = "t") -> str:
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            body = str(mag) if (mag != 1 or k == 0) else ""
            text = body + mono
            terms.append(("-" if c < 0 else "+", text))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out


def incidence_category(P: Poset) -> ThinCategory:
    return ThinCategory(P.leq_table, frozenset(), P.labels)


def gamma_zero_category(g: GammaData) -> ThinCategory:
    hom = hom_matrix(g)
    n = len(hom)
    zeros = {(u, v, w) for u in range(n) for v in range(n) for w in range(n)
             if hom[u][v] and hom[v][w] and not hom[u][w]}
    return ThinCategory(hom, zeros, g.gamma.labels).validate()


def hom_order(T: ThinCategory) -> list[int]:
    """A topological order of the Hom relation (smallest index first)."""
    n = T.size
    rel = [[bool(T.hom[u][v]) for v in range(n)] for u in range(n)]
    from .poset import poset_from_covers

    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and rel[u][v]]
    try:
        return linear_extension(poset_from_covers(n, pairs))
    except ValueError as exc:
        raise SingularError("Hom relation has a cycle; Cartan matrix is not unitriangular") from exc


def cartan_matrix(T: ThinCategory, order: Optional[Sequence[int]] = None) -> list[list[int]]:
    """``C[i][j] = dim Hom(order[i], order[j])``."""
    if order is None:
        order = hom_order(T)
    return [[T.hom[u][v] for v in order] for u in order]


def char_poly_exact(M: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(tI - M)`` by Faddeev-LeVerrier; every division is exact over the integers."""
    n = len(M)
    A = [[int(v) for v in row] for row in M]
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # N holds A * M_k; start with M_1 = I so N = A
    N = [row[:] for row in A]
    for k in range(1, n + 1):
        tr = sum(N[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0
        coeffs[n - k] = q
        if k == n:
            break
        Mk = [row[:] for row in N]
        for i in range(n):
            Mk[i][i] += q
        N = [[sum(A[i][l] * Mk[l][j] for l in range(n) if A[i][l]) for j in range(n)] for i in range(n)]
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class CoxeterReport:
    polynomial: IntPolynomial
    cartan: tuple[tuple[int, ...], ...]
    coxeter: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]


def coxeter_matrix(C: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(C)
    if n == 0:
        return []
    Cm = linalg.matrix(C)
    try:
        Cinv = linalg.inverse(Cm)
    except ZeroDivisionError:
        raise SingularError("Cartan matrix is singular") from None
    if any(Fraction(v).denominator != 1 for v in Cinv.flat):
        raise SingularError("Cartan matrix is not unimodular")
    Phi = -linalg.matmul(Cinv.T, Cm)
    return [[int(v) for v in row] for row in Phi]


def coxeter_report(T: ThinCategory, order: Optional[Sequence[int]] = None) -> CoxeterReport:
    if order is None:
        order = hom_order(T)
    C = cartan_matrix(T, order)
    Phi = coxeter_matrix(C)
    return CoxeterReport(char_poly_exact(Phi), tuple(map(tuple, C)), tuple(map(tuple, Phi)), tuple(order))


def coxeter_polynomial(T: ThinCategory) -> IntPolynomial:
    return coxeter_report(T).polynomial


def poset_coxeter_polynomial(P: Poset) -> IntPolynomial:
    return coxeter_polynomial(incidence_category(P))


def hom_components(T: ThinCategory) -> list[list[int]]:
    n = T.size
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in itertools.product(range(n), repeat=2):
        if T.hom[u][v]:
            parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for u in range(n):
        groups.setdefault(find(u), []).append(u)
    return sorted(groups.values())


@dataclass(frozen=True)
class InvariantReport:
    """Necessary-condition comparison of derived invariants; never a proof of equivalence."""

    left: tuple
    right: tuple
    names: tuple = ("objects", "components", "coxeter")

    @property
    def flags(self) -> dict[str, bool]:
        return {name: a == b for name, a, b in zip(self.names, self.left, self.right)}

    @property
    def all_equal(self) -> bool:
        return all(self.flags.values())

    @property
    def polynomials_equal(self) -> bool:
        return self.flags["coxeter"]

    def lines(self) -> list[str]:
        out = []
        for name, a, b in zip(self.names, self.left, self.right):
            sa = a.compact() if isinstance(a, IntPolynomial) else str(a)
            sb = b.compact() if isinstance(b, IntPolynomial) else str(b)
            out.append(f"invariant {name} {sa} {sb} {'equal' if a == b else 'differ'}")
        return out

    def text(self) -> str:
        la, lb = self.left, self.right
        rows = [
            "necessary-condition check (equal invariants do not imply derived equivalence)",
            f"  objects:    {la[0]} vs {lb[0]}",
            f"  components: {la[1]} vs {lb[1]}",
            f"  coxeter:    {la[2].pretty()}  vs  {lb[2].pretty()}",
            "polynomials equal" if self.polynomials_equal else "polynomials differ",
        ]
        return "\n".join(rows)


def _invariants(T: ThinCategory) -> tuple:
    return (T.size, len(hom_components(T)), coxeter_polynomial(T))


def derived_invariant_report(A: ThinCategory, B: ThinCategory) -> InvariantReport:
    return InvariantReport(_invariants(A), _invariants(B))
