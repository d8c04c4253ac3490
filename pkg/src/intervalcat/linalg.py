"""Exact linear algebra over the rationals.

Matrices are numpy object arrays holding ``Fraction`` entries, which keeps
shapes such as ``(3, 0)`` intact while giving exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def to_frac(A) -> np.ndarray:
    A = np.asarray(A, dtype=object)
    out = np.empty(A.shape, dtype=object)
    for idx, v in np.ndenumerate(A):
        out[idx] = Fraction(v)
    return out


def matrix(rows, shape: tuple[int, int] | None = None) -> np.ndarray:
    if shape is not None and (shape[0] == 0 or shape[1] == 0):
        return zeros(*shape)
    M = to_frac(rows)
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if shape is not None and M.shape != tuple(shape):
        raise ValueError(f"matrix shape {M.shape} does not match {shape}")
    return M


def zeros(m: int, n: int) -> np.ndarray:
    out = np.empty((m, n), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    if A.shape[1] == 0:
        return zeros(A.shape[0], B.shape[1])
    return A @ B


def is_zero(A: np.ndarray) -> bool:
    return all(v == 0 for v in A.flat)


def equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and all(a == b for a, b in zip(A.flat, B.flat))


def rref(A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = to_frac(A)
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if R[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            R[[r, p]] = R[[p, r]]
        piv = R[r, c]
        if piv != 1:
            R[r] = R[r] / piv
        for i in range(m):
            if i != r and R[i, c] != 0:
                R[i] = R[i] - R[i, c] * R[r]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: np.ndarray) -> int:
    if A.shape[0] == 0 or A.shape[1] == 0:
        return 0
    return len(rref(A)[1])


def nullspace(A: np.ndarray) -> np.ndarray:
    """Columns form a basis of ``{x : A x = 0}``.

    Basis vector k carries a 1 at the k-th free column and 0 at the other
    free columns.
    """
    m, n = A.shape
    if m == 0:
        return identity(n)
    R, pivots = rref(A)
    free = [c for c in range(n) if c not in set(pivots)]
    N = zeros(n, len(free))
    for k, f in enumerate(free):
        N[f, k] = Fraction(1)
        for i, p in enumerate(pivots):
            N[p, k] = -R[i, f]
    return N


def solve(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """A particular solution X of ``A X = B``; ValueError if inconsistent."""
    m, n = A.shape
    k = B.shape[1]
    if m == 0:
        return zeros(n, k)
    R, pivots = rref(np.hstack([to_frac(A), to_frac(B)]))
    X = zeros(n, k)
    for i, p in enumerate(pivots):
        if p >= n:
            raise ValueError("linear system is inconsistent")
        X[p] = R[i, n:]
    return X


def inverse(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots = rref(np.hstack([to_frac(A), identity(n)]))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def complement_columns(I: np.ndarray) -> list[int]:
    """Indices of standard basis vectors completing the column span of I."""
    n = I.shape[0]
    if I.shape[1] == 0:
        return list(range(n))
    _, pivots = rref(I.T)
    return [c for c in range(n) if c not in set(pivots)]


def column_basis(A: np.ndarray) -> np.ndarray:
    """Independent columns of A spanning its column space."""
    if A.shape[1] == 0:
        return zeros(A.shape[0], 0)
    _, pivots = rref(A)
    return to_frac(A[:, pivots])


def format_fraction(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"
