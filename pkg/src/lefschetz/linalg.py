"""Exact linear algebra over Q and Q(sqrt m).

Matrices are lists of rows.  Ranks over Q go through fraction-free (Bareiss)
elimination on integer rows; a matrix over Q(sqrt m) is replaced by its regular
representation over Q, whose rank is exactly twice the rank over the extension.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from operator import mul
from typing import Sequence

from .field import QuadraticElement

# Mersenne prime used for modular rank certificates.
MODULUS = (1 << 61) - 1


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(M)
    return rows, (len(M[0]) if rows else 0)


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * c for _ in range(r)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    """Exact product ``A @ B``."""
    if not A or not B:
        return [[] for _ in A] if A else []
    cols = list(zip(*B))
    if len(A[0]) != len(B):
        raise ValueError(f"cannot multiply {shape(A)} by {shape(B)}")
    zero = Fraction(0)
    return [[sum(map(mul, row, col), zero) for col in cols] for row in A]


def is_quadratic(M: Sequence[Sequence]) -> bool:
    return any(isinstance(x, QuadraticElement) for row in M for x in row)


def regular_representation(M: Sequence[Sequence]) -> list[list[Fraction]]:
    """Replace each entry ``p + q*sqrt(m)`` by the 2x2 block ``[[p, m*q], [q, p]]``."""
    out = []
    for row in M:
        top, bottom = [], []
        for x in row:
            if isinstance(x, QuadraticElement):
                p, q, m = x.p, x.q, x.m
            else:
                p, q, m = Fraction(x), Fraction(0), 0
            top += [p, m * q]
            bottom += [q, p]
        out.append(top)
        out.append(bottom)
    return out


def integer_rows(M: Sequence[Sequence]) -> list[list[int]]:
    """Scale each rational row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in M:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(M: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    A = [list(row) for row in M]
    rows, cols = shape(A)
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if A[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][c]
        prow = A[rank]
        for r in range(rank + 1, rows):
            row = A[r]
            f = row[c]
            if f:
                for k in range(c + 1, cols):
                    row[k] = (p * row[k] - f * prow[k]) // prev
            else:
                for k in range(c + 1, cols):
                    row[k] = (p * row[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def exact_rank(M: Sequence[Sequence]) -> int:
    """Rank of a matrix over Q or Q(sqrt m), computed exactly."""
    if not M or not M[0]:
        return 0
    if is_quadratic(M):
        return bareiss_rank(integer_rows(regular_representation(M))) // 2
    return bareiss_rank(integer_rows(M))


def field_rank(M: Sequence[Sequence]) -> int:
    """Rank by plain Gaussian elimination with field division (any exact field)."""
    A = [list(row) for row in M]
    rows, cols = shape(A)
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if A[r][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = 1 / A[rank][c]
        prow = A[rank]
        for r in range(rank + 1, rows):
            f = A[r][c]
            if f:
                f = f * inv
                row = A[r]
                for k in range(c, cols):
                    row[k] = row[k] - f * prow[k]
        rank += 1
    return rank


def determinant(M: Sequence[Sequence]):
    """Exact determinant of a square matrix over Q or Q(sqrt m)."""
    A = [list(row) for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if A[r][c]), None)
        if pivot is None:
            return A[0][0] * 0 if n else Fraction(0)
        if pivot != c:
            A[c], A[pivot] = A[pivot], A[c]
            det = -det
        p = A[c][c]
        det = det * p
        inv = 1 / p
        for r in range(c + 1, n):
            f = A[r][c]
            if f:
                f = f * inv
                row, prow = A[r], A[c]
                for k in range(c, n):
                    row[k] = row[k] - f * prow[k]
    return det


def _mod(x, p: int) -> int | None:
    x = Fraction(x)
    den = x.denominator % p
    if den == 0:
        return None
    return x.numerator * pow(den, -1, p) % p


def to_modular(M: Sequence[Sequence], p: int = MODULUS) -> tuple[list[list[int]], int] | None:
    """Reduce a matrix mod ``p``; quadratic matrices pass through the regular
    representation.  Returns ``(matrix, rank_factor)`` or None if some
    denominator vanishes mod ``p``."""
    factor = 1
    if is_quadratic(M):
        M = regular_representation(M)
        factor = 2
    out = []
    for row in M:
        r = []
        for x in row:
            v = _mod(x, p)
            if v is None:
                return None
            r.append(v)
        out.append(r)
    return out, factor


def matmul_mod(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], p: int = MODULUS):
    if not A or not B:
        return [[] for _ in A] if A else []
    cols = list(zip(*B))
    return [[sum(map(mul, row, col)) % p for col in cols] for row in A]


def rank_mod(M: Sequence[Sequence[int]], p: int = MODULUS) -> int:
    """Rank over the prime field F_p."""
    A = [list(row) for row in M]
    rows, cols = shape(A)
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if A[r][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        prow = A[rank]
        inv = pow(prow[c], -1, p)
        for r in range(rank + 1, rows):
            row = A[r]
            f = row[c]
            if f:
                f = f * inv % p
                for k in range(c, cols):
                    row[k] = (row[k] - f * prow[k]) % p
        rank += 1
        if rank == rows:
            break
    return rank
