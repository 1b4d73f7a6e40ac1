"""Builders for the ideal families studied here and matrix-ideal utilities.

Conventions.  ``d`` vectors for the binomial family are ``(d0, d1, ..., d_{n-1})``
where ``d0`` belongs to the generator involving ``x_n`` and ``x_1``.  Two
parametrisations of that generator are in use:

* :func:`thm12_ideal` uses ``x_n^d0 * (x_n - a*x_1)``;
* :func:`lemma31_ideal` uses ``x_n^d0 * (x_1 - a*x_n)``.

For ``a != 0`` they describe the same ideal after ``a -> 1/a``
(see :func:`lemma31_to_thm12`).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .field import as_element
from .groebner import MonomialIdeal, minimalize
from .linalg import determinant
from .polynomial import Polynomial


class SingularTransform(ValueError):
    pass


def _x(n: int, i: int) -> Polynomial:
    return Polynomial.variable(n, i)


def _pure_power(n: int, i: int, e: int) -> Polynomial:
    return Polynomial.monomial(tuple(e if k == i - 1 else 0 for k in range(n)))


def monomial_ci(exponents: Sequence[int]) -> list[Polynomial]:
    """Generators ``x_i^{e_i}`` of a monomial complete intersection."""
    if not exponents or any(e < 1 for e in exponents):
        raise ValueError("exponents must be a non-empty list of positive integers")
    n = len(exponents)
    return [_pure_power(n, i + 1, e) for i, e in enumerate(exponents)]


def _check_d(d: Sequence[int], minimum_length: int = 1) -> None:
    if len(d) < minimum_length or any(int(e) != e or e < 1 for e in d):
        raise ValueError(f"d must have at least {minimum_length} positive integer entries, got {d}")


def thm12_ideal(d: Sequence[int], a) -> list[Polynomial]:
    """``(x_n^d0 (x_n - a x_1), x_i^{d_i} (x_i - x_{i+1}) | 1 <= i <= n-1)``."""
    _check_d(d, 2)
    n = len(d)
    a = as_element(a)
    gens = [_pure_power(n, n, d[0]) * (_x(n, n) - _x(n, 1) * a)]
    for i in range(1, n):
        gens.append(_pure_power(n, i, d[i]) * (_x(n, i) - _x(n, i + 1)))
    return gens


paper_ideal_I = thm12_ideal


def lemma31_ideal(d: Sequence[int], a) -> list[Polynomial]:
    """``(x_n^d0 (x_1 - a x_n), x_i^{d_i} (x_i - x_{i+1}) | 1 <= i <= n-1)``."""
    _check_d(d, 2)
    n = len(d)
    a = as_element(a)
    gens = [_pure_power(n, n, d[0]) * (_x(n, 1) - _x(n, n) * a)]
    for i in range(1, n):
        gens.append(_pure_power(n, i, d[i]) * (_x(n, i) - _x(n, i + 1)))
    return gens


def lemma31_to_thm12(a):
    """Parameter of :func:`thm12_ideal` giving the same ideal as ``lemma31_ideal(d, a)``."""
    a = as_element(a)
    if not a:
        raise ZeroDivisionError("a = 0 has no counterpart")
    return 1 / a


def lemma31_initial_ideal(d: Sequence[int]) -> MonomialIdeal:
    """``(x_1^{d1+1}, ..., x_{n-1}^{d_{n-1}+1}, x_i x_n^{d0+...+d_{i-1}} | 1 <= i <= n)``."""
    return paper_monomial_J(d)


def paper_monomial_J(d: Sequence[int]) -> MonomialIdeal:
    """The monomial ideal ``J`` whose quotient carries the strong Lefschetz property."""
    _check_d(d, 2)
    n = len(d)
    monos = []
    for i in range(1, n):
        monos.append(tuple(d[i] + 1 if k == i - 1 else 0 for k in range(n)))
    for i in range(1, n + 1):
        e = sum(d[:i])
        m = [0] * n
        m[i - 1] += 1
        m[n - 1] += e
        monos.append(tuple(m))
    return minimalize(monos, n)


def thm12_initial_ideal_a0(d: Sequence[int]) -> MonomialIdeal:
    """Lex initial ideal of ``thm12_ideal(d, 0)``: ``(x_n^{d0+1}, x_i^{d_i+1})``."""
    _check_d(d, 2)
    n = len(d)
    monos = [tuple(d[0] + 1 if k == n - 1 else 0 for k in range(n))]
    monos += [tuple(d[i] + 1 if k == i - 1 else 0 for k in range(n)) for i in range(1, n)]
    return minimalize(monos, n)


def groebner_certificate(d: Sequence[int], a) -> tuple[list[Polynomial], list[Polynomial]]:
    """The explicit Gröbner basis ``(f_1..f_{n-1}, g_1..g_n)`` of ``thm12_ideal(d, a)``:

    ``f_i = x_i^{d_i}(x_i - x_{i+1})`` and
    ``g_i = x_i x_n^{e_i} - (1/a) x_n^{e_i + 1}`` with ``e_i = d0 + ... + d_{i-1}``.
    Requires ``a`` not in ``{0, 1}``.
    """
    _check_d(d, 2)
    a = as_element(a)
    if a == 0 or a == 1:
        raise ValueError("the certificate needs a not in {0, 1}")
    n = len(d)
    inv = 1 / a
    fs = [_pure_power(n, i, d[i]) * (_x(n, i) - _x(n, i + 1)) for i in range(1, n)]
    gs = []
    for i in range(1, n + 1):
        e = sum(d[:i])
        xn_e = _pure_power(n, n, e)
        gs.append(_x(n, i) * xn_e - _pure_power(n, n, e + 1) * inv)
    return fs, gs


@dataclass(frozen=True)
class MatrixIdealSpec:
    """A square matrix ``A`` and exponents ``d``: the ideal ``(x_i^{d_i} * sum_j a_ij x_j)``."""

    A: tuple
    d: tuple

    def __post_init__(self) -> None:
        A = tuple(tuple(as_element(x) for x in row) for row in self.A)
        n = len(A)
        if n == 0 or any(len(row) != n for row in A):
            raise ValueError("A must be a non-empty square matrix")
        d = tuple(int(e) for e in self.d) if self.d else (1,) * n
        if len(d) != n or any(e < 1 for e in d):
            raise ValueError("d must have one positive entry per row of A")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return len(self.A)


def matrix_ideal(spec: MatrixIdealSpec | Sequence, d: Sequence[int] | None = None) -> list[Polynomial]:
    """Generators ``x_i^{d_i} (a_i1 x_1 + ... + a_in x_n)``."""
    if not isinstance(spec, MatrixIdealSpec):
        spec = MatrixIdealSpec(tuple(map(tuple, spec)), tuple(d) if d else ())
    n = spec.n
    return [
        _pure_power(n, i + 1, spec.d[i]) * Polynomial.linear_form(row)
        for i, row in enumerate(spec.A)
    ]


def principal_submatrix(A: Sequence[Sequence], idx: Sequence[int]) -> list[list]:
    return [[A[i][j] for j in idx] for i in idx]


def principal_minors(A: Sequence[Sequence]) -> list:
    """Determinants of all nonempty principal submatrices, by size then index set."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("principal minors need a square matrix")
    A = [[as_element(x) for x in row] for row in A]
    return [
        determinant(principal_submatrix(A, idx))
        for size in range(1, n + 1)
        for idx in itertools.combinations(range(n), size)
    ]


def has_nonzero_principal_minors(A: Sequence[Sequence]) -> bool:
    return all(principal_minors(A))


def change_of_variables(I: Sequence[Polynomial], T: Sequence[Sequence]) -> list[Polynomial]:
    """Substitute ``x_j -> sum_k T[j][k] x_k`` in every generator."""
    T = [[as_element(x) for x in row] for row in T]
    if not determinant(T):
        raise SingularTransform("change of variables by a singular matrix")
    images = [Polynomial.linear_form(row) for row in T]
    return [f.substitute(images) for f in I]


def general_products_ideal(
    n: int, count: int, factors: str = "squares", seed: int = 0, bound: int = 10
) -> list[Polynomial]:
    """``count`` products of linear forms with seeded integer coefficients in
    ``[-bound, bound]``: squares ``l_i^2`` or products ``l_i * l_i'``."""
    if factors not in ("squares", "distinct-pairs"):
        raise ValueError("factors must be 'squares' or 'distinct-pairs'")
    rng = random.Random(seed)

    def form():
        while True:
            c = [rng.randint(-bound, bound) for _ in range(n)]
            if any(c):
                return Polynomial.linear_form(c)

    gens = []
    for _ in range(count):
        l1 = form()
        gens.append(l1 * l1 if factors == "squares" else l1 * form())
    return gens


# Random matrices for the scan harness.


def random_nonzero_minor_matrix(n: int, rng: random.Random, lo: int = -5, hi: int = 5) -> list[list[Fraction]]:
    while True:
        A = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        if has_nonzero_principal_minors(A):
            return A


def random_integer_matrix(n: int, rng: random.Random, lo: int = -5, hi: int = 5) -> list[list[Fraction]]:
    return [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]


def random_binomial_matrix(n: int, rng: random.Random, lo: int = -5, hi: int = 5) -> list[list[Fraction]]:
    """Each row: nonzero diagonal plus one nonzero off-diagonal entry; all
    principal minors nonzero."""
    if n < 2:
        raise ValueError("binomial rows need n >= 2")
    values = [v for v in range(lo, hi + 1) if v]
    while True:
        A = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            A[i][i] = Fraction(rng.choice(values))
            j = rng.choice([k for k in range(n) if k != i])
            A[i][j] = Fraction(rng.choice(values))
        if has_nonzero_principal_minors(A):
            return A


def random_pm_one_minor_matrix(n: int, rng: random.Random) -> list[list[Fraction]]:
    """Integer matrix with every principal minor equal to 1 or -1 (rejection sampling
    over entries in {-1, 0, 1})."""
    while True:
        A = [[Fraction(rng.choice((-1, 0, 1))) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            A[i][i] = Fraction(rng.choice((-1, 1)))
        if all(abs(m) == 1 for m in principal_minors(A)):
            return A


def random_positive_definite(n: int, rng: random.Random, lo: int = -5, hi: int = 5) -> list[list[Fraction]]:
    """Symmetric, strictly diagonally dominant with positive diagonal."""
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            A[i][j] = A[j][i] = Fraction(rng.randint(lo, hi))
    for i in range(n):
        A[i][i] = sum(abs(A[i][j]) for j in range(n) if j != i) + rng.randint(1, hi)
    return A
