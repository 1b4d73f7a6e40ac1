"""Random instances for property checks (seeded, small)."""

from __future__ import annotations

import random
from fractions import Fraction

from .constructions import monomial_ci
from .field import QuadraticElement
from .polynomial import Polynomial, monomials_of_degree


def random_coefficient(rng: random.Random, m: int | None = None, bound: int = 5):
    num = rng.randint(-bound, bound)
    den = rng.choice((1, 1, 1, 2, 3))
    c = Fraction(num, den)
    if m is None:
        return c
    return QuadraticElement(c, Fraction(rng.randint(-bound, bound), rng.choice((1, 2))), m)


def random_polynomial(
    rng: random.Random, n: int, max_degree: int = 3, max_terms: int = 5, m: int | None = None
) -> Polynomial:
    """Dense-ish random polynomial (not necessarily homogeneous)."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = tuple(rng.randint(0, max_degree) for _ in range(n))
        terms[mono] = random_coefficient(rng, m)
    return Polynomial(n, terms)


def random_homogeneous(rng: random.Random, n: int, degree: int, max_terms: int = 4) -> Polynomial:
    monos = monomials_of_degree(n, degree)
    while True:
        chosen = rng.sample(monos, min(len(monos), rng.randint(1, max_terms)))
        f = Polynomial(n, {mono: Fraction(rng.randint(-4, 4)) for mono in chosen})
        if f:
            return f


def random_homogeneous_ideal(rng: random.Random, n: int, count: int, max_degree: int = 3) -> list[Polynomial]:
    return [random_homogeneous(rng, n, rng.randint(1, max_degree)) for _ in range(count)]


def random_artinian_ideal(rng: random.Random, n: int, max_power: int = 3, extra: int = 2) -> list[Polynomial]:
    """Pure powers (so the quotient is artinian) plus a few random forms."""
    gens = monomial_ci([rng.randint(1, max_power) for _ in range(n)])
    gens += [random_homogeneous(rng, n, rng.randint(1, max_power)) for _ in range(rng.randint(0, extra))]
    return gens


def random_monomial_transform(rng: random.Random, n: int, bound: int = 3) -> list[list[Fraction]]:
    """A permutation matrix with nonzero rational scalings."""
    perm = list(range(n))
    rng.shuffle(perm)
    T = [[Fraction(0)] * n for _ in range(n)]
    for i, j in enumerate(perm):
        T[i][j] = Fraction(rng.choice([v for v in range(-bound, bound + 1) if v]), rng.randint(1, 2))
    return T


def random_monomial_artinian(rng: random.Random, n: int, max_power: int = 4, extra: int = 2) -> list[Polynomial]:
    """Pure powers plus random monomials; a fair share of these fail WLP or SLP."""
    gens = monomial_ci([rng.randint(2, max_power) for _ in range(n)])
    for _ in range(rng.randint(1, extra)):
        gens.append(Polynomial.monomial(rng.choice(monomials_of_degree(n, rng.randint(2, 3)))))
    return gens
