"""S-polynomials, multivariate division, Buchberger's algorithm and initial ideals."""

from __future__ import annotations

import heapq
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .polynomial import (
    LEX,
    Monomial,
    Polynomial,
    RingMismatchError,
    TermOrder,
    mono_coprime,
    mono_divides,
    mono_lcm,
    monomials_of_degree,
)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators (a divisibility antichain)."""

    nvars: int
    generators: tuple = ()

    def contains(self, mono: Monomial) -> bool:
        return any(mono_divides(g, mono) for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def pure_powers(self) -> dict[int, int]:
        """Map variable index (0-based) to the exponent of its pure power generator."""
        out = {}
        for g in self.generators:
            support = [i for i, e in enumerate(g) if e]
            if len(support) == 1:
                out[support[0]] = g[support[0]]
        return out

    def is_artinian(self) -> bool:
        return len(self.pure_powers()) == self.nvars

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(g) for g in self.generators]

    def __contains__(self, mono) -> bool:
        return self.contains(tuple(mono))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def minimalize(monomials: Iterable[Monomial], nvars: int | None = None) -> MonomialIdeal:
    """Minimal generators of the monomial ideal generated by ``monomials``."""
    monos = sorted({tuple(m) for m in monomials}, key=lambda m: (sum(m), m))
    if nvars is None:
        if not monos:
            raise ValueError("nvars is required for an empty generator list")
        nvars = len(monos[0])
    kept: list = []
    for m in monos:
        if len(m) != nvars:
            raise RingMismatchError(f"monomial {m} does not have {nvars} exponents")
        # sorted by degree, so only earlier monomials can divide m
        if not any(mono_divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(nvars, tuple(sorted(kept, reverse=True)))


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis: monic, interreduced, sorted by leading monomial."""

    generators: tuple
    order: TermOrder = LEX
    leads: tuple = field(default=())
    nvars: int = 0

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators, self.order)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def initial_ideal(self) -> MonomialIdeal:
        return minimalize(self.leads, self.nvars)


# Kernels on plain dicts {monomial: coefficient}.  ``key`` is the sort key of the
# term order; for lex it is ``tuple`` and ``max`` on the dict is used directly.


def _lead(d: dict, key):
    if key is tuple:
        return max(d)
    return max(d, key=key)


def _reducers(G: Sequence[Polynomial], order: TermOrder):
    out = []
    for g in G:
        if not g:
            raise ValueError("zero polynomial in the reducer set")
        lm, lc = g.leading_term(order)
        tail = [(m, c / lc) for m, c in g.terms if m != lm]
        out.append((lm, tail))
    return out


def _normal_form(p: dict, reducers, key) -> dict:
    """Full reduction: repeatedly reduce the largest reducible term by the
    first reducer (lowest index) whose lead divides it."""
    p = dict(p)
    r = {}
    while p:
        m = _lead(p, key)
        c = p.pop(m)
        for lm, tail in reducers:
            if mono_divides(lm, m):
                u = tuple(a - b for a, b in zip(m, lm))
                for tm, tc in tail:
                    mm = tuple(a + b for a, b in zip(u, tm))
                    v = p.get(mm)
                    if v is None:
                        p[mm] = -c * tc
                    else:
                        v = v - c * tc
                        if v:
                            p[mm] = v
                        else:
                            del p[mm]
                break
        else:
            r[m] = c
    return r


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder = LEX) -> Polynomial:
    """Remainder of ``f`` on division by ``G``: no term of it is divisible by a lead of ``G``."""
    for g in G:
        f._check(g)
    if not G:
        return f
    r = _normal_form(f._dict, _reducers(G, order), order.key)
    return Polynomial._from_dict(f.nvars, r)


def _s_poly(lf, tf, lg, tg) -> dict:
    """S-polynomial of two monic polynomials given as (lead, tail) pairs."""
    lcm = mono_lcm(lf, lg)
    uf = tuple(a - b for a, b in zip(lcm, lf))
    ug = tuple(a - b for a, b in zip(lcm, lg))
    d: dict = {}
    for m, c in tf:
        mm = tuple(a + b for a, b in zip(uf, m))
        d[mm] = d.get(mm, 0) + c
    for m, c in tg:
        mm = tuple(a + b for a, b in zip(ug, m))
        d[mm] = d.get(mm, 0) - c
    return {m: c for m, c in d.items() if c}


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = LEX) -> Polynomial:
    """``(L/lt(f))*f - (L/lt(g))*g`` with ``L`` the lcm of the leading monomials."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    f._check(g)
    (lf, tf), (lg, tg) = _reducers([f, g], order)
    return Polynomial._from_dict(f.nvars, _s_poly(lf, tf, lg, tg))


def _covers_degree(leads: list, nvars: int, t: int) -> bool:
    """True if every monomial of degree ``t`` is divisible by some lead."""
    powers = {}
    for m in leads:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            powers[i] = min(powers.get(i, m[i]), m[i])
    if len(powers) < nvars or any(e > t for e in powers.values()):
        return False
    return all(any(mono_divides(l, m) for l in leads) for m in monomials_of_degree(nvars, t))


def buchberger(
    gens: Sequence[Polynomial],
    order: TermOrder = LEX,
    chain_criterion: bool = False,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are taken in order of lcm degree, then by the term order.  Pairs with
    coprime leading monomials are skipped.  For homogeneous input the loop stops
    early once the leading monomials contain every monomial of the current
    degree, since nothing of higher degree can then be new.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("buchberger needs at least one nonzero generator")
    n = gens[0].nvars
    for g in gens:
        gens[0]._check(g)
    key = order.key
    homogeneous = all(g.is_homogeneous() for g in gens)

    basis: list = []  # (lead, tail) pairs of monic polynomials
    pending: list = []
    in_queue: set = set()

    def add(lead, tail):
        k = len(basis)
        basis.append((lead, tail))
        for i in range(k):
            lcm = mono_lcm(basis[i][0], lead)
            heapq.heappush(pending, (sum(lcm), key(lcm), i, k))
            in_queue.add((i, k))

    for g in gens:
        (lead, tail), = _reducers([g], order)
        add(lead, tail)

    checked_degree = -1
    while pending:
        deg, _, i, j = heapq.heappop(pending)
        in_queue.discard((i, j))
        if homogeneous and deg > checked_degree:
            checked_degree = deg
            if _covers_degree([b[0] for b in basis], n, deg):
                break
        li, ti = basis[i]
        lj, tj = basis[j]
        if mono_coprime(li, lj):
            continue
        if chain_criterion:
            lcm = mono_lcm(li, lj)
            skip = False
            for k, (lk, _) in enumerate(basis):
                if k in (i, j) or not mono_divides(lk, lcm):
                    continue
                if (min(i, k), max(i, k)) not in in_queue and (min(j, k), max(j, k)) not in in_queue:
                    skip = True
                    break
            if skip:
                continue
        s = _s_poly(li, ti, lj, tj)
        if not s:
            continue
        h = _normal_form(s, basis, key)
        if h:
            lead = _lead(h, key)
            lc = h[lead]
            tail = [(m, c / lc) for m, c in h.items() if m != lead]
            tail.sort(key=lambda t: key(t[0]), reverse=True)
            add(lead, tail)

    return _reduce_basis(basis, n, order)


def _reduce_basis(basis: list, n: int, order: TermOrder) -> GroebnerBasis:
    key = order.key
    # drop elements whose lead is divisible by another lead (keep the first of equals)
    kept = []
    for idx, (lead, tail) in enumerate(basis):
        redundant = False
        for jdx, (other, _) in enumerate(basis):
            if jdx == idx or not mono_divides(other, lead):
                continue
            if other != lead or jdx < idx:
                redundant = True
                break
        if not redundant:
            kept.append((lead, tail))
    out = []
    for idx, (lead, tail) in enumerate(kept):
        others = [b for jdx, b in enumerate(kept) if jdx != idx]
        t = _normal_form(dict(tail), others, key) if others else dict(tail)
        d = {lead: Fraction(1)}
        d.update(t)
        out.append(Polynomial._from_dict(n, d))
    out.sort(key=lambda g: key(g.leading_term(order)[0]), reverse=True)
    leads = tuple(g.leading_term(order)[0] for g in out)
    return GroebnerBasis(tuple(out), order, leads, n)


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder = LEX):
    """Buchberger's criterion: return ``(True, None)`` or ``(False, (i, j))`` for
    the first pair whose S-polynomial does not reduce to zero."""
    G = list(G)
    if any(not g for g in G):
        raise ValueError("zero polynomial in G")
    reducers = _reducers(G, order)
    key = order.key
    for j in range(len(G)):
        for i in range(j):
            (li, ti), (lj, tj) = reducers[i], reducers[j]
            s = _s_poly(li, ti, lj, tj)
            if s and _normal_form(s, reducers, key):
                return False, (i, j)
    return True, None


def initial_ideal(I: Sequence[Polynomial], order: TermOrder = LEX) -> MonomialIdeal:
    """Minimal generators of the ideal of leading monomials of ``I``."""
    I = [f for f in I if f]
    if not I:
        raise ValueError("initial_ideal needs at least one nonzero polynomial")
    if all(f.is_monomial() for f in I):
        return minimalize((f.terms[0][0] for f in I), I[0].nvars)
    return buchberger(I, order).initial_ideal()


def ideal_equal(I: Sequence[Polynomial], J: Sequence[Polynomial], order: TermOrder = LEX) -> bool:
    """Ideal equality via reduced Gröbner bases."""
    return buchberger(I, order).generators == buchberger(J, order).generators
