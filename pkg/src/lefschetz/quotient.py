"""Graded artinian quotients R/I presented by standard monomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .field import Field, field_of
from .groebner import GroebnerBasis, MonomialIdeal, buchberger, minimalize, normal_form
from .linalg import identity
from .polynomial import LEX, Monomial, Polynomial, TermOrder, monomials_of_degree


class NotArtinian(ValueError):
    """The quotient is not finite dimensional: some variable has no pure power
    in the initial ideal."""


@dataclass(frozen=True, eq=False)
class GradedQuotient:
    """A graded artinian algebra ``R/I`` with its standard monomial basis.

    ``standard_monomials[k]`` lists the degree-``k`` monomials outside the
    initial ideal, lex-descending; ``hilbert[k]`` is its length.
    """

    nvars: int
    generators: tuple
    groebner: GroebnerBasis
    initial: MonomialIdeal
    standard_monomials: tuple
    field: Field
    is_monomial: bool
    # per degree t: {monomial: {basis index: coefficient}} for every monomial of degree t
    _normal_forms: tuple = field(repr=False, default=())
    _index: tuple = field(repr=False, default=())

    @property
    def hilbert(self) -> list[int]:
        return [len(b) for b in self.standard_monomials]

    @property
    def socle_degree(self) -> int:
        return len(self.standard_monomials) - 1

    @property
    def dimension(self) -> int:
        return sum(self.hilbert)

    def basis(self, k: int) -> tuple:
        if 0 <= k < len(self.standard_monomials):
            return self.standard_monomials[k]
        return ()

    def reduce_monomial(self, mono: Monomial) -> dict:
        """Coordinates of a monomial in the standard basis of its degree."""
        t = sum(mono)
        if t > self.socle_degree:
            return {}
        if self.is_monomial:
            i = self._index[t].get(tuple(mono))
            return {} if i is None else {i: Fraction(1)}
        return self._normal_forms[t][tuple(mono)]

    def coordinates(self, f: Polynomial, k: int) -> list:
        """Coordinate vector of a degree-``k`` form in the standard basis of ``A_k``."""
        vec = [Fraction(0)] * len(self.basis(k))
        for mono, c in f.terms:
            if sum(mono) != k:
                raise ValueError(f"term of degree {sum(mono)} in a degree-{k} form")
            for i, v in self.reduce_monomial(mono).items():
                vec[i] = vec[i] + c * v
        return vec

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner.generators, self.groebner.order)

    def variable_matrices(self, k: int) -> list[list[list]]:
        """Matrices of multiplication by ``x1, ..., xn`` from ``A_k`` to ``A_{k+1}``."""
        src = self.basis(k)
        rows = len(self.basis(k + 1))
        out = []
        for j in range(self.nvars):
            M = [[Fraction(0)] * len(src) for _ in range(rows)]
            for col, b in enumerate(src):
                mono = b[:j] + (b[j] + 1,) + b[j + 1 :]
                for r, v in self.reduce_monomial(mono).items():
                    M[r][col] = v
            out.append(M)
        return out


def _standard_monomials(initial: MonomialIdeal, n: int) -> list[tuple]:
    levels = [((0,) * n,)]
    while True:
        nxt = set()
        for b in levels[-1]:
            for j in range(n):
                m = b[:j] + (b[j] + 1,) + b[j + 1 :]
                if m not in nxt and not initial.contains(m):
                    nxt.add(m)
        if not nxt:
            return levels
        levels.append(tuple(sorted(nxt, reverse=True)))


def _normal_form_table(G: GroebnerBasis, basis: tuple, t: int, n: int) -> dict:
    """Normal forms of all degree-``t`` monomials, built in increasing lex order
    so every reduction step refers to a smaller, already reduced monomial."""
    index = {b: i for i, b in enumerate(basis)}
    reducers = []
    for g in G.generators:
        lm = g.terms[0][0] if G.order == LEX else g.leading_term(G.order)[0]
        reducers.append((lm, [(m, c) for m, c in g.terms if m != lm]))
    table: dict = {}
    for m in sorted(monomials_of_degree(n, t)) if G.order == LEX else sorted(
        monomials_of_degree(n, t), key=G.order.key
    ):
        i = index.get(m)
        if i is not None:
            table[m] = {i: Fraction(1)}
            continue
        for lm, tail in reducers:
            if all(a >= b for a, b in zip(m, lm)):
                u = tuple(a - b for a, b in zip(m, lm))
                vec: dict = {}
                for tm, tc in tail:
                    mm = tuple(a + b for a, b in zip(u, tm))
                    for r, v in table[mm].items():
                        w = vec.get(r, 0) - tc * v
                        if w:
                            vec[r] = w
                        else:
                            vec.pop(r, None)
                table[m] = vec
                break
        else:  # pragma: no cover - standard monomials are exactly the non-divisible ones
            raise AssertionError(f"monomial {m} neither standard nor reducible")
    return table


def build_quotient(I: Sequence[Polynomial], order: TermOrder = LEX) -> GradedQuotient:
    """Standard-monomial presentation of ``R/I`` for a homogeneous artinian ideal."""
    gens = tuple(f for f in I if f)
    if not gens:
        raise NotArtinian("the zero ideal is not artinian")
    n = gens[0].nvars
    if not all(f.is_homogeneous() for f in gens):
        raise ValueError("build_quotient needs homogeneous generators")
    monomial = all(f.is_monomial() for f in gens)
    if monomial:
        # a monomial ideal is its own reduced Gröbner basis after minimalizing
        initial = minimalize((f.terms[0][0] for f in gens), n)
        G = GroebnerBasis(
            tuple(Polynomial.monomial(m) for m in initial.generators), order, initial.generators, n
        )
    else:
        G = buchberger(gens, order)
        initial = G.initial_ideal()
    if any(sum(m) == 0 for m in initial.generators):
        raise ValueError("the unit ideal has no graded artinian quotient")
    missing = [f"x{i + 1}" for i in range(n) if i not in initial.pure_powers()]
    if missing:
        raise NotArtinian(f"no pure power of {', '.join(missing)} in the initial ideal")
    levels = _standard_monomials(initial, n)
    index = tuple({b: i for i, b in enumerate(level)} for level in levels)
    tables: tuple = ()
    if not monomial:
        tables = tuple(
            _normal_form_table(G, levels[t], t, n) for t in range(len(levels))
        )
    coeffs = [c for f in gens for c in f.coefficients()]
    return GradedQuotient(
        nvars=n,
        generators=gens,
        groebner=G,
        initial=initial,
        standard_monomials=tuple(levels),
        field=field_of(coeffs),
        is_monomial=monomial,
        _normal_forms=tables,
        _index=index,
    )


def hilbert_series_ci(degrees: Sequence[int]) -> list[int]:
    """Coefficients of the product of ``1 + t + ... + t^(e-1)`` over ``degrees``."""
    if not degrees:
        raise ValueError("need at least one degree")
    coeffs = [1]
    for e in degrees:
        if e < 1:
            raise ValueError("degrees must be positive")
        out = [0] * (len(coeffs) + e - 1)
        for i, c in enumerate(coeffs):
            for j in range(e):
                out[i + j] += c
        coeffs = out
    return coeffs


def multiplication_matrix(Q: GradedQuotient, form, s: int, k: int) -> list[list]:
    """Matrix of ``m -> NF(l^s * m)`` from ``A_k`` to ``A_{k+s}``.

    Computed directly from the power ``l^s`` and the Gröbner basis; columns are
    indexed by the degree-``k`` standard monomials.
    """
    if s < 0 or k < 0 or k + s > Q.socle_degree:
        raise ValueError(f"degree out of range: k={k}, s={s}, socle degree {Q.socle_degree}")
    if s == 0:
        return identity(Q.hilbert[k])
    ell = form.polynomial() if hasattr(form, "polynomial") else form
    power = ell ** s
    src, dst = Q.basis(k), Q.basis(k + s)
    index = {b: i for i, b in enumerate(dst)}
    M = [[Fraction(0)] * len(src) for _ in dst]
    for col, b in enumerate(src):
        r = Q.normal_form(power.mul_term(b))
        for mono, c in r.terms:
            M[index[mono]][col] = c
    return M


def hilbert_by_rank(I: Sequence[Polynomial], max_degree: int) -> list[int]:
    """Hilbert function of ``R/I`` up to ``max_degree`` from the ranks of the
    graded pieces ``I_k`` (spanned by monomial multiples of the generators).

    Independent of Gröbner bases; used as a cross-check."""
    from .linalg import exact_rank

    gens = [f for f in I if f]
    n = gens[0].nvars
    out = []
    for k in range(max_degree + 1):
        monos = monomials_of_degree(n, k)
        col = {m: i for i, m in enumerate(monos)}
        rows = []
        for g in gens:
            e = g.degree
            if e > k:
                continue
            for m in monomials_of_degree(n, k - e):
                row = [Fraction(0)] * len(monos)
                for mono, c in g.mul_term(m).terms:
                    row[col[mono]] = c
                rows.append(row)
        out.append(len(monos) - (exact_rank(rows) if rows else 0))
    return out
