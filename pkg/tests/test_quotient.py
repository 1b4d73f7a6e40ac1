import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.constructions import monomial_ci, paper_monomial_J, thm12_ideal
from lefschetz.lefschetz import LinearForm
from lefschetz.parser import parse_polynomial
from lefschetz.quotient import (
    NotArtinian,
    build_quotient,
    hilbert_by_rank,
    hilbert_series_ci,
    multiplication_matrix,
)
from lefschetz.randomized import random_artinian_ideal

F = Fraction


def ideal(texts, n):
    return [parse_polynomial(t, n) for t in texts]


def poly_product_oracle(degrees):
    coeffs = [1]
    for e in degrees:
        nxt = [0] * (len(coeffs) + e - 1)
        for i, c in enumerate(coeffs):
            for j in range(e):
                nxt[i + j] += c
        coeffs = nxt
    return coeffs


class TestBuildQuotient:
    def test_small_monomial(self):
        Q = build_quotient(ideal(["x1^2", "x1*x2", "x2^3"], 2))
        assert Q.hilbert == [1, 2, 1]
        assert Q.socle_degree == 2
        assert Q.basis(0) == ((0, 0),)
        assert set(Q.basis(1)) == {(1, 0), (0, 1)}
        assert Q.basis(2) == ((0, 2),)

    @pytest.mark.parametrize("exps", [[2], [3, 2], [2, 2, 2], [4, 3, 2, 2]])
    def test_monomial_ci(self, exps):
        assert build_quotient(monomial_ci(exps)).hilbert == poly_product_oracle(exps)

    def test_section4_I1(self):
        I1 = ideal(["x1^4", "x2^4", "x3^4", "x4^4", "x1*x2*x3*x4"], 4)
        assert build_quotient(I1).hilbert == [1, 4, 10, 20, 30, 36, 34, 24, 12, 4]

    def test_not_artinian(self):
        with pytest.raises(NotArtinian, match="x2"):
            build_quotient(ideal(["x1^2", "x1*x2"], 2))

    def test_inhomogeneous_rejected(self):
        with pytest.raises(ValueError):
            build_quotient(ideal(["x1^2 + x2", "x2^2"], 2))

    def test_non_monomial_basis_and_normal_form(self):
        Q = build_quotient(thm12_ideal((1, 1), 2))
        assert Q.hilbert == [1, 2, 1]
        nf = Q.normal_form(parse_polynomial("x1^2", 2))
        assert all(m in Q.basis(2) for m, _ in nf.terms)

    def test_symmetric_for_complete_intersections(self):
        for d in [(1, 2), (2, 1, 3), (1, 1, 2, 1)]:
            h = build_quotient(thm12_ideal(d, 3)).hilbert
            D = len(h) - 1
            assert all(h[k] == h[D - k] for k in range(D + 1))


class TestHilbertSeriesCI:
    def test_examples(self):
        assert hilbert_series_ci([2, 2]) == [1, 2, 1]
        assert hilbert_series_ci([2, 2, 2, 2]) == [1, 4, 6, 4, 1]
        assert hilbert_series_ci([4, 4, 4, 4]) == [1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1]

    @given(st.lists(st.integers(1, 5), min_size=1, max_size=5))
    def test_product_oracle(self, degrees):
        assert hilbert_series_ci(degrees) == poly_product_oracle(degrees)

    def test_matches_J(self):
        d = (2, 1, 3)
        assert build_quotient(paper_monomial_J(d).polynomials()).hilbert == hilbert_series_ci([3, 2, 4])


class TestMultiplicationMatrix:
    def test_small_example(self):
        Q = build_quotient(ideal(["x1^2", "x1*x2", "x2^3"], 2))
        M = multiplication_matrix(Q, LinearForm((1, 1)), 1, 1)
        assert M == [[0, 1]]

    def test_identity_for_s_zero(self):
        Q = build_quotient(monomial_ci([3, 3]))
        assert multiplication_matrix(Q, LinearForm((1, 1)), 0, 1) == [[1, 0], [0, 1]]

    def test_univariate(self):
        Q = build_quotient(monomial_ci([3]))
        assert multiplication_matrix(Q, LinearForm((1,)), 2, 0) == [[1]]

    def test_degree_out_of_range(self):
        Q = build_quotient(monomial_ci([3]))
        with pytest.raises(ValueError):
            multiplication_matrix(Q, LinearForm((1,)), 2, 1)

    def test_variable_matrices_match_direct_route(self):
        Q = build_quotient(thm12_ideal((1, 2, 1), F(-1)))
        for k in range(Q.socle_degree):
            X = Q.variable_matrices(k)
            for j in range(3):
                e = [0, 0, 0]
                e[j] = 1
                assert X[j] == multiplication_matrix(Q, LinearForm(tuple(e)), 1, k)


@given(st.integers(min_value=0, max_value=2**32))
@settings(max_examples=100, deadline=None)
def test_hilbert_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    gens = random_artinian_ideal(rng, n, max_power=3 if n < 4 else 2)
    Q = build_quotient(gens)
    top = min(Q.socle_degree + 1, 8)
    assert hilbert_by_rank(gens, top) == (Q.hilbert + [0])[: top + 1]
