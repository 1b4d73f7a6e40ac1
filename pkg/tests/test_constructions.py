import random
from fractions import Fraction

import pytest

from lefschetz.constructions import (
    MatrixIdealSpec,
    SingularTransform,
    change_of_variables,
    general_products_ideal,
    groebner_certificate,
    lemma31_ideal,
    lemma31_to_thm12,
    matrix_ideal,
    monomial_ci,
    paper_ideal_I,
    paper_monomial_J,
    principal_minors,
    random_binomial_matrix,
    random_nonzero_minor_matrix,
    random_pm_one_minor_matrix,
    random_positive_definite,
    thm12_ideal,
)
from lefschetz.groebner import buchberger, ideal_equal, initial_ideal
from lefschetz.lefschetz import Mode, decide_lefschetz
from lefschetz.parser import parse_polynomial
from lefschetz.quotient import NotArtinian, build_quotient

F = Fraction


def P(text, n):
    return parse_polynomial(text, n)


def test_monomial_ci():
    assert monomial_ci([2, 2]) == [P("x1^2", 2), P("x2^2", 2)]
    assert monomial_ci([1]) == [P("x1", 1)]
    assert monomial_ci([4, 4, 4, 4])[3] == P("x4^4", 4)
    with pytest.raises(ValueError):
        monomial_ci([0, 2])


class TestThm12:
    def test_n2(self):
        assert thm12_ideal((1, 1), 2) == [P("x2*(x2 - 2*x1)", 2), P("x1*(x1 - x2)", 2)]
        assert paper_ideal_I is thm12_ideal

    def test_a_zero(self):
        gens = thm12_ideal((2, 1, 3), 0)
        assert gens[0] == P("x3^3", 3)

    def test_a_one_still_constructed(self):
        gens = thm12_ideal((1, 1), 1)
        assert len(gens) == 2
        with pytest.raises(NotArtinian):
            build_quotient(gens)

    def test_bad_d(self):
        with pytest.raises(ValueError):
            thm12_ideal((1,), 2)
        with pytest.raises(ValueError):
            thm12_ideal((1, 0), 2)

    @pytest.mark.parametrize("a", [F(2), F(-1), F(1, 2), F(5), F(-7, 3)])
    def test_parameter_correspondence(self, a):
        d = (2, 1, 1)
        assert ideal_equal(lemma31_ideal(d, a), thm12_ideal(d, lemma31_to_thm12(a)))

    def test_certificate_generates_thm12_ideal(self):
        d, a = (1, 2, 1), F(3)
        fs, gs = groebner_certificate(d, a)
        assert buchberger(fs + gs).generators == buchberger(thm12_ideal(d, a)).generators
        with pytest.raises(ValueError):
            groebner_certificate(d, 1)


class TestJ:
    def test_examples(self):
        assert paper_monomial_J((1, 1)).generators == ((2, 0), (1, 1), (0, 3))
        J = paper_monomial_J((1, 1, 1))
        assert set(J.generators) == {(2, 0, 0), (0, 2, 0), (1, 0, 1), (0, 1, 2), (0, 0, 4)}

    @pytest.mark.parametrize("d", [(1, 1), (3, 1, 2), (1, 2, 2, 1)])
    def test_matches_thm12_initial_ideal(self, d):
        for a in (F(2), F(-1), F(1, 3)):
            assert initial_ideal(thm12_ideal(d, a)) == paper_monomial_J(d)


class TestMatrixIdeal:
    def test_identity(self):
        A = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert matrix_ideal(A) == monomial_ci([2, 2, 2])

    def test_thm12_rows(self):
        d, a = (1, 2, 1), F(5)
        # rows ordered like the generators of thm12_ideal: row n first
        A = [[1, -1, 0], [0, 1, -1], [-a, 0, 1]]
        spec = MatrixIdealSpec(A, (2, 1, 1))
        gens = matrix_ideal(spec)
        assert gens[2] == thm12_ideal(d, a)[0]
        assert gens[:2] == thm12_ideal(d, a)[1:]

    def test_diagonal_is_monomial_ci(self):
        gens = matrix_ideal([[3, 0], [0, -2]], (2, 1))
        assert [g.monic() for g in gens] == monomial_ci([3, 2])

    def test_validation(self):
        with pytest.raises(ValueError):
            MatrixIdealSpec(((1, 2),), (1,))
        with pytest.raises(ValueError):
            MatrixIdealSpec(((1,),), (0,))


class TestPrincipalMinors:
    def test_identity(self):
        assert principal_minors([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1] * 7

    def test_symbolic_family(self):
        for a in (F(2), F(-3), F(1, 2)):
            assert principal_minors([[1, -1], [a, 1]]) == [1, 1, 1 + a]

    def test_zero_diagonal(self):
        assert 0 in principal_minors([[0, 1], [1, 1]])

    def test_count(self):
        assert len(principal_minors([[1] * 4 for _ in range(4)])) == 15

    def test_random_classes(self):
        rng = random.Random(3)
        for n in (2, 3, 4):
            assert all(principal_minors(random_nonzero_minor_matrix(n, rng)))
            assert all(abs(m) == 1 for m in principal_minors(random_pm_one_minor_matrix(n, rng)))
            assert all(m > 0 for m in principal_minors(random_positive_definite(n, rng)))
            A = random_binomial_matrix(n, rng)
            assert all(sum(1 for x in row if x) == 2 and row[i] for i, row in enumerate(A))


def _zero_minor_matrix(rng, n):
    while True:
        A = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if not all(principal_minors(A)):
            return A


@pytest.mark.parametrize("n", [2, 3, 4])
def test_artinian_criterion_both_directions(n):
    rng = random.Random(n)
    for _ in range(10):
        A = random_nonzero_minor_matrix(n, rng, -3, 3)
        d = [rng.randint(1, 2) for _ in range(n)]
        build_quotient(matrix_ideal(A, d))
        with pytest.raises(NotArtinian):
            build_quotient(matrix_ideal(_zero_minor_matrix(rng, n), d))


class TestChangeOfVariables:
    def test_identity(self):
        gens = thm12_ideal((1, 1, 2), 3)
        assert change_of_variables(gens, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == gens

    def test_singular(self):
        with pytest.raises(SingularTransform):
            change_of_variables(monomial_ci([2, 2]), [[1, 1], [1, 1]])

    def test_swap_permutes_matrix(self):
        A = [[1, 2, 0], [0, 1, 3], [4, 0, 1]]
        d = (1, 2, 3)
        T = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]  # x1 <-> x2
        A2 = [[1, 0, 3], [2, 1, 0], [0, 4, 1]]  # rows and columns 1, 2 swapped
        moved = change_of_variables(matrix_ideal(A, d), T)
        assert ideal_equal(moved, matrix_ideal(A2, (2, 1, 3)))

    def test_scaling_scales_column(self):
        A = [[1, 2], [3, 1]]
        lam = F(5)
        moved = change_of_variables(matrix_ideal(A, (1, 1)), [[lam, 0], [0, 1]])
        # x1 -> 5 x1: column 1 of A is scaled by 5, row 1 by 5^(d_1) (a unit)
        assert ideal_equal(moved, matrix_ideal([[5, 2], [15, 1]], (1, 1)))


class TestGeneralProducts:
    def test_shapes(self):
        sq = general_products_ideal(6, 7, "squares", seed=1)
        pr = general_products_ideal(6, 7, "distinct-pairs", seed=1)
        assert len(sq) == len(pr) == 7
        assert all(g.degree == 2 and g.is_homogeneous() for g in sq + pr)
        assert general_products_ideal(6, 7, "squares", seed=1) == sq

    def test_bad_factors(self):
        with pytest.raises(ValueError):
            general_products_ideal(3, 3, "cubes")

    def test_n_squares_are_a_complete_intersection(self):
        Q = build_quotient(general_products_ideal(3, 3, "squares", seed=4))
        assert Q.hilbert == [1, 3, 3, 1]
        assert decide_lefschetz(Q, Mode.SLP, seed=2).holds
