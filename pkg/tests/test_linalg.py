from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.field import QuadraticElement
from lefschetz.linalg import (
    MODULUS,
    bareiss_rank,
    determinant,
    exact_rank,
    field_rank,
    identity,
    matmul,
    rank_mod,
    regular_representation,
    to_modular,
    zeros,
)

from strategies import matrices, quadratic, rationals

F = Fraction


def test_rank_examples():
    assert exact_rank(identity(3)) == 3
    assert exact_rank(zeros(3, 4)) == 0
    assert exact_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert exact_rank([]) == 0


def test_bareiss_skips_zero_columns():
    M = [[0, 1, 2], [0, 2, 4], [0, 0, 1]]
    assert bareiss_rank(M) == 2


def test_quadratic_rank_uses_field_not_rationals():
    s = QuadraticElement(0, 1, 3)
    # rows are proportional over Q(sqrt 3) but not over Q
    M = [[F(1), s], [s, F(3)]]
    assert exact_rank(M) == 1
    assert exact_rank(regular_representation(M)) == 2


def test_determinant():
    assert determinant([[F(1), F(-1)], [F(5), F(1)]]) == 6
    s = QuadraticElement(0, 1, 3)
    assert determinant([[s, F(1)], [F(1), s]]) == 2
    assert determinant([[F(0), F(0)], [F(1), F(1)]]) == 0


@st.composite
def small_matrix(draw, entries=st.integers(-3, 3)):
    r = draw(st.integers(1, 6))
    c = draw(st.integers(1, 6))
    return draw(matrices(r, c, entries))


@given(small_matrix())
@settings(max_examples=150, deadline=None)
def test_bareiss_agrees_with_gauss(M):
    assert exact_rank(M) == field_rank(M)


@given(st.integers(1, 5), st.integers(1, 5), st.data())
@settings(max_examples=100, deadline=None)
def test_quadratic_rank_agrees_with_gauss(r, c, data):
    entries = st.one_of(quadratic(), rationals, st.just(F(0)))
    M = [[data.draw(entries) for _ in range(c)] for _ in range(r)]
    assert exact_rank(M) == field_rank(M)


@given(small_matrix())
@settings(max_examples=100, deadline=None)
def test_modular_rank_never_exceeds_exact(M):
    mod, factor = to_modular(M, MODULUS)
    assert rank_mod(mod) // factor <= exact_rank(M)


@given(small_matrix(), small_matrix())
@settings(max_examples=100, deadline=None)
def test_product_rank_bound(A, B):
    if len(A[0]) != len(B):
        return
    AB = matmul(A, B)
    assert exact_rank(AB) <= min(exact_rank(A), exact_rank(B))


def test_modular_rank_can_drop():
    # p divides the determinant: rank mod p is lower
    M = [[MODULUS, 0], [0, 1]]
    mod, _ = to_modular(M)
    assert rank_mod(mod) == 1 and exact_rank(M) == 2
