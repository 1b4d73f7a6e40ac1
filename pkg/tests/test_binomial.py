import random
from fractions import Fraction

import pytest

from lefschetz.binomial import RowShapeViolation, SingularMinor, decompose_binomial_matrix
from lefschetz.constructions import change_of_variables, matrix_ideal, random_binomial_matrix, thm12_ideal
from lefschetz.groebner import buchberger, ideal_equal
from lefschetz.lefschetz import Mode, decide_lefschetz
from lefschetz.polynomial import Polynomial
from lefschetz.quotient import build_quotient

F = Fraction


def canonical_block_ok(M, block):
    pos = block.positions
    t = len(pos)
    for r in range(t):
        for c in range(t):
            v = M[pos[r]][pos[c]]
            if r == c:
                expect = 1
            elif c == r + 1:
                expect = -1
            elif r == t - 1 and c == 0:
                expect = block.corner
            else:
                expect = 0
            if v != expect:
                return False
    return block.corner != 0


def check_structure(dec, n):
    assert sorted(dec.permutation) == list(range(n))
    sizes = sum(b.size for b in dec.blocks)
    assert sizes + dec.acyclic_size == n
    seen = set()
    for b in dec.blocks:
        assert not seen & set(b.positions)
        seen |= set(b.positions)
        assert canonical_block_ok(dec.matrix, b)
    n0 = dec.acyclic_size
    B = dec.acyclic_part
    for i in range(n0):
        assert B[i][i] == 1
        assert all(B[i][j] == 0 for j in range(i))
    # nothing below the diagonal blocks couples back into earlier blocks
    for b in dec.blocks:
        for r in b.positions:
            for c in range(n):
                if c not in b.positions:
                    assert dec.matrix[r][c] == 0


class TestExamples:
    @pytest.mark.parametrize("a", [F(2), F(-3), F(1, 2)])
    def test_two_cycle(self, a):
        dec = decompose_binomial_matrix([[1, -1], [a, 1]])
        assert dec.acyclic_size == 0 and len(dec.blocks) == 1
        assert dec.blocks[0].size == 2
        assert dec.blocks[0].corner == a
        check_structure(dec, 2)

    def test_invalid_row(self):
        with pytest.raises(RowShapeViolation):
            decompose_binomial_matrix([[1, 1], [0, 1]])
        with pytest.raises(RowShapeViolation):
            decompose_binomial_matrix([[0, 1], [1, 1]])

    def test_singular_minor(self):
        with pytest.raises(SingularMinor):
            decompose_binomial_matrix([[1, -1], [-1, 1]])

    @pytest.mark.parametrize("c", [F(2), F(5), F(-3, 2)])
    def test_three_cycle(self, c):
        dec = decompose_binomial_matrix([[1, 1, 0], [0, 1, 1], [c, 0, 1]])
        assert len(dec.blocks) == 1 and dec.blocks[0].size == 3
        # x2 -> -x2 turns both superdiagonal ones into -1; the corner stays c
        assert dec.scalings == (1, -1, 1)
        assert dec.blocks[0].corner == c
        check_structure(dec, 3)

    def test_tree_and_two_cycles(self):
        # 1 -> 2 -> 3 -> 2 is a tail into a 2-cycle; 4 <-> 5 is a second cycle
        A = [
            [2, 3, 0, 0, 0],
            [0, 1, 4, 0, 0],
            [0, 5, 1, 0, 0],
            [0, 0, 0, 1, 2],
            [0, 0, 0, 7, 3],
        ]
        dec = decompose_binomial_matrix(A)
        assert dec.acyclic_size == 1
        assert [b.rows for b in dec.blocks] == [(1, 2), (3, 4)]
        check_structure(dec, 5)

    def test_chain_depths(self):
        # 1 -> 2 -> 3 -> 4 <-> 5: acyclic vertices ordered by distance to the cycle
        A = [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1], [0, 0, 0, 2, 1]]
        dec = decompose_binomial_matrix(A)
        assert dec.permutation[:3] == (0, 1, 2)
        check_structure(dec, 5)


@pytest.mark.parametrize("seed", range(12))
def test_round_trip_and_blocks(seed):
    rng = random.Random(seed)
    n = 2 + seed % 4
    A = random_binomial_matrix(n, rng)
    d = [rng.randint(1, 3) for _ in range(n)]
    dec = decompose_binomial_matrix(A)
    check_structure(dec, n)
    moved = change_of_variables(matrix_ideal(A, d), dec.transform())
    assert buchberger(moved).generators == buchberger(dec.block_ideal(d)).generators

    # each cycle block is a thm12-style ideal in its own variables
    full = dec.block_ideal(d)
    for b in dec.blocks:
        t = b.size
        dd, a = b.thm12_parameters(d)
        if t < 2:
            continue
        sub = [full[p] for p in b.positions]
        idx = list(b.positions)  # restrict to the block's variables
        local = []
        for g in sub:
            local.append(Polynomial(t, {tuple(m[i] for i in idx): c for m, c in g.terms}))
        expect = thm12_ideal(dd, a)
        assert ideal_equal(local, expect)


def test_decomposed_instances_have_slp():
    rng = random.Random(99)
    for t in range(10):
        n = 2 + t % 4
        A = random_binomial_matrix(n, rng)
        Q = build_quotient(matrix_ideal(A, [1] * n))
        assert decide_lefschetz(Q, Mode.SLP, seed=t).holds
