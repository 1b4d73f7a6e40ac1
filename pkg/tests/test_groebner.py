import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.constructions import groebner_certificate, lemma31_ideal, paper_monomial_J, thm12_ideal, thm12_initial_ideal_a0
from lefschetz.groebner import (
    buchberger,
    ideal_equal,
    initial_ideal,
    is_groebner_basis,
    minimalize,
    normal_form,
    s_polynomial,
)
from lefschetz.parser import parse_polynomial
from lefschetz.polynomial import Polynomial, mono_divides
from lefschetz.randomized import random_homogeneous_ideal, random_polynomial

from strategies import polynomials

F = Fraction


def P(text, n=2):
    return parse_polynomial(text, n)


def xn_power(n, e):
    return Polynomial.monomial(tuple(e if k == n - 1 else 0 for k in range(n)))


class TestSPolynomial:
    def test_self(self):
        f = P("x1^2 - x1*x2")
        assert s_polynomial(f, f).is_zero()

    def test_coprime_monomials(self):
        assert s_polynomial(P("x1^2"), P("x2^3")).is_zero()

    def test_zero_input(self):
        with pytest.raises(ValueError):
            s_polynomial(Polynomial.zero(2), P("x1"))

    def test_leads_are_normalised(self):
        # (x2/3)(3x1^2 + x2^2) - x1^2 (x1 x2 ... ) uses monic leads
        s = s_polynomial(P("3*x1^2 + x2^2"), P("x1*x2"))
        assert s == P("1/3*x2^3")

    @pytest.mark.parametrize("d", [(1, 1, 1), (2, 1, 3), (1, 2, 2, 1)])
    @pytest.mark.parametrize("a", [F(2), F(-1), F(1, 2), F(5)])
    def test_s_gi_gn(self, d, a):
        # computed value: -(1/a) x_n^(D+2), D = d0 + ... + d_{n-1}
        n, D = len(d), sum(d)
        _, gs = groebner_certificate(d, a)
        for i in range(n - 1):
            assert s_polynomial(gs[i], gs[-1]) == xn_power(n, D + 2).scale(-1 / a)


class TestNormalForm:
    def test_divides_out(self):
        assert normal_form(P("x1^2"), [P("x1")]).is_zero()

    def test_remainder_has_no_reducible_terms(self):
        G = [P("x1*x2 - x2^2"), P("x1^2")]
        r = normal_form(P("x1^3 + x1*x2^2 + x2^3"), G)
        leads = [g.terms[0][0] for g in G]
        assert all(not mono_divides(l, m) for m, _ in r.terms for l in leads)

    def test_s_fi_gi_endpoint(self):
        # n = 3, d = (1,1,1), a = 2: NF(S(f_i, g_i)) = -(1/a^d_i) g_{i+1}
        d, a = (1, 1, 1), F(2)
        fs, gs = groebner_certificate(d, a)
        for i in range(2):
            r = normal_form(s_polynomial(fs[i], gs[i]), fs + gs[: i + 1])
            assert r == gs[i + 1].scale(-1 / a)  # every d_i is 1

    @pytest.mark.parametrize("d", [(1, 1, 1), (2, 3, 1), (3, 1, 2, 2), (1, 2, 1, 3, 1)])
    @pytest.mark.parametrize("a", [F(2), F(-1), F(1, 2), F(5)])
    def test_s_fi_gi_endpoint_family(self, d, a):
        fs, gs = groebner_certificate(d, a)
        for i in range(len(d) - 1):
            r = normal_form(s_polynomial(fs[i], gs[i]), fs + gs[: i + 1])
            assert r == gs[i + 1].scale(-1 / a ** d[i + 1])

    @pytest.mark.parametrize("d", [(1, 1, 1), (2, 1, 3, 1)])
    def test_s_gi_gj_reduce_to_zero(self, d):
        fs, gs = groebner_certificate(d, F(5))
        n = len(d)
        for i in range(n - 1):
            for j in range(i + 1, n - 1):
                assert normal_form(s_polynomial(gs[i], gs[j]), fs + gs).is_zero()

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=100, deadline=None)
    def test_idempotent(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 3)
        G = buchberger(random_homogeneous_ideal(rng, n, rng.randint(1, 3))).generators
        r = normal_form(random_polynomial(rng, n), G)
        assert normal_form(r, G) == r


class TestBuchberger:
    def test_coprime_variables(self):
        G = buchberger([P("x1"), P("x2")])
        assert G.generators == (P("x1"), P("x2"))

    def test_lemma31_n2(self):
        G = buchberger([P("x1*x2 - 2*x2^2"), P("x1^2 - x1*x2")])
        assert G.initial_ideal() == minimalize([(2, 0), (1, 1), (0, 3)])
        assert [str(g) for g in G] == ["x1^2 - 2*x2^2", "x1*x2 - 2*x2^2", "x2^3"]

    def test_gb_contains_cubic(self):
        G = buchberger([P("x1^2 - x2^2"), P("x1*x2")])
        assert P("x2^3") in G.generators

    def test_chain_criterion_same_result(self):
        gens = thm12_ideal((2, 1, 2), 3)
        assert buchberger(gens).generators == buchberger(gens, chain_criterion=True).generators

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=100, deadline=None)
    def test_self_check(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 3)
        gens = random_homogeneous_ideal(rng, n, rng.randint(1, 3))
        G = buchberger(gens)
        assert is_groebner_basis(G.generators) == (True, None)
        assert all(G.reduce(g).is_zero() for g in gens)
        # reduced: monic, no lead divides another generator's terms
        for i, g in enumerate(G):
            assert g.terms[0][1] == 1
            for j, h in enumerate(G):
                if i != j:
                    assert not any(mono_divides(h.terms[0][0], m) for m, _ in g.terms)
        assert initial_ideal(list(G.generators)) == G.initial_ideal()

    @given(polynomials(n=2, max_exp=2), polynomials(n=2, max_exp=2))
    @settings(max_examples=60, deadline=None)
    def test_inhomogeneous_membership(self, f, g):
        gens = [h for h in (f, g) if h]
        if not gens:
            return
        G = buchberger(gens)
        assert all(G.reduce(h).is_zero() for h in gens)
        assert is_groebner_basis(G.generators)[0]


class TestIsGroebnerBasis:
    def test_certificate(self):
        fs, gs = groebner_certificate((1, 1, 1), 2)
        assert is_groebner_basis(fs + gs) == (True, None)

    def test_failure_reports_pair(self):
        ok, pair = is_groebner_basis([P("x1^2 - x2^2"), P("x1*x2")])
        assert not ok and pair == (0, 1)

    def test_single_polynomial(self):
        assert is_groebner_basis([P("x1^3 - x1*x2^2 + 7")])[0]


class TestInitialIdeal:
    @pytest.mark.parametrize("d", [(1, 1), (2, 1, 3), (3, 2, 1, 1)])
    def test_a_zero(self, d):
        assert initial_ideal(thm12_ideal(d, 0)) == thm12_initial_ideal_a0(d)
        n = len(d)
        expect = [tuple(d[0] + 1 if k == n - 1 else 0 for k in range(n))]
        expect += [tuple(d[i] + 1 if k == i - 1 else 0 for k in range(n)) for i in range(1, n)]
        assert set(initial_ideal(thm12_ideal(d, 0)).generators) == set(expect)

    def test_lemma31_n2(self):
        assert initial_ideal(lemma31_ideal((1, 1), 2)).generators == ((2, 0), (1, 1), (0, 3))

    def test_monomial_input_is_minimalized(self):
        ideal = initial_ideal([P("x1^2"), P("x1^2*x2"), P("x2^4")])
        assert ideal.generators == ((2, 0), (0, 4))

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("a", [F(2), F(-1), F(1, 2), F(5)])
    def test_lemma31_formula_small(self, n, a):
        import itertools

        for d in itertools.product((1, 2), repeat=n):
            assert initial_ideal(lemma31_ideal(d, a)) == paper_monomial_J(d)


class TestMinimalize:
    def test_examples(self):
        assert minimalize([(1, 0), (1, 1)]).generators == ((1, 0),)
        assert minimalize([(2, 0), (1, 1), (2, 1)]).generators == ((2, 0), (1, 1))
        assert minimalize([], 2).is_zero()

    def test_antichain(self):
        ideal = minimalize([(3, 0, 1), (1, 0, 1), (0, 2, 2), (0, 1, 2), (5, 5, 5)])
        gens = ideal.generators
        assert all(not mono_divides(u, v) for u in gens for v in gens if u != v)
        assert ideal.contains((5, 5, 5))


def test_ideal_equal_under_generator_change():
    gens = thm12_ideal((1, 2), 3)
    G = buchberger(gens)
    assert ideal_equal(gens, list(G.generators))
    assert not ideal_equal(gens, thm12_ideal((1, 2), 4))
