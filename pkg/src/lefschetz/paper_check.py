"""Reproduction suite: every concrete claim checked by computation.

Each item owns a generator seeded from ``(seed, item key)`` so results do not
depend on which items run or in what order.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .binomial import decompose_binomial_matrix
from .constructions import (
    change_of_variables,
    general_products_ideal,
    groebner_certificate,
    lemma31_ideal,
    matrix_ideal,
    monomial_ci,
    paper_monomial_J,
    principal_minors,
    random_binomial_matrix,
    random_integer_matrix,
    thm12_ideal,
)
from .field import QuadraticElement
from .groebner import (
    buchberger,
    ideal_equal,
    initial_ideal,
    is_groebner_basis,
    normal_form,
    s_polynomial,
)
from .lefschetz import LinearForm, Mode, Verdict, check_lefschetz, decide_lefschetz, verify_prop23_isomorphisms
from .parser import parse_polynomial
from .quotient import NotArtinian, build_quotient, hilbert_by_rank, hilbert_series_ci
from .randomized import (
    random_artinian_ideal,
    random_homogeneous_ideal,
    random_monomial_artinian,
    random_monomial_transform,
    random_polynomial,
)

LEMMA31_A = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(5))
SECTION4_HILBERT = [1, 4, 10, 20, 30, 36, 34, 24, 12, 4]


def item_rng(seed: int, key: str) -> random.Random:
    return random.Random(f"{seed}:{key}")


def _seed_from(rng: random.Random) -> int:
    return rng.randrange(2**32)


def _d_vectors(ns: Iterable[int], values=(1, 2, 3)):
    for n in ns:
        yield from itertools.product(values, repeat=n)


@dataclass(frozen=True)
class CheckResult:
    key: str
    criterion: int | None
    title: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict:
        return {
            "item": self.key,
            "criterion": self.criterion,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


# Individual checks.  Each returns (passed, detail).


def check_lemma31(rng: random.Random) -> tuple[bool, str]:
    count = 0
    bad = []
    for d in _d_vectors(range(2, 6)):
        J = paper_monomial_J(d)
        for a in LEMMA31_A:
            for build in (lemma31_ideal, thm12_ideal):
                count += 1
                if initial_ideal(build(d, a)) != J:
                    bad.append((build.__name__, d, str(a)))
    detail = f"{count} initial ideals compared"
    if bad:
        detail += f"; first mismatch {bad[0]}"
    return not bad, detail


def check_certificate(rng: random.Random) -> tuple[bool, str]:
    count = 0
    for d in _d_vectors(range(2, 6)):
        n = len(d)
        for a in LEMMA31_A:
            fs, gs = groebner_certificate(d, a)
            ok, pair = is_groebner_basis(fs + gs)
            if not ok:
                return False, f"is_groebner_basis fails on d={d}, a={a} at pair {pair}"
            G = fs + gs
            for i in range(n - 1):
                for j in range(i + 1, n - 1):
                    if normal_form(s_polynomial(gs[i], gs[j]), G):
                        return False, f"S(g_{i + 1}, g_{j + 1}) does not reduce to zero, d={d}, a={a}"
            # G lies in thm12_ideal(d, a) with the same a
            I = buchberger(thm12_ideal(d, a))
            if any(I.reduce(g) for g in G):
                return False, f"certificate not contained in the ideal, d={d}, a={a}"
            count += 1
    return True, f"{count} certificates verified"


def check_thm32(rng: random.Random) -> tuple[bool, str]:
    count = 0
    for d in _d_vectors(range(2, 5)):
        Q = build_quotient(paper_monomial_J(d).polynomials())
        if Q.hilbert != hilbert_series_ci([e + 1 for e in d]):
            return False, f"Hilbert function mismatch for d={d}"
        report = decide_lefschetz(Q, Mode.SLP)
        if not report.holds or report.element != LinearForm.sum_of_variables(len(d)):
            return False, f"SLP of x1+...+xn fails for J with d={d}"
        count += 1
    return True, f"{count} ideals J: Hilbert function and SLP of x1+...+xn"


def check_thm12(rng: random.Random) -> tuple[bool, str]:
    count = 0
    worst = 0
    for d in _d_vectors(range(2, 5)):
        for a in (Fraction(0),) + LEMMA31_A:
            Q = build_quotient(thm12_ideal(d, a))
            report = decide_lefschetz(Q, Mode.SLP, trials=3, seed=_seed_from(rng))
            if not report.holds:
                return False, f"no SLP certificate for d={d}, a={a}"
            worst = max(worst, report.trials)
            count += 1
    return True, f"{count} ideals hold SLP (at most {worst} trial(s) needed)"


def remark33_quotient(sign: int):
    a = QuadraticElement(0, Fraction(4 * sign, 3), 3)
    return build_quotient(thm12_ideal((1,) * 7, a))


def check_remark33(rng: random.Random) -> tuple[bool, str]:
    parts = []
    ok = True
    for sign in (1, -1):
        Q = remark33_quotient(sign)
        fixed = check_lefschetz(Q, LinearForm.sum_of_variables(7), Mode.SLP)
        generic = decide_lefschetz(Q, Mode.SLP, trials=3, seed=_seed_from(rng))
        label = "+" if sign > 0 else "-"
        parts.append(
            f"a={label}(4/3)*sqrt(3): sum {fixed.verdict.value} (expected fails_for_element), "
            f"generic {generic.verdict.value} (expected holds)"
        )
        ok &= fixed.verdict is Verdict.FAILS_FOR_ELEMENT and generic.holds
    return ok, "; ".join(parts)


def section4_ideals() -> tuple[list, list]:
    I1 = monomial_ci([4, 4, 4, 4]) + [parse_polynomial("x1*x2*x3*x4", 4)]
    I2 = monomial_ci([4, 4, 4, 4]) + [parse_polynomial("x1*x2*x3*(x1 + x4)", 4)]
    return I1, I2


def check_section4(rng: random.Random) -> tuple[bool, str]:
    I1, I2 = section4_ideals()
    Q1, Q2 = build_quotient(I1), build_quotient(I2)
    if Q1.hilbert != SECTION4_HILBERT or Q2.hilbert != SECTION4_HILBERT:
        return False, f"Hilbert functions {Q1.hilbert} and {Q2.hilbert}"
    r2 = decide_lefschetz(Q2, Mode.WLP, trials=3, seed=_seed_from(rng))
    r1 = decide_lefschetz(Q1, Mode.WLP, trials=5, seed=_seed_from(rng))
    ok = r2.holds and r1.verdict is Verdict.NO_CERTIFICATE_FOUND
    return ok, f"I2 WLP {r2.verdict.value}; I1 WLP {r1.verdict.value} after {r1.trials} trials"


def check_remark46(rng: random.Random) -> tuple[bool, str]:
    squares = build_quotient(general_products_ideal(6, 7, "squares", seed=_seed_from(rng)))
    pairs = build_quotient(general_products_ideal(6, 7, "distinct-pairs", seed=_seed_from(rng)))
    r_sq = decide_lefschetz(squares, Mode.WLP, trials=5, seed=_seed_from(rng))
    r_pr = decide_lefschetz(pairs, Mode.WLP, trials=3, seed=_seed_from(rng))
    ok = r_sq.verdict is Verdict.NO_CERTIFICATE_FOUND and r_pr.holds
    return ok, (
        f"squares: WLP {r_sq.verdict.value} after {r_sq.trials} trials; "
        f"products: WLP {r_pr.verdict.value}"
    )


def _minor_instances(rng: random.Random):
    F = Fraction
    hand = [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], True),
        ([[1, -1, 0], [0, 1, -1], [-2, 0, 1]], True),
        ([[1, 1, 0], [0, 1, 1], [-1, 0, 1]], False),  # determinant 0
        ([[1, 1, 0], [1, 1, 0], [0, 0, 1]], False),  # a 2x2 minor vanishes
        ([[0, 1, 0], [1, 1, 0], [0, 0, 1]], False),  # zero diagonal entry
        ([[2, 1, 0, 0], [0, 2, 1, 0], [0, 0, 2, 1], [1, 0, 0, 2]], True),
        ([[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [-1, 0, 0, 1]], False),
    ]
    for A, expect in hand:
        yield [[F(x) for x in row] for row in A], expect
    for t in range(200):
        n = 3 if t % 2 == 0 else 4
        A = random_integer_matrix(n, rng, -2, 2)
        yield A, None


def check_minors(rng: random.Random) -> tuple[bool, str]:
    stats = {True: 0, False: 0}
    for A, expect in _minor_instances(rng):
        nonzero = all(principal_minors(A))
        if expect is not None and nonzero != expect:
            return False, f"hand-built instance {A} has unexpected minors"
        try:
            build_quotient(matrix_ideal(A))
            artinian = True
        except NotArtinian:
            artinian = False
        if artinian != nonzero:
            return False, f"criterion fails for A={[[str(x) for x in r] for r in A]}"
        stats[nonzero] += 1
    return True, f"{stats[True]} artinian, {stats[False]} non-artinian, all agree with the minors"


def check_thm34(rng: random.Random, samples: int = 50) -> tuple[bool, str]:
    blocks = 0
    for t in range(samples):
        n = 2 + t % 4
        A = random_binomial_matrix(n, rng)
        d = [rng.randint(1, 2) for _ in range(n)]
        dec = decompose_binomial_matrix(A)
        blocks += len(dec.blocks)
        if not ideal_equal(dec.transformed_ideal(A, d), dec.block_ideal(d)):
            return False, f"round trip fails for A={A}, d={d}"
        report = decide_lefschetz(build_quotient(matrix_ideal(A, d)), Mode.SLP, seed=_seed_from(rng))
        if not report.holds:
            return False, f"no SLP certificate for A={A}, d={d}"
    return True, f"{samples} matrices decomposed ({blocks} cycle blocks), round trips exact, SLP holds"


def _prop_nf_idempotent(rng: random.Random) -> bool:
    n = rng.randint(2, 3)
    G = buchberger(random_homogeneous_ideal(rng, n, rng.randint(1, 3))).generators
    f = random_polynomial(rng, n)
    r = normal_form(f, G)
    return normal_form(r, G) == r


def _prop_buchberger(rng: random.Random) -> bool:
    n = rng.randint(2, 3)
    gens = random_homogeneous_ideal(rng, n, rng.randint(1, 3))
    G = buchberger(gens)
    return is_groebner_basis(G.generators)[0] and all(not G.reduce(g) for g in gens)


def _prop_round_trip(rng: random.Random) -> bool:
    n = rng.randint(1, 4)
    m = rng.choice((None, 3))
    f = random_polynomial(rng, n, m=m)
    return parse_polynomial(str(f), n, "q" if m is None else f"quad:{m}") == f


def _prop_hilbert_oracle(rng: random.Random) -> bool:
    n = rng.randint(1, 4)
    gens = random_artinian_ideal(rng, n, max_power=3 if n < 4 else 2)
    Q = build_quotient(gens)
    top = min(Q.socle_degree + 1, 8)
    return hilbert_by_rank(gens, top) == (Q.hilbert + [0])[: top + 1]


def _prop_transform_invariance(rng: random.Random) -> bool:
    n = rng.randint(2, 3)
    if rng.random() < 0.5:
        gens = random_artinian_ideal(rng, n, max_power=2, extra=1)
    elif rng.random() < 0.8:
        gens = random_monomial_artinian(rng, n)
    else:
        gens = section4_style_failure(n)
    moved = change_of_variables(gens, random_monomial_transform(rng, n))
    mode = rng.choice((Mode.WLP, Mode.SLP))
    seed = _seed_from(rng)
    v1 = decide_lefschetz(build_quotient(gens), mode, seed=seed).verdict
    v2 = decide_lefschetz(build_quotient(moved), mode, seed=seed).verdict
    return v1 == v2


def section4_style_failure(n: int) -> list:
    """``(x_1^3, ..., x_n^3, x_1 ... x_n)``; fails the WLP for n = 3."""
    prod = parse_polynomial("*".join(f"x{i}" for i in range(1, n + 1)), n)
    return monomial_ci([3] * n) + [prod]


PROPERTIES = {
    "normal-form idempotence": _prop_nf_idempotent,
    "buchberger self-check": _prop_buchberger,
    "parse/print round trip": _prop_round_trip,
    "hilbert oracle": _prop_hilbert_oracle,
    "change-of-variables invariance": _prop_transform_invariance,
}


def check_properties(rng: random.Random, instances: int = 100) -> tuple[bool, str]:
    failed = []
    for name, prop in PROPERTIES.items():
        sub = random.Random(f"{rng.random()}:{name}")
        if not all(prop(sub) for _ in range(instances)):
            failed.append(name)
    if failed:
        return False, "failed: " + ", ".join(failed)
    return True, f"{len(PROPERTIES)} properties x {instances} instances"


def check_prop23(rng: random.Random) -> tuple[bool, str]:
    cases = [[2, 2], [3, 3], [2, 2, 2], [2, 3, 4], [4, 4, 4, 4], [3, 2, 2, 3, 2]]
    bad = [c for c in cases if not verify_prop23_isomorphisms(c)]
    return not bad, f"{len(cases)} monomial CIs" + (f"; failing {bad}" if bad else "")


@dataclass(frozen=True)
class Item:
    key: str
    criterion: int | None
    title: str
    run: Callable[[random.Random], tuple[bool, str]]


ITEMS = (
    Item("lemma31", 1, "lex initial ideals of the binomial family", check_lemma31),
    Item("certificate", 2, "Gröbner certificate for the binomial family", check_certificate),
    Item("thm32", 3, "monomial quotient R/J has the SLP", check_thm32),
    Item("thm12", 4, "binomial quotient R/I has the SLP", check_thm12),
    Item("remark33", 5, "x1+...+x7 over Q(sqrt 3) at a = ±(4/3)sqrt 3", check_remark33),
    Item("section4", 6, "binomial-row ideals I1 and I2", check_section4),
    Item("remark46", 7, "general quadric products", check_remark46),
    Item("minors", 8, "Principal-minor criterion", check_minors),
    Item("thm34", 9, "binomial-row round trip and SLP", check_thm34),
    Item("properties", 10, "Randomized property suites", check_properties),
    Item("prop23", None, "multiplication-map isomorphisms", check_prop23),
)

ITEM_KEYS = tuple(item.key for item in ITEMS)


def run_item(item: Item, seed: int = 0) -> CheckResult:
    start = time.perf_counter()
    passed, detail = item.run(item_rng(seed, item.key))
    return CheckResult(item.key, item.criterion, item.title, passed, detail, time.perf_counter() - start)


def run_paper_check(only: Iterable[str] | None = None, seed: int = 0, on_result=None) -> list[CheckResult]:
    """Run the selected items (all by default) in table order."""
    wanted = set(only) if only else None
    if wanted:
        unknown = wanted - set(ITEM_KEYS)
        if unknown:
            raise ValueError(f"unknown item(s): {', '.join(sorted(unknown))}; choose from {', '.join(ITEM_KEYS)}")
    results = []
    for item in ITEMS:
        if wanted and item.key not in wanted:
            continue
        result = run_item(item, seed)
        results.append(result)
        if on_result:
            on_result(result)
    return results
