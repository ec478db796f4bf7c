from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from colorosp.algebra import G00, G01, G10, G11, preset_eight, preset_ten
from colorosp.enveloping import (EnvelopingPolynomial, LinearForm, NonLinearError, SectorError,
                                 casimir_eight_00, casimir_ten_00, casimir_ten_00_alt,
                                 casimir_ten_11, generator_poly, graded_commutator, is_pbw,
                                 normal_order, pbw_monomials, solve_casimir)

TEN = preset_ten()
EIGHT = preset_eight()
h, q = Fraction(1, 2), Fraction(1, 4)


def P(alg, *items):
    return EnvelopingPolynomial.from_words(alg, items)


def test_normal_order_examples():
    assert P(TEN, (1, "L- L+")) == P(TEN, (1, "L+ L-"), (1, "R"))
    assert P(TEN, (1, "a- a+")) == P(TEN, (-1, "a+ a-"), (2, "R"))
    assert P(TEN, (1, "a+ a+")) == P(TEN, (2, "L+"))
    assert P(TEN, (1, "R R")).terms == {(4, 4): 1}
    assert str(P(TEN, (1, "R R"))) == "(1)*R^2"


def test_graded_commutator_examples():
    c = casimir_ten_00(TEN)
    for x in TEN.names:
        assert graded_commutator(TEN, c, x).is_zero()
    assert graded_commutator(TEN, generator_poly(TEN, "R"), "L+") == P(TEN, (2, "L+"))
    assert graded_commutator(TEN, P(TEN, (1, "L+ L-")), "R").is_zero()


def test_commutator_needs_homogeneous_input():
    with pytest.raises(SectorError):
        graded_commutator(TEN, P(TEN, (1, "R"), (1, "a+")), "R")


def test_casimir_ten_00_ray():
    sol = solve_casimir(TEN, G00)
    assert len(sol.rays) == 1 and sol.trivial_constant
    ray = sol.rays[0]
    got = [ray.coefficient(m) for m in ("R", "R R", "R̃ R̃", "L+ L-", "L̃+ L̃-", "a+ a-", "ã+ ã-")]
    assert got == [1, -h, -h, 2, 2, h, h]
    assert ray == casimir_ten_00(TEN)


def test_two_written_forms_agree():
    assert casimir_ten_00(TEN) == casimir_ten_00_alt(TEN)


def test_casimir_ten_11_ray():
    sol = solve_casimir(TEN, G11)
    assert len(sol.rays) == 1
    ray = sol.rays[0].scale(h)
    got = [ray.coefficient(m) for m in ("L+ L̃-", "L̃+ L-", "a+ ã-", "ã+ a-", "R̃", "R R̃")]
    assert got == [1, 1, q, q, h, -h]
    assert ray == casimir_ten_11(TEN)
    assert sol.trivial_constant is False


def test_casimir_ten_11_fails_ordinary_centrality():
    # graded-central, but not an ordinary commutator invariant
    c = casimir_ten_11(TEN)
    assert any(not graded_commutator(TEN, c, x, ordinary=True).is_zero() for x in TEN.names)
    assert solve_casimir(TEN, G11, ordinary=True).rays == []


def test_casimir_eight():
    sol = solve_casimir(EIGHT, G00)
    assert len(sol.rays) == 1
    ray = sol.rays[0]
    got = [ray.coefficient(m) for m in ("R R", "R̃ R̃", "L+ L-", "a+ a-", "ã+ ã-")]
    assert got == [-q, -q, 1, q, q]
    assert ray.coefficient("R") == 0
    assert ray == casimir_eight_00(EIGHT)
    shifted = casimir_eight_00(EIGHT, r_coeff=1)
    assert any(not graded_commutator(EIGHT, shifted, x).is_zero() for x in EIGHT.names)
    assert solve_casimir(EIGHT, G11).rays == []


def test_odd_sectors_have_no_quadratic_casimir():
    for alg in (TEN, EIGHT):
        for s in (G01, G10):
            assert solve_casimir(alg, s).rays == []


def test_linear_form_rules():
    u, v = LinearForm.unknown("u"), LinearForm.unknown("v")
    assert (u * 2 + v - u - u).unknowns() == {"v"}
    assert (u * 3 + 1).substitute({"u": Fraction(1, 3)}) == 2
    with pytest.raises(NonLinearError):
        u * v


def test_pbw_monomials_are_pbw():
    for alg in (TEN, EIGHT):
        for s in (G00, G01, G10, G11):
            for w in pbw_monomials(alg, s, 2):
                assert is_pbw(alg, w)
    # a+ squared is not a PBW word
    assert not is_pbw(TEN, (1, 1))
    assert is_pbw(TEN, (0, 0))


def words(alg):
    return st.lists(st.integers(0, alg.dim - 1), max_size=6).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([TEN, EIGHT]).flatmap(lambda a: st.tuples(st.just(a), words(a))))
def test_confluence_and_filtration(case):
    alg, w = case
    left = normal_order(alg, {w: Fraction(1)}, "leftmost")
    right = normal_order(alg, {w: Fraction(1)}, "rightmost")
    assert left == right
    assert left.degree() <= len(w)
    assert all(is_pbw(alg, x) for x in left.terms)


@settings(max_examples=30, deadline=None)
@given(words(TEN), words(TEN))
def test_product_is_associative_with_generator(w1, w2):
    a = normal_order(TEN, {w1: Fraction(1)})
    b = normal_order(TEN, {w2: Fraction(1)})
    x = generator_poly(TEN, "a-")
    assert (a * b) * x == a * (b * x)
