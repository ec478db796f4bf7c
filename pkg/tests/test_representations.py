from fractions import Fraction

import pytest

from colorosp.algebra import G00, G01, G10, G11, preset_eight, preset_ten
from colorosp.enveloping import EnvelopingPolynomial, casimir_eight_00, casimir_ten_00, casimir_ten_11
from colorosp.radicals import ONE, RadicalScalar, sqrt_rational
from colorosp.representations.core import (InvalidState, Representation, StateLabel,
                                           UnsupportedGenerator, act, build_rep_ten, embedded_rep,
                                           ten_states)
from colorosp.representations.matrix import Matrix
from colorosp.representations.verify import (ReducibilityError, casimir_scalar, commutant_dimension,
                                             compare, evaluate, norm_formula, norm_ladder,
                                             r_spectrum, verify_rep)

S = RadicalScalar.sqrt
TEN = preset_ten()
REP2 = build_rep_ten(2)


def test_act_examples():
    top = StateLabel(2, 2, G00)
    assert act("L-", top, 2) == [(S(2), StateLabel(2, 0, G00))]
    assert act("a+", top, 2) == []
    assert act("ã-", StateLabel(1, 1, G01), 2) == [(-S(2), StateLabel(2, 0, G11))]
    with pytest.raises(UnsupportedGenerator):
        act("X", top, 2)
    with pytest.raises(InvalidState):
        act("R", StateLabel(2, 1, G00), 2)


def test_highest_weight_annihilated_by_raising():
    top = StateLabel(3, 3, G00)
    for g in ("L+", "a+", "ã+", "L̃+"):
        assert act(g, top, 3) == []


@pytest.mark.parametrize("ell,sizes", [(1, (2, 1, 1, 2)), (2, (3, 2, 2, 3)), (3, (4, 3, 3, 4))])
def test_state_counts(ell, sizes):
    states = ten_states(ell)
    assert len(states) == 4 * ell + 2
    assert tuple(sum(s.sector == sec for s in states) for sec in (G00, G01, G10, G11)) == sizes
    assert states[0] == StateLabel(ell, ell, G00)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_built_reps_verify(ell):
    rep = build_rep_ten(ell)
    report = verify_rep(rep)
    assert report.passed
    assert report.pairs_checked == report.pairs_passed == 55


def test_build_matches_embedded_entry_for_entry():
    assert compare(REP2, embedded_rep("ten")) == []


def test_embedded_examples():
    ten = embedded_rep("ten")
    assert ten.provenance == "embedded"
    assert ten.matrices["L-"][1, 0] == S(2)
    assert ten.matrices["R̃"][0, 7] == 2 and ten.matrices["R̃"][7, 0] == 2
    eight = embedded_rep("eight")
    assert [eight.matrices["R"][i, i] for i in range(8)] == [2, 0, -2, 1, -1, 1, -1, 0]
    assert verify_rep(eight).passed


def test_injected_sign_flip_is_caught():
    mats = dict(REP2.matrices)
    L = mats["L+"]
    (r, c), v = next(iter(L.nonzero()))
    entries = dict(L.entries)
    entries[(r, c)] = -v
    mats["L+"] = Matrix(L.n, entries)
    bad = Representation("ten", 2, REP2.states, mats)
    report = verify_rep(bad)
    assert not report.passed
    assert ["L+", "L-"] in [f["pair"] for f in report.relation_failures]
    diffs = compare(REP2, bad)
    assert len(diffs) == 1 and diffs[0].generator == "L+"


def test_sector_violation_is_caught():
    mats = dict(REP2.matrices)
    mats["R"] = REP2.matrices["R"] + Matrix(10, {(0, 3): ONE})
    report = verify_rep(Representation("ten", 2, REP2.states, mats))
    assert report.sector_failures and report.diagonal_failures


def test_casimir_scalars():
    # sign resolved by direct evaluation: -l(l+1)
    assert casimir_scalar(REP2, casimir_ten_00(TEN)) == -6
    for ell in (1, 3):
        assert casimir_scalar(build_rep_ten(ell), casimir_ten_00(TEN)) == -ell * (ell + 1)
    eight = embedded_rep("eight")
    assert casimir_scalar(eight, casimir_eight_00(preset_eight())) == -1
    unit = EnvelopingPolynomial.from_words(TEN, [(1, "")])
    assert casimir_scalar(REP2, unit) == 1


def test_non_scalar_casimir_raises():
    with pytest.raises(ReducibilityError):
        casimir_scalar(REP2, EnvelopingPolynomial.from_words(TEN, [(1, "R")]))


def test_casimir_11_matrix():
    m = casimir_scalar(REP2, casimir_ten_11(TEN))
    assert isinstance(m, Matrix) and not m.is_zero()
    # it anticommutes with the odd generators and commutes with the even ones
    for name in TEN.names:
        X = REP2.matrices[name]
        g = TEN.grade(name)
        if g.dot(G11):
            assert (m @ X + X @ m).is_zero()
        else:
            assert (m @ X - X @ m).is_zero()


def test_casimir_matrix_commutes():
    c = evaluate(REP2, casimir_ten_00(TEN))
    for X in REP2.matrices.values():
        assert (c @ X - X @ c).is_zero()


def test_r_squared_matches_rt_squared_on_top_state():
    R, Rt = REP2.matrices["R"], REP2.matrices["R̃"]
    assert (R @ R)[0, 0] == (Rt @ Rt)[0, 0] == 4


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_norm_formula(ell):
    rep = build_rep_ten(ell)
    for n in range(ell + 1):
        assert norm_ladder(rep, n) == norm_formula(ell, n)


@pytest.mark.parametrize("ell", [1, 2, 3, 4, 5])
def test_r_spectrum(ell):
    spec = r_spectrum(build_rep_ten(ell))
    assert max(spec) == -min(spec) == ell
    assert spec[ell] == spec[-ell] == 2
    for m, k in spec.items():
        if abs(m) < ell:
            assert k == 2


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_closed_form_ladders(ell):
    for st in ten_states(ell):
        j = st.j
        m = st.m
        down = Fraction((j + m) * (j - m + 2), 4)
        up = Fraction((j - m) * (j + m + 2), 4)
        want_down = [(sqrt_rational(down), StateLabel(j, m - 2, st.sector))] if down else []
        want_up = [(-sqrt_rational(up), StateLabel(j, m + 2, st.sector))] if up else []
        assert act("L-", st, ell) == want_down
        assert act("L+", st, ell) == want_up


def test_commutants():
    assert commutant_dimension(embedded_rep("eight")) == 1
    assert commutant_dimension(REP2, even_only=True) == 1
    doubled = build_rep_ten(1).direct_sum(build_rep_ten(1))
    assert doubled.dim == 12
    assert commutant_dimension(doubled, even_only=True) == 4
    # the grade-(1,1) Casimir doubles the ordinary commutant of each copy
    assert commutant_dimension(doubled) == 8


def test_ordinary_commutant_of_ten_contains_parity_times_c11():
    assert commutant_dimension(REP2) == 2
    c11 = casimir_scalar(REP2, casimir_ten_11(TEN))
    # +1 on the even sectors (0,0), (1,1); -1 on (0,1), (1,0)
    parity = Matrix(10, {(i, i): RadicalScalar.rational(-1 if s.sector.dot(G11) else 1)
                         for i, s in enumerate(REP2.states)})
    M = parity @ c11
    assert M.is_scalar() is None
    for X in REP2.matrices.values():
        assert (M @ X - X @ M).is_zero()
    # rational eigenvalues +-3: the ungraded module splits into two 5-dim pieces
    assert (M @ M).is_scalar() == 9


def test_json_round_trip():
    again = Representation.loads(REP2.dumps())
    assert compare(REP2, again) == []
    assert again.dumps() == REP2.dumps()
    with pytest.raises(ValueError):
        Representation.from_json({"algebra": "ten"})
