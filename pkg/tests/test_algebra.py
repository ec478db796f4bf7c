import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from colorosp.algebra import (G00, G01, G10, G11, SECTORS, EmptyAlgebraError, GradedAlgebra, Grading,
                              SchemaError, jacobi_residual, preset, preset_eight, preset_gl,
                              preset_ten, sign, validate_algebra)

TEN = preset_ten()
EIGHT = preset_eight()


def names(alg, comb):
    return {alg.names[k]: v for k, v in comb.items()}


def test_grading_arithmetic():
    assert G01 + G11 == G10
    assert G11.dot(G11) == 0 and G01.dot(G01) == 1 and G01.dot(G10) == 0
    assert sign(G01, G01) == -1 and sign(G11, G11) == 1
    for a, b, c in itertools.product(SECTORS, repeat=3):
        assert (a + b).dot(c) == (a.dot(c) + b.dot(c)) % 2


def test_bracket_examples():
    assert names(TEN, TEN.bracket("R", "L+")) == {"L+": 2}
    assert names(TEN, TEN.bracket("a+", "ã+")) == {"L̃+": -4}
    assert EIGHT.bracket("a+", "ã+") == {}
    assert names(TEN, TEN.bracket("a+", "a+")) == {"L+": 4}
    assert names(TEN, TEN.bracket("L+", "L-")) == {"R": -1}
    with pytest.raises(SchemaError):
        TEN.bracket("Q", "R")


def test_preset_grades():
    expected = {"R": G00, "L+": G00, "L-": G00, "a+": G01, "a-": G01,
                "ã+": G10, "ã-": G10, "R̃": G11, "L̃+": G11, "L̃-": G11}
    assert {n: TEN.grade(n) for n in TEN.names} == expected
    assert TEN.names == ("L+", "a+", "ã+", "L̃+", "R", "R̃", "L-", "a-", "ã-", "L̃-")
    assert EIGHT.dim == 8 and "L̃+" not in EIGHT.names


def test_adjoint_eigenvalues():
    eig = {n: TEN.adjoint_eigenvalue("R", n) for n in TEN.names}
    assert eig == {"L+": 2, "a+": 1, "ã+": 1, "L̃+": 2, "R": 0, "R̃": 0,
                   "L-": -2, "a-": -1, "ã-": -1, "L̃-": -2}
    # R̃ is not diagonalisable in the adjoint action
    assert TEN.adjoint_eigenvalue("R̃", "L+") is None


@pytest.mark.parametrize("alg,triples", [(TEN, 1000), (EIGHT, 512), (preset_gl(1, 1, 1, 1), 4096)])
def test_presets_satisfy_jacobi(alg, triples):
    rep = validate_algebra(alg)
    assert rep.passed
    assert rep.triples_checked == triples == rep.triples_zero


def test_corrupted_entry_names_the_triple():
    bad = TEN.with_entry("R", "L+", {"L+": 3})
    rep = validate_algebra(bad)
    assert not rep.passed
    assert rep.jacobi_failures
    assert all(len(f["triple"]) == 3 for f in rep.jacobi_failures)
    assert any("R" in f["triple"] and "L+" in f["triple"] for f in rep.jacobi_failures)


def test_grading_violation_reported():
    bad = TEN.with_entry("a+", "a-", {"R̃": 2})
    rep = validate_algebra(bad, stop_at_first=True)
    assert rep.grading_failures and rep.grading_failures[0]["pair"] == ["a+", "a-"]


def test_even_self_bracket_must_vanish():
    bad = TEN.with_entry("R", "R", {"R": 1})
    assert validate_algebra(bad, stop_at_first=True).antisymmetry_failures


def _stored_perturbations(alg):
    out = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            if i == j and not alg.grades[i].dot(alg.grades[i]):
                continue
            for k in range(alg.dim):
                if alg.grades[k] == alg.grades[i] + alg.grades[j]:
                    out.append((i, j, k))
    return out


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_stored_perturbations(TEN)),
       st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool))
def test_any_single_perturbation_breaks_jacobi(ijk, delta):
    i, j, k = ijk
    cur = names(TEN, TEN.bracket_generators(i, j))
    cur[TEN.names[k]] = cur.get(TEN.names[k], 0) + delta
    bad = TEN.with_entry(TEN.names[i], TEN.names[j], cur)
    n = TEN.dim
    assert any(jacobi_residual(bad, a, b, c) for a, b, c in itertools.product(range(n), repeat=3))


@pytest.mark.parametrize("alg", [TEN, EIGHT])
def test_graded_antisymmetry(alg):
    for i, j in itertools.product(range(alg.dim), repeat=2):
        s = sign(alg.grades[i], alg.grades[j])
        lhs = alg.bracket_generators(i, j)
        rhs = {k: -s * v for k, v in alg.bracket_generators(j, i).items()}
        assert lhs == rhs


def test_gl_examples():
    gl = preset_gl(1, 1, 1, 1)
    assert gl.grade("E12") == G11
    assert names(gl, gl.bracket("E12", "E21")) == {"E11": 1, "E22": -1}
    assert names(gl, gl.bracket("E13", "E31")) == {"E11": 1, "E33": 1}
    with pytest.raises(EmptyAlgebraError):
        preset_gl(0, 0, 0, 0)
    assert validate_algebra(preset_gl(2, 0, 1, 0)).passed
    assert preset("gl", [1, 0, 0, 1]).dim == 4
    with pytest.raises(SchemaError):
        preset("gl")


def test_json_round_trip():
    for alg in (TEN, EIGHT, preset_gl(1, 1, 1, 1)):
        again = GradedAlgebra.loads(alg.dumps())
        assert again.names == alg.names and again.grades == alg.grades
        assert again.table == alg.table
    assert json.loads(TEN.dumps()) == json.loads(GradedAlgebra.loads(TEN.dumps()).dumps())


def test_json_schema_errors():
    with pytest.raises(SchemaError):
        GradedAlgebra.from_json({"gens": []})
    data = EIGHT.to_json()
    data["brackets"].append({"left": "R", "right": "nope", "terms": []})
    with pytest.raises(SchemaError):
        GradedAlgebra.from_json(data)


def test_reversed_entry_is_completed_by_antisymmetry():
    data = {"generators": [{"name": "h", "grade": [0, 0]}, {"name": "e", "grade": [0, 0]}],
            "brackets": [{"left": "e", "right": "h", "terms": [{"gen": "e", "coeff": "-2"}]}]}
    alg = GradedAlgebra.from_json(data)
    assert names(alg, alg.bracket("h", "e")) == {"e": 2}
    assert validate_algebra(alg).passed


def test_subalgebra_closure():
    even_and_01 = [n for n in TEN.names if TEN.grade(n) in (G00, G01)]
    even_and_10 = [n for n in TEN.names if TEN.grade(n) in (G00, G10)]
    assert TEN.closes(even_and_01)
    assert TEN.closes(even_and_10)
    assert TEN.closes(["R", "L+", "L-"])
    assert not TEN.closes(["a+", "a-", "ã+", "ã-"])
    assert not TEN.closes(["R", "a+", "a-"])
