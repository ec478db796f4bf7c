"""Exact checks on representation matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable

from ..algebra import sign
from ..enveloping import EnvelopingPolynomial
from ..linsolve import nullity
from ..radicals import ONE, ZERO, RadicalScalar, split_square
from .core import Representation
from .matrix import Matrix


class ReducibilityError(ValueError):
    """Casimir did not evaluate to a multiple of the identity."""


@dataclass
class RepReport:
    algebra: str
    ell: int
    dim: int
    pairs_checked: int = 0
    pairs_passed: int = 0
    relation_failures: list = field(default_factory=list)
    sector_failures: list = field(default_factory=list)
    diagonal_failures: list = field(default_factory=list)
    missing: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.relation_failures or self.sector_failures
                    or self.diagonal_failures or self.missing)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra, "ell": self.ell, "dim": self.dim,
            "passed": self.passed,
            "pairs_checked": self.pairs_checked, "pairs_passed": self.pairs_passed,
            "relation_failures": self.relation_failures,
            "sector_failures": self.sector_failures,
            "diagonal_failures": self.diagonal_failures,
            "missing_generators": self.missing,
        }


def matrix_bracket(a: Matrix, b: Matrix, dot: int) -> Matrix:
    ab, ba = a @ b, b @ a
    return ab + ba if dot else ab - ba


def verify_rep(rep: Representation) -> RepReport:
    alg = rep.algebra_object()
    report = RepReport(rep.algebra, rep.ell, rep.dim)
    report.missing = [n for n in alg.names if n not in rep.matrices]
    if report.missing:
        return report
    mats = [rep.matrices[n] for n in alg.names]
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            report.pairs_checked += 1
            gi, gj = alg.grades[i], alg.grades[j]
            lhs = matrix_bracket(mats[i], mats[j], gi.dot(gj))
            rhs = Matrix(rep.dim)
            for k, c in alg.bracket_generators(i, j).items():
                rhs = rhs + mats[k].scale(c)
            diff = lhs - rhs
            if diff.is_zero():
                report.pairs_passed += 1
                continue
            report.relation_failures.append({
                "pair": [alg.names[i], alg.names[j]],
                "expected": alg.render(alg.bracket_generators(i, j)),
                "entries": [{"row": r, "col": c, "residual": v.to_json(),
                             "text": str(v)} for (r, c), v in diff.nonzero()],
            })
    for name, g in zip(alg.names, alg.grades):
        for (r, c), v in rep.matrices[name].nonzero():
            if rep.states[c].sector + g != rep.states[r].sector:
                report.sector_failures.append(
                    {"generator": name, "row": r, "col": c, "value": str(v)})
    R = rep.matrices.get("R")
    if R is not None:
        for i, st in enumerate(rep.states):
            if R[i, i] != st.m:
                report.diagonal_failures.append({"row": i, "col": i, "value": str(R[i, i]),
                                                 "expected": st.m})
        for (r, c), v in R.nonzero():
            if r != c:
                report.diagonal_failures.append({"row": r, "col": c, "value": str(v)})
    return report


def evaluate(rep: Representation, poly: EnvelopingPolynomial) -> Matrix:
    """Substitute the representation matrices into an enveloping polynomial."""
    names = poly.alg.names
    out = Matrix(rep.dim)
    ident = Matrix.identity(rep.dim)
    for word, c in poly.terms.items():
        m = ident
        for k in word:
            m = m @ rep.matrices[names[k]]
        out = out + m.scale(c)
    return out


def casimir_scalar(rep: Representation, casimir: EnvelopingPolynomial):
    """Scalar c with C = c*I for a (0,0) Casimir; the full matrix otherwise."""
    m = evaluate(rep, casimir)
    sector = casimir.sector()
    if sector != (0, 0):
        return m
    c = m.is_scalar()
    if c is None:
        raise ReducibilityError("Casimir is not a multiple of the identity on this representation")
    return c


def _field_basis(mats: Iterable[Matrix]) -> list[int]:
    # squarefree products of every prime seen in a radicand
    primes: set[int] = set()
    for m in mats:
        for v in m.entries.values():
            for d in v.radicands():
                n, p = d, 2
                while n > 1:
                    while n % p == 0:
                        primes.add(p)
                        n //= p
                    p += 1
    basis = [1]
    for p in sorted(primes):
        basis += [b * p for b in basis]
    return sorted(basis)


def commutant_dimension(rep: Representation, even_only: bool = False) -> int:
    """Dimension over the entry field of {M : [M, X] = 0 for all generators X}.

    Unknown entries are expanded over the Q-basis {sqrt(b)} of the field
    generated by the matrix entries; the Q-nullity divided by the field
    degree is the dimension over that field.  With ``even_only`` M is also
    required to preserve every sector (a grade-(0,0) intertwiner).
    """
    n = rep.dim
    mats = [rep.matrices[k] for k in sorted(rep.matrices)]
    basis = _field_basis(mats)
    bpos = {b: i for i, b in enumerate(basis)}
    nb = len(basis)

    def col(i: int, j: int, b: int) -> int:
        return (i * n + j) * nb + bpos[b]

    rows = []
    for X in mats:
        by_row: dict[int, list] = {}
        by_col: dict[int, list] = {}
        for (r, c), v in X.entries.items():
            by_row.setdefault(r, []).append((c, v))
            by_col.setdefault(c, []).append((r, v))
        for i in range(n):
            for j in range(n):
                # (M X - X M)_{ij} = sum_k M_ik X_kj - X_ik M_kj
                eq: dict[tuple[int, int], RadicalScalar] = {}
                for r, v in by_col.get(j, ()):
                    eq[(i, r)] = eq.get((i, r), ZERO) + v
                for c, v in by_row.get(i, ()):
                    eq[(c, j)] = eq.get((c, j), ZERO) - v
                eq = {k: v for k, v in eq.items() if v}
                if not eq:
                    continue
                # split into rational components along sqrt(e)
                comps: dict[int, dict[int, Fraction]] = {}
                for (a, bcol), v in eq.items():
                    for b in basis:
                        for d, q in (v * RadicalScalar({b: 1})).terms.items():
                            comp = comps.setdefault(d, {})
                            k = col(a, bcol, b)
                            comp[k] = comp.get(k, 0) + q
                rows.extend(comps[d] for d in sorted(comps))
    if even_only:
        for i in range(n):
            for j in range(n):
                if rep.states[i].sector != rep.states[j].sector:
                    rows.extend({col(i, j, b): Fraction(1)} for b in basis)
    null = nullity(rows, n * n * nb)
    assert null % nb == 0
    return null // nb


@dataclass
class Discrepancy:
    generator: str
    row: int
    col: int
    expected: RadicalScalar
    found: RadicalScalar

    def to_json(self) -> dict:
        return {"generator": self.generator, "row": self.row, "col": self.col,
                "expected": self.expected.to_json(), "found": self.found.to_json(),
                "text": f"{self.expected} vs {self.found}"}


def compare(reference: Representation, other: Representation) -> list[Discrepancy]:
    """Entry-by-entry differences (expected = reference, found = other)."""
    if reference.dim != other.dim:
        raise ValueError("representations have different dimensions")
    out = []
    names = [n for n in reference.algebra_object().names]
    for name in names:
        a = reference.matrices.get(name, Matrix(reference.dim))
        b = other.matrices.get(name, Matrix(other.dim))
        for k in sorted(set(a.entries) | set(b.entries)):
            if a[k] != b[k]:
                out.append(Discrepancy(name, k[0], k[1], a[k], b[k]))
    return out


def norm_ladder(rep: Representation, n: int) -> RadicalScalar:
    """<l;l| L+^n L-^n |l;l> read off the matrices (top state is index 0)."""
    Lp, Lm = rep.matrices["L+"], rep.matrices["L-"]
    m = Matrix.identity(rep.dim)
    for _ in range(n):
        m = m @ Lp
    for _ in range(n):
        m = m @ Lm
    return m[0, 0]


def norm_formula(ell: int, n: int) -> Fraction:
    return Fraction((-1) ** n * factorial(n) * factorial(ell), factorial(ell - n))


def r_spectrum(rep: Representation) -> dict[int, int]:
    R = rep.matrices["R"]
    counts: dict[int, int] = {}
    for i in range(rep.dim):
        v = R[i, i]
        if not v.is_rational() or v.rational_part().denominator != 1:
            raise ValueError("R eigenvalue is not an integer")
        m = int(v.rational_part())
        counts[m] = counts.get(m, 0) + 1
    return dict(sorted(counts.items()))
