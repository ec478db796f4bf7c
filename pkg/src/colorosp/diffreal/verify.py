"""Check differential realizations against a bracket table and repair them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..algebra import GradedAlgebra, Grading
from ..enveloping import EnvelopingPolynomial, LinearForm, NonLinearError
from ..linsolve import InconsistentSystem, Indexer, solve_affine
from .graded import (Operator, Poly, VariableSet, probe_monomials, raw_bracket,
                     render_operator)


class NoRealizationError(ValueError):
    """The unknown coefficients admit no consistent solution."""


DEFAULT_MAX_DEGREE = 4


def bracket_residual(alg: GradedAlgebra, rho: Mapping[str, Operator], i: int, j: int) -> Operator:
    """⟦ρ(Xi), ρ(Xj)⟧ - Σ c_k ρ(Xk), kept with any second-order part."""
    a, b = rho[alg.names[i]], rho[alg.names[j]]
    out = raw_bracket(a, b, alg.grades[i].dot(alg.grades[j]))
    for k, c in alg.bracket_generators(i, j).items():
        out = out - rho[alg.names[k]].scale(c)
    return out


def _application_residual(alg, rho, i, j, probes) -> list[str]:
    a, b = rho[alg.names[i]], rho[alg.names[j]]
    s = -1 if alg.grades[i].dot(alg.grades[j]) else 1
    bad = []
    for m in probes:
        p = Poly.monomial(a.vs, m)
        lhs = a.apply(b.apply(p)) - b.apply(a.apply(p)).scale(s)
        for k, c in alg.bracket_generators(i, j).items():
            lhs = lhs - rho[alg.names[k]].apply(p).scale(c)
        if not lhs.is_zero():
            bad.append(a.vs.render_mono(m))
    return bad


@dataclass
class RealizationReport:
    algebra: str
    max_degree: int
    pairs: list = field(default_factory=list)
    grade_failures: list = field(default_factory=list)
    missing: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [p for p in self.pairs if p["status"] != "pass"]

    @property
    def passed(self) -> bool:
        return not (self.failures or self.grade_failures or self.missing)

    def flagged_generators(self) -> list[str]:
        """Generators ordered by how many failing pairs they take part in."""
        counts: dict[str, int] = {}
        order: list[str] = []
        for p in self.failures:
            for n in p["pair"]:
                if n not in counts:
                    order.append(n)
                counts[n] = counts.get(n, 0) + 1
        return sorted(order, key=lambda n: (-counts[n], order.index(n)))

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "pairs_checked": len(self.pairs),
            "pairs_passed": len(self.pairs) - len(self.failures),
            "pairs": self.pairs,
            "grade_failures": self.grade_failures,
            "missing_generators": self.missing,
        }


def verify_realization(alg: GradedAlgebra, rho: Mapping[str, Operator],
                       max_degree: int = DEFAULT_MAX_DEGREE) -> RealizationReport:
    """Compare every generator bracket both canonically and by application."""
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    report = RealizationReport(alg.label or "custom", max_degree)
    report.missing = [n for n in alg.names if n not in rho]
    if report.missing:
        return report
    for name, g in zip(alg.names, alg.grades):
        gs = rho[name].grades()
        if gs and gs != {g}:
            report.grade_failures.append({"generator": name,
                                          "expected": list(g),
                                          "found": sorted(list(x) for x in gs)})
    probes = probe_monomials(next(iter(rho.values())).vs, max_degree)
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            pair = [alg.names[i], alg.names[j]]
            entry = {"pair": pair}
            try:
                res = bracket_residual(alg, rho, i, j)
                app_bad = _application_residual(alg, rho, i, j, probes)
            except NonLinearError:
                # both operands carry unknowns: nothing to judge until solved
                entry.update(status="unresolved", unknowns=sorted(
                    rho[pair[0]].unknowns() | rho[pair[1]].unknowns()))
                report.pairs.append(entry)
                continue
            canonical_ok = res.is_zero()
            entry.update(canonical_match=canonical_ok, application_match=not app_bad)
            if canonical_ok and not app_bad:
                entry["status"] = "pass"
            elif res.unknowns():
                entry.update(status="unresolved", unknowns=sorted(res.unknowns()))
            else:
                entry["status"] = "fail"
            if not canonical_ok:
                entry["residual"] = render_operator(res)
                entry["second_order"] = not res.higher_order_part().is_zero()
            if app_bad:
                entry["failing_probes"] = app_bad[:10]
            report.pairs.append(entry)
    return report


def ansatz_terms(vs: VariableSet, grade: Grading, max_degree: int = 3) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(derivs, monomial) pairs of the given grade for an unknown first-order operator.

    Monomials have total degree <= max_degree with at most one weight
    factor (r or r̃).
    """
    coords = vs.coordinate_indices()
    params = [k for k in range(len(vs.names)) if k not in coords]
    ranges = [range(2) if vs.is_odd(k) else range(max_degree + 1) for k in range(len(vs.names))]
    out = []
    for mono in itertools.product(*ranges):
        if sum(mono) > max_degree or sum(mono[k] for k in params) > 1:
            continue
        for d in [()] + [(k,) for k in coords]:
            g = vs.grade(mono)
            for k in d:
                g = g + vs.grades[k]
            if g == grade:
                out.append((d, tuple(mono)))
    return sorted(out)


def unknown_operator(vs: VariableSet, grade: Grading, prefix: str,
                     max_degree: int = 3) -> Operator:
    terms = {}
    for d, m in ansatz_terms(vs, grade, max_degree):
        label = f"{prefix}[{vs.render_mono(m)}{''.join('*d' + vs.names[k] for k in d)}]"
        terms[(d, m)] = LinearForm.unknown(label)
    return Operator(vs, terms)


@dataclass
class RepairResult:
    realization: dict
    solution: dict            # unknown label -> Fraction (particular solution)
    dimension: int            # dimension of the affine solution space
    equations: int
    deferred_pairs: list      # pairs with unknowns on both sides, checked afterwards
    report: RealizationReport | None = None

    @property
    def unique(self) -> bool:
        return self.dimension == 0

    def to_json(self) -> dict:
        return {
            "unique": self.unique,
            "solution_dimension": self.dimension,
            "equations": self.equations,
            "deferred_pairs": self.deferred_pairs,
            "repaired": {n: render_operator(op) for n, op in sorted(self.realization.items())},
            "coefficients": {k: f"{v.numerator}/{v.denominator}"
                             for k, v in sorted(self.solution.items()) if v},
            "verification": self.report.to_json() if self.report else None,
        }


def repair_realization(alg: GradedAlgebra, template: Mapping[str, Operator],
                       max_degree: int = DEFAULT_MAX_DEGREE) -> RepairResult:
    """Solve "every bracket matches the table" for the template's unknowns.

    Pairs whose operands both carry unknowns give quadratic conditions; they
    are left out of the linear solve and checked on the solved realization.
    """
    idx = Indexer()
    for name in alg.names:
        for u in sorted(template[name].unknowns()):
            idx(u)
    rows, rhs, deferred = [], [], []
    keyed = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            a, b = template[alg.names[i]], template[alg.names[j]]
            if a.unknowns() and b.unknowns() and (i != j or alg.grades[i].dot(alg.grades[i])):
                deferred.append([alg.names[i], alg.names[j]])
                continue
            try:
                res = bracket_residual(alg, template, i, j)
            except NonLinearError:
                deferred.append([alg.names[i], alg.names[j]])
                continue
            for key, c in res.terms.items():
                c = c if isinstance(c, LinearForm) else LinearForm.constant(c)
                keyed.append(((i, j, key), c))
    keyed.sort(key=lambda t: t[0])
    for _, c in keyed:
        rows.append({idx(u): v for u, v in c.coeffs.items() if u != LinearForm.CONST})
        rhs.append(-c.const)
    try:
        sol = solve_affine(rows, rhs, len(idx))
    except InconsistentSystem as exc:
        raise NoRealizationError("no choice of the unknown coefficients closes the brackets") from exc
    values = dict(zip(idx.labels, sol.particular))
    repaired = {n: op.substitute(values) for n, op in template.items()}
    result = RepairResult(repaired, values, sol.dimension, len(rows), deferred)
    if sol.unique:
        result.report = verify_realization(alg, repaired, max_degree)
    return result


def template_with_unknown(alg: GradedAlgebra, rho: Mapping[str, Operator],
                          unknown: Iterable[str], max_degree: int = 3) -> dict[str, Operator]:
    """Replace the named generators by fully unknown operators of their grade."""
    unknown = set(unknown)
    vs = next(iter(rho.values())).vs
    out = dict(rho)
    for name in unknown:
        out[name] = unknown_operator(vs, alg.grade(name), name, max_degree)
    return out


@dataclass
class AutoRepair:
    before: RealizationReport
    attempts: list
    result: RepairResult | None

    @property
    def passed(self) -> bool:
        if self.before.passed:
            return True
        return bool(self.result and self.result.report and self.result.report.passed)

    def to_json(self) -> dict:
        return {
            "before": self.before.to_json(),
            "attempts": self.attempts,
            "result": self.result.to_json() if self.result else None,
            "passed": self.passed,
        }


def auto_repair(alg: GradedAlgebra, rho: Mapping[str, Operator],
                max_degree: int = DEFAULT_MAX_DEGREE, max_set: int = 2) -> AutoRepair:
    """Re-solve flagged generators, smallest suspect sets first."""
    before = verify_realization(alg, rho, max_degree)
    attempts: list = []
    if before.passed:
        return AutoRepair(before, attempts, None)
    if any(op.unknowns() for op in rho.values()):
        entry = {"unknown": sorted({u for op in rho.values() for u in op.unknowns()})}
        try:
            res = repair_realization(alg, rho, max_degree)
        except NoRealizationError:
            entry["status"] = "inconsistent"
            attempts.append(entry)
            return AutoRepair(before, attempts, None)
        entry["solution_dimension"] = res.dimension
        if res.unique and res.report.passed:
            entry["status"] = "repaired"
            attempts.append(entry)
            return AutoRepair(before, attempts, res)
        entry["status"] = "underdetermined" if not res.unique else "fails-after-solve"
        attempts.append(entry)
        if not res.unique:
            return AutoRepair(before, attempts, None)
        rho = res.realization
        flagged = res.report.flagged_generators()
    else:
        flagged = before.flagged_generators()
    for size in range(1, max_set + 1):
        for subset in itertools.combinations(flagged, size):
            tpl = template_with_unknown(alg, rho, subset)
            entry = {"unknown": list(subset)}
            try:
                res = repair_realization(alg, tpl, max_degree)
            except NoRealizationError:
                entry["status"] = "inconsistent"
                attempts.append(entry)
                continue
            entry["solution_dimension"] = res.dimension
            if res.unique and res.report.passed:
                entry["status"] = "repaired"
                attempts.append(entry)
                return AutoRepair(before, attempts, res)
            entry["status"] = "underdetermined" if not res.unique else "fails-after-solve"
            attempts.append(entry)
    return AutoRepair(before, attempts, None)


def casimir_operator(rho: Mapping[str, Operator], casimir: EnvelopingPolynomial) -> Operator:
    """Substitute a realization into an enveloping polynomial (degree <= 2)."""
    names = casimir.alg.names
    vs = next(iter(rho.values())).vs
    out = Operator(vs)
    for word, c in casimir.terms.items():
        if len(word) > 2:
            raise ValueError("only degree <= 2 elements can be substituted")
        op = Operator.identity(vs)
        for k in reversed(word):
            op = rho[names[k]] @ op
        out = out + op.scale(c)
    return out


@dataclass
class CasimirCheck:
    operator: Operator

    @property
    def derivative_free(self) -> bool:
        return self.operator.derivative_part().is_zero()

    @property
    def weights_only(self) -> bool:
        """No derivatives and no dependence on the coordinates."""
        vs = self.operator.vs
        coords = set(vs.coordinate_indices())
        return self.derivative_free and all(
            not any(m[k] for k in coords) for (_, m) in self.operator.terms)

    def to_json(self) -> dict:
        return {"operator": render_operator(self.operator),
                "derivative_free": self.derivative_free,
                "weights_only": self.weights_only}


def check_casimir(rho: Mapping[str, Operator], casimir: EnvelopingPolynomial) -> CasimirCheck:
    return CasimirCheck(casimir_operator(rho, casimir))


def highest_weight_probe(rho: Mapping[str, Operator], names: Iterable[str]) -> dict[str, str]:
    """Image of the constant polynomial 1 under each named generator."""
    vs = next(iter(rho.values())).vs
    one = Poly.monomial(vs, vs.one())
    return {n: str(rho[n].apply(one)) for n in names}
