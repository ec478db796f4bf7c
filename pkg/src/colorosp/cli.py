"""Command-line entry point.

Every command prints one canonical JSON run report (sorted keys, no
timestamps) and exits 0 when all checks pass, 1 when a check fails and 2 on a
usage or input-schema error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import GradedAlgebra, Grading, SchemaError, preset, validate_algebra
from .enveloping import graded_commutator, solve_casimir
from .latex import RenderingGuardError, emit_latex
from .representations.core import Representation, build_rep_ten, embedded_rep, preset_algebra
from .representations.verify import compare, verify_rep


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict
    checks: list = field(default_factory=list)
    artifacts: list = field(default_factory=list)
    result: dict = field(default_factory=dict)

    def check(self, name: str, ok: bool, detail="") -> None:
        self.checks.append({"name": name, "status": "pass" if ok else "fail", "detail": detail})

    @property
    def exit_code(self) -> int:
        if any(c["status"] == "usage" for c in self.checks):
            return 2
        return 0 if all(c["status"] == "pass" for c in self.checks) else 1

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "checks": self.checks,
                "artifacts": self.artifacts, "result": self.result,
                "exit_code": self.exit_code}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="colorosp", description=__doc__.splitlines()[0])
    p.add_argument("--report", help="also write the run report to this file")
    sub = p.add_subparsers(dest="group", required=True)

    alg = sub.add_parser("algebra").add_subparsers(dest="action", required=True)
    chk = alg.add_parser("check", help="exhaustive graded Jacobi check")
    src = chk.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=["ten", "eight", "gl"])
    src.add_argument("--input", help="algebra JSON file")
    chk.add_argument("--dims", type=_ints, help="m1,m2,n1,n2 for --preset gl")

    cas = sub.add_parser("casimir").add_subparsers(dest="action", required=True)
    solve = cas.add_parser("solve", help="quadratic Casimirs of one sector")
    solve.add_argument("--preset", choices=["ten", "eight", "gl"], required=True)
    solve.add_argument("--dims", type=_ints)
    solve.add_argument("--sector", type=_ints, required=True)
    solve.add_argument("--degree", type=int, default=2)
    solve.add_argument("--ordinary", action="store_true",
                       help="use the plain commutator instead of the graded bracket")

    rep = sub.add_parser("rep").add_subparsers(dest="action", required=True)
    build = rep.add_parser("build")
    build.add_argument("--preset", choices=["ten", "eight"], required=True)
    build.add_argument("--ell", type=int, required=True)
    build.add_argument("--latex")
    build.add_argument("--json")
    ver = rep.add_parser("verify")
    ver.add_argument("--input", required=True)
    cmp_ = rep.add_parser("compare")
    cmp_.add_argument("--built", action="store_true", required=True)
    cmp_.add_argument("--embedded", action="store_true", required=True)
    cmp_.add_argument("--preset", choices=["ten"], default="ten")

    dr = sub.add_parser("diffreal").add_subparsers(dest="action", required=True)
    dv = dr.add_parser("verify")
    dv.add_argument("--preset", choices=["ten", "eight"], required=True)
    dv.add_argument("--max-degree", type=int, default=4)
    dv.add_argument("--repair", action="store_true")
    dv.add_argument("--equals-as", choices=["+", "-"],
                    help="read the ambiguous L̃+ coefficient with this sign instead of solving for it")
    return p


def _algebra_check(args, report: RunReport) -> None:
    if args.input:
        try:
            alg = GradedAlgebra.loads(Path(args.input).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise SchemaError(f"--input: {exc}") from exc
        report.inputs.update(input=alg.to_json())
    else:
        alg = preset(args.preset, args.dims)
        report.inputs.update(preset=args.preset, dims=args.dims)
    res = validate_algebra(alg)
    report.result = res.to_json()
    report.check("grading", not res.grading_failures, res.grading_failures)
    report.check("antisymmetry", not res.antisymmetry_failures, res.antisymmetry_failures)
    report.check("jacobi", not res.jacobi_failures,
                 f"{res.triples_checked - len(res.jacobi_failures)}/{res.triples_checked} triples")


def _casimir_solve(args, report: RunReport) -> None:
    if len(args.sector) != 2 or any(s not in (0, 1) for s in args.sector):
        raise SchemaError("--sector must be two bits, e.g. 0,0")
    alg = preset(args.preset, args.dims)
    report.inputs.update(preset=args.preset, dims=args.dims, sector=args.sector,
                         degree=args.degree, ordinary=args.ordinary)
    sol = solve_casimir(alg, Grading(*args.sector), args.degree, args.ordinary)
    report.result = sol.to_json()
    bad = [i for i, ray in enumerate(sol.rays)
           if any(not graded_commutator(alg, ray, k, ordinary=args.ordinary).is_zero()
                  for k in range(alg.dim))]
    report.check("rays_central", not bad, {"rays": len(sol.rays), "non_central": bad})


def _verify_into(rep: Representation, report: RunReport) -> None:
    res = verify_rep(rep)
    report.result["verification"] = res.to_json()
    report.check("relations", not res.relation_failures,
                 f"{res.pairs_passed}/{res.pairs_checked} pairs")
    report.check("sector_pattern", not res.sector_failures, res.sector_failures)
    report.check("r_diagonal", not res.diagonal_failures, res.diagonal_failures)
    report.check("complete", not res.missing, res.missing)


def _rep_build(args, report: RunReport) -> None:
    report.inputs.update(preset=args.preset, ell=args.ell)
    if args.preset == "ten":
        if args.ell < 1:
            raise SchemaError("--ell must be a positive integer")
        rep = build_rep_ten(args.ell)
    else:
        if args.ell != 2:
            raise SchemaError("--ell: only ell=2 is available for the eight-generator algebra")
        rep = embedded_rep("eight")
    report.result["dimension"] = rep.dim
    report.result["provenance"] = rep.provenance
    _verify_into(rep, report)
    if args.json:
        Path(args.json).write_text(rep.dumps() + "\n")
        report.artifacts.append(args.json)
    if args.latex:
        Path(args.latex).write_text(emit_latex(rep))
        report.artifacts.append(args.latex)


def _rep_verify(args, report: RunReport) -> None:
    try:
        data = json.loads(Path(args.input).read_text())
        rep = Representation.from_json(data)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise SchemaError(f"--input: {exc}") from exc
    report.inputs.update(input=rep.to_json())
    _verify_into(rep, report)


def _rep_compare(args, report: RunReport) -> None:
    report.inputs.update(preset=args.preset, ell=2)
    built = build_rep_ten(2)
    diffs = compare(built, embedded_rep(args.preset))
    report.result["discrepancies"] = [d.to_json() for d in diffs]
    _verify_into(built, report)
    report.check("entries_match", not diffs, f"{len(diffs)} differing entries")


def _diffreal_verify(args, report: RunReport) -> None:
    from .diffreal import auto_repair, check_casimir, reference_realization, verify_realization
    from .enveloping import casimir_eight_00, casimir_ten_00

    if args.max_degree < 2:
        raise SchemaError("--max-degree must be at least 2")
    if args.equals_as and args.preset != "ten":
        raise SchemaError("--equals-as only applies to --preset ten")
    alg = preset_algebra(args.preset)
    rho = reference_realization(args.preset, args.equals_as)
    report.inputs.update(preset=args.preset, max_degree=args.max_degree,
                         repair=args.repair, equals_as=args.equals_as)
    if args.repair:
        fixed = auto_repair(alg, rho, args.max_degree)
        report.result["repair"] = fixed.to_json()
        report.check("all_pairs_pass", fixed.passed,
                     [a["unknown"] for a in fixed.attempts])
        if fixed.result is not None:
            rho = fixed.result.realization
    else:
        res = verify_realization(alg, rho, args.max_degree)
        report.result["verification"] = res.to_json()
        report.check("all_pairs_pass", res.passed,
                     [p["pair"] for p in res.failures])
    if any(op.unknowns() for op in rho.values()):
        return
    cas = casimir_ten_00(alg) if args.preset == "ten" else casimir_eight_00(alg)
    cc = check_casimir(rho, cas)
    report.result["casimir_operator"] = cc.to_json()
    report.check("casimir_derivative_free", cc.weights_only, cc.to_json()["operator"])


_DISPATCH = {
    ("algebra", "check"): _algebra_check,
    ("casimir", "solve"): _casimir_solve,
    ("rep", "build"): _rep_build,
    ("rep", "verify"): _rep_verify,
    ("rep", "compare"): _rep_compare,
    ("diffreal", "verify"): _diffreal_verify,
}


def run(argv: list[str]) -> RunReport:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        report = RunReport(" ".join(argv[:2]), {"argv": list(argv)})
        report.checks.append({"name": "usage", "status": "usage", "detail": str(exc)})
        return report
    report = RunReport(f"{args.group} {args.action}", {})
    try:
        _DISPATCH[(args.group, args.action)](args, report)
    except (SchemaError, RenderingGuardError, ValueError) as exc:
        report.checks.append({"name": "usage", "status": "usage", "detail": str(exc)})
    if args.report:
        report.artifacts.append(args.report)
        Path(args.report).write_text(report.dumps())
    return report


def main(argv: list[str] | None = None) -> int:
    report = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(report.dumps())
    if report.exit_code == 2:
        detail = next(c["detail"] for c in report.checks if c["status"] == "usage")
        print(f"usage error: {detail}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
