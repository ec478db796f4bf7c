"""Z2xZ2-graded color Lie (super)algebras given by structure constants.

Generators carry a :class:`Grading`.  The bracket of two generators is a
Rational linear combination of generators, stored once per unordered pair
(in the fixed generator order) and completed by graded antisymmetry::

    [[Y, X]] = -(-1)**(a.b) [[X, Y]]
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence


class SchemaError(ValueError):
    """Malformed algebra description or unknown generator."""


class EmptyAlgebraError(ValueError):
    pass


class Grading(NamedTuple):
    a1: int
    a2: int

    def __add__(self, other: Grading) -> Grading:  # type: ignore[override]
        return Grading((self.a1 + other.a1) % 2, (self.a2 + other.a2) % 2)

    def dot(self, other: Grading) -> int:
        return (self.a1 * other.a1 + self.a2 * other.a2) % 2

    def __str__(self) -> str:
        return f"({self.a1},{self.a2})"

    @classmethod
    def parse(cls, value) -> Grading:
        if isinstance(value, str):
            value = value.strip("() ").split(",")
        a1, a2 = (int(v) for v in value)
        if a1 not in (0, 1) or a2 not in (0, 1):
            raise SchemaError(f"grade components must be bits, got {value!r}")
        return cls(a1, a2)


G00, G01, G10, G11 = Grading(0, 0), Grading(0, 1), Grading(1, 0), Grading(1, 1)
SECTORS = (G00, G01, G10, G11)


def sign(a: Grading, b: Grading) -> int:
    """(-1)**(a.b)"""
    return -1 if a.dot(b) else 1


# A generator combination: generator index -> nonzero Fraction.
Combination = dict


def _clean(comb: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {k: v for k, v in sorted(comb.items()) if v}


@dataclass(frozen=True)
class GradedAlgebra:
    names: tuple[str, ...]
    grades: tuple[Grading, ...]
    # (i, j) with i <= j -> combination
    table: Mapping[tuple[int, int], Mapping[int, Fraction]]
    label: str = ""
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.names) != len(self.grades):
            raise SchemaError("names and grades differ in length")
        if len(set(self.names)) != len(self.names):
            raise SchemaError("duplicate generator names")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})
        table = {}
        for (i, j), comb in self.table.items():
            if not (0 <= i <= j < len(self.names)):
                raise SchemaError(f"table key {(i, j)} not ordered or out of range")
            comb = _clean({k: Fraction(v) for k, v in comb.items()})
            for k in comb:
                if not 0 <= k < len(self.names):
                    raise SchemaError(f"unknown generator index {k}")
            if comb:
                table[(i, j)] = comb
        object.__setattr__(self, "table", table)

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str | int) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.dim:
                raise SchemaError(f"generator index {name} out of range")
            return name
        try:
            return self._index[name]
        except KeyError:
            raise SchemaError(f"unknown generator {name!r}") from None

    def grade(self, name: str | int) -> Grading:
        return self.grades[self.index(name)]

    def generator(self, name: str | int) -> dict[int, Fraction]:
        return {self.index(name): Fraction(1)}

    def combination(self, terms: Mapping[str, object]) -> dict[int, Fraction]:
        return _clean({self.index(n): Fraction(c) for n, c in terms.items()})

    def bracket_generators(self, i: int, j: int) -> dict[int, Fraction]:
        if i <= j:
            return dict(self.table.get((i, j), {}))
        s = -sign(self.grades[i], self.grades[j])
        return {k: s * v for k, v in self.table.get((j, i), {}).items()}

    def bracket(self, x, y) -> dict[int, Fraction]:
        """Bilinear graded bracket of two generator combinations.

        ``x`` and ``y`` may be generator names, indices or mappings
        from either to coefficients.
        """
        x, y = self._as_comb(x), self._as_comb(y)
        out: dict[int, Fraction] = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, v in self.bracket_generators(i, j).items():
                    out[k] = out.get(k, 0) + ci * cj * v
        return _clean(out)

    def _as_comb(self, x) -> dict[int, Fraction]:
        if isinstance(x, (str, int)):
            return self.generator(x)
        return _clean({self.index(k): Fraction(v) for k, v in x.items()})

    def render(self, comb: Mapping[int, Fraction]) -> str:
        if not comb:
            return "0"
        parts = [f"{c}*{self.names[k]}" for k, c in sorted(comb.items())]
        return " + ".join(parts).replace("+ -", "- ")

    def with_entry(self, left: str, right: str, terms: Mapping[str, object]) -> GradedAlgebra:
        """Copy with one bracket replaced; used for fault injection."""
        i, j = self.index(left), self.index(right)
        comb = self.combination(terms)
        if i > j:
            i, j = j, i
            s = -sign(self.grades[i], self.grades[j])
            comb = {k: s * v for k, v in comb.items()}
        table = {k: dict(v) for k, v in self.table.items()}
        table[(i, j)] = comb
        return GradedAlgebra(self.names, self.grades, table, self.label)

    def adjoint_eigenvalue(self, h: str, x: str) -> Fraction | None:
        """Eigenvalue of ad(h) on generator x, or None if x is not an eigenvector."""
        b = self.bracket(h, x)
        ix = self.index(x)
        if not b:
            return Fraction(0)
        if set(b) == {ix}:
            return b[ix]
        return None

    def closes(self, subset: Iterable[str]) -> bool:
        """True if the span of ``subset`` is closed under the bracket."""
        idx = {self.index(n) for n in subset}
        return all(set(self.bracket_generators(i, j)) <= idx
                   for i in idx for j in idx)

    # JSON schema

    def to_json(self) -> dict:
        brackets = []
        for (i, j), comb in sorted(self.table.items()):
            brackets.append({
                "left": self.names[i],
                "right": self.names[j],
                "terms": [{"coeff": _fmt(c), "gen": self.names[k]}
                          for k, c in sorted(comb.items())],
            })
        return {
            "generators": [{"name": n, "grade": [g.a1, g.a2]}
                           for n, g in zip(self.names, self.grades)],
            "brackets": brackets,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, data: Mapping, label: str = "") -> GradedAlgebra:
        try:
            gens = data["generators"]
            names = tuple(str(g["name"]) for g in gens)
            grades = tuple(Grading.parse(g["grade"]) for g in gens)
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad generators field: {exc}") from exc
        index = {n: i for i, n in enumerate(names)}
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for entry in data.get("brackets", []):
            try:
                i, j = index[entry["left"]], index[entry["right"]]
                comb = {}
                for t in entry["terms"]:
                    k = index[t["gen"]]
                    comb[k] = comb.get(k, 0) + Fraction(t["coeff"])
            except KeyError as exc:
                raise SchemaError(f"bracket entry references unknown field/generator {exc}") from exc
            except (TypeError, ValueError) as exc:
                raise SchemaError(f"bad bracket entry {entry!r}") from exc
            if i > j:
                s = -sign(grades[i], grades[j])
                i, j = j, i
                comb = {k: s * v for k, v in comb.items()}
            comb = _clean(comb)
            if (i, j) in table and table[(i, j)] != comb:
                raise SchemaError(
                    f"inconsistent double entry for [[{names[i]}, {names[j]}]]")
            table[(i, j)] = comb
        return cls(names, grades, table, label)

    @classmethod
    def loads(cls, text: str) -> GradedAlgebra:
        return cls.from_json(json.loads(text))


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


# validation

@dataclass
class ValidationReport:
    algebra: str
    grading_failures: list = field(default_factory=list)
    antisymmetry_failures: list = field(default_factory=list)
    jacobi_failures: list = field(default_factory=list)
    triples_checked: int = 0
    triples_zero: int = 0

    @property
    def passed(self) -> bool:
        return not (self.grading_failures or self.antisymmetry_failures
                    or self.jacobi_failures)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "passed": self.passed,
            "triples_checked": self.triples_checked,
            "triples_zero": self.triples_zero,
            "grading_failures": self.grading_failures,
            "antisymmetry_failures": self.antisymmetry_failures,
            "jacobi_failures": self.jacobi_failures,
        }


def jacobi_residual(alg: GradedAlgebra, i: int, j: int, k: int) -> dict[int, Fraction]:
    """[[X,[[Y,Z]]]] - [[[[X,Y]],Z]] - (-1)^(a.b) [[Y,[[X,Z]]]]"""
    X, Y, Z = {i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)}
    s = sign(alg.grades[i], alg.grades[j])
    lhs = alg.bracket(X, alg.bracket(Y, Z))
    t1 = alg.bracket(alg.bracket(X, Y), Z)
    t2 = alg.bracket(Y, alg.bracket(X, Z))
    out = dict(lhs)
    for key, v in t1.items():
        out[key] = out.get(key, 0) - v
    for key, v in t2.items():
        out[key] = out.get(key, 0) - s * v
    return _clean(out)


def validate_algebra(alg: GradedAlgebra, stop_at_first: bool = False) -> ValidationReport:
    rep = ValidationReport(alg.label or "custom")
    names = alg.names
    for (i, j), comb in sorted(alg.table.items()):
        target = alg.grades[i] + alg.grades[j]
        bad = [names[k] for k in comb if alg.grades[k] != target]
        if bad:
            rep.grading_failures.append({
                "pair": [names[i], names[j]], "expected_grade": list(target),
                "offending": bad})
        # a self-bracket that is a commutator must vanish
        if i == j and not alg.grades[i].dot(alg.grades[i]):
            rep.antisymmetry_failures.append({
                "pair": [names[i], names[j]], "bracket": alg.render(comb)})
    if stop_at_first and not rep.passed:
        return rep
    n = alg.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        res = jacobi_residual(alg, i, j, k)
        rep.triples_checked += 1
        if res:
            rep.jacobi_failures.append({
                "triple": [names[i], names[j], names[k]],
                "residual": alg.render(res)})
            if stop_at_first:
                break
        else:
            rep.triples_zero += 1
    return rep


# presets

TEN_ORDER = ("L+", "a+", "ã+", "L̃+", "R", "R̃", "L-", "a-", "ã-", "L̃-")
EIGHT_ORDER = ("L+", "a+", "ã+", "R", "R̃", "L-", "a-", "ã-")

_GRADES = {
    "L+": G00, "L-": G00, "R": G00,
    "a+": G01, "a-": G01,
    "ã+": G10, "ã-": G10,
    "L̃+": G11, "L̃-": G11, "R̃": G11,
}

# (left, right, {gen: coeff}) as listed; orientation is normalised on load.
_TEN_BRACKETS = [
    ("R", "L+", {"L+": 2}), ("R", "L-", {"L-": -2}),
    ("R", "L̃+", {"L̃+": 2}), ("R", "L̃-", {"L̃-": -2}),
    ("R", "a+", {"a+": 1}), ("R", "a-", {"a-": -1}),
    ("R", "ã+", {"ã+": 1}), ("R", "ã-", {"ã-": -1}),
    ("R̃", "L+", {"L̃+": 2}), ("R̃", "L-", {"L̃-": -2}),
    ("R̃", "L̃+", {"L+": 2}), ("R̃", "L̃-", {"L-": -2}),
    ("R̃", "a+", {"ã+": 1}), ("R̃", "a-", {"ã-": 1}),
    ("R̃", "ã+", {"a+": 1}), ("R̃", "ã-", {"a-": 1}),
    ("L+", "L-", {"R": -1}),
    ("L+", "L̃-", {"R̃": -1}), ("L-", "L̃+", {"R̃": 1}),
    ("L̃+", "L̃-", {"R": -1}),
    ("L+", "ã-", {"ã+": 1}), ("L-", "ã+", {"ã-": -1}),
    ("L+", "a-", {"a+": -1}), ("L-", "a+", {"a-": 1}),
    ("L̃+", "a-", {"ã+": -1}), ("L̃-", "a+", {"ã-": -1}),
    ("L̃+", "ã-", {"a+": 1}), ("L̃-", "ã+", {"a-": 1}),
    ("a+", "a-", {"R": 2}),
    ("a+", "ã-", {"R̃": 2}), ("a-", "ã+", {"R̃": -2}),
    ("ã-", "ã+", {"R": 2}),
    ("a+", "ã+", {"L̃+": -4}), ("a-", "ã-", {"L̃-": 4}),
    ("a+", "a+", {"L+": 4}), ("a-", "a-", {"L-": 4}),
    ("ã+", "ã+", {"L+": -4}), ("ã-", "ã-", {"L-": -4}),
]

_EIGHT_BRACKETS = [
    ("R", "L+", {"L+": 2}), ("R", "L-", {"L-": -2}),
    ("L+", "L-", {"R": -1}),
    ("R", "a+", {"a+": 1}), ("R", "a-", {"a-": -1}),
    ("R", "ã+", {"ã+": 1}), ("R", "ã-", {"ã-": -1}),
    ("L+", "a-", {"a+": -1}), ("L-", "a+", {"a-": 1}),
    ("R̃", "a+", {"ã+": 1}), ("R̃", "a-", {"ã-": -1}),
    ("R̃", "ã+", {"a+": -1}), ("R̃", "ã-", {"a-": 1}),
    ("a+", "a-", {"R": 2}),
    ("a+", "ã-", {"R̃": 2}), ("a-", "ã+", {"R̃": 2}),
    ("ã-", "ã+", {"R": 2}),
    ("L+", "ã-", {"ã+": 1}), ("L-", "ã+", {"ã-": -1}),
    ("a+", "a+", {"L+": 4}), ("a-", "a-", {"L-": 4}),
    ("ã+", "ã+", {"L+": -4}), ("ã-", "ã-", {"L-": -4}),
]


def _from_listing(names: Sequence[str], listing, label: str) -> GradedAlgebra:
    data = {
        "generators": [{"name": n, "grade": list(_GRADES[n])} for n in names],
        "brackets": [{"left": l, "right": r,
                      "terms": [{"coeff": str(c), "gen": g} for g, c in terms.items()]}
                     for l, r, terms in listing],
    }
    return GradedAlgebra.from_json(data, label=label)


def preset_ten() -> GradedAlgebra:
    """Ten-generator Z2xZ2-graded osp(1|2)."""
    return _from_listing(TEN_ORDER, _TEN_BRACKETS, "ten")


def preset_eight() -> GradedAlgebra:
    """Eight-generator Z2xZ2-graded osp(1|2) (no L̃±)."""
    return _from_listing(EIGHT_ORDER, _EIGHT_BRACKETS, "eight")


_GL_BLOCKS = (G00, G11, G10, G01)


def gl_graded_index(m1: int, m2: int, n1: int, n2: int) -> list[Grading]:
    out: list[Grading] = []
    for count, g in zip((m1, m2, n1, n2), _GL_BLOCKS):
        if count < 0:
            raise SchemaError("gl dimensions must be non-negative")
        out.extend([g] * count)
    return out


def preset_gl(m1: int, m2: int, n1: int, n2: int) -> GradedAlgebra:
    """gl(m1,m2|n1,n2) on elementary matrices E_ij (1-based names)."""
    d = gl_graded_index(m1, m2, n1, n2)
    N = len(d)
    if N == 0:
        raise EmptyAlgebraError("gl(0,0|0,0) has no generators")
    pairs = [(i, j) for i in range(N) for j in range(N)]
    names = tuple(f"E{i + 1}{j + 1}" if N < 10 else f"E{i + 1},{j + 1}"
                  for i, j in pairs)
    grades = tuple(d[i] + d[j] for i, j in pairs)
    pos = {p: n for n, p in enumerate(pairs)}
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for x, (i, j) in enumerate(pairs):
        for y in range(x, len(pairs)):
            k, l = pairs[y]
            comb: dict[int, Fraction] = {}
            if j == k:
                comb[pos[(i, l)]] = comb.get(pos[(i, l)], 0) + 1
            if i == l:
                s = sign(grades[x], grades[y])
                comb[pos[(k, j)]] = comb.get(pos[(k, j)], 0) - s
            comb = _clean(comb)
            if comb:
                table[(x, y)] = comb
    return GradedAlgebra(names, grades, table, f"gl({m1},{m2}|{n1},{n2})")


def preset(name: str, dims: Sequence[int] | None = None) -> GradedAlgebra:
    if name == "ten":
        return preset_ten()
    if name == "eight":
        return preset_eight()
    if name == "gl":
        if dims is None or len(dims) != 4:
            raise SchemaError("preset gl needs --dims m1,m2,n1,n2")
        return preset_gl(*dims)
    raise SchemaError(f"unknown preset {name!r}")
