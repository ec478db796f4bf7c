"""Highest-weight representations of the ten-generator algebra.

States are written ``|j; m>_sector`` where ``m`` is the R eigenvalue.  For a
highest weight ``l`` in sector (0,0) the even sectors (0,0) and (1,1) carry
``j = l`` and the odd sectors (0,1), (1,0) carry ``j = l - 1``.

The lowering/raising actions of L±, a± and ã± are the closed ladder
formulas; R is diagonal; R̃ and L̃± are obtained from the brackets
R̃ = 1/2 [a+, ã-], L̃+ = -1/4 [a+, ã+], L̃- = 1/4 [a-, ã-].
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from ..algebra import G00, G01, G10, G11, SECTORS, GradedAlgebra, Grading, preset_eight, preset_ten
from ..radicals import ONE, ZERO, RadicalScalar, sqrt_rational
from .embedded import embedded_matrices
from .matrix import Matrix


class UnsupportedGenerator(ValueError):
    pass


class InvalidState(ValueError):
    pass


@dataclass(frozen=True, order=True)
class StateLabel:
    j: int
    m: int
    sector: Grading

    def __str__(self) -> str:
        return f"|{self.j};{self.m}>{self.sector}"

    def to_json(self) -> dict:
        return {"j": self.j, "m": self.m, "sector": list(self.sector)}

    @classmethod
    def from_json(cls, data) -> StateLabel:
        return cls(int(data["j"]), int(data["m"]), Grading.parse(data["sector"]))


def _even(sector: Grading) -> bool:
    return sector in (G00, G11)


def valid_state(state: StateLabel, ell: int) -> bool:
    j = ell if _even(state.sector) else ell - 1
    return (state.j == j and j >= 0 and abs(state.m) <= j
            and (state.m - j) % 2 == 0)


def ten_states(ell: int) -> list[StateLabel]:
    """Frozen basis order: (0,0), (0,1), (1,0), (1,1), each by descending m."""
    out = []
    for sec in SECTORS:
        j = ell if _even(sec) else ell - 1
        out.extend(StateLabel(j, m, sec) for m in range(j, -j - 1, -2))
    return out


def _root(q) -> RadicalScalar:
    return sqrt_rational(Fraction(q))


# Ladder table: (generator, source sector) -> (coefficient(l, n), dm, target sector).
# n counts steps down from the top of the source sector.
_LADDER = {
    ("L-", G00): (lambda l, n: _root((l - n) * (n + 1)), -2, G00),
    ("L+", G00): (lambda l, n: -_root((l - n + 1) * n), 2, G00),
    ("a-", G00): (lambda l, n: _root(2 * (l - n)), -1, G01),
    ("a+", G00): (lambda l, n: -_root(2 * n), 1, G01),
    ("ã-", G00): (lambda l, n: _root(2 * (l - n)), -1, G10),
    ("ã+", G00): (lambda l, n: _root(2 * n), 1, G10),

    ("L-", G01): (lambda l, n: _root((n + 1) * (l - 1 - n)), -2, G01),
    ("L+", G01): (lambda l, n: -_root(n * (l - n)), 2, G01),
    ("a-", G01): (lambda l, n: _root(2 * (n + 1)), -1, G00),
    ("a+", G01): (lambda l, n: _root(2 * (l - n)), 1, G00),
    ("ã-", G01): (lambda l, n: -_root(2 * (n + 1)), -1, G11),
    ("ã+", G01): (lambda l, n: _root(2 * (l - n)), 1, G11),

    ("L-", G10): (lambda l, n: _root((n + 1) * (l - 1 - n)), -2, G10),
    ("L+", G10): (lambda l, n: -_root(n * (l - n)), 2, G10),
    ("a-", G10): (lambda l, n: _root(2 * (n + 1)), -1, G11),
    ("a+", G10): (lambda l, n: _root(2 * (l - n)), 1, G11),
    ("ã-", G10): (lambda l, n: -_root(2 * (n + 1)), -1, G00),
    ("ã+", G10): (lambda l, n: _root(2 * (l - n)), 1, G00),

    ("L-", G11): (lambda l, n: _root((l - n) * (n + 1)), -2, G11),
    ("L+", G11): (lambda l, n: -_root((l - n + 1) * n), 2, G11),
    ("a-", G11): (lambda l, n: _root(2 * (l - n)), -1, G10),
    ("a+", G11): (lambda l, n: -_root(2 * n), 1, G10),
    ("ã-", G11): (lambda l, n: _root(2 * (l - n)), -1, G01),
    ("ã+", G11): (lambda l, n: _root(2 * n), 1, G01),
}

# derived generators as brackets [[X, Y]] with a scale factor
_DERIVED = {
    "R̃": (Fraction(1, 2), "a+", "ã-"),
    "L̃+": (Fraction(-1, 4), "a+", "ã+"),
    "L̃-": (Fraction(1, 4), "a-", "ã-"),
}

TEN_GENERATORS = ("L+", "a+", "ã+", "L̃+", "R", "R̃", "L-", "a-", "ã-", "L̃-")

Vector = dict  # StateLabel -> RadicalScalar


def _ladder(gen: str, state: StateLabel, ell: int) -> list[tuple[RadicalScalar, StateLabel]]:
    coef_fn, dm, target_sector = _LADDER[(gen, state.sector)]
    j = ell if _even(state.sector) else ell - 1
    n = (j - state.m) // 2
    # a negative radicand can only come from an out-of-range n; treat as zero
    try:
        coef = coef_fn(ell, n)
    except ValueError:
        return []
    target = StateLabel(ell if _even(target_sector) else ell - 1, state.m + dm, target_sector)
    if not coef or not valid_state(target, ell):
        return []
    return [(coef, target)]


def _apply(gen: str, vec: Mapping[StateLabel, RadicalScalar], ell: int) -> Vector:
    out: Vector = {}
    for st, c in vec.items():
        for coef, tgt in act(gen, st, ell):
            s = out.get(tgt, ZERO) + c * coef
            if s:
                out[tgt] = s
            else:
                out.pop(tgt, None)
    return out


def act(gen: str, state: StateLabel, ell: int) -> list[tuple[RadicalScalar, StateLabel]]:
    """Action of a ten-generator basis element on a basis state.

    Returns the nonzero ``(coefficient, target)`` terms; terms that fall off
    the ladder are dropped.
    """
    if gen not in TEN_GENERATORS:
        raise UnsupportedGenerator(f"{gen!r} is not a ten-generator basis element")
    if not valid_state(state, ell):
        raise InvalidState(f"{state} is not a state of the l={ell} representation")
    if gen == "R":
        return [(RadicalScalar.rational(state.m), state)] if state.m else []
    if gen in _DERIVED:
        scale, x, y = _DERIVED[gen]
        start = {state: ONE}
        xy = _apply(x, _apply(y, start, ell), ell)
        yx = _apply(y, _apply(x, start, ell), ell)
        # x, y are (0,1) and (1,0): dot = 0, so the bracket is a commutator
        out = []
        for tgt in sorted(set(xy) | set(yx)):
            c = (xy.get(tgt, ZERO) - yx.get(tgt, ZERO)) * scale
            if c:
                out.append((c, tgt))
        return out
    return _ladder(gen, state, ell)


@dataclass
class Representation:
    algebra: str
    ell: int
    states: list[StateLabel]
    matrices: dict[str, Matrix]
    provenance: str = "built"
    notes: list[str] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.states)

    def algebra_object(self) -> GradedAlgebra:
        return preset_algebra(self.algebra)

    def to_json(self) -> dict:
        alg = self.algebra_object()
        return {
            "algebra": self.algebra,
            "ell": self.ell,
            "states": [s.to_json() for s in self.states],
            "matrices": {name: self.matrices[name].to_json()
                         for name in alg.names if name in self.matrices},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, data, provenance: str = "user-supplied") -> Representation:
        try:
            algebra = data["algebra"]
            if algebra not in ("ten", "eight"):
                raise ValueError(f"unknown algebra {algebra!r}")
            states = [StateLabel.from_json(s) for s in data["states"]]
            mats = {str(k): Matrix.from_json(v) for k, v in data["matrices"].items()}
            ell = int(data["ell"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad representation JSON: missing or malformed {exc}") from exc
        for name, m in mats.items():
            if m.n != len(states):
                raise ValueError(f"matrix {name} is {m.n}x{m.n}, expected {len(states)}")
        return cls(algebra, ell, states, mats, provenance)

    @classmethod
    def loads(cls, text: str) -> Representation:
        return cls.from_json(json.loads(text))

    def direct_sum(self, other: Representation) -> Representation:
        mats = {k: self.matrices[k].direct_sum(other.matrices[k]) for k in self.matrices}
        return Representation(self.algebra, self.ell, self.states + other.states,
                              mats, "built", ["direct sum"])


def preset_algebra(name: str) -> GradedAlgebra:
    if name == "ten":
        return preset_ten()
    if name == "eight":
        return preset_eight()
    raise ValueError(f"unknown algebra {name!r}")


def build_rep_ten(ell: int) -> Representation:
    """The (4l+2)-dimensional representation with highest weight l in (0,0)."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    states = ten_states(ell)
    pos = {s: i for i, s in enumerate(states)}
    mats = {}
    for gen in TEN_GENERATORS:
        entries = {}
        for col, st in enumerate(states):
            for coef, tgt in act(gen, st, ell):
                entries[(pos[tgt], col)] = coef
        mats[gen] = Matrix(len(states), entries)
    return Representation("ten", ell, states, mats, "built")


EIGHT_STATES = [
    StateLabel(2, 2, G00), StateLabel(2, 0, G00), StateLabel(2, -2, G00),
    StateLabel(1, 1, G01), StateLabel(1, -1, G01),
    StateLabel(1, 1, G10), StateLabel(1, -1, G10),
    StateLabel(0, 0, G11),
]


def embedded_rep(version: str) -> Representation:
    mats = embedded_matrices(version)
    states = ten_states(2) if version == "ten" else list(EIGHT_STATES)
    return Representation(version, 2, states, mats, "embedded")
