"""Graded polynomials and first-order differential operators.

Variables are kept in a fixed canonical order.  A monomial is a tuple of
exponents in that order; reordering signs are absorbed into coefficients
when monomials are multiplied.  Variables whose grade has odd self-dot
(θ, ψ) square to zero.

Operators are dicts ``(derivs, monomial) -> coefficient`` meaning
``coefficient * monomial * ∂_{derivs[0]} ∂_{derivs[1]} ...``, coefficient on
the left.  Derivatives carry the grade of their variable and obey the graded
Leibniz rule ``∂v(u w) = ∂v(u) w + (-1)^(v.u) u ∂v(w)``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..algebra import G00, G01, G10, G11, Grading
from ..enveloping import LinearForm


class NonRealizationError(ValueError):
    """A bracket of first-order operators left second-order terms behind."""


class OperatorParseError(ValueError):
    pass


_ALIASES = {"θ": "theta", "ψ": "psi", "r̃": "rt", "rtilde": "rt"}


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, ...]
    grades: tuple[Grading, ...]
    # variables that can be differentiated; the rest are formal parameters
    coordinates: tuple[str, ...]

    def index(self, name: str) -> int:
        name = _ALIASES.get(name, name)
        try:
            return self.names.index(name)
        except ValueError:
            raise OperatorParseError(f"unknown variable {name!r}") from None

    def is_odd(self, k: int) -> bool:
        return bool(self.grades[k].dot(self.grades[k]))

    def one(self) -> tuple[int, ...]:
        return (0,) * len(self.names)

    def var(self, name: str) -> tuple[int, ...]:
        m = [0] * len(self.names)
        m[self.index(name)] = 1
        return tuple(m)

    def grade(self, mono: Sequence[int]) -> Grading:
        g = G00
        for e, gr in zip(mono, self.grades):
            if e % 2:
                g = g + gr
        return g

    def coordinate_indices(self) -> list[int]:
        return [self.index(n) for n in self.coordinates]

    def render_mono(self, mono: Sequence[int]) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


# x < z < θ < ψ < r < r̃ ; r is grade (0,0) so its slot is sign-neutral
TEN_VARS = VariableSet(("x", "z", "theta", "psi", "r", "rt"),
                       (G00, G11, G01, G10, G00, G11),
                       ("x", "z", "theta", "psi"))
EIGHT_VARS = VariableSet(("z", "theta", "psi", "r", "rt"),
                         (G00, G01, G10, G00, G11),
                         ("z", "theta", "psi"))


def mono_mul(vs: VariableSet, m1: Sequence[int], m2: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Product of two monomials as (sign, monomial), or None if it vanishes."""
    out = []
    for k, (a, b) in enumerate(zip(m1, m2)):
        if vs.is_odd(k) and a + b > 1:
            return None
        out.append(a + b)
    parity = 0
    n = len(m1)
    for i in range(n):
        if not m1[i]:
            continue
        for j in range(i):
            if m2[j]:
                parity += vs.grades[i].dot(vs.grades[j]) * m1[i] * m2[j]
    return (-1 if parity % 2 else 1), tuple(out)


def mono_derivative(vs: VariableSet, k: int, mono: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    e = mono[k]
    if not e:
        return None
    gv = vs.grades[k]
    parity = sum(mono[i] * gv.dot(vs.grades[i]) for i in range(k))
    factor = 1 if vs.is_odd(k) else e
    out = list(mono)
    out[k] -= 1
    return (-factor if parity % 2 else factor), tuple(out)


def _acc(target: dict, key, c) -> None:
    s = target.get(key)
    s = c if s is None else s + c
    if s:
        target[key] = s
    else:
        target.pop(key, None)


class Poly:
    """Graded polynomial: monomial -> coefficient."""

    __slots__ = ("vs", "terms")

    def __init__(self, vs: VariableSet, terms: Mapping | None = None):
        self.vs = vs
        self.terms = {}
        for m, c in (terms or {}).items():
            if c:
                self.terms[tuple(m)] = c

    @classmethod
    def monomial(cls, vs: VariableSet, mono: Sequence[int], c=Fraction(1)) -> Poly:
        return cls(vs, {tuple(mono): c})

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return Poly(self.vs, out)

    def __sub__(self, other: Poly) -> Poly:
        return self + other.scale(-1)

    def scale(self, c) -> Poly:
        return Poly(self.vs, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: Poly) -> Poly:
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                r = mono_mul(self.vs, m1, m2)
                if r:
                    _acc(out, r[1], c1 * c2 * r[0])
        return Poly(self.vs, out)

    def derivative(self, name: str | int) -> Poly:
        k = name if isinstance(name, int) else self.vs.index(name)
        out: dict = {}
        for m, c in self.terms.items():
            r = mono_derivative(self.vs, k, m)
            if r:
                _acc(out, r[1], c * r[0])
        return Poly(self.vs, out)

    def is_zero(self) -> bool:
        return not self.terms

    def depends_only_on(self, names: Iterable[str]) -> bool:
        allowed = {self.vs.index(n) for n in names}
        return all(k in allowed for m in self.terms for k, e in enumerate(m) if e)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.vs.render_mono(m)}"
                          for m, c in sorted(self.terms.items(), reverse=True))


def _insert_derivative(vs: VariableSet, v: int, derivs: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    # ∂v ∂w = (-1)^(v.w) ∂w ∂v; keep derivs sorted ascending
    parity = 0
    pos = 0
    for pos, w in enumerate(derivs):
        if w == v and vs.is_odd(v):
            return None
        if w >= v:
            break
        parity += vs.grades[v].dot(vs.grades[w])
    else:
        pos = len(derivs)
    return (-1 if parity % 2 else 1), derivs[:pos] + (v,) + derivs[pos:]


class Operator:
    """Differential operator with graded-polynomial coefficients."""

    __slots__ = ("vs", "terms")

    def __init__(self, vs: VariableSet, terms: Mapping | None = None):
        self.vs = vs
        self.terms = {}
        for (d, m), c in (terms or {}).items():
            if c:
                self.terms[(tuple(d), tuple(m))] = c

    @classmethod
    def identity(cls, vs: VariableSet) -> Operator:
        return cls(vs, {((), vs.one()): Fraction(1)})

    @classmethod
    def parse(cls, vs: VariableSet, text: str) -> Operator:
        return parse_operator(vs, text)

    def order(self) -> int:
        return max((len(d) for d, _ in self.terms), default=0)

    def grades(self) -> set[Grading]:
        out = set()
        for d, m in self.terms:
            g = self.vs.grade(m)
            for k in d:
                g = g + self.vs.grades[k]
            out.add(g)
        return out

    def grade(self) -> Grading:
        gs = self.grades()
        if len(gs) > 1:
            raise ValueError(f"operator is not homogeneous: grades {sorted(gs)}")
        return gs.pop() if gs else G00

    def __eq__(self, other) -> bool:
        return isinstance(other, Operator) and self.terms == other.terms

    def __add__(self, other: Operator) -> Operator:
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return Operator(self.vs, out)

    def __sub__(self, other: Operator) -> Operator:
        return self + other.scale(-1)

    def scale(self, c) -> Operator:
        return Operator(self.vs, {k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def unknowns(self) -> set[str]:
        out: set[str] = set()
        for c in self.terms.values():
            if isinstance(c, LinearForm):
                out |= c.unknowns()
        return out

    def substitute(self, values: Mapping[str, Fraction]) -> Operator:
        return Operator(self.vs, {k: (c.substitute(values) if isinstance(c, LinearForm) else c)
                                  for k, c in self.terms.items()})

    def apply(self, p: Poly) -> Poly:
        out = Poly(self.vs)
        for (d, m), c in self.terms.items():
            q = p
            for k in reversed(d):
                q = q.derivative(k)
                if q.is_zero():
                    break
            if q.is_zero():
                continue
            out = out + (Poly.monomial(self.vs, m, c) * q)
        return out

    def compose(self, other: Operator) -> Operator:
        """self ∘ other; self must be at most first order."""
        if self.order() > 1:
            raise NotImplementedError("left factor of a composition must be first order")
        vs = self.vs
        out: dict = {}
        for (d1, m1), c1 in self.terms.items():
            for (d2, m2), c2 in other.terms.items():
                c = c1 * c2
                if not d1:
                    r = mono_mul(vs, m1, m2)
                    if r:
                        _acc(out, (d2, r[1]), c * r[0])
                    continue
                v = d1[0]
                # ∂v(m2) d2
                dm = mono_derivative(vs, v, m2)
                if dm:
                    r = mono_mul(vs, m1, dm[1])
                    if r:
                        _acc(out, (d2, r[1]), c * dm[0] * r[0])
                # (-1)^(v.m2) m2 ∂v d2
                ins = _insert_derivative(vs, v, d2)
                if ins:
                    r = mono_mul(vs, m1, m2)
                    if r:
                        s = -1 if vs.grades[v].dot(vs.grade(m2)) else 1
                        _acc(out, (ins[1], r[1]), c * s * ins[0] * r[0])
        return Operator(vs, out)

    __matmul__ = compose

    def higher_order_part(self) -> Operator:
        return Operator(self.vs, {k: c for k, c in self.terms.items() if len(k[0]) > 1})

    def derivative_part(self) -> Operator:
        return Operator(self.vs, {k: c for k, c in self.terms.items() if k[0]})

    def __str__(self) -> str:
        return render_operator(self)

    def __repr__(self) -> str:
        return f"Operator({self})"


def raw_bracket(a: Operator, b: Operator, dot: int | None = None) -> Operator:
    if dot is None:
        dot = a.grade().dot(b.grade())
    ab, ba = a @ b, b @ a
    return ab + ba if dot else ab - ba


def operator_bracket(a: Operator, b: Operator) -> Operator:
    """Graded bracket a∘b - (-1)^(a.b) b∘a, which must be first order."""
    out = raw_bracket(a, b)
    if not out.higher_order_part().is_zero():
        raise NonRealizationError(
            f"bracket leaves second-order terms: {out.higher_order_part()}")
    return out


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return f"({c})"


def render_operator(op: Operator) -> str:
    if not op.terms:
        return "0"
    vs = op.vs
    parts = []
    for (d, m), c in sorted(op.terms.items(), key=lambda t: (len(t[0][0]), t[0][0], t[0][1])):
        factors = []
        if m != vs.one():
            factors.append(vs.render_mono(m))
        factors.extend(f"d{vs.names[k]}" for k in d)
        body = "*".join(factors) or "1"
        parts.append(f"{_fmt_coeff(c)}*{body}")
    return " + ".join(parts).replace("+ -", "- ")


_TOKEN = re.compile(r"\s*([+-]|\d+(?:/\d+)?|[A-Za-zθψ̃_]+)")


def parse_operator(vs: VariableSet, text: str) -> Operator:
    """Parse e.g. ``"2 theta r - 2 psi rt + x dtheta - 4 z theta dz"``.

    Factors are multiplied left to right with graded signs, so the written
    order matters.  A derivative ``d<var>`` must end its term.
    """
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise OperatorParseError(f"cannot parse {text[pos:]!r}")
        tokens.append(mt.group(1))
        pos = mt.end()
    out = Operator(vs)
    sgn = 1
    coeff = Fraction(1)
    poly = Poly.monomial(vs, vs.one())
    deriv: int | None = None
    started = False

    def flush():
        nonlocal out
        if not started:
            return
        d = () if deriv is None else (deriv,)
        for m, c in poly.terms.items():
            out = out + Operator(vs, {(d, m): c * coeff * sgn})

    for tok in tokens:
        if tok in "+-":
            flush()
            sgn = -1 if tok == "-" else 1
            coeff, poly, deriv, started = Fraction(1), Poly.monomial(vs, vs.one()), None, False
            continue
        if deriv is not None:
            raise OperatorParseError(f"factor {tok!r} after derivative in {text!r}")
        started = True
        if tok[0].isdigit():
            coeff *= Fraction(tok)
        elif tok.startswith("d") and _ALIASES.get(tok[1:], tok[1:]) in vs.coordinates:
            deriv = vs.index(tok[1:])
        else:
            poly = poly * Poly.monomial(vs, vs.var(tok))
    flush()
    return out


def probe_monomials(vs: VariableSet, max_degree: int) -> list[tuple[int, ...]]:
    """All coordinate monomials (no parameters) of total degree <= max_degree."""
    coords = vs.coordinate_indices()
    out = []
    ranges = [range(2) if vs.is_odd(k) else range(max_degree + 1) for k in coords]
    for exps in itertools.product(*ranges):
        if sum(exps) <= max_degree:
            m = [0] * len(vs.names)
            for k, e in zip(coords, exps):
                m[k] = e
            out.append(tuple(m))
    return sorted(out)
