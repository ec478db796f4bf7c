"""Universal enveloping algebra: PBW normal ordering and quadratic Casimirs.

Words are tuples of generator indices.  A word is in PBW form when its
indices are non-decreasing and no self-anticommuting generator (one with
``dot(a, a) == 1``) is repeated.  Normal ordering applies

    X Y -> (-1)^(a.b) Y X + [[X, Y]]      (X after Y in the fixed order)
    X X -> 1/2 [[X, X]]                   (X self-anticommuting)

until every word is in PBW form.  Coefficients may be Fractions or
:class:`LinearForm` values, which lets the Casimir ansatz carry its unknowns
through the rewriting.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import G00, GradedAlgebra, Grading, sign
from .linsolve import nullspace

Word = tuple


class SectorError(ValueError):
    """Polynomial is not homogeneous in the Z2xZ2 grading."""


class NonLinearError(ArithmeticError):
    pass


class LinearForm:
    """Rational linear form ``c0 + sum c_u * u`` in named unknowns."""

    __slots__ = ("coeffs",)
    CONST = ""

    def __init__(self, coeffs: Mapping[str, Fraction] | None = None):
        self.coeffs = {k: Fraction(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def unknown(cls, name: str) -> LinearForm:
        return cls({name: 1})

    @classmethod
    def constant(cls, value) -> LinearForm:
        return cls({cls.CONST: value})

    @property
    def const(self) -> Fraction:
        return self.coeffs.get(self.CONST, Fraction(0))

    def is_constant(self) -> bool:
        return all(k == self.CONST for k in self.coeffs)

    def unknowns(self) -> set[str]:
        return {k for k in self.coeffs if k != self.CONST}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LinearForm.constant(other)
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other) -> LinearForm:
        if isinstance(other, (int, Fraction)):
            other = LinearForm.constant(other)
        if not isinstance(other, LinearForm):
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LinearForm(out)

    __radd__ = __add__

    def __neg__(self) -> LinearForm:
        return LinearForm({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other) -> LinearForm:
        return self + (-other)

    def __rsub__(self, other) -> LinearForm:
        return (-self) + other

    def __mul__(self, other) -> LinearForm:
        if isinstance(other, LinearForm):
            if other.is_constant():
                other = other.const
            elif self.is_constant():
                return other * self.const
            else:
                raise NonLinearError("product of two non-constant linear forms")
        if isinstance(other, (int, Fraction)):
            return LinearForm({k: v * other for k, v in self.coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> LinearForm:
        return self * (Fraction(1) / Fraction(other))

    def substitute(self, values: Mapping[str, Fraction]) -> Fraction:
        return sum((v * (1 if k == self.CONST else values[k])
                    for k, v in self.coeffs.items()), Fraction(0))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{k}" if k else str(v)
                          for k, v in sorted(self.coeffs.items()))


def is_pbw(alg: GradedAlgebra, word: Word) -> bool:
    for x, y in zip(word, word[1:]):
        if x > y:
            return False
        if x == y and alg.grades[x].dot(alg.grades[x]):
            return False
    return True


def word_grade(alg: GradedAlgebra, word: Word) -> Grading:
    g = G00
    for k in word:
        g = g + alg.grades[k]
    return g


def _violation(alg: GradedAlgebra, word: Word, rightmost: bool) -> int | None:
    positions = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
    for i in positions:
        x, y = word[i], word[i + 1]
        if x > y or (x == y and alg.grades[x].dot(alg.grades[x])):
            return i
    return None


def _accumulate(target: dict, word: Word, c) -> None:
    s = target.get(word)
    s = c if s is None else s + c
    if s:
        target[word] = s
    else:
        target.pop(word, None)


def normal_order(alg: GradedAlgebra, poly: Mapping[Word, object],
                 strategy: str = "leftmost") -> EnvelopingPolynomial:
    """Rewrite a word polynomial into PBW form.

    ``strategy`` picks which out-of-order adjacent pair is rewritten first
    ("leftmost" or "rightmost"); the result does not depend on it.
    """
    rightmost = strategy == "rightmost"
    result: dict[Word, object] = {}
    pending: dict[Word, object] = {}
    for w, c in poly.items():
        if c:
            _accumulate(pending, tuple(w), c)
    while pending:
        nxt: dict[Word, object] = {}
        for w, c in pending.items():
            i = _violation(alg, w, rightmost)
            if i is None:
                _accumulate(result, w, c)
                continue
            x, y = w[i], w[i + 1]
            head, tail = w[:i], w[i + 2:]
            if x == y:
                for k, v in alg.bracket_generators(x, x).items():
                    _accumulate(nxt, head + (k,) + tail, c * (v / 2))
                continue
            _accumulate(nxt, head + (y, x) + tail, c * sign(alg.grades[x], alg.grades[y]))
            for k, v in alg.bracket_generators(x, y).items():
                _accumulate(nxt, head + (k,) + tail, c * v)
        pending = nxt
    return EnvelopingPolynomial(alg, result)


@dataclass
class EnvelopingPolynomial:
    alg: GradedAlgebra
    terms: dict  # PBW word -> coefficient

    def __post_init__(self):
        self.terms = {tuple(w): c for w, c in self.terms.items() if c}

    @classmethod
    def from_words(cls, alg: GradedAlgebra, items: Iterable[tuple[object, str]]) -> EnvelopingPolynomial:
        """Build and normal-order from ``(coeff, "X Y ...")`` pairs.

        An empty word string means the unit element.
        """
        poly: dict[Word, object] = {}
        for c, text in items:
            w = tuple(alg.index(n) for n in text.split())
            c = Fraction(c) if isinstance(c, (int, str)) else c
            _accumulate(poly, w, c)
        return normal_order(alg, poly)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnvelopingPolynomial):
            return NotImplemented
        return self.alg.names == other.alg.names and self.terms == other.terms

    def sectors(self) -> set[Grading]:
        return {word_grade(self.alg, w) for w in self.terms}

    def sector(self) -> Grading:
        secs = self.sectors()
        if len(secs) > 1:
            raise SectorError(f"polynomial mixes sectors {sorted(secs)}")
        return secs.pop() if secs else G00

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __add__(self, other: EnvelopingPolynomial) -> EnvelopingPolynomial:
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return EnvelopingPolynomial(self.alg, out)

    def __sub__(self, other: EnvelopingPolynomial) -> EnvelopingPolynomial:
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> EnvelopingPolynomial:
        return EnvelopingPolynomial(self.alg, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: EnvelopingPolynomial) -> EnvelopingPolynomial:
        prod: dict[Word, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _accumulate(prod, w1 + w2, c1 * c2)
        return normal_order(self.alg, prod)

    def coefficient(self, text: str):
        w = tuple(sorted(self.alg.index(n) for n in text.split()))
        return self.terms.get(w, Fraction(0))

    def monomial_label(self, word: Word) -> str:
        return render_word(self.alg, word)

    def sorted_terms(self) -> list[tuple[Word, object]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{render_word(self.alg, w)}"
                          for w, c in self.sorted_terms())


def render_word(alg: GradedAlgebra, word: Word) -> str:
    if not word:
        return "1"
    parts = []
    for k, grp in itertools.groupby(word):
        e = len(list(grp))
        parts.append(alg.names[k] if e == 1 else f"{alg.names[k]}^{e}")
    return " ".join(parts)


def generator_poly(alg: GradedAlgebra, name: str | int) -> EnvelopingPolynomial:
    return EnvelopingPolynomial(alg, {(alg.index(name),): Fraction(1)})


def graded_commutator(alg: GradedAlgebra, p: EnvelopingPolynomial, x: str | int,
                      ordinary: bool = False) -> EnvelopingPolynomial:
    """normal_order(p x - (-1)^(s.g) x p) for homogeneous p of sector s.

    With ``ordinary=True`` the sign is dropped (plain commutator).
    """
    s = p.sector()
    k = alg.index(x)
    sgn = 1 if ordinary else sign(s, alg.grades[k])
    raw: dict[Word, object] = {}
    for w, c in p.terms.items():
        _accumulate(raw, w + (k,), c)
        _accumulate(raw, (k,) + w, c * (-sgn))
    return normal_order(alg, raw)


def pbw_monomials(alg: GradedAlgebra, sector: Grading, max_degree: int,
                  include_constant: bool | None = None) -> list[Word]:
    """All PBW words of length <= max_degree in the given sector."""
    if include_constant is None:
        include_constant = sector == G00
    out: list[Word] = [()] if include_constant and sector == G00 else []
    for d in range(1, max_degree + 1):
        for w in itertools.combinations_with_replacement(range(alg.dim), d):
            if is_pbw(alg, w) and word_grade(alg, w) == sector:
                out.append(w)
    return out


@dataclass
class CasimirSolution:
    algebra: str
    sector: Grading
    definition: str
    monomials: list[Word]
    rays: list[EnvelopingPolynomial]
    trivial_constant: bool
    equations: int
    unknowns: int = field(default=0)

    def to_json(self) -> dict:
        basis = []
        for ray in self.rays:
            basis.append([{"monomial": ray.monomial_label(w),
                           "coeff": f"{c.numerator}/{c.denominator}"}
                          for w, c in ray.sorted_terms()])
        return {
            "algebra": self.algebra,
            "sector": list(self.sector),
            "definition": self.definition,
            "basis": basis,
            "trivial_constant": self.trivial_constant,
            "unknowns": self.unknowns,
            "equations": self.equations,
        }


def _normalise(vec: Sequence[Fraction]) -> list[Fraction]:
    lead = next(v for v in vec if v)
    return [v / lead for v in vec]


def solve_casimir(alg: GradedAlgebra, sector: Grading, degree: int = 2,
                  ordinary: bool = False) -> CasimirSolution:
    """Nullspace of the centrality conditions on the general degree<=2 ansatz.

    Rays are normalised so that the first nonzero coefficient (monomials in
    degree-then-PBW order) is 1.  The constant term, always central, is
    reported through ``trivial_constant`` and never appears in a ray.
    """
    sector = Grading(*sector)
    monos = [w for w in pbw_monomials(alg, sector, degree) if w]
    labels = [f"c{i}" for i in range(len(monos))]
    ansatz = EnvelopingPolynomial(
        alg, {w: LinearForm.unknown(lab) for w, lab in zip(monos, labels)})
    col = {lab: i for i, lab in enumerate(labels)}

    def equations_for(k: int):
        comm = graded_commutator(alg, ansatz, k, ordinary=ordinary)
        return [((len(w), w, k), {col[u]: v for u, v in c.coeffs.items()})
                for w, c in comm.terms.items()]

    eqs = []
    for k in range(alg.dim):
        eqs.extend(equations_for(k))
    eqs.sort(key=lambda e: e[0])
    rows = [row for _, row in eqs]
    basis = nullspace(rows, len(monos))
    rays = []
    for vec in basis:
        vec = _normalise(vec)
        rays.append(EnvelopingPolynomial(alg, {w: v for w, v in zip(monos, vec) if v}))
    return CasimirSolution(
        algebra=alg.label or "custom",
        sector=sector,
        definition="ordinary" if ordinary else "graded",
        monomials=monos,
        rays=rays,
        trivial_constant=sector == G00,
        equations=len(rows),
        unknowns=len(monos),
    )


def casimir_ten_00(alg: GradedAlgebra) -> EnvelopingPolynomial:
    """Quadratic (0,0) Casimir of the ten-generator algebra, first written form."""
    h = Fraction(1, 2)
    return EnvelopingPolynomial.from_words(alg, [
        (1, "R"), (-h, "R R"), (-h, "R̃ R̃"), (2, "L+ L-"), (2, "L̃+ L̃-"),
        (h, "a+ a-"), (h, "ã+ ã-")])


def casimir_ten_00_alt(alg: GradedAlgebra) -> EnvelopingPolynomial:
    """Same Casimir written with lowering operators on the left."""
    h = Fraction(1, 2)
    return EnvelopingPolynomial.from_words(alg, [
        (-1, "R"), (-h, "R R"), (-h, "R̃ R̃"), (2, "L- L+"), (2, "L̃- L̃+"),
        (-h, "a- a+"), (-h, "ã- ã+")])


def casimir_ten_11(alg: GradedAlgebra) -> EnvelopingPolynomial:
    q, h = Fraction(1, 4), Fraction(1, 2)
    return EnvelopingPolynomial.from_words(alg, [
        (1, "L+ L̃-"), (1, "L̃+ L-"), (q, "a+ ã-"), (q, "ã+ a-"),
        (h, "R̃"), (-h, "R R̃")])


def casimir_eight_00(alg: GradedAlgebra, r_coeff=Fraction(0)) -> EnvelopingPolynomial:
    """Eight-generator (0,0) Casimir with alpha=1, beta=0.

    ``r_coeff`` is the coefficient of the linear R term; it is 0 in the
    central element and is exposed only to show that R itself is not central.
    """
    q = Fraction(1, 4)
    items = [(-q, "R R"), (-q, "R̃ R̃"), (1, "L+ L-"), (q, "a+ a-"), (q, "ã+ ã-")]
    if r_coeff:
        items.append((r_coeff, "R"))
    return EnvelopingPolynomial.from_words(alg, items)
