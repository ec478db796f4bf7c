"""Exact arithmetic in Q[sqrt(n) : n squarefree].

A :class:`RadicalScalar` is a finite sum ``sum q_d * sqrt(d)`` with rational
``q_d`` and squarefree positive radicands ``d``.  Radicand 1 holds the
rational part.  Values are immutable and canonical, so ``==`` and ``hash``
compare the exact number.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Rational = Fraction

FACTOR_BOUND_ENV = "COLOROSP_FACTOR_BOUND"
DEFAULT_FACTOR_BOUND = 10**6


class UnsupportedDivision(ArithmeticError):
    """Raised when asked to invert zero or a multi-term radical."""


class RadicalDomainError(ValueError):
    """Square root of a negative rational was requested."""


class FactorBoundExceeded(ValueError):
    pass


def factor_bound() -> int:
    value = os.environ.get(FACTOR_BOUND_ENV)
    return int(value) if value else DEFAULT_FACTOR_BOUND


@lru_cache(maxsize=4096)
def _split_square(n: int, bound: int) -> tuple[int, int]:
    # n = g**2 * d with d squarefree, by trial division up to sqrt(n).
    if n <= 0:
        raise ValueError(f"radicand must be positive, got {n}")
    g, d = 1, 1
    p = 2
    while p * p <= n:
        if p > bound:
            raise FactorBoundExceeded(
                f"cannot factor {n}: trial division bound {bound} exceeded")
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        g *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    d *= n
    return g, d


def split_square(n: int) -> tuple[int, int]:
    """Return ``(g, d)`` with ``n == g*g*d`` and ``d`` squarefree."""
    return _split_square(n, factor_bound())


def is_squarefree(n: int) -> bool:
    return n >= 1 and split_square(n)[0] == 1


def _to_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q)
    raise TypeError(f"not an exact rational: {q!r}")


Number = Union[int, Fraction, "RadicalScalar"]


class RadicalScalar:
    """Immutable element of the multi-radical ring over Q."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        canon: dict[int, Fraction] = {}
        for rad, q in (terms or {}).items():
            q = _to_fraction(q)
            if not q:
                continue
            g, d = split_square(rad)
            canon[d] = canon.get(d, Fraction(0)) + q * g
        self._terms = tuple(sorted((d, q) for d, q in canon.items() if q))
        self._hash = None

    @classmethod
    def _raw(cls, items: Iterable[tuple[int, Fraction]]) -> RadicalScalar:
        # items already squarefree, summed and nonzero
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted(items))
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q) -> RadicalScalar:
        q = _to_fraction(q)
        return cls._raw([(1, q)] if q else [])

    @classmethod
    def sqrt(cls, n: int) -> RadicalScalar:
        """``sqrt(n)`` for a non-negative integer ``n``."""
        return sqrt_rational(Fraction(n))

    @classmethod
    def coerce(cls, value: Number) -> RadicalScalar:
        if isinstance(value, RadicalScalar):
            return value
        return cls.rational(value)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 1)

    def rational_part(self) -> Fraction:
        for d, q in self._terms:
            if d == 1:
                return q
        return Fraction(0)

    def radicands(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RadicalScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == RadicalScalar.rational(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __neg__(self) -> RadicalScalar:
        return RadicalScalar._raw((d, -q) for d, q in self._terms)

    def __add__(self, other: Number) -> RadicalScalar:
        if not isinstance(other, RadicalScalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = RadicalScalar.rational(other)
        acc = dict(self._terms)
        for d, q in other._terms:
            s = acc.get(d, 0) + q
            if s:
                acc[d] = s
            else:
                acc.pop(d, None)
        return RadicalScalar._raw(acc.items())

    __radd__ = __add__

    def __sub__(self, other: Number) -> RadicalScalar:
        if not isinstance(other, (RadicalScalar, int, Fraction)):
            return NotImplemented
        return self + (-RadicalScalar.coerce(other))

    def __rsub__(self, other: Number) -> RadicalScalar:
        return RadicalScalar.coerce(other) - self

    def __mul__(self, other: Number) -> RadicalScalar:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return RadicalScalar._raw((d, q * other) for d, q in self._terms)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for d1, q1 in self._terms:
            for d2, q2 in other._terms:
                g, d = _radical_product(d1, d2)
                acc[d] = acc.get(d, 0) + q1 * q2 * g
        return RadicalScalar._raw((d, q) for d, q in acc.items() if q)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> RadicalScalar:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        if isinstance(other, RadicalScalar):
            return self * invert_single_term(other)
        return NotImplemented

    def __pow__(self, n: int) -> RadicalScalar:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"RadicalScalar({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, q in self._terms:
            if d == 1:
                body = str(q)
            elif q == 1:
                body = f"sqrt({d})"
            elif q == -1:
                body = f"-sqrt({d})"
            else:
                body = f"{q}*sqrt({d})"
            parts.append(body)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def to_float(self) -> float:
        """Decimal rendering for human-readable reports only."""
        return sum(float(q) * d**0.5 for d, q in self._terms)

    def to_json(self) -> list[dict[str, int]]:
        return [{"num": q.numerator, "den": q.denominator, "rad": d}
                for d, q in self._terms]

    @classmethod
    def from_json(cls, data) -> RadicalScalar:
        if not isinstance(data, list):
            raise ValueError("radical scalar must be a JSON array of terms")
        terms: dict[int, Fraction] = {}
        for item in data:
            try:
                num, den, rad = int(item["num"]), int(item["den"]), int(item["rad"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"bad radical term {item!r}") from exc
            if den <= 0 or rad <= 0:
                raise ValueError(f"bad radical term {item!r}")
            terms_q = Fraction(num, den)
            g, d = split_square(rad)
            terms[d] = terms.get(d, Fraction(0)) + terms_q * g
        return cls(terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> RadicalScalar:
        return cls.from_json(json.loads(text))


@lru_cache(maxsize=4096)
def _radical_product(d1: int, d2: int) -> tuple[int, int]:
    # sqrt(d1)*sqrt(d2) = g*sqrt(d) for squarefree d1, d2: g = gcd, d = d1*d2/g^2
    from math import gcd
    g = gcd(d1, d2)
    return g, (d1 // g) * (d2 // g)


ZERO = RadicalScalar._raw(())
ONE = RadicalScalar._raw(((1, Fraction(1)),))


def add(a: RadicalScalar, b: RadicalScalar) -> RadicalScalar:
    return a + b


def mul(a: RadicalScalar, b: RadicalScalar) -> RadicalScalar:
    return a * b


def sqrt_rational(q) -> RadicalScalar:
    """Exact square root of a non-negative rational as ``c*sqrt(d)``."""
    q = _to_fraction(q)
    if q < 0:
        raise RadicalDomainError(f"square root of negative rational {q}")
    if not q:
        return ZERO
    # sqrt(a/b) = sqrt(a*b)/b
    n = q.numerator * q.denominator
    g, d = split_square(n)
    return RadicalScalar._raw([(d, Fraction(g, q.denominator))])


def invert_single_term(a: RadicalScalar) -> RadicalScalar:
    terms = a._terms
    if len(terms) != 1:
        raise UnsupportedDivision(
            f"only single-term radicals can be inverted, got {a}")
    d, c = terms[0]
    return RadicalScalar._raw([(d, 1 / (c * d))])
