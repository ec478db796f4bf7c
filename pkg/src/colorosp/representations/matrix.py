"""Sparse square matrices over RadicalScalar."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from ..radicals import ONE, ZERO, RadicalScalar


class Matrix:
    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Mapping[tuple[int, int], object] | None = None):
        self.n = n
        self.entries: dict[tuple[int, int], RadicalScalar] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"entry {(i, j)} outside {n}x{n}")
            v = RadicalScalar.coerce(v)
            if v:
                self.entries[(i, j)] = v

    @classmethod
    def zeros(cls, n: int) -> Matrix:
        return cls(n)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, {(i, i): ONE for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> Matrix:
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        return cls(n, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    def __getitem__(self, ij: tuple[int, int]) -> RadicalScalar:
        return self.entries.get(ij, ZERO)

    def rows(self) -> list[list[RadicalScalar]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, ZERO) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Matrix._wrap(self.n, out)

    def __neg__(self) -> Matrix:
        return Matrix._wrap(self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        if not c:
            return Matrix(self.n)
        return Matrix._wrap(self.n, {k: v * c for k, v in self.entries.items()})

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        by_row: dict[int, list[tuple[int, RadicalScalar]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], RadicalScalar] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                s = out.get((i, j), ZERO) + a * b
                if s:
                    out[(i, j)] = s
                else:
                    out.pop((i, j), None)
        return Matrix._wrap(self.n, out)

    def is_zero(self) -> bool:
        return not self.entries

    def is_scalar(self) -> RadicalScalar | None:
        """Return c if the matrix equals c*I, else None."""
        diag = self[0, 0] if self.n else ZERO
        for (i, j), v in self.entries.items():
            if i != j or v != diag:
                return None
        if len(self.entries) != (self.n if diag else 0):
            return None
        return diag

    def nonzero(self) -> Iterator[tuple[tuple[int, int], RadicalScalar]]:
        return iter(sorted(self.entries.items()))

    def direct_sum(self, other: Matrix) -> Matrix:
        out = dict(self.entries)
        for (i, j), v in other.entries.items():
            out[(i + self.n, j + self.n)] = v
        return Matrix._wrap(self.n + other.n, out)

    def to_json(self) -> list[list[list[dict[str, int]]]]:
        return [[v.to_json() for v in row] for row in self.rows()]

    @classmethod
    def from_json(cls, data) -> Matrix:
        return cls.from_rows([[RadicalScalar.from_json(v) for v in row] for row in data])

    def __repr__(self) -> str:
        return f"Matrix({self.n}, {len(self.entries)} nonzero)"

    def _check(self, other: Matrix) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch {self.n} vs {other.n}")

    @classmethod
    def _wrap(cls, n: int, entries: dict) -> Matrix:
        m = cls.__new__(cls)
        m.n = n
        m.entries = entries
        return m


def parse_entry(text: str) -> RadicalScalar:
    """Parse a stored entry: '0', '-2', '1/2', 'r2', '-r2', '3r6'."""
    text = text.strip()
    neg = text.startswith("-")
    body = text.lstrip("+-")
    if "r" in body:
        coef, rad = body.split("r")
        val = RadicalScalar({int(rad): Fraction(coef) if coef else Fraction(1)})
    else:
        val = RadicalScalar.rational(Fraction(body))
    return -val if neg else val


def parse_matrix(block: str) -> Matrix:
    rows = [line.split() for line in block.strip().splitlines()]
    return Matrix.from_rows([[parse_entry(t) for t in r] for r in rows])


def combine(terms: Iterable[tuple[object, Matrix]], n: int) -> Matrix:
    out = Matrix(n)
    for c, m in terms:
        out = out + m.scale(c)
    return out
