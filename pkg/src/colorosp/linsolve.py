"""Fraction-free Gaussian elimination over Q on sparse rows.

Rows are dicts ``column -> rational``.  Each row is scaled to a primitive
integer vector before elimination, and eliminations use the cross
multiplication ``a*r - b*p`` followed by division by the row content, so
no fractions appear until back substitution.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Mapping, Sequence


class InconsistentSystem(ValueError):
    pass


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    # leading entry positive keeps the echelon form canonical
    if row and row[min(row)] < 0:
        row = {k: -v for k, v in row.items()}
    return row


def _integer_row(row: Mapping[int, Fraction]) -> dict[int, int]:
    den = 1
    for v in row.values():
        den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    out = {k: int(Fraction(v) * den) for k, v in row.items() if v}
    return _primitive(out)


@dataclass
class Echelon:
    ncols: int
    rows: list[dict[int, int]]   # reduced, one per pivot
    pivots: list[int]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def free(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ncols) if c not in piv]


def row_reduce(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> Echelon:
    """Fully reduced row echelon form with integer rows."""
    pivot_rows: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = _integer_row(raw)
        # pivot rows are fully reduced, so clearing one pivot column never
        # reintroduces another
        for c in [c for c in row if c in pivot_rows]:
            prow = pivot_rows[c]
            a, b = prow[c], row[c]
            new = {k: a * v for k, v in row.items()}
            for k, v in prow.items():
                s = new.get(k, 0) - b * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            row = _primitive(new)
        if not row:
            continue
        c = min(row)
        # back-eliminate column c from existing pivot rows
        for pc, prow in list(pivot_rows.items()):
            b = prow.get(c)
            if not b:
                continue
            a = row[c]
            new = {k: a * v for k, v in prow.items()}
            for k, v in row.items():
                s = new.get(k, 0) - b * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            pivot_rows[pc] = _primitive(new)
        pivot_rows[c] = row
    pivots = sorted(pivot_rows)
    return Echelon(ncols, [pivot_rows[c] for c in pivots], pivots)


def nullspace(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column."""
    ech = row_reduce(rows, ncols)
    basis = []
    for f in ech.free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for c, row in zip(ech.pivots, ech.rows):
            if f in row:
                vec[c] = Fraction(-row[f], row[c])
        basis.append(vec)
    return basis


def nullity(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> int:
    return ncols - row_reduce(rows, ncols).rank


@dataclass
class AffineSolution:
    particular: list[Fraction]
    directions: list[list[Fraction]]

    @property
    def dimension(self) -> int:
        return len(self.directions)

    @property
    def unique(self) -> bool:
        return not self.directions


def solve_affine(rows: Iterable[Mapping[int, Fraction]], rhs: Sequence[Fraction],
                 ncols: int) -> AffineSolution:
    """Solve A x = b; free variables are set to zero in the particular solution."""
    aug = []
    for row, b in zip(rows, rhs):
        r = {k: Fraction(v) for k, v in row.items() if v}
        if b:
            r[ncols] = Fraction(b)
        aug.append(r)
    ech = row_reduce(aug, ncols + 1)
    if ncols in ech.pivots:
        raise InconsistentSystem("linear system has no solution")
    x = [Fraction(0)] * ncols
    for c, row in zip(ech.pivots, ech.rows):
        x[c] = Fraction(row.get(ncols, 0), row[c])
    free = [f for f in ech.free if f != ncols]
    directions = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for c, row in zip(ech.pivots, ech.rows):
            if f in row:
                vec[c] = Fraction(-row[f], row[c])
        directions.append(vec)
    return AffineSolution(x, directions)


class Indexer:
    """Stable mapping from hashable unknown labels to column numbers."""

    def __init__(self, labels: Iterable[Hashable] = ()):
        self.labels: list[Hashable] = []
        self._pos: dict[Hashable, int] = {}
        for lab in labels:
            self(lab)

    def __call__(self, label: Hashable) -> int:
        pos = self._pos.get(label)
        if pos is None:
            pos = self._pos[label] = len(self.labels)
            self.labels.append(label)
        return pos

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label) -> bool:
        return label in self._pos
