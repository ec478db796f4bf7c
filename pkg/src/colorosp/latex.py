"""LaTeX rendering of representation matrices."""
from __future__ import annotations

from fractions import Fraction

from .radicals import RadicalScalar
from .representations.core import Representation
from .representations.matrix import Matrix

MAX_LATEX_DIM = 64

_GENERATOR_TEX = {
    "L+": "L_{+}", "L-": "L_{-}", "a+": "a_{+}", "a-": "a_{-}",
    "ã+": r"\tilde{a}_{+}", "ã-": r"\tilde{a}_{-}",
    "L̃+": r"\tilde{L}_{+}", "L̃-": r"\tilde{L}_{-}",
    "R": "R", "R̃": r"\tilde{R}",
}


class RenderingGuardError(ValueError):
    """Matrix too large to render sensibly."""


def _rational_tex(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def scalar_tex(x: RadicalScalar) -> str:
    """Exact rendering, e.g. ``-\\sqrt{2}`` or ``\\frac{1}{2}\\sqrt{3}``."""
    if not x:
        return "0"
    out = ""
    for d, q in x.terms.items():
        neg = q < 0
        mag = abs(q)
        if d == 1:
            body = _rational_tex(mag)
        elif mag == 1:
            body = rf"\sqrt{{{d}}}"
        else:
            body = _rational_tex(mag) + rf"\sqrt{{{d}}}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def matrix_tex(m: Matrix) -> str:
    lines = [" & ".join(scalar_tex(v) for v in row) + r" \\" for row in m.rows()]
    if lines:
        lines[-1] = lines[-1][:-3]
    return "\\begin{bmatrix}\n" + "\n".join(lines) + "\n\\end{bmatrix}"


def emit_latex(rep: Representation) -> str:
    if rep.dim > MAX_LATEX_DIM:
        raise RenderingGuardError(f"dimension {rep.dim} exceeds the rendering limit {MAX_LATEX_DIM}")
    blocks = []
    for name in rep.algebra_object().names:
        m = rep.matrices.get(name, Matrix(rep.dim))
        tex = _GENERATOR_TEX.get(name, name)
        blocks.append(f"{tex} =\n{matrix_tex(m)}")
    return "\n\n".join(r"\[" + "\n" + b + "\n" + r"\]" for b in blocks) + "\n"
