"""Reference first-order differential realizations, kept as untrusted input.

Strings use ``theta``, ``psi``, ``rt`` (the grade-(1,1) weight) and
``d<var>`` for derivatives.  The L̃+ entry of the ten-generator list carries
a stray "=" in front of its ``z x dx`` term.  By default that coefficient is
left as an unknown (``L̃+[=]``) so the verifier flags it and the repair
solver decides it; ``equals_as`` substitutes a sign instead.
"""
from __future__ import annotations

from fractions import Fraction

from ..enveloping import LinearForm
from .graded import EIGHT_VARS, TEN_VARS, Operator, VariableSet

EQUALS_UNKNOWN = "L̃+[=]"

TEN_REFERENCE = {
    "L-": "dx",
    "L̃-": "dz",
    "a-": "dtheta + 2 theta dx",
    "ã-": "dpsi - 2 psi dx + 4 theta dz",
    "R": "r + 2 x dx + 2 z dz + theta dtheta + psi dpsi",
    "R̃": "rt + 2 z dx + 2 x dz + theta dpsi + psi dtheta - 4 psi theta dx",
    "a+": ("2 theta r - 2 psi rt + 2 theta x dx + 2 z psi dx + 2 theta psi dpsi"
           " - z dpsi + x dtheta - 4 z theta dz"),
    "ã+": ("2 psi r - 2 theta rt + 2 z theta dx + 2 psi x dx + z dtheta"
           " - 2 theta psi dtheta - x dpsi - 4 theta x dz"),
    "L+": ("x r + z rt - 2 theta psi rt + x x dx + z z dx - 4 z theta psi dx"
           " + x psi dpsi + x theta dtheta + 2 z x dz + z theta dpsi + z psi dtheta"),
    "L̃+": ("z r + x rt - 2 theta psi r - 4 theta psi x dx"
            " + z theta dtheta + psi x dtheta + z psi dpsi + theta x dpsi"
            " + z z dz + x x dz"),
}

EIGHT_REFERENCE = {
    "a-": "dtheta + 2 theta dz",
    "a+": "z dtheta - 2 psi rt + 2 theta r + 2 theta z dz + 2 theta psi dpsi",
    "R": "r + theta dtheta + psi dpsi + 2 z dz",
    "ã-": "dpsi - 2 psi dz",
    "ã+": "-z dpsi + 2 theta rt + 2 psi r + 2 psi z dz + 2 theta psi dtheta",
    "R̃": "rt + psi dtheta - theta dpsi",
    "L-": "dz",
    "L+": "z r + z z dz + z psi dpsi + z theta dtheta - 2 theta psi rt",
}


def variables(preset: str) -> VariableSet:
    return {"ten": TEN_VARS, "eight": EIGHT_VARS}[preset]


def reference_realization(preset: str, equals_as: str | None = None) -> dict[str, Operator]:
    """Parse the reference list.  ``equals_as`` is None, "+" or "-" (ten only)."""
    table = {"ten": TEN_REFERENCE, "eight": EIGHT_REFERENCE}[preset]
    vs = variables(preset)
    rho = {name: Operator.parse(vs, text) for name, text in table.items()}
    if preset == "ten":
        if equals_as is None:
            c = LinearForm.unknown(EQUALS_UNKNOWN)
        elif equals_as in ("+", "-"):
            c = Fraction(2 if equals_as == "+" else -2)
        else:
            raise ValueError("equals_as must be None, '+' or '-'")
        term = Operator.parse(vs, "z x dx").scale(c)
        rho["L̃+"] = rho["L̃+"] + term
    return rho
