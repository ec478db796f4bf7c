"""Graded polynomial algebra, first-order differential operators and realizations."""
from .graded import (EIGHT_VARS, TEN_VARS, NonRealizationError, Operator, OperatorParseError,
                     Poly, VariableSet, operator_bracket, parse_operator, render_operator)
from .realizations import EQUALS_UNKNOWN, reference_realization, variables
from .verify import (NoRealizationError, RealizationReport, RepairResult, auto_repair,
                     check_casimir, highest_weight_probe, repair_realization,
                     template_with_unknown, verify_realization)
