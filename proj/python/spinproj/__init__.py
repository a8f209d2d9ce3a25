"""Exact spin projection operators P_m(S_z) and operator functions f(S_z).

Polynomials are lists of ``fractions.Fraction`` coefficients in ascending
powers. Spin and magnetic quantum numbers are passed as twice their value
(``two_s=1`` is S = 1/2).
"""

from ._core import (
    DivisionByZero,
    alpha,
    eval_on_diagonal,
    eval_on_matrix,
    factorial,
    interpolate,
    lagrange_basis,
    node_polynomial,
    operator_function,
    poly_divmod,
    poly_eval,
    projector_coefficient,
    projector_latex,
    projector_polynomial,
    reduce_power,
    report_json,
    run_suite,
    spin_range,
    sz_operator,
)

__all__ = [
    "DivisionByZero",
    "alpha",
    "eval_on_diagonal",
    "eval_on_matrix",
    "factorial",
    "interpolate",
    "lagrange_basis",
    "node_polynomial",
    "operator_function",
    "poly_divmod",
    "poly_eval",
    "projector_coefficient",
    "projector_latex",
    "projector_polynomial",
    "reduce_power",
    "report_json",
    "run_suite",
    "spin_range",
    "sz_operator",
]
