"""Exact average kernel sizes, ask zeta coefficients, duals and class numbers.

All results are exact: rationals are returned as fractions.Fraction.
"""

from ._core import (
    BudgetExceeded,
    MRep,
    alternating_hull,
    ask,
    catalog_names,
    class_number,
    closed_form,
    closed_form_names,
    collapsed_power,
    constant_rank,
    direct_sum,
    dual,
    kernel_size,
    make_example,
    run_acceptance,
    zeta_coeffs,
)

__all__ = [
    "BudgetExceeded",
    "MRep",
    "alternating_hull",
    "ask",
    "catalog_names",
    "class_number",
    "closed_form",
    "closed_form_names",
    "collapsed_power",
    "constant_rank",
    "direct_sum",
    "dual",
    "kernel_size",
    "make_example",
    "run_acceptance",
    "zeta_coeffs",
]
