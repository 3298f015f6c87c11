from .polynomial import CostPolynomial, OpCost, Poly, format_number
from .counter import CountingScalar, OpCounter, count_runtime_ops, instrument
from .tables import (
    CostBreakdown,
    classic_baselines,
    cost_gplc,
    cost_ne,
    el_costs,
    gplc_cost_polynomials,
    jacobian_costs,
    matrix_add_cost,
    matrix_product_cost,
    matrix_scale_cost,
    ne_cost_polynomials,
    primitive_costs,
    wrench_intermediate_costs,
)

__all__ = [
    "CostBreakdown",
    "CostPolynomial",
    "CountingScalar",
    "OpCost",
    "OpCounter",
    "Poly",
    "classic_baselines",
    "cost_gplc",
    "cost_ne",
    "count_runtime_ops",
    "el_costs",
    "format_number",
    "gplc_cost_polynomials",
    "instrument",
    "jacobian_costs",
    "matrix_add_cost",
    "matrix_product_cost",
    "matrix_scale_cost",
    "ne_cost_polynomials",
    "primitive_costs",
    "wrench_intermediate_costs",
]
