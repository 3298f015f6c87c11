"""Symbolic operation counts of both dynamics formulations.

Every row is composed from the primitive costs. Per-link rows are
polynomials in the link index i and are summed over i = 1..n into
polynomials in n. Only forward kinematics and the pose Jacobians enter as
given rows.
"""

from dataclasses import dataclass
from typing import Dict, Union

from validation.errors import DomainError
from .polynomial import CostPolynomial, OpCost, Poly

Dimension = Union[int, Poly]

i = Poly.variable()
n = Poly.variable()

# literature rows for the pose kinematics
FKINE = CostPolynomial.of((-48, 60), (-40, 44))
POSE_JACOBIAN = CostPolynomial.of((-48, 189), (-40, 142))
POSE_JACOBIAN_DERIVATIVE = CostPolynomial.of((0, 312), (-8, 268))

CLASSIC_NE = CostPolynomial.of((-48, 150), (-48, 131))
CLASSIC_EL = CostPolynomial.of((-277, 412), (-201, 320))


def matrix_scale_cost(m: Dimension, p: Dimension) -> CostPolynomial:
    return CostPolynomial(Poly.lift(m) * p, Poly())


def matrix_add_cost(m: Dimension, p: Dimension) -> CostPolynomial:
    return CostPolynomial(Poly(), Poly.lift(m) * p)


def matrix_product_cost(m: Dimension, p: Dimension, r: Dimension) -> CostPolynomial:
    """(m x p)(p x r): mpr multiplications, mr(p - 1) additions"""
    m, p, r = Poly.lift(m), Poly.lift(p), Poly.lift(r)
    return CostPolynomial(m * p * r, m * r * (p - 1))


def primitive_costs() -> Dict[str, OpCost]:
    costs = {
        "quat_m3": OpCost(9, 6),
        "quat_scale": OpCost(4, 0),
        "quat_conj": OpCost(3, 0),
        "quat_add": OpCost(0, 4),
        "quat_mul": OpCost(16, 12),
        "dq_scale": OpCost(8, 0),
        "dq_conj": OpCost(6, 0),
        "dq_add": OpCost(0, 8),
        "dq_mul": OpCost(48, 40),
        "skew": OpCost(3, 0),
    }
    costs["quat_cross"] = 2 * costs["quat_mul"] + costs["quat_add"] + costs["quat_scale"]
    costs["quat_adjoint"] = 2 * costs["quat_mul"] + costs["quat_conj"]
    costs["dq_adjoint"] = 2 * costs["dq_mul"] + costs["dq_conj"]
    costs["dq_cross"] = 2 * costs["dq_mul"] + costs["dq_add"] + costs["dq_scale"]
    # blkdiag(-S(I w), m S(w))
    costs["skew_bar"] = costs["quat_m3"] + 3 * costs["skew"]
    return costs


def wrench_intermediate_costs() -> Dict[str, OpCost]:
    """Per-link cost of the center-of-mass wrench"""
    p = primitive_costs()
    force = p["quat_scale"] + p["quat_cross"] + p["quat_add"]
    torque = 2 * p["quat_m3"] + p["quat_cross"] + p["quat_add"]
    inertial = force + torque
    return {
        "force": force,
        "torque": torque,
        "inertial_wrench": inertial,
        "com_wrench": inertial + p["quat_add"] + p["quat_scale"],
    }


def ne_cost_polynomials() -> Dict[str, CostPolynomial]:
    p = primitive_costs()
    com_wrench = wrench_intermediate_costs()["com_wrench"]

    twists = n * CostPolynomial.constant(2 * p["dq_adjoint"] + p["dq_add"])
    # the two adjoints of the twist step are shared with the derivative
    twist_derivatives = n * CostPolynomial.constant(
        2 * p["dq_adjoint"] + p["dq_cross"] + 2 * p["dq_add"] + p["dq_scale"]
    )
    wrenches = n * CostPolynomial.constant(
        com_wrench + 2 * p["dq_adjoint"] + p["dq_add"]
    )
    return {
        "fkine": FKINE,
        "twists": twists,
        "twist_derivatives": twist_derivatives,
        "wrenches": wrenches,
        "total": FKINE + twists + twist_derivatives + wrenches,
    }


def jacobian_costs() -> Dict[str, CostPolynomial]:
    """Twist Jacobian rows; ``*_link`` entries are polynomials in i"""
    p = primitive_costs()
    dq_scale = CostPolynomial.constant(p["dq_scale"])

    twist_jacobian = POSE_JACOBIAN + dq_scale + matrix_product_cost(6, 8, i)
    twist_jacobian_derivative = (
        POSE_JACOBIAN_DERIVATIVE
        + 2 * matrix_product_cost(6, 8, i)
        + matrix_add_cost(6, i)
        + dq_scale
    )
    return {
        "pose_jacobian_link": POSE_JACOBIAN,
        "pose_jacobian_derivative_link": POSE_JACOBIAN_DERIVATIVE,
        "twist_jacobian_link": twist_jacobian,
        "twist_jacobian_derivative_link": twist_jacobian_derivative,
        "twist_jacobians": twist_jacobian.summed(),
        "twist_jacobian_derivatives": twist_jacobian_derivative.summed(),
    }


def el_costs() -> Dict[str, CostPolynomial]:
    """Inertia, Coriolis and gravity rows; ``*_link`` entries are polynomials in i"""
    p = primitive_costs()
    accumulate_matrix = (n - 1) * matrix_add_cost(n, n)

    inertia_link = matrix_product_cost(i, 6, 6) + matrix_product_cost(i, 6, i)
    coriolis_link = (
        CostPolynomial.constant(p["skew_bar"])
        + 2 * matrix_product_cost(6, 6, i)
        + matrix_add_cost(6, i)
        + matrix_product_cost(i, 6, i)
    )
    gravity_link = matrix_product_cost(i, 3, 1) + CostPolynomial.constant(p["quat_adjoint"])
    return {
        "inertia_link": inertia_link,
        "coriolis_link": coriolis_link,
        "gravity_link": gravity_link,
        "inertia": inertia_link.summed() + accumulate_matrix,
        "coriolis": coriolis_link.summed() + accumulate_matrix,
        "gravity": gravity_link.summed() + (n - 1) * matrix_add_cost(n, 1),
    }


def gplc_cost_polynomials() -> Dict[str, CostPolynomial]:
    jacobians = jacobian_costs()
    el = el_costs()
    parts = {
        "jacobians": jacobians["twist_jacobians"],
        "jacobian_derivatives": jacobians["twist_jacobian_derivatives"],
        "inertia": el["inertia"],
        "coriolis": el["coriolis"],
        "gravity": el["gravity"],
    }
    # M qddot + C qdot + g
    assembly = 2 * matrix_product_cost(n, n, 1) + 2 * matrix_add_cost(n, 1)
    total = assembly
    for polynomial in parts.values():
        total = total + polynomial
    parts["total"] = total
    return parts


@dataclass(frozen=True)
class CostBreakdown:
    n: int
    polynomials: Dict[str, CostPolynomial]

    @property
    def rows(self) -> Dict[str, OpCost]:
        return {name: poly(self.n) for name, poly in self.polynomials.items()}

    @property
    def total(self) -> OpCost:
        return self.polynomials["total"](self.n)

    def __getitem__(self, name: str) -> OpCost:
        return self.polynomials[name](self.n)


def _check_links(n_links) -> int:
    if isinstance(n_links, bool) or not isinstance(n_links, int) or n_links < 1:
        raise DomainError(f"link count must be a positive integer, got {n_links!r}")
    return n_links


def cost_ne(n_links: int) -> CostBreakdown:
    return CostBreakdown(_check_links(n_links), ne_cost_polynomials())


def cost_gplc(n_links: int) -> CostBreakdown:
    return CostBreakdown(_check_links(n_links), gplc_cost_polynomials())


def classic_baselines(n_links: int) -> Dict[str, OpCost]:
    """Reference counts of the classic recursive and Lagrangian formulations"""
    n_links = _check_links(n_links)
    return {"classic_ne": CLASSIC_NE(n_links), "classic_el": CLASSIC_EL(n_links)}
