"""Closed-form Euler-Lagrange model from Gauss's principle of least constraint"""

from .forward import IntegrationResult, forward_dynamics, integrate, solve_inertia
from .model import (
    ELModel,
    GeneralizedInertia,
    coriolis_matrix,
    el_inverse_dynamics,
    el_model,
    gravity_vector,
    inertia_matrix,
    inertia_matrix_derivative,
    kinetic_energy,
    skew3,
    skew_bar,
)

__all__ = [
    "ELModel",
    "GeneralizedInertia",
    "IntegrationResult",
    "coriolis_matrix",
    "el_inverse_dynamics",
    "el_model",
    "forward_dynamics",
    "gravity_vector",
    "inertia_matrix",
    "inertia_matrix_derivative",
    "integrate",
    "kinetic_energy",
    "skew3",
    "skew_bar",
    "solve_inertia",
]
