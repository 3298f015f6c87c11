"""Recursive dual quaternion Newton-Euler inverse dynamics"""

from .recursion import (
    TwistSet,
    WrenchSet,
    backward_recursion,
    com_wrench,
    forward_recursion,
    inverse_dynamics,
    linear_acceleration,
    newton_euler,
    project_wrenches,
)

__all__ = [
    "TwistSet",
    "WrenchSet",
    "backward_recursion",
    "com_wrench",
    "forward_recursion",
    "inverse_dynamics",
    "linear_acceleration",
    "newton_euler",
    "project_wrenches",
]
