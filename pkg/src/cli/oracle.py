"""Closed-form planar two-link arm, used as the reference for validation.

Both joints rotate about z, the links move in the xy-plane and gravity acts
along -y. Link i has length l_i, its center of mass lies lc_i from joint i
on the link axis and I_i is its moment of inertia about z at the CoM.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from chain import DHParameters, JointModel, Link, LinkParams, SerialChain
from dqalg import Quaternion
from validation.errors import InputError
from validation.validator import InputValidator


@dataclass(frozen=True)
class TwoLinkParams:
    m1: float = 2.0
    m2: float = 1.5
    l1: float = 1.0
    lc1: float = 0.5
    lc2: float = 0.4
    I1: float = 0.2
    I2: float = 0.1
    g: float = 9.81
    # only needed to place frame 2; the torques do not depend on it
    l2: float = 0.8


def analytical_two_link(
    params: TwoLinkParams,
    q: Sequence[float],
    qdot: Sequence[float],
    qddot: Sequence[float],
) -> np.ndarray:
    q = InputValidator.validate_finite_vector(q, 2, "q")
    qdot = InputValidator.validate_finite_vector(qdot, 2, "qdot")
    qddot = InputValidator.validate_finite_vector(qddot, 2, "qddot")
    p = params

    c1 = math.cos(q[0])
    c2, s2 = math.cos(q[1]), math.sin(q[1])
    c12 = math.cos(q[0] + q[1])

    m11 = (
        p.m1 * p.lc1**2
        + p.I1
        + p.m2 * (p.l1**2 + p.lc2**2 + 2.0 * p.l1 * p.lc2 * c2)
        + p.I2
    )
    m12 = p.m2 * (p.lc2**2 + p.l1 * p.lc2 * c2) + p.I2
    m22 = p.m2 * p.lc2**2 + p.I2

    h = p.m2 * p.l1 * p.lc2 * s2
    coriolis = np.array(
        [
            -h * (2.0 * qdot[0] * qdot[1] + qdot[1] ** 2),
            h * qdot[0] ** 2,
        ]
    )
    gravity = np.array(
        [
            (p.m1 * p.lc1 + p.m2 * p.l1) * p.g * c1 + p.m2 * p.lc2 * p.g * c12,
            p.m2 * p.lc2 * p.g * c12,
        ]
    )
    inertia = np.array([[m11, m12], [m12, m22]])
    return inertia @ qddot + coriolis + gravity


def _planar_inertia(moment: float) -> np.ndarray:
    # only the z moment enters planar motion
    return np.diag([moment, moment, moment])


def two_link_chain(params: TwoLinkParams = TwoLinkParams()) -> SerialChain:
    """The same arm as a serial chain; frame i sits at the far end of link i"""
    if params.l1 <= 0.0 or params.l2 <= 0.0:
        raise InputError("link lengths must be positive")
    links = []
    for length, offset, mass, moment in (
        (params.l1, params.lc1, params.m1, params.I1),
        (params.l2, params.lc2, params.m2, params.I2),
    ):
        dh = DHParameters(theta=0.0, d=0.0, a=length, alpha=0.0)
        link_params = LinkParams.from_com_position(
            dh, mass, (offset - length, 0.0, 0.0), _planar_inertia(moment)
        )
        links.append(Link(JointModel.revolute(), link_params))
    return SerialChain(tuple(links), Quaternion.pure(0.0, -params.g, 0.0), "twolink")
