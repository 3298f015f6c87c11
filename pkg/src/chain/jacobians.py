"""Pose Jacobians, twist Jacobians and their time derivatives"""

from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from dqalg import (
    I_BAR,
    dq_conj,
    from_vec8,
    hamilton_minus_8,
    hamilton_plus_8,
    vec8,
)
from .kinematics import KinematicState, base_screws, fkine, screw_rates
from .model import SerialChain, check_joint_vector


class TwistJacobians(NamedTuple):
    """Per-link 6 x n twist Jacobians and their time derivatives"""

    jacobians: List[np.ndarray]
    derivatives: Optional[List[np.ndarray]]


def _screw_matrix(screws) -> np.ndarray:
    return np.column_stack([vec8(s) for s in screws])


def _state(chain: SerialChain, q, state: Optional[KinematicState]) -> KinematicState:
    return state if state is not None else fkine(chain, q)


def pose_jacobian(
    chain: SerialChain, q: Sequence[float], state: Optional[KinematicState] = None
) -> List[np.ndarray]:
    """8 x i Jacobians of x_ci^0 for i = 1..n.

    Column k is (1/2) vec8(s_k x_ci^0) with s_k the base-frame screw of joint k.
    """
    state = _state(chain, q, state)
    screws = _screw_matrix(base_screws(chain, state))
    return [
        0.5 * hamilton_minus_8(state.com_poses[i].value) @ screws[:, : i + 1]
        for i in range(chain.n)
    ]


def _pose_jacobian_derivatives(chain, state, qdot, screws, jacobians):
    qdot = np.asarray([float(v) for v in qdot])
    screw_matrix = _screw_matrix(screws)
    rate_matrix = _screw_matrix(screw_rates(chain, state, qdot, screws))

    derivatives = []
    for i in range(chain.n):
        xdot = from_vec8(jacobians[i] @ qdot[: i + 1])
        derivatives.append(
            0.5
            * (
                hamilton_minus_8(state.com_poses[i].value) @ rate_matrix[:, : i + 1]
                + hamilton_minus_8(xdot) @ screw_matrix[:, : i + 1]
            )
        )
    return derivatives


def pose_jacobian_derivative(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Sequence[float],
    state: Optional[KinematicState] = None,
) -> List[np.ndarray]:
    """8 x i matrices with vec8(x_ci^0 '') = Jdot qdot + J qddot"""
    check_joint_vector(qdot, chain.n, "qdot")
    state = _state(chain, q, state)
    screws = base_screws(chain, state)
    jacobians = pose_jacobian(chain, q, state)
    return _pose_jacobian_derivatives(chain, state, qdot, screws, jacobians)


def _pad(matrix: np.ndarray, n: int) -> np.ndarray:
    padded = np.zeros((matrix.shape[0], n))
    padded[:, : matrix.shape[1]] = matrix
    return padded


def twist_jacobians(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Optional[Sequence[float]] = None,
    state: Optional[KinematicState] = None,
) -> TwistJacobians:
    """Twist Jacobians of every CoM frame, and their derivatives when qdot is given.

    J_i = [2 Ibar H+8(x*) J_x | 0] maps qdot to vec6 of the twist of CoM frame
    i expressed in that frame.
    """
    state = _state(chain, q, state)
    screws = base_screws(chain, state)
    pose_jacobians = [
        0.5 * hamilton_minus_8(state.com_poses[i].value) @ _screw_matrix(screws[: i + 1])
        for i in range(chain.n)
    ]

    jacobians = []
    conjugates = []
    for i in range(chain.n):
        conjugate = hamilton_plus_8(dq_conj(state.com_poses[i].value))
        conjugates.append(conjugate)
        jacobians.append(_pad(2.0 * I_BAR @ conjugate @ pose_jacobians[i], chain.n))

    if qdot is None:
        return TwistJacobians(jacobians, None)

    qdot = check_joint_vector(qdot, chain.n, "qdot")
    pose_derivatives = _pose_jacobian_derivatives(
        chain, state, qdot, screws, pose_jacobians
    )
    qdot_vector = np.asarray([float(v) for v in qdot])
    derivatives = []
    for i in range(chain.n):
        xdot = from_vec8(pose_jacobians[i] @ qdot_vector[: i + 1])
        derivatives.append(
            _pad(
                2.0
                * I_BAR
                @ (
                    hamilton_plus_8(dq_conj(xdot)) @ pose_jacobians[i]
                    + conjugates[i] @ pose_derivatives[i]
                ),
                chain.n,
            )
        )
    return TwistJacobians(jacobians, derivatives)


def twist_jacobian(
    chain: SerialChain, q: Sequence[float], state: Optional[KinematicState] = None
) -> List[np.ndarray]:
    return twist_jacobians(chain, q, state=state).jacobians


def twist_jacobian_derivative(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Sequence[float],
    state: Optional[KinematicState] = None,
) -> List[np.ndarray]:
    return twist_jacobians(chain, q, qdot, state).derivatives
