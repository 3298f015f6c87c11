"""Euler-Lagrange model from Gauss's principle of least constraint.

For every link the twist Jacobian J_i maps joint rates to the CoM twist in
the CoM frame. With the generalized inertia Psi_i = blkdiag(I_i, m_i I3):

    M = sum J_i^T Psi_i J_i
    C = sum J_i^T (Sbar(w_i, Psi_i) J_i + Psi_i Jdot_i)
    g = -sum J_D,i^T (m_i g^ci)

and tau = M qddot + C qdot + g. Links are accumulated in ascending order.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import block_diag

from chain import KinematicState, SerialChain, fkine, twist_jacobians
from chain.model import LinkParams, check_joint_vector
from dqalg import Quaternion, vec3


@dataclass(frozen=True, eq=False)
class GeneralizedInertia:
    inertia: np.ndarray
    mass: float
    matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "matrix", block_diag(self.inertia, self.mass * np.eye(3))
        )

    @classmethod
    def from_link(cls, params: LinkParams) -> "GeneralizedInertia":
        return cls(params.inertia, params.mass)


@dataclass(frozen=True, eq=False)
class ELModel:
    """M(q), C(q, qdot) and g(q) of M qddot + C qdot + g = tau"""

    inertia: np.ndarray
    coriolis: np.ndarray
    gravity: np.ndarray

    def torque(self, qdot: Sequence[float], qddot: Sequence[float]) -> np.ndarray:
        return (
            self.inertia @ np.asarray(qddot, dtype=float)
            + self.coriolis @ np.asarray(qdot, dtype=float)
            + self.gravity
        )


def skew3(v: Sequence[float]) -> np.ndarray:
    """S(v) with S(v) u = v x u"""
    x, y, z = (float(c) for c in v)
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def skew_bar(omega: Quaternion, psi: GeneralizedInertia) -> np.ndarray:
    """blkdiag(-S(I w), m S(w))"""
    w = vec3(omega)
    return block_diag(-skew3(psi.inertia @ w), psi.mass * skew3(w))


def _inertias(chain: SerialChain):
    return [GeneralizedInertia.from_link(link.params) for link in chain.links]


def _gravity_vector(chain: SerialChain, state: KinematicState, jacobians) -> np.ndarray:
    g = np.zeros(chain.n)
    for i, link in enumerate(chain.links):
        load = link.params.mass * vec3(state.gravity_in_com[i])
        g -= jacobians[i][3:].T @ load
    return g


def el_model(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Sequence[float],
    state: Optional[KinematicState] = None,
) -> ELModel:
    q = check_joint_vector(q, chain.n, "q")
    qdot = np.asarray(check_joint_vector(qdot, chain.n, "qdot"), dtype=float)
    if state is None:
        state = fkine(chain, q)
    jacobians, derivatives = twist_jacobians(chain, q, qdot, state)

    M = np.zeros((chain.n, chain.n))
    C = np.zeros((chain.n, chain.n))
    for J, Jdot, psi in zip(jacobians, derivatives, _inertias(chain)):
        weighted = psi.matrix @ J
        M += J.T @ weighted
        omega = Quaternion.pure(*(J[:3] @ qdot))
        C += J.T @ (skew_bar(omega, psi) @ J + psi.matrix @ Jdot)

    return ELModel(M, C, _gravity_vector(chain, state, jacobians))


def inertia_matrix(chain: SerialChain, q: Sequence[float]) -> np.ndarray:
    state = fkine(chain, q)
    jacobians = twist_jacobians(chain, q, state=state).jacobians
    M = np.zeros((chain.n, chain.n))
    for J, psi in zip(jacobians, _inertias(chain)):
        M += J.T @ psi.matrix @ J
    return M


def coriolis_matrix(
    chain: SerialChain, q: Sequence[float], qdot: Sequence[float]
) -> np.ndarray:
    return el_model(chain, q, qdot).coriolis


def gravity_vector(chain: SerialChain, q: Sequence[float]) -> np.ndarray:
    state = fkine(chain, q)
    jacobians = twist_jacobians(chain, q, state=state).jacobians
    return _gravity_vector(chain, state, jacobians)


def inertia_matrix_derivative(
    chain: SerialChain, q: Sequence[float], qdot: Sequence[float]
) -> np.ndarray:
    """Mdot = sum (Jdot^T Psi J + J^T Psi Jdot)"""
    jacobians, derivatives = twist_jacobians(chain, q, qdot)
    Mdot = np.zeros((chain.n, chain.n))
    for J, Jdot, psi in zip(jacobians, derivatives, _inertias(chain)):
        Mdot += Jdot.T @ psi.matrix @ J + J.T @ psi.matrix @ Jdot
    return Mdot


def el_inverse_dynamics(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Sequence[float],
    qddot: Sequence[float],
) -> np.ndarray:
    qddot = check_joint_vector(qddot, chain.n, "qddot")
    return el_model(chain, q, qdot).torque(qdot, qddot)


def kinetic_energy(chain: SerialChain, q: Sequence[float], qdot: Sequence[float]) -> float:
    qdot = np.asarray(check_joint_vector(qdot, chain.n, "qdot"), dtype=float)
    return 0.5 * float(qdot @ inertia_matrix(chain, q) @ qdot)
