"""Forward dynamics and time integration of the canonical Euler-Lagrange form"""

import logging
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from chain import SerialChain
from chain.model import check_joint_vector
from config.settings import Settings
from validation.errors import NumericalError
from .model import el_model

logger = logging.getLogger(__name__)

TorqueFunction = Callable[[float, np.ndarray, np.ndarray], Sequence[float]]


class IntegrationResult(NamedTuple):
    times: np.ndarray
    q: np.ndarray  # (samples, n)
    qdot: np.ndarray


def solve_inertia(M: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve M x = rhs for a symmetric positive definite M"""
    condition = np.linalg.cond(M)
    if not np.isfinite(condition) or condition > Settings.CONDITION_LIMIT:
        raise NumericalError(
            f"inertia matrix is ill-conditioned (condition {condition:.3e})",
            condition=condition,
        )
    try:
        factor = cho_factor(M)
    except LinAlgError as e:
        raise NumericalError(
            "inertia matrix is not positive definite", condition=condition
        ) from e
    return cho_solve(factor, rhs)


def forward_dynamics(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Sequence[float],
    tau: Sequence[float],
) -> np.ndarray:
    """qddot = M^-1 (tau - C qdot - g)"""
    tau = np.asarray(check_joint_vector(tau, chain.n, "tau"), dtype=float)
    qdot = np.asarray(check_joint_vector(qdot, chain.n, "qdot"), dtype=float)
    model = el_model(chain, q, qdot)
    return solve_inertia(model.inertia, tau - model.coriolis @ qdot - model.gravity)


def integrate(
    chain: SerialChain,
    q0: Sequence[float],
    qdot0: Sequence[float],
    duration: float,
    step: float,
    torque: Optional[TorqueFunction] = None,
    rtol: float = 1e-10,
    atol: float = 1e-12,
) -> IntegrationResult:
    """Integrate the forward dynamics with an explicit Runge-Kutta scheme.

    ``step`` bounds the integrator step and sets the output sampling.
    ``torque(t, q, qdot)`` defaults to zero actuation.
    """
    n = chain.n
    q0 = np.asarray(check_joint_vector(q0, n, "q0"), dtype=float)
    qdot0 = np.asarray(check_joint_vector(qdot0, n, "qdot0"), dtype=float)
    if duration <= 0.0 or step <= 0.0:
        raise NumericalError("duration and step must be positive")

    def rates(t, state):
        q, qdot = state[:n], state[n:]
        tau = np.zeros(n) if torque is None else np.asarray(torque(t, q, qdot), dtype=float)
        return np.concatenate([qdot, forward_dynamics(chain, q, qdot, tau)])

    samples = int(round(duration / step)) + 1
    times = np.linspace(0.0, duration, samples)
    solution = solve_ivp(
        rates,
        (0.0, duration),
        np.concatenate([q0, qdot0]),
        method="RK45",
        t_eval=times,
        max_step=step,
        rtol=rtol,
        atol=atol,
    )
    if not solution.success:
        raise NumericalError(f"integration failed: {solution.message}")

    logger.debug("Integrated %s over %.3f s in %d evaluations", chain.name, duration, solution.nfev)
    return IntegrationResult(solution.t, solution.y[:n].T, solution.y[n:].T)
