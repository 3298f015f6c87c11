"""Dual quaternion Newton-Euler inverse dynamics

The forward sweep propagates the twist of every center of mass, expressed in
its own frame, and its time derivative from the base to the tip. The backward
sweep turns them into center-of-mass wrenches and accumulates joint wrenches
from the tip to the base. Wrenches carry force in the primary part and torque
in the dual part.
"""

from typing import List, NamedTuple, Optional, Sequence

from chain import JointKind, KinematicState, SerialChain, fkine
from chain.model import check_joint_vector, joint_twist, joint_twist_derivative
from dqalg import (
    PureDualQuaternion,
    Quaternion,
    Wrench,
    adjoint,
    cross,
    dot,
    m3_apply,
    quat_add,
    quat_cross,
    quat_scale,
    quat_sub,
)
from validation.errors import ConfigurationError


class TwistSet(NamedTuple):
    twists: List[PureDualQuaternion]  # xi_(0,ci)^ci
    twist_derivatives: List[PureDualQuaternion]


class WrenchSet(NamedTuple):
    wrenches: List[PureDualQuaternion]  # zeta_ji^(i-1), joint wrenches in frame i-1
    com_wrenches: List[PureDualQuaternion]  # zeta_(0,ci)^ci


def forward_recursion(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Sequence[float],
    qddot: Sequence[float],
    state: Optional[KinematicState] = None,
) -> TwistSet:
    q = check_joint_vector(q, chain.n, "q")
    qdot = check_joint_vector(qdot, chain.n, "qdot")
    qddot = check_joint_vector(qddot, chain.n, "qddot")
    if state is None:
        state = fkine(chain, q)

    twists = []
    derivatives = []
    twist = PureDualQuaternion.zero()
    derivative = PureDualQuaternion.zero()
    for i, link in enumerate(chain.links):
        to_com = state.previous_com_in_com[i]
        parent_to_com = state.parent_in_com[i]

        # both terms are reused by the derivative below
        carried = adjoint(to_com, twist)
        relative = adjoint(parent_to_com, joint_twist(link.joint, q[i], qdot[i]))
        twist = carried + relative

        derivative = (
            adjoint(to_com, derivative)
            + adjoint(
                parent_to_com,
                joint_twist_derivative(link.joint, q[i], qdot[i], qddot[i]),
            )
            + cross(-relative, carried)
        )

        twists.append(twist)
        derivatives.append(derivative)

    return TwistSet(twists, derivatives)


def com_wrench(
    mass: float, inertia, gravity: Quaternion, twist, twist_derivative
) -> PureDualQuaternion:
    """f + eps tau - m g for one link.

    f = m (D(xi') + P(xi) x D(xi)) and tau = I P(xi') + P(xi) x (I P(xi)). The
    gravitational acceleration enters with a negative sign so that the joint
    wrenches are the loads the actuators must supply.
    """
    omega = twist.primary
    force = quat_scale(mass, quat_add(twist_derivative.dual, quat_cross(omega, twist.dual)))
    torque = quat_add(
        m3_apply(inertia, twist_derivative.primary),
        quat_cross(omega, m3_apply(inertia, omega)),
    )
    return PureDualQuaternion(quat_add(force, quat_scale(-mass, gravity)), torque)


def backward_recursion(
    chain: SerialChain,
    state: KinematicState,
    twists: TwistSet,
    external_wrench: Optional[Wrench] = None,
) -> WrenchSet:
    """Joint wrenches from the tip to the base.

    ``external_wrench`` is the wrench the last link exerts on its environment,
    expressed in frame n. A tip that pushes on a surface therefore needs more
    actuation, not less.
    """
    carried = (
        PureDualQuaternion.from_dual_quaternion(external_wrench)
        if external_wrench is not None
        else PureDualQuaternion.zero()
    )

    wrenches: List[PureDualQuaternion] = [None] * chain.n
    com_wrenches: List[PureDualQuaternion] = [None] * chain.n
    for i in range(chain.n - 1, -1, -1):
        params = chain.links[i].params
        at_com = com_wrench(
            params.mass,
            params.inertia,
            state.gravity_in_com[i],
            twists.twists[i],
            twists.twist_derivatives[i],
        )
        joint_wrench = adjoint(state.com_in_parent[i], at_com) + adjoint(
            state.frame_transforms[i], carried
        )
        com_wrenches[i] = at_com
        wrenches[i] = joint_wrench
        carried = joint_wrench

    return WrenchSet(wrenches, com_wrenches)


def newton_euler(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Sequence[float],
    qddot: Sequence[float],
    external_wrench: Optional[Wrench] = None,
    state: Optional[KinematicState] = None,
) -> WrenchSet:
    if state is None:
        state = fkine(chain, q)
    twists = forward_recursion(chain, q, qdot, qddot, state)
    return backward_recursion(chain, state, twists, external_wrench)


def project_wrenches(chain: SerialChain, wrenches: WrenchSet) -> List[float]:
    """Generalized joint forces: torque about revolute axes, force along prismatic axes"""
    if len(wrenches.wrenches) != chain.n:
        raise ConfigurationError(
            f"expected {chain.n} joint wrenches, got {len(wrenches.wrenches)}"
        )

    forces = []
    for index, (link, wrench) in enumerate(zip(chain.links, wrenches.wrenches), start=1):
        joint = link.joint
        if joint.kind is JointKind.CUSTOM:
            if joint.projection is None:
                raise ConfigurationError(
                    f"custom joint {index} does not declare a wrench projection"
                )
            forces.append(float(joint.projection(wrench)))
            continue

        axis = PureDualQuaternion(joint.axis_quaternion, Quaternion())
        product = dot(wrench, axis)
        if joint.kind is JointKind.REVOLUTE:
            forces.append(float(product.dual))
        else:
            forces.append(float(product.primary))
    return forces


def inverse_dynamics(
    chain: SerialChain,
    q: Sequence[float],
    qdot: Sequence[float],
    qddot: Sequence[float],
    external_wrench: Optional[Wrench] = None,
) -> List[float]:
    """Joint torques/forces from the recursive formulation"""
    return project_wrenches(chain, newton_euler(chain, q, qdot, qddot, external_wrench))


def linear_acceleration(twist: PureDualQuaternion, twist_derivative: PureDualQuaternion) -> Quaternion:
    """Acceleration of the frame origin, in the same frame as the twist.

    p'' = D(xi') - D(xi) x P(xi)
    """
    return quat_sub(twist_derivative.dual, quat_cross(twist.dual, twist.primary))
