"""Forward kinematics to every link frame and center of mass"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from dqalg import (
    Pose,
    PureDualQuaternion,
    Quaternion,
    adjoint,
    cross,
    quat_adjoint,
    quat_conj,
)
from .model import SerialChain, check_joint_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KinematicState:
    """Poses of one configuration.

    Per-link tuples are indexed from 0 for link 1. ``frame_poses`` has n + 1
    entries and starts with the base frame x_0^0 = 1.
    """

    q: Tuple
    frame_poses: Tuple[Pose, ...]  # x_i^0, i = 0..n
    com_poses: Tuple[Pose, ...]  # x_ci^0
    frame_transforms: Tuple[Pose, ...]  # x_i^(i-1)
    com_in_parent: Tuple[Pose, ...]  # x_ci^(i-1)
    parent_in_com: Tuple[Pose, ...]  # x_(i-1)^ci
    previous_com_in_com: Tuple[Pose, ...]  # x_c(i-1)^ci, with c0 = frame 0
    gravity_in_com: Tuple[Quaternion, ...]  # g^ci

    @property
    def n(self) -> int:
        return len(self.com_poses)


def fkine(chain: SerialChain, q: Sequence[float]) -> KinematicState:
    q = tuple(check_joint_vector(q, chain.n, "q"))

    frame_poses: List[Pose] = [Pose.identity()]
    com_poses: List[Pose] = []
    frame_transforms: List[Pose] = []
    com_in_parent: List[Pose] = []
    parent_in_com: List[Pose] = []
    previous_com_in_com: List[Pose] = []
    gravity_in_com: List[Quaternion] = []

    previous_com = Pose.identity()
    for link, q_i in zip(chain.links, q):
        motion = link.joint.motion_pose(q_i)
        frame_transform = motion * link.params.frame_offset
        com_transform = motion * link.params.com_offset

        parent = frame_poses[-1]
        com = parent * com_transform
        com_inverse = com.conj()

        frame_transforms.append(frame_transform)
        com_in_parent.append(com_transform)
        parent_in_com.append(com_transform.conj())
        previous_com_in_com.append(com_inverse * previous_com)
        gravity_in_com.append(quat_adjoint(com_inverse.rotation(), chain.gravity))
        com_poses.append(com)
        frame_poses.append(parent * frame_transform)
        previous_com = com

    logger.debug("Forward kinematics of %s at q=%s", chain.name, q)
    return KinematicState(
        q=q,
        frame_poses=tuple(frame_poses),
        com_poses=tuple(com_poses),
        frame_transforms=tuple(frame_transforms),
        com_in_parent=tuple(com_in_parent),
        parent_in_com=tuple(parent_in_com),
        previous_com_in_com=tuple(previous_com_in_com),
        gravity_in_com=tuple(gravity_in_com),
    )


def base_screws(
    chain: SerialChain, state: KinematicState
) -> List[PureDualQuaternion]:
    """Joint screws s_k = Ad(x_(k-1)^0) S_k(q_k), expressed in the base frame"""
    return [
        adjoint(state.frame_poses[k], link.joint.screw_at(state.q[k]))
        for k, link in enumerate(chain.links)
    ]


def screw_rates(
    chain: SerialChain,
    state: KinematicState,
    qdot: Sequence[float],
    screws: Optional[List[PureDualQuaternion]] = None,
) -> List[PureDualQuaternion]:
    """Time derivatives of the base-frame screws.

    ds_k/dt = xi_(0,k-1)^0 x s_k + Ad(x_(k-1)^0)(qdot_k dS_k/dq), where
    xi_(0,k-1)^0 is the sum of qdot_j s_j over j < k.
    """
    qdot = check_joint_vector(qdot, chain.n, "qdot")
    if screws is None:
        screws = base_screws(chain, state)

    rates = []
    frame_twist = PureDualQuaternion.zero()
    for k, link in enumerate(chain.links):
        rate = cross(frame_twist, screws[k])
        derivative = link.joint.screw_derivative_at(state.q[k])
        if derivative is not None:
            rate = rate + adjoint(state.frame_poses[k], derivative * float(qdot[k]))
        rates.append(rate)
        frame_twist = frame_twist + screws[k] * float(qdot[k])
    return rates


def com_position(state: KinematicState, i: int) -> Quaternion:
    """Position of the center of mass of link i (1-based) in the base frame"""
    return state.com_poses[i - 1].translation()


def rotation_to_com(state: KinematicState, i: int) -> Quaternion:
    """r_0^ci, the rotation taking base-frame vectors into CoM frame i"""
    return quat_conj(state.com_poses[i - 1].rotation())
