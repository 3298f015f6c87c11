"""Serial chains, forward kinematics and Jacobians"""

from .jacobians import (
    TwistJacobians,
    pose_jacobian,
    pose_jacobian_derivative,
    twist_jacobian,
    twist_jacobian_derivative,
    twist_jacobians,
)
from .kinematics import (
    KinematicState,
    base_screws,
    com_position,
    fkine,
    rotation_to_com,
    screw_rates,
)
from .loader import dump_robot, load_robot, parse_robot
from .model import (
    DHParameters,
    JointKind,
    JointModel,
    Link,
    LinkParams,
    SerialChain,
    check_joint_vector,
    joint_twist,
    joint_twist_derivative,
)

__all__ = [
    "DHParameters",
    "JointKind",
    "JointModel",
    "KinematicState",
    "Link",
    "LinkParams",
    "SerialChain",
    "TwistJacobians",
    "base_screws",
    "check_joint_vector",
    "com_position",
    "dump_robot",
    "fkine",
    "joint_twist",
    "joint_twist_derivative",
    "load_robot",
    "parse_robot",
    "pose_jacobian",
    "pose_jacobian_derivative",
    "rotation_to_com",
    "screw_rates",
    "twist_jacobian",
    "twist_jacobian_derivative",
    "twist_jacobians",
]
