"""Serial chain description: joints, link parameters and the chain itself"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from config.settings import Settings
from dqalg import (
    DualQuaternion,
    Pose,
    PureDualQuaternion,
    Quaternion,
    quat_scale,
)
from validation.errors import ConfigurationError, DomainError
from validation.validator import InputValidator


class JointKind(str, Enum):
    REVOLUTE = "revolute"
    PRISMATIC = "prismatic"
    CUSTOM = "custom"


@dataclass(frozen=True)
class JointModel:
    """A one-degree-of-freedom joint acting about or along ``axis`` in frame i-1.

    Custom joints describe their own motion: ``motion(q)`` is the pose the
    joint adds in front of the constant DH transform, ``screw(q)`` the twist
    per unit joint rate in frame i-1 and ``screw_derivative(q)`` its
    derivative with respect to q. ``projection(wrench)`` maps a joint wrench
    to the generalized force of the joint.
    """

    kind: JointKind = JointKind.REVOLUTE
    axis: Tuple[float, float, float] = (0.0, 0.0, 1.0)
    motion: Optional[Callable[[float], Pose]] = None
    screw: Optional[Callable[[float], DualQuaternion]] = None
    screw_derivative: Optional[Callable[[float], DualQuaternion]] = None
    projection: Optional[Callable[[PureDualQuaternion], float]] = None
    axis_quaternion: Quaternion = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", JointKind(self.kind))
        axis = InputValidator.validate_unit_axis(self.axis)
        object.__setattr__(self, "axis", tuple(float(c) for c in axis))
        object.__setattr__(self, "axis_quaternion", Quaternion.pure(*self.axis))

        if self.kind is JointKind.CUSTOM:
            missing = [
                name
                for name in ("motion", "screw", "screw_derivative")
                if getattr(self, name) is None
            ]
            if missing:
                raise ConfigurationError(
                    f"custom joint is missing {', '.join(missing)}"
                )

    @classmethod
    def revolute(cls, axis: Sequence[float] = (0.0, 0.0, 1.0)) -> "JointModel":
        return cls(JointKind.REVOLUTE, tuple(axis))

    @classmethod
    def prismatic(cls, axis: Sequence[float] = (0.0, 0.0, 1.0)) -> "JointModel":
        return cls(JointKind.PRISMATIC, tuple(axis))

    @classmethod
    def custom(
        cls,
        motion: Callable[[float], Pose],
        screw: Callable[[float], DualQuaternion],
        screw_derivative: Callable[[float], DualQuaternion],
        projection: Optional[Callable[[PureDualQuaternion], float]] = None,
        axis: Sequence[float] = (0.0, 0.0, 1.0),
    ) -> "JointModel":
        return cls(
            JointKind.CUSTOM,
            tuple(axis),
            motion=motion,
            screw=screw,
            screw_derivative=screw_derivative,
            projection=projection,
        )

    def motion_pose(self, q) -> Pose:
        """Pose contributed by the joint variable, placed before the DH transform"""
        if self.kind is JointKind.REVOLUTE:
            return Pose.rotation_about(self.axis, float(q))
        if self.kind is JointKind.PRISMATIC:
            q = float(q)
            return Pose.translation_by([q * c for c in self.axis])
        return Pose(self.motion(q))

    def screw_at(self, q) -> PureDualQuaternion:
        """Twist produced by a unit joint rate, in frame i-1"""
        if self.kind is JointKind.REVOLUTE:
            return PureDualQuaternion(self.axis_quaternion, Quaternion())
        if self.kind is JointKind.PRISMATIC:
            return PureDualQuaternion(Quaternion(), self.axis_quaternion)
        return PureDualQuaternion.from_dual_quaternion(self.screw(q))

    def screw_derivative_at(self, q) -> Optional[PureDualQuaternion]:
        """dS/dq, or None when the screw does not depend on q"""
        if self.kind is not JointKind.CUSTOM:
            return None
        return PureDualQuaternion.from_dual_quaternion(self.screw_derivative(q))


def joint_twist(joint: JointModel, q_i, qdot_i) -> PureDualQuaternion:
    """Twist of link i relative to frame i-1, expressed in frame i-1"""
    if joint.kind is JointKind.REVOLUTE:
        return PureDualQuaternion(quat_scale(qdot_i, joint.axis_quaternion), Quaternion())
    if joint.kind is JointKind.PRISMATIC:
        return PureDualQuaternion(Quaternion(), quat_scale(qdot_i, joint.axis_quaternion))
    return joint.screw_at(q_i) * qdot_i


def joint_twist_derivative(joint: JointModel, q_i, qdot_i, qddot_i) -> PureDualQuaternion:
    if joint.kind is JointKind.REVOLUTE:
        return PureDualQuaternion(quat_scale(qddot_i, joint.axis_quaternion), Quaternion())
    if joint.kind is JointKind.PRISMATIC:
        return PureDualQuaternion(Quaternion(), quat_scale(qddot_i, joint.axis_quaternion))
    return joint.screw_at(q_i) * qddot_i + joint.screw_derivative_at(q_i) * (qdot_i * qdot_i)


@dataclass(frozen=True)
class DHParameters:
    """Standard Denavit-Hartenberg row (rad, m, m, rad)"""

    theta: float = 0.0
    d: float = 0.0
    a: float = 0.0
    alpha: float = 0.0

    def pose(self) -> Pose:
        """rotz(theta) tz(d) tx(a) rotx(alpha)"""
        return (
            Pose.rotation_about((0.0, 0.0, 1.0), self.theta)
            * Pose.translation_by((0.0, 0.0, self.d))
            * Pose.translation_by((self.a, 0.0, 0.0))
            * Pose.rotation_about((1.0, 0.0, 0.0), self.alpha)
        )


@dataclass(frozen=True, eq=False)
class LinkParams:
    """Inertial and geometric parameters of one link.

    ``com_pose`` is the pose of the center-of-mass frame in the link frame i;
    ``inertia`` is taken at the center of mass, in the center-of-mass frame.
    """

    dh: DHParameters
    mass: float
    com_pose: Pose
    inertia: np.ndarray
    frame_offset: Pose = field(init=False, repr=False, compare=False)
    com_offset: Pose = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "mass", InputValidator.validate_mass(self.mass))
        inertia = InputValidator.validate_inertia(self.inertia).copy()
        inertia.setflags(write=False)
        object.__setattr__(self, "inertia", inertia)
        object.__setattr__(self, "com_pose", Pose(self.com_pose))
        object.__setattr__(self, "frame_offset", self.dh.pose())
        object.__setattr__(self, "com_offset", self.frame_offset * self.com_pose)

    @classmethod
    def from_com_position(
        cls,
        dh: DHParameters,
        mass: float,
        com: Sequence[float],
        inertia,
        com_orientation: Quaternion = Quaternion.one(),
    ) -> "LinkParams":
        return cls(dh, mass, Pose.from_rotation_translation(com_orientation, com), inertia)

    def com_position(self) -> np.ndarray:
        return np.array(self.com_pose.translation().imaginary, dtype=float)


@dataclass(frozen=True)
class Link:
    joint: JointModel
    params: LinkParams


@dataclass(frozen=True)
class SerialChain:
    """Ordered links from the base (frame 0) to the tip (frame n)"""

    links: Tuple[Link, ...]
    gravity: Quaternion = Quaternion.pure(*Settings.DEFAULT_GRAVITY)
    name: str = "chain"

    def __post_init__(self):
        object.__setattr__(self, "links", tuple(self.links))
        if not self.links:
            raise ConfigurationError("a serial chain needs at least one link")
        gravity = self.gravity
        if not isinstance(gravity, Quaternion):
            gravity = Quaternion.pure(
                *InputValidator.validate_finite_vector(gravity, 3, "gravity")
            )
        if not gravity.is_pure(Settings.PURITY_TOLERANCE):
            raise DomainError("gravity must be a pure quaternion")
        object.__setattr__(self, "gravity", gravity)

    @property
    def n(self) -> int:
        return len(self.links)

    @property
    def joints(self) -> Tuple[JointModel, ...]:
        return tuple(link.joint for link in self.links)

    def with_gravity(self, gravity: Sequence[float]) -> "SerialChain":
        return SerialChain(self.links, Quaternion.pure(*gravity), self.name)


def check_joint_vector(values, n: int, name: str) -> list:
    """Validate a joint-space vector and return its entries unchanged"""
    entries = values.tolist() if isinstance(values, np.ndarray) else list(values)
    InputValidator.validate_finite_vector((float(v) for v in entries), n, name)
    return entries
