"""Unit dual quaternions as rigid transformations, and the adjoint action"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Union

from config.settings import Settings
from validation.errors import InvalidPoseError
from .dual_quaternion import (
    DualQuaternion,
    PureDualQuaternion,
    _drop_real,
    dq_conj,
    dq_mul,
)
from .quaternion import Quaternion, quat_conj, quat_mul, quat_scale

logger = logging.getLogger(__name__)


def unit_defect(h: DualQuaternion) -> float:
    """max(| |P| - 1 |, |<P, D>|) evaluated in plain floats"""
    p = [float(c) for c in h.primary.coefficients]
    d = [float(c) for c in h.dual.coefficients]
    norm = math.sqrt(sum(c * c for c in p))
    orthogonality = sum(a * b for a, b in zip(p, d))
    return max(abs(norm - 1.0), abs(orthogonality))


def _renormalize(h: DualQuaternion) -> DualQuaternion:
    p = [float(c) for c in h.primary.coefficients]
    d = [float(c) for c in h.dual.coefficients]
    norm = math.sqrt(sum(c * c for c in p))
    r = [c / norm for c in p]
    d = [c / norm for c in d]
    overlap = sum(a * b for a, b in zip(r, d))
    d = [c - overlap * a for a, c in zip(r, d)]
    return DualQuaternion(Quaternion(*r), Quaternion(*d))


@dataclass(frozen=True)
class Pose:
    """x = r + eps (1/2) p r with r a unit quaternion and p the translation"""

    value: DualQuaternion

    def __post_init__(self):
        if isinstance(self.value, Pose):
            object.__setattr__(self, "value", self.value.value)
        defect = unit_defect(self.value)
        if defect <= Settings.UNIT_TOLERANCE:
            return
        if defect > Settings.RENORMALIZE_LIMIT:
            raise InvalidPoseError(
                f"dual quaternion is not unit (defect {defect:.3e})", defect=defect
            )
        logger.warning("Renormalizing pose with unit defect %.3e", defect)
        object.__setattr__(self, "value", _renormalize(self.value))

    @classmethod
    def identity(cls) -> "Pose":
        return cls(DualQuaternion.one())

    @classmethod
    def from_rotation_translation(
        cls, rotation: Quaternion, translation: Union[Quaternion, Sequence[float]]
    ) -> "Pose":
        if not isinstance(translation, Quaternion):
            translation = Quaternion.pure(*translation)
        return cls(
            DualQuaternion(rotation, quat_scale(0.5, quat_mul(translation, rotation)))
        )

    @classmethod
    def rotation_about(cls, axis: Sequence[float], angle: float) -> "Pose":
        half = 0.5 * angle
        s = math.sin(half)
        return cls(
            DualQuaternion(
                Quaternion(math.cos(half), s * axis[0], s * axis[1], s * axis[2]),
                Quaternion(),
            )
        )

    @classmethod
    def translation_by(cls, p: Sequence[float]) -> "Pose":
        return cls(
            DualQuaternion(
                Quaternion.one(), Quaternion(0.0, 0.5 * p[0], 0.5 * p[1], 0.5 * p[2])
            )
        )

    @property
    def primary(self) -> Quaternion:
        return self.value.primary

    @property
    def dual(self) -> Quaternion:
        return self.value.dual

    def rotation(self) -> Quaternion:
        return self.value.primary

    def translation(self) -> Quaternion:
        """p = 2 D r*"""
        p = quat_scale(2.0, quat_mul(self.value.dual, quat_conj(self.value.primary)))
        return Quaternion(0.0, p.x, p.y, p.z)

    def conj(self) -> "Pose":
        return Pose(dq_conj(self.value))

    def __mul__(self, other):
        if isinstance(other, Pose):
            return Pose(dq_mul(self.value, other.value))
        if isinstance(other, DualQuaternion):
            return dq_mul(self.value, other)
        return NotImplemented


def adjoint(x: Union[Pose, DualQuaternion], h: DualQuaternion) -> PureDualQuaternion:
    """Ad(x) h = x h x*, 102 multiplications and 80 additions.

    The real parts of the result are zeroed, the action on a pure element is
    pure up to round-off.
    """
    if not isinstance(x, Pose):
        x = Pose(x)
    return _drop_real(dq_mul(dq_mul(x.value, h), dq_conj(x.value)))
