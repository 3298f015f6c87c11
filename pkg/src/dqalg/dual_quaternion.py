"""Dual quaternions, pure dual quaternions (twists and wrenches) and their products"""

from dataclasses import dataclass
from typing import NamedTuple

from config.settings import Settings
from validation.errors import DomainError
from .quaternion import (
    Quaternion,
    Scalar,
    quat_add,
    quat_conj,
    quat_mul,
    quat_scale,
    quat_sub,
)


class DualScalar(NamedTuple):
    """a + eps b"""

    primary: Scalar
    dual: Scalar


@dataclass(frozen=True)
class DualQuaternion:
    """primary + eps dual, eps^2 = 0"""

    primary: Quaternion = Quaternion()
    dual: Quaternion = Quaternion()

    @classmethod
    def one(cls) -> "DualQuaternion":
        return cls(Quaternion.one(), Quaternion())

    @property
    def coefficients(self) -> tuple:
        return self.primary.coefficients + self.dual.coefficients

    def conj(self) -> "DualQuaternion":
        return dq_conj(self)

    def __add__(self, other: "DualQuaternion") -> "DualQuaternion":
        return dq_add(self, other)

    def __sub__(self, other: "DualQuaternion") -> "DualQuaternion":
        return dq_sub(self, other)

    def __neg__(self) -> "DualQuaternion":
        return dq_scale(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, DualQuaternion):
            return dq_mul(self, other)
        return dq_scale(other, self)

    def __rmul__(self, other) -> "DualQuaternion":
        return dq_scale(other, self)


@dataclass(frozen=True)
class PureDualQuaternion(DualQuaternion):
    """Dual quaternion with both real parts zero.

    Twists carry angular velocity in the primary part and linear velocity in
    the dual part; wrenches carry force in the primary part and torque in the
    dual part. Real-part residue up to the purity tolerance is zeroed, larger
    residue is rejected.
    """

    def __post_init__(self):
        for name in ("primary", "dual"):
            part = getattr(self, name)
            residue = abs(float(part.w))
            if residue > Settings.PURITY_TOLERANCE:
                raise DomainError(
                    f"{name} real part {float(part.w)!r} is not zero; "
                    "a twist or wrench must be pure"
                )
            if residue > 0.0:
                object.__setattr__(
                    self, name, Quaternion(0.0, part.x, part.y, part.z)
                )

    @classmethod
    def from_vectors(cls, primary, dual=(0.0, 0.0, 0.0)) -> "PureDualQuaternion":
        return cls(Quaternion(0.0, *primary), Quaternion(0.0, *dual))

    @classmethod
    def zero(cls) -> "PureDualQuaternion":
        return cls(Quaternion(), Quaternion())

    @classmethod
    def from_dual_quaternion(cls, h: DualQuaternion) -> "PureDualQuaternion":
        if isinstance(h, PureDualQuaternion):
            return h
        return cls(h.primary, h.dual)

    def __add__(self, other):
        total = dq_add(self, other)
        if isinstance(other, PureDualQuaternion):
            return _drop_real(total)
        return total

    def __sub__(self, other):
        difference = dq_sub(self, other)
        if isinstance(other, PureDualQuaternion):
            return _drop_real(difference)
        return difference

    def __neg__(self) -> "PureDualQuaternion":
        return _drop_real(dq_scale(-1.0, self))

    def __mul__(self, other):
        if isinstance(other, DualQuaternion):
            return dq_mul(self, other)
        return _drop_real(dq_scale(other, self))

    def __rmul__(self, other) -> "PureDualQuaternion":
        return _drop_real(dq_scale(other, self))


Twist = PureDualQuaternion
Wrench = PureDualQuaternion


def _drop_real(h: DualQuaternion) -> PureDualQuaternion:
    p, d = h.primary, h.dual
    return PureDualQuaternion(
        Quaternion(0.0, p.x, p.y, p.z), Quaternion(0.0, d.x, d.y, d.z)
    )


def dq_add(a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    return DualQuaternion(quat_add(a.primary, b.primary), quat_add(a.dual, b.dual))


def dq_sub(a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    return DualQuaternion(quat_sub(a.primary, b.primary), quat_sub(a.dual, b.dual))


def dq_scale(factor: Scalar, a: DualQuaternion) -> DualQuaternion:
    return DualQuaternion(quat_scale(factor, a.primary), quat_scale(factor, a.dual))


def dq_conj(h: DualQuaternion) -> DualQuaternion:
    return DualQuaternion(quat_conj(h.primary), quat_conj(h.dual))


conj = dq_conj


def dq_mul(a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    """P = P(a)P(b), D = P(a)D(b) + D(a)P(b); 48 multiplications, 40 additions"""
    return DualQuaternion(
        quat_mul(a.primary, b.primary),
        quat_add(quat_mul(a.primary, b.dual), quat_mul(a.dual, b.primary)),
    )


def _require_pure(h: DualQuaternion, operation: str) -> None:
    if isinstance(h, PureDualQuaternion):
        return
    if not (
        h.primary.is_pure(Settings.PURITY_TOLERANCE)
        and h.dual.is_pure(Settings.PURITY_TOLERANCE)
    ):
        raise DomainError(f"{operation} requires pure dual quaternions")


def cross(a: DualQuaternion, b: DualQuaternion) -> PureDualQuaternion:
    """(ab - ba)/2 for pure dual quaternions"""
    _require_pure(a, "cross")
    _require_pure(b, "cross")
    return _drop_real(dq_scale(0.5, dq_sub(dq_mul(a, b), dq_mul(b, a))))


def dot(a: DualQuaternion, b: DualQuaternion) -> DualScalar:
    """-(ab + ba)/2 for pure dual quaternions"""
    _require_pure(a, "dot")
    _require_pure(b, "dot")
    product = dq_scale(-0.5, dq_add(dq_mul(a, b), dq_mul(b, a)))
    return DualScalar(product.primary.w, product.dual.w)
