"""Quaternion value type and the naive scalar kernels

Every kernel is written out coefficient by coefficient so it can run on any
scalar type that supports +, -, * and unary minus. Running the kernels on
``costmodel.CountingScalar`` coefficients therefore counts their scalar
operations exactly.
"""

from dataclasses import dataclass
from typing import Any

Scalar = Any


@dataclass(frozen=True)
class Quaternion:
    """w + x i + y j + z k"""

    w: Scalar = 0.0
    x: Scalar = 0.0
    y: Scalar = 0.0
    z: Scalar = 0.0

    @classmethod
    def pure(cls, x: Scalar, y: Scalar, z: Scalar) -> "Quaternion":
        return cls(0.0, x, y, z)

    @classmethod
    def one(cls) -> "Quaternion":
        return cls(1.0, 0.0, 0.0, 0.0)

    @property
    def coefficients(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    @property
    def imaginary(self) -> tuple:
        return (self.x, self.y, self.z)

    def is_pure(self, tolerance: float = 0.0) -> bool:
        return abs(float(self.w)) <= tolerance

    def norm(self) -> float:
        return (
            float(self.w) ** 2
            + float(self.x) ** 2
            + float(self.y) ** 2
            + float(self.z) ** 2
        ) ** 0.5

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return quat_add(self, other)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return quat_sub(self, other)

    def __neg__(self) -> "Quaternion":
        return quat_scale(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return quat_scale(other, self)

    def __rmul__(self, other) -> "Quaternion":
        return quat_scale(other, self)


def quat_add(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z)


def quat_sub(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z)


def quat_scale(factor: Scalar, a: Quaternion) -> Quaternion:
    return Quaternion(factor * a.w, factor * a.x, factor * a.y, factor * a.z)


def quat_conj(a: Quaternion) -> Quaternion:
    return Quaternion(a.w, -a.x, -a.y, -a.z)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product, 16 multiplications and 12 additions"""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def quat_cross(a: Quaternion, b: Quaternion) -> Quaternion:
    """(ab - ba)/2 on pure quaternions; the real part is dropped"""
    product = quat_scale(0.5, quat_sub(quat_mul(a, b), quat_mul(b, a)))
    return Quaternion(0.0, product.x, product.y, product.z)


def quat_adjoint(r: Quaternion, a: Quaternion) -> Quaternion:
    """Rotate the pure quaternion a by the unit quaternion r: r a r*"""
    product = quat_mul(quat_mul(r, a), quat_conj(r))
    return Quaternion(0.0, product.x, product.y, product.z)


I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
