"""Vectorization maps, Hamilton operators and the inertia operator"""

import numpy as np

from config.settings import Settings
from validation.errors import DomainError
from .dual_quaternion import DualQuaternion, PureDualQuaternion
from .quaternion import Quaternion

# Selects rows 1-3 and 5-7 of a vec8, dropping both real parts
I_BAR = np.delete(np.eye(8), [0, 4], axis=0)


def _check_pure_quaternion(q: Quaternion, operation: str) -> None:
    if not q.is_pure(Settings.PURITY_TOLERANCE):
        raise DomainError(f"{operation} requires a pure quaternion, real part {float(q.w)!r}")


def vec8(h: DualQuaternion) -> np.ndarray:
    return np.concatenate((vec4(h.primary), vec4(h.dual)))


def vec6(h: DualQuaternion) -> np.ndarray:
    _check_pure_quaternion(h.primary, "vec6")
    _check_pure_quaternion(h.dual, "vec6")
    return np.array(h.primary.imaginary + h.dual.imaginary, dtype=float)


def vec4(q: Quaternion) -> np.ndarray:
    return np.array(q.coefficients, dtype=float)


def vec3(q: Quaternion) -> np.ndarray:
    _check_pure_quaternion(q, "vec3")
    return np.array(q.imaginary, dtype=float)


def from_vec8(v) -> DualQuaternion:
    v = [float(c) for c in v]
    return DualQuaternion(Quaternion(*v[:4]), Quaternion(*v[4:]))


def from_vec6(v) -> PureDualQuaternion:
    v = [float(c) for c in v]
    return PureDualQuaternion.from_vectors(v[:3], v[3:])


def from_vec3(v) -> Quaternion:
    return Quaternion(0.0, float(v[0]), float(v[1]), float(v[2]))


def hamilton_plus_4(q: Quaternion) -> np.ndarray:
    """vec4(q a) = H+(q) vec4(a)"""
    w, x, y, z = (float(c) for c in q.coefficients)
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ]
    )


def hamilton_minus_4(q: Quaternion) -> np.ndarray:
    """vec4(a q) = H-(q) vec4(a)"""
    w, x, y, z = (float(c) for c in q.coefficients)
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, z, -y],
            [y, -z, w, x],
            [z, y, -x, w],
        ]
    )


def _block_operator(primary: np.ndarray, dual: np.ndarray) -> np.ndarray:
    matrix = np.zeros((8, 8))
    matrix[:4, :4] = primary
    matrix[4:, :4] = dual
    matrix[4:, 4:] = primary
    return matrix


def hamilton_plus_8(h: DualQuaternion) -> np.ndarray:
    """vec8(h h2) = H+8(h) vec8(h2)"""
    return _block_operator(hamilton_plus_4(h.primary), hamilton_plus_4(h.dual))


def hamilton_minus_8(h: DualQuaternion) -> np.ndarray:
    """vec8(h2 h) = H-8(h) vec8(h2)"""
    return _block_operator(hamilton_minus_4(h.primary), hamilton_minus_4(h.dual))


def m3_apply(matrix, h: Quaternion) -> Quaternion:
    """Pure quaternion whose vec3 is matrix @ vec3(h); 9 multiplications, 6 additions"""
    _check_pure_quaternion(h, "m3_apply")
    rows = matrix.tolist() if hasattr(matrix, "tolist") else matrix
    return Quaternion(
        0.0,
        rows[0][0] * h.x + rows[0][1] * h.y + rows[0][2] * h.z,
        rows[1][0] * h.x + rows[1][1] * h.y + rows[1][2] * h.z,
        rows[2][0] * h.x + rows[2][1] * h.y + rows[2][2] * h.z,
    )
