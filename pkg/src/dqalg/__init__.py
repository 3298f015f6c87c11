"""Quaternion and dual quaternion algebra"""

from .dual_quaternion import (
    DualQuaternion,
    DualScalar,
    PureDualQuaternion,
    Twist,
    Wrench,
    conj,
    cross,
    dot,
    dq_add,
    dq_conj,
    dq_mul,
    dq_scale,
    dq_sub,
)
from .operators import (
    I_BAR,
    from_vec3,
    from_vec6,
    from_vec8,
    hamilton_minus_8,
    hamilton_plus_8,
    m3_apply,
    vec3,
    vec4,
    vec6,
    vec8,
)
from .pose import Pose, adjoint, unit_defect
from .quaternion import (
    I,
    J,
    K,
    Quaternion,
    quat_add,
    quat_adjoint,
    quat_conj,
    quat_cross,
    quat_mul,
    quat_scale,
    quat_sub,
)

__all__ = [
    "DualQuaternion",
    "DualScalar",
    "I",
    "I_BAR",
    "J",
    "K",
    "Pose",
    "PureDualQuaternion",
    "Quaternion",
    "Twist",
    "Wrench",
    "adjoint",
    "conj",
    "cross",
    "dot",
    "dq_add",
    "dq_conj",
    "dq_mul",
    "dq_scale",
    "dq_sub",
    "from_vec3",
    "from_vec6",
    "from_vec8",
    "hamilton_minus_8",
    "hamilton_plus_8",
    "m3_apply",
    "quat_add",
    "quat_adjoint",
    "quat_conj",
    "quat_cross",
    "quat_mul",
    "quat_scale",
    "quat_sub",
    "unit_defect",
    "vec3",
    "vec4",
    "vec6",
    "vec8",
]
