"""Robot description files (JSON)

    {
      "name": "planar-2r",
      "gravity": [0, -9.81, 0],
      "links": [
        {
          "joint": {"type": "revolute", "axis": [0, 0, 1]},
          "dh": {"theta": 0, "d": 0, "a": 1.0, "alpha": 0},
          "mass": 2.0,
          "com": [-0.5, 0, 0],
          "com_orientation": [1, 0, 0, 0],
          "inertia": [[0.01, 0, 0], [0, 0.17, 0], [0, 0, 0.17]]
        }
      ]
    }
"""

import json
import logging
import math
import os
from typing import Any, Dict

from config.settings import Settings
from dqalg import Quaternion
from validation.errors import DynamicsError, SchemaError
from validation.validator import InputValidator, read_text_file
from .model import DHParameters, JointKind, JointModel, Link, LinkParams, SerialChain

logger = logging.getLogger(__name__)

REQUIRED_LINK_FIELDS = ("joint", "dh", "mass", "com", "inertia")
DH_FIELDS = ("theta", "d", "a", "alpha")


def _parse_joint(data: Any, index: int) -> JointModel:
    if not isinstance(data, dict):
        raise SchemaError("joint must be an object", link_index=index)
    kind = data.get("type")
    if kind not in (JointKind.REVOLUTE.value, JointKind.PRISMATIC.value):
        raise SchemaError(
            f"joint type must be 'revolute' or 'prismatic', got {kind!r}",
            link_index=index,
        )
    axis = InputValidator.validate_finite_vector(data.get("axis", (0.0, 0.0, 1.0)), 3, "axis")
    return JointModel(JointKind(kind), tuple(axis.tolist()))


def _parse_dh(data: Any, index: int) -> DHParameters:
    if not isinstance(data, dict):
        raise SchemaError("dh must be an object", link_index=index)
    missing = [name for name in DH_FIELDS if name not in data]
    if missing:
        raise SchemaError(f"dh is missing {', '.join(missing)}", link_index=index)
    values = [InputValidator.validate_scalar(data[name], f"dh.{name}") for name in DH_FIELDS]
    return DHParameters(*values)


def _parse_orientation(data: Any) -> Quaternion:
    values = InputValidator.validate_finite_vector(data, 4, "com_orientation")
    if abs(math.sqrt(float(values @ values)) - 1.0) > Settings.RENORMALIZE_LIMIT:
        raise SchemaError("com_orientation must be a unit quaternion")
    return Quaternion(*values.tolist())


def _parse_link(data: Any, index: int) -> Link:
    if not isinstance(data, dict):
        raise SchemaError("link must be an object", link_index=index)
    missing = [name for name in REQUIRED_LINK_FIELDS if name not in data]
    if missing:
        raise SchemaError(f"missing {', '.join(missing)}", link_index=index)

    try:
        joint = _parse_joint(data["joint"], index)
        dh = _parse_dh(data["dh"], index)
        com = InputValidator.validate_finite_vector(data["com"], 3, "com")
        orientation = _parse_orientation(data.get("com_orientation", (1.0, 0.0, 0.0, 0.0)))
        params = LinkParams.from_com_position(
            dh, data["mass"], com.tolist(), data["inertia"], orientation
        )
    except SchemaError as e:
        if e.link_index is not None:
            raise
        raise SchemaError(str(e), link_index=index) from e
    except DynamicsError as e:
        raise SchemaError(str(e), link_index=index) from e
    return Link(joint, params)


def parse_robot(data: Dict[str, Any]) -> SerialChain:
    """Build a chain from a decoded robot description. Link indices in errors are 1-based."""
    if not isinstance(data, dict):
        raise SchemaError("robot description must be an object")

    links = data.get("links")
    if not isinstance(links, list) or not links:
        raise SchemaError("links must be a non-empty array")

    name = data.get("name", "robot")
    if not isinstance(name, str):
        raise SchemaError(f"robot name must be a string, got {type(name).__name__}")

    try:
        gravity = InputValidator.validate_finite_vector(
            data.get("gravity", Settings.DEFAULT_GRAVITY), 3, "gravity"
        )
    except DynamicsError as e:
        raise SchemaError(str(e)) from e

    parsed = [_parse_link(link, index) for index, link in enumerate(links, start=1)]
    chain = SerialChain(tuple(parsed), Quaternion.pure(*gravity.tolist()), name)
    logger.debug("Loaded robot %s with %d links", name, chain.n)
    return chain


def load_robot(path: str) -> SerialChain:
    if not os.path.exists(path):
        raise SchemaError(f"robot file not found: {path}")
    text = read_text_file(path, "robot")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e.msg}", line=e.lineno) from e
    return parse_robot(data)


def dump_robot(chain: SerialChain) -> Dict[str, Any]:
    """Inverse of parse_robot for chains of revolute and prismatic joints"""
    links = []
    for index, link in enumerate(chain.links, start=1):
        if link.joint.kind is JointKind.CUSTOM:
            raise SchemaError("custom joints cannot be written to a robot file", link_index=index)
        params = link.params
        links.append(
            {
                "joint": {"type": link.joint.kind.value, "axis": list(link.joint.axis)},
                "dh": {name: getattr(params.dh, name) for name in DH_FIELDS},
                "mass": params.mass,
                "com": params.com_position().tolist(),
                "com_orientation": [float(c) for c in params.com_pose.rotation().coefficients],
                "inertia": params.inertia.tolist(),
            }
        )
    return {
        "name": chain.name,
        "gravity": [float(c) for c in chain.gravity.imaginary],
        "links": links,
    }
