import math
import os
import sys

import numpy as np
import pytest
from hypothesis import strategies as st

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from chain import DHParameters, JointModel, Link, LinkParams, SerialChain, load_robot  # noqa: E402
from cli.oracle import TwoLinkParams, two_link_chain  # noqa: E402
from cli.robots import load_builtin  # noqa: E402
from dqalg import DualQuaternion, Pose, PureDualQuaternion, Quaternion  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


# hypothesis strategies

reals = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def quaternions(draw):
    return Quaternion(draw(reals), draw(reals), draw(reals), draw(reals))


@st.composite
def pure_quaternions(draw):
    return Quaternion.pure(draw(reals), draw(reals), draw(reals))


@st.composite
def unit_quaternions(draw):
    coefficients = [draw(reals) for _ in range(4)]
    norm = math.sqrt(sum(c * c for c in coefficients))
    if norm < 1e-3:
        return Quaternion.one()
    return Quaternion(*(c / norm for c in coefficients))


@st.composite
def dual_quaternions(draw):
    return DualQuaternion(draw(quaternions()), draw(quaternions()))


@st.composite
def pure_dual_quaternions(draw):
    return PureDualQuaternion(draw(pure_quaternions()), draw(pure_quaternions()))


@st.composite
def poses(draw):
    rotation = draw(unit_quaternions())
    translation = [draw(reals) for _ in range(3)]
    return Pose.from_rotation_translation(rotation, translation)


# random chains


def random_unit_vector(rng: np.random.Generator) -> tuple:
    v = rng.normal(size=3)
    return tuple((v / np.linalg.norm(v)).tolist())


def random_inertia(rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(3, 3))
    return 0.05 * (a @ a.T) + 0.02 * np.eye(3)


def random_link(rng: np.random.Generator, kind: str = "revolute") -> Link:
    dh = DHParameters(
        theta=float(rng.uniform(-math.pi, math.pi)),
        d=float(rng.uniform(-0.5, 0.5)),
        a=float(rng.uniform(-0.5, 0.5)),
        alpha=float(rng.uniform(-math.pi, math.pi)),
    )
    axis = random_unit_vector(rng)
    orientation = Quaternion(*rng.normal(size=4).tolist())
    norm = orientation.norm()
    orientation = Quaternion(*(c / norm for c in orientation.coefficients))
    params = LinkParams.from_com_position(
        dh,
        float(rng.uniform(0.5, 3.0)),
        rng.uniform(-0.3, 0.3, size=3).tolist(),
        random_inertia(rng),
        orientation,
    )
    joint = JointModel.prismatic(axis) if kind == "prismatic" else JointModel.revolute(axis)
    return Link(joint, params)


def random_chain(seed: int, n: int, prismatic_every: int = 0) -> SerialChain:
    """Random chain; every ``prismatic_every``-th joint is prismatic when nonzero"""
    rng = np.random.default_rng(seed)
    links = []
    for k in range(n):
        kind = "prismatic" if prismatic_every and (k + 1) % prismatic_every == 0 else "revolute"
        links.append(random_link(rng, kind))
    gravity = Quaternion.pure(*rng.normal(scale=5.0, size=3).tolist())
    return SerialChain(tuple(links), gravity, f"random-{n}")


def random_motion(rng: np.random.Generator, n: int):
    return (
        rng.uniform(-math.pi, math.pi, size=n),
        rng.uniform(-2.0, 2.0, size=n),
        rng.uniform(-5.0, 5.0, size=n),
    )


@pytest.fixture
def pendulum() -> SerialChain:
    return load_robot(fixture_path("pendulum.json"))


@pytest.fixture
def twolink() -> SerialChain:
    return two_link_chain(TwoLinkParams())


@pytest.fixture
def seven() -> SerialChain:
    return load_builtin("seven")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
