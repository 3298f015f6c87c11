"""Chains, forward kinematics, Jacobians and robot files"""

import json
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.spatial.transform import Rotation

from chain import (
    DHParameters,
    JointKind,
    JointModel,
    Link,
    LinkParams,
    SerialChain,
    base_screws,
    com_position,
    dump_robot,
    fkine,
    load_robot,
    parse_robot,
    pose_jacobian,
    pose_jacobian_derivative,
    rotation_to_com,
    screw_rates,
    twist_jacobian,
    twist_jacobian_derivative,
    twist_jacobians,
)
from conftest import fixture_path, random_chain, random_motion
from dqalg import Pose, PureDualQuaternion, Quaternion, quat_adjoint, vec3, vec6, vec8
from dqne import forward_recursion
from validation.errors import ConfigurationError, DomainError, InputError, SchemaError


def _homogeneous(rotation: np.ndarray, translation) -> np.ndarray:
    T = np.eye(4)
    T[:3, :3] = rotation
    T[:3, 3] = translation
    return T


def _rotation_matrix(q: Quaternion) -> np.ndarray:
    return Rotation.from_quat([q.x, q.y, q.z, q.w]).as_matrix()


def reference_com_transforms(chain: SerialChain, q) -> list:
    """CoM transforms from 4x4 homogeneous matrices"""
    T = np.eye(4)
    result = []
    for link, q_i in zip(chain.links, q):
        axis = np.array(link.joint.axis)
        if link.joint.kind is JointKind.REVOLUTE:
            motion = _homogeneous(Rotation.from_rotvec(axis * q_i).as_matrix(), np.zeros(3))
        else:
            motion = _homogeneous(np.eye(3), axis * q_i)
        dh = link.params.dh
        T = (
            T
            @ motion
            @ _homogeneous(Rotation.from_rotvec([0, 0, dh.theta]).as_matrix(), [0, 0, dh.d])
            @ _homogeneous(Rotation.from_rotvec([dh.alpha, 0, 0]).as_matrix(), [dh.a, 0, 0])
        )
        com = link.params.com_pose
        result.append(T @ _homogeneous(_rotation_matrix(com.rotation()), vec3(com.translation())))
    return result


class TestForwardKinematics:
    def test_single_revolute_link(self):
        link = Link(
            JointModel.revolute(),
            LinkParams.from_com_position(DHParameters(a=1.0), 1.0, (-0.5, 0.0, 0.0), np.eye(3)),
        )
        state = fkine(SerialChain((link,)), [math.pi / 2])
        assert_allclose(vec3(state.frame_poses[1].translation()), [0.0, 1.0, 0.0], atol=1e-15)
        assert_allclose(vec3(com_position(state, 1)), [0.0, 0.5, 0.0], atol=1e-15)

    def test_prismatic_link(self):
        link = Link(
            JointModel.prismatic((0.0, 0.0, 1.0)),
            LinkParams.from_com_position(DHParameters(d=0.2), 2.0, (0.0, 0.0, 0.0), np.eye(3)),
        )
        state = fkine(SerialChain((link,)), [0.3])
        assert_allclose(vec3(state.frame_poses[1].translation()), [0.0, 0.0, 0.5], atol=1e-15)

    @pytest.mark.parametrize("n", [1, 3, 7])
    def test_matches_homogeneous_transforms(self, n, rng):
        chain = random_chain(seed=n, n=n, prismatic_every=2)
        q = rng.uniform(-math.pi, math.pi, size=n)
        state = fkine(chain, q)
        for i, expected in enumerate(reference_com_transforms(chain, q)):
            pose = state.com_poses[i]
            assert_allclose(vec3(pose.translation()), expected[:3, 3], atol=1e-12)
            assert_allclose(_rotation_matrix(pose.rotation()), expected[:3, :3], atol=1e-12)

    def test_gravity_in_com_frames(self, seven, rng):
        q = rng.uniform(-math.pi, math.pi, size=seven.n)
        state = fkine(seven, q)
        for i in range(seven.n):
            back = quat_adjoint(state.com_poses[i].rotation(), state.gravity_in_com[i])
            assert_allclose(vec3(back), vec3(seven.gravity), atol=1e-12)
            assert_allclose(
                vec3(quat_adjoint(rotation_to_com(state, i + 1), seven.gravity)),
                vec3(state.gravity_in_com[i]),
                atol=1e-12,
            )

    def test_wrong_joint_count(self, seven):
        with pytest.raises(InputError):
            fkine(seven, [0.0] * 6)
        with pytest.raises(InputError):
            fkine(seven, [0.0] * 6 + [float("nan")])


class TestJacobians:
    @pytest.mark.parametrize("n", [1, 4, 6])
    def test_pose_jacobian_matches_finite_differences(self, n, rng):
        chain = random_chain(seed=10 + n, n=n, prismatic_every=3)
        q = rng.uniform(-math.pi, math.pi, size=n)
        jacobians = pose_jacobian(chain, q)
        h = 1e-6
        for k in range(n):
            step = np.zeros(n)
            step[k] = h
            ahead = fkine(chain, q + step)
            behind = fkine(chain, q - step)
            for i in range(n):
                numeric = (vec8(ahead.com_poses[i].value) - vec8(behind.com_poses[i].value)) / (2 * h)
                expected = jacobians[i][:, k] if k <= i else np.zeros(8)
                assert_allclose(numeric, expected, atol=1e-7)

    @pytest.mark.parametrize("n", [2, 5])
    def test_jacobian_derivatives_match_finite_differences(self, n, rng):
        chain = random_chain(seed=20 + n, n=n, prismatic_every=2)
        q, qdot, _ = random_motion(rng, n)
        h = 1e-6
        ahead = twist_jacobians(chain, q + h * qdot).jacobians
        behind = twist_jacobians(chain, q - h * qdot).jacobians
        derivatives = twist_jacobians(chain, q, qdot).derivatives
        pose_ahead = pose_jacobian(chain, q + h * qdot)
        pose_behind = pose_jacobian(chain, q - h * qdot)
        pose_derivatives = pose_jacobian_derivative(chain, q, qdot)
        for i in range(n):
            assert_allclose((ahead[i] - behind[i]) / (2 * h), derivatives[i], atol=1e-6)
            assert_allclose(
                (pose_ahead[i] - pose_behind[i]) / (2 * h), pose_derivatives[i], atol=1e-6
            )

    def test_screw_rates_match_finite_differences(self, seven, rng):
        q, qdot, _ = random_motion(rng, seven.n)
        h = 1e-6
        ahead = base_screws(seven, fkine(seven, q + h * qdot))
        behind = base_screws(seven, fkine(seven, q - h * qdot))
        rates = screw_rates(seven, fkine(seven, q), qdot)
        for k in range(seven.n):
            numeric = (vec6(ahead[k]) - vec6(behind[k])) / (2 * h)
            assert_allclose(numeric, vec6(rates[k]), atol=1e-6)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_twists_follow_from_jacobians(self, n):
        chain = random_chain(seed=30 + n, n=n, prismatic_every=4)
        rng = np.random.default_rng(n)
        for _ in range(150):
            q, qdot, qddot = random_motion(rng, n)
            state = fkine(chain, q)
            twists = forward_recursion(chain, q, qdot, qddot, state)
            jacobians, derivatives = twist_jacobians(chain, q, qdot, state)
            for i in range(n):
                assert_allclose(vec6(twists.twists[i]), jacobians[i] @ qdot, atol=1e-10)
                assert_allclose(
                    vec6(twists.twist_derivatives[i]),
                    derivatives[i] @ qdot + jacobians[i] @ qddot,
                    atol=1e-9,
                )

    def test_twist_jacobian_is_padded(self, seven):
        jacobians, derivatives = twist_jacobians(seven, np.zeros(7))
        assert derivatives is None
        assert all(J.shape == (6, 7) for J in jacobians)
        assert not np.any(jacobians[0][:, 1:])

    def test_single_jacobian_accessors(self, seven, rng):
        q, qdot, _ = random_motion(rng, seven.n)
        both = twist_jacobians(seven, q, qdot)
        for mine, theirs in zip(twist_jacobian(seven, q), both.jacobians):
            assert_allclose(mine, theirs)
        for mine, theirs in zip(twist_jacobian_derivative(seven, q, qdot), both.derivatives):
            assert_allclose(mine, theirs)


class TestJointModels:
    def test_axis_must_be_unit(self):
        with pytest.raises(DomainError):
            JointModel.revolute((0.0, 0.0, 2.0))

    def test_custom_joint_needs_its_functions(self):
        with pytest.raises(ConfigurationError):
            JointModel.custom(motion=lambda q: Pose.identity(), screw=None, screw_derivative=None)

    def test_custom_revolute_matches_builtin(self, rng):
        chain = random_chain(seed=5, n=3)
        custom = JointModel.custom(
            motion=lambda q: Pose.rotation_about(chain.links[1].joint.axis, float(q)),
            screw=lambda q: PureDualQuaternion(chain.links[1].joint.axis_quaternion, Quaternion()),
            screw_derivative=lambda q: PureDualQuaternion.zero(),
        )
        links = list(chain.links)
        links[1] = Link(custom, links[1].params)
        other = SerialChain(tuple(links), chain.gravity)
        q, qdot, _ = random_motion(rng, 3)
        for a, b in zip(twist_jacobians(chain, q, qdot), twist_jacobians(other, q, qdot)):
            for x, y in zip(a, b):
                assert_allclose(x, y, atol=1e-12)


class TestRobotFiles:
    def test_load_pendulum(self, pendulum):
        assert pendulum.n == 1
        assert pendulum.name == "pendulum"
        assert_allclose(vec3(pendulum.gravity), [0.0, -9.81, 0.0])
        assert_allclose(pendulum.links[0].params.com_position(), [-0.5, 0.0, 0.0], atol=1e-15)

    def test_dump_and_parse_round_trip(self, seven, rng):
        data = json.loads(json.dumps(dump_robot(seven)))
        again = parse_robot(data)
        q = rng.uniform(-1.0, 1.0, size=7)
        for a, b in zip(fkine(seven, q).com_poses, fkine(again, q).com_poses):
            assert_allclose(vec8(a.value), vec8(b.value), atol=1e-12)

    def _pendulum_data(self):
        with open(fixture_path("pendulum.json")) as f:
            return json.load(f)

    def test_missing_field_names_the_link(self):
        data = self._pendulum_data()
        data["links"].append(dict(data["links"][0]))
        del data["links"][1]["mass"]
        with pytest.raises(SchemaError) as info:
            parse_robot(data)
        assert info.value.link_index == 2
        assert "link 2" in str(info.value)
        assert "mass" in str(info.value)

    @pytest.mark.parametrize(
        "field, value",
        [
            ("mass", -1.0),
            ("inertia", [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]]),
            ("inertia", [[1.0, 0.5, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]),
            ("com", [0.0, 0.0]),
            ("joint", {"type": "spherical"}),
            ("joint", {"type": "revolute", "axis": [1.0, 1.0, 0.0]}),
        ],
    )
    def test_invalid_link_values(self, field, value):
        data = self._pendulum_data()
        data["links"][0][field] = value
        with pytest.raises(SchemaError) as info:
            parse_robot(data)
        assert info.value.link_index == 1

    def test_invalid_json_reports_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "links": [\n    {,\n  ]\n}\n')
        with pytest.raises(SchemaError) as info:
            load_robot(str(path))
        assert info.value.line == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(SchemaError):
            load_robot(str(tmp_path / "absent.json"))

    def test_directory_is_not_a_robot_file(self, tmp_path):
        with pytest.raises(SchemaError) as info:
            load_robot(str(tmp_path))
        assert "cannot read robot file" in str(info.value)

    def test_undecodable_bytes_report_the_line(self, tmp_path):
        path = tmp_path / "robot.json"
        path.write_bytes(b'{\n  "name": "arm",\n  "links": [\xff]\n}\n')
        with pytest.raises(SchemaError) as info:
            load_robot(str(path))
        assert info.value.line == 3

    @pytest.mark.parametrize(
        "name", ["KUKA LWR4+ (synthetic)", "arm/left", "Roboterarm f\u00fcr Tests", "x" * 200]
    )
    def test_any_string_is_a_name(self, name):
        data = self._pendulum_data()
        data["name"] = name
        assert parse_robot(data).name == name

    def test_name_must_be_a_string(self):
        data = self._pendulum_data()
        data["name"] = 7
        with pytest.raises(SchemaError):
            parse_robot(data)

    def test_empty_links(self):
        with pytest.raises(SchemaError):
            parse_robot({"links": []})
