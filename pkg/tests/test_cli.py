"""Command-line front end: oracle, idyn, validate and cost"""

import math

import numpy as np
import pytest
import sympy
from numpy.testing import assert_allclose

import cli
import main
from cli import (
    TwoLinkParams,
    analytical_two_link,
    cmd_cost,
    cmd_idyn,
    cmd_validate,
    cost_header,
    emit,
    error_stats,
    load_builtin,
    load_trajectory,
    parse_trajectory,
    resolve_robot,
    save_report,
    trajectory_header,
)
from config.settings import ValidationSettings
from conftest import fixture_path
from dqne import inverse_dynamics
from gplc import el_inverse_dynamics
from validation.errors import InputError, SchemaError
from validation.validator import InputValidator


def lagrangian_two_link(params: TwoLinkParams):
    """Torque expressions of the planar arm, derived symbolically"""
    t = sympy.Symbol("t")
    q1, q2 = sympy.Function("q1")(t), sympy.Function("q2")(t)
    p = params
    x1, y1 = p.lc1 * sympy.cos(q1), p.lc1 * sympy.sin(q1)
    x2 = p.l1 * sympy.cos(q1) + p.lc2 * sympy.cos(q1 + q2)
    y2 = p.l1 * sympy.sin(q1) + p.lc2 * sympy.sin(q1 + q2)

    def speed2(x, y):
        return sympy.diff(x, t) ** 2 + sympy.diff(y, t) ** 2

    kinetic = (
        sympy.Rational(1, 2) * p.m1 * speed2(x1, y1)
        + sympy.Rational(1, 2) * p.I1 * sympy.diff(q1, t) ** 2
        + sympy.Rational(1, 2) * p.m2 * speed2(x2, y2)
        + sympy.Rational(1, 2) * p.I2 * (sympy.diff(q1, t) + sympy.diff(q2, t)) ** 2
    )
    potential = p.m1 * p.g * y1 + p.m2 * p.g * y2
    L = kinetic - potential

    torques = []
    for q in (q1, q2):
        qd = sympy.diff(q, t)
        torques.append(sympy.diff(sympy.diff(L, qd), t) - sympy.diff(L, q))

    symbols = sympy.symbols("a1 a2 b1 b2 c1 c2")
    replace = {
        sympy.diff(q1, t, 2): symbols[4],
        sympy.diff(q2, t, 2): symbols[5],
    }
    first = {sympy.diff(q1, t): symbols[2], sympy.diff(q2, t): symbols[3]}
    plain = {q1: symbols[0], q2: symbols[1]}
    expressions = [tau.subs(replace).subs(first).subs(plain) for tau in torques]
    return sympy.lambdify(symbols, expressions, "numpy")


class TestOracle:
    def test_matches_symbolic_lagrangian(self, rng):
        params = TwoLinkParams()
        reference = lagrangian_two_link(params)
        for _ in range(25):
            q = rng.uniform(-math.pi, math.pi, size=2)
            qdot = rng.uniform(-2.0, 2.0, size=2)
            qddot = rng.uniform(-5.0, 5.0, size=2)
            expected = np.array(reference(*q, *qdot, *qddot), dtype=float)
            assert_allclose(analytical_two_link(params, q, qdot, qddot), expected, rtol=1e-12, atol=1e-12)

    def test_static_arm(self):
        tau = analytical_two_link(TwoLinkParams(), [0.0, 0.0], [0.0, 0.0], [0.0, 0.0])
        assert_allclose(tau, [3.1 * 9.81, 0.6 * 9.81], atol=1e-12)

    def test_massless_second_link_is_a_pendulum(self):
        params = TwoLinkParams(m2=0.0, I2=0.0)
        q, qddot = 0.4, 1.7
        tau = analytical_two_link(params, [q, -0.3], [0.8, 0.5], [qddot, 2.0])
        pendulum = (params.m1 * params.lc1**2 + params.I1) * qddot + params.m1 * params.lc1 * params.g * math.cos(q)
        assert tau[0] == pytest.approx(pendulum, rel=1e-12)
        assert tau[1] == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("engine", [inverse_dynamics, el_inverse_dynamics], ids=["dqne", "dqgp"])
    def test_engines_match_the_oracle(self, engine, twolink, rng):
        for _ in range(50):
            q = rng.uniform(-math.pi, math.pi, size=2)
            qdot = rng.uniform(-2.0, 2.0, size=2)
            qddot = rng.uniform(-5.0, 5.0, size=2)
            assert_allclose(
                engine(twolink, q, qdot, qddot),
                analytical_two_link(TwoLinkParams(), q, qdot, qddot),
                rtol=1e-9,
                atol=1e-9,
            )


class TestTrajectory:
    def test_header(self):
        assert trajectory_header(2) == ["t", "q1", "q2", "qdot1", "qdot2", "qddot1", "qddot2"]

    def test_load(self):
        trajectory = load_trajectory(fixture_path("pendulum_traj.csv"), 1)
        assert len(trajectory) == 3
        assert_allclose(trajectory.times, [0.0, 0.1, 0.2])
        assert_allclose(trajectory.qddot[:, 0], [0.0, -2.0, 3.0])

    def test_blank_lines_are_skipped(self):
        trajectory = parse_trajectory("t,q1,qdot1,qddot1\n\n0,0,0,0\n\n1,0,0,0\n", 1)
        assert len(trajectory) == 2

    def test_empty(self):
        assert len(load_trajectory(fixture_path("empty_traj.csv"), 1)) == 0
        assert len(parse_trajectory("", 1)) == 0

    @pytest.mark.parametrize(
        "text, line",
        [
            ("t,q1,qdot1\n0,0,0\n", 1),
            ("0.0,0,0,0\n1.0,0,0,0\n", 1),
            ("t,q,qd,qdd\n0,0,0,0\n", 1),
            ("t,q1,qdot1,qddot1\n0,0,0,0\n1,0,0\n", 3),
            ("t,q1,qdot1,qddot1\n0,0,abc,0\n", 2),
            ("t,q1,qdot1,qddot1\n0,0,0,0\n1,inf,0,0\n", 3),
            ("t,q1,qdot1,qddot1\n0,0,0,0\n0,0,0,0\n", 3),
            ("t,q1,qdot1,qddot1\n1,0,0,0\n0.5,0,0,0\n", 3),
        ],
        ids=[
            "header",
            "no-header",
            "misspelled-header",
            "width",
            "number",
            "finite",
            "repeated-time",
            "decreasing-time",
        ],
    )
    def test_errors_report_the_line(self, text, line):
        with pytest.raises(SchemaError) as info:
            parse_trajectory(text, 1)
        assert info.value.line == line
        assert str(info.value).startswith(f"line {line}")

    def test_missing_file(self, tmp_path):
        with pytest.raises(SchemaError):
            load_trajectory(str(tmp_path / "absent.csv"), 1)

    def test_undecodable_bytes_report_the_line(self, tmp_path):
        path = tmp_path / "traj.csv"
        path.write_bytes(b"t,q1,qdot1,qddot1\n0,0,0,0\n1,\xff,0,0\n")
        with pytest.raises(SchemaError) as info:
            load_trajectory(str(path), 1)
        assert info.value.line == 3

    def test_byte_order_mark_is_accepted(self, tmp_path):
        path = tmp_path / "traj.csv"
        path.write_bytes("\ufefft,q1,qdot1,qddot1\n0,0,0,0\n".encode("utf-8"))
        assert len(load_trajectory(str(path), 1)) == 1


class TestIdyn:
    def test_pendulum_torques(self, pendulum):
        trajectory = load_trajectory(fixture_path("pendulum_traj.csv"), 1)
        lines = cmd_idyn(pendulum, trajectory, "dqne").splitlines()
        assert lines[0] == "t,tau1"
        assert len(lines) == 4
        t, tau = (float(v) for v in lines[1].split(","))
        assert t == 0.0
        assert tau == pytest.approx(4.905, abs=1e-12)

    def test_methods_agree(self, pendulum):
        trajectory = load_trajectory(fixture_path("pendulum_traj.csv"), 1)
        ne = cmd_idyn(pendulum, trajectory, "dqne").splitlines()[1:]
        gp = cmd_idyn(pendulum, trajectory, "dqgp").splitlines()[1:]
        for a, b in zip(ne, gp):
            assert_allclose([float(v) for v in a.split(",")], [float(v) for v in b.split(",")], atol=1e-12)

    def test_empty_trajectory_prints_nothing(self, pendulum):
        assert cmd_idyn(pendulum, load_trajectory(fixture_path("empty_traj.csv"), 1), "dqne") == ""

    def test_unknown_method(self, pendulum):
        with pytest.raises(InputError):
            cmd_idyn(pendulum, load_trajectory(fixture_path("pendulum_traj.csv"), 1), "rnea")


class TestValidate:
    def test_twolink_against_the_oracle(self, twolink):
        settings = ValidationSettings(samples=2000, seed=3)
        report = cmd_validate(twolink, settings, TwoLinkParams())
        assert report.baseline == "analytical"
        assert set(report.results) == {"dqne", "dqgp"}
        assert report.passed
        assert report.worst_mean_percent() <= 1e-6
        for stats in report.results.values():
            assert stats.max_relative.max() <= 1e-8

    @pytest.mark.slow
    def test_twolink_full_run(self, twolink):
        report = cmd_validate(twolink, ValidationSettings(), TwoLinkParams())
        assert report.passed

    def test_seven_links_between_formulations(self, seven):
        report = cmd_validate(seven, ValidationSettings(samples=200))
        assert report.baseline == "dqne"
        assert report.passed
        assert report.results["dqgp"].max_relative.max() <= 1e-8

    @pytest.mark.slow
    def test_seven_links_full_run(self, seven):
        report = cmd_validate(seven, ValidationSettings())
        assert report.results["dqgp"].max_relative.max() <= 1e-8

    def test_report_is_deterministic(self, twolink):
        settings = ValidationSettings(samples=100, seed=11)
        first = cmd_validate(twolink, settings, TwoLinkParams()).render()
        second = cmd_validate(twolink, settings, TwoLinkParams()).render()
        assert first == second
        lines = first.splitlines()
        assert lines[0].startswith("# robot twolink")
        assert lines[1] == "method,joint,mean_error_percent,std_error_percent,max_relative_error,excluded"
        assert len(lines) == 2 + 2 * 2

    def test_oracle_needs_two_joints(self, seven):
        with pytest.raises(InputError):
            cmd_validate(seven, ValidationSettings(samples=10), TwoLinkParams())

    def test_sample_count_must_be_positive(self, twolink):
        with pytest.raises(InputError):
            cmd_validate(twolink, ValidationSettings(samples=0))

    def test_near_zero_baseline_is_excluded(self, caplog):
        baseline = np.array([[1.0, 0.0], [2.0, 1e-12], [4.0, 3.0]])
        values = baseline * 1.01
        with caplog.at_level("WARNING", logger="cli.stats"):
            stats = error_stats(values, baseline)
        assert stats.excluded.tolist() == [0, 2]
        assert_allclose(stats.mean_percent, [1.0, 1.0])
        assert "Excluded" in caplog.text

    def test_all_excluded_gives_zero_statistics(self):
        stats = error_stats(np.ones((3, 1)), np.zeros((3, 1)))
        assert stats.excluded.tolist() == [3]
        assert not stats.exceeds(0.0)


class TestCost:
    def test_csv_rows(self):
        lines = cmd_cost(range(1, 4), "csv").splitlines()
        assert len(lines) == 4
        assert lines[0].split(",") == cost_header()
        assert len(cost_header()) == 27

    def test_csv_values(self):
        header = cost_header()
        row = dict(zip(header, cmd_cost([7], "csv").splitlines()[1].split(",")))
        assert row["dqne_total_mults"] == "6126"
        assert row["dqne_total_adds"] == "5028"
        assert row["classic_ne_mults"] == "1002"
        row = dict(zip(header, cmd_cost([2], "csv").splitlines()[1].split(",")))
        assert row["dqgp_total_mults"] == "2378"

    def test_table(self):
        text = cmd_cost([1, 2], "table")
        assert text.startswith("n = 1")
        assert "n = 2" in text
        assert any(line.split()[:4] == ["dqne", "total", "834", "684"] for line in text.splitlines())

    def test_rejects_bad_arguments(self):
        with pytest.raises(InputError):
            cmd_cost([], "csv")
        with pytest.raises(InputError):
            cmd_cost([1], "xml")


class TestInputs:
    @pytest.mark.parametrize("text, expected", [("3", [3]), ("1..3", [1, 2, 3]), ("2-4", [2, 3, 4])])
    def test_n_range(self, text, expected):
        assert list(InputValidator.parse_n_range(text)) == expected

    @pytest.mark.parametrize("text", ["", "0", "3..1", "a..b", "1..2..3"])
    def test_bad_n_range(self, text):
        with pytest.raises(InputError):
            InputValidator.parse_n_range(text)

    def test_threshold(self, twolink):
        assert InputValidator.validate_threshold(0.0) == 0.0
        with pytest.raises(InputError):
            InputValidator.validate_threshold(-1e-9)
        with pytest.raises(InputError):
            cmd_validate(twolink, ValidationSettings(samples=5, threshold_percent=-1.0))

    def test_robot_selection(self):
        assert load_builtin("seven").n == 7
        assert resolve_robot(fixture_path("pendulum.json"), None).n == 1
        with pytest.raises(InputError):
            resolve_robot(None, None)
        with pytest.raises(InputError):
            resolve_robot(fixture_path("pendulum.json"), "seven")
        with pytest.raises(InputError):
            load_builtin("puma")

    def test_save_report(self, tmp_path):
        path = tmp_path / "report.csv"
        save_report(str(path), "a,b\n")
        assert path.read_text() == "a,b\n"
        assert not (tmp_path / "report.csv.tmp").exists()

    def test_save_report_to_missing_directory(self, tmp_path):
        with pytest.raises(InputError):
            save_report(str(tmp_path / "missing" / "report.csv"), "x")

    def test_emit_to_stream(self, capsys):
        emit("hello\n")
        assert capsys.readouterr().out == "hello\n"


class TestMain:
    def test_cost(self, capsys):
        assert main.main(["cost", "--range", "1..3"]) == main.EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 4

    def test_idyn(self, capsys):
        code = main.main(
            ["idyn", "--robot", fixture_path("pendulum.json"), "--traj", fixture_path("pendulum_traj.csv")]
        )
        assert code == main.EXIT_OK
        out = capsys.readouterr()
        assert float(out.out.splitlines()[1].split(",")[1]) == pytest.approx(4.905, abs=1e-12)
        assert "3 rows" in out.err

    def test_validate_passes(self, capsys):
        code = main.main(["validate", "--builtin", "twolink", "--samples", "100"])
        assert code == main.EXIT_OK
        assert capsys.readouterr().out.startswith("# robot twolink")

    def test_validate_threshold_failure(self, monkeypatch, capsys):
        # the reference arm is 10 % heavier in its second link than the robot
        monkeypatch.setattr(cli, "TwoLinkParams", lambda: TwoLinkParams(m2=1.65))
        code = main.main(["validate", "--builtin", "twolink", "--samples", "20", "--threshold", "1"])
        assert code == main.EXIT_THRESHOLD
        assert "exceeds" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "argv",
        [
            ["validate", "--builtin", "twolink", "--samples", "0"],
            ["validate", "--samples", "10"],
            ["idyn", "--robot", "/nonexistent/robot.json", "--traj", "/nonexistent/traj.csv"],
            ["idyn", "--builtin", "seven", "--traj", "pendulum_traj.csv"],
            ["cost", "--range", "0..2"],
            ["validate", "--builtin", "twolink", "--samples", "10", "--threshold", "-1"],
        ],
        ids=["samples", "no-robot", "missing-file", "missing-traj", "range", "negative-threshold"],
    )
    def test_input_errors(self, argv, capsys):
        argv = [fixture_path(a) if a == "pendulum_traj.csv" else a for a in argv]
        assert main.main(argv) == main.EXIT_INPUT
        assert "❌" in capsys.readouterr().err

    @pytest.mark.parametrize("option", ["--robot", "--traj"])
    @pytest.mark.parametrize("kind", ["directory", "not-utf8"])
    def test_unreadable_inputs_are_input_errors(self, option, kind, tmp_path, capsys):
        paths = {"--robot": fixture_path("pendulum.json"), "--traj": fixture_path("pendulum_traj.csv")}
        broken = tmp_path / "input"
        if kind == "directory":
            broken.mkdir()
        else:
            broken.write_bytes(b"\xff\xfe\x00\x01")
        paths[option] = str(broken)
        code = main.main(["idyn", "--robot", paths["--robot"], "--traj", paths["--traj"]])
        assert code == main.EXIT_INPUT
        assert "❌" in capsys.readouterr().err

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "cost.csv"
        assert main.main(["cost", "--range", "2", "--output", str(path)]) == main.EXIT_OK
        assert capsys.readouterr().out == ""
        assert path.read_text().splitlines()[1].startswith("2,")

    def test_usage_errors_exit_through_argparse(self):
        with pytest.raises(SystemExit) as info:
            main.main([])
        assert info.value.code == 2
