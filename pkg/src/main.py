import argparse
import logging
import sys

from dependencies.checker import check_dependencies

EXIT_OK = 0
EXIT_THRESHOLD = 1
EXIT_INPUT = 2


def status(message: str) -> None:
    """User-facing status line; data goes to standard output"""
    print(message, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    from config.settings import Settings

    parser = argparse.ArgumentParser(
        prog="dqdyn",
        description="Dual quaternion dynamics of serial manipulators",
    )
    parser.add_argument("--verbose", action="store_true", help="enable debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_robot_arguments(sub):
        sub.add_argument("--robot", metavar="PATH", help="robot description (JSON)")
        sub.add_argument("--builtin", choices=Settings.BUILTIN_ROBOTS, help="shipped robot")

    def add_output_argument(sub):
        sub.add_argument("--output", metavar="PATH", help="write the report to a file")

    idyn = subparsers.add_parser("idyn", help="inverse dynamics along a trajectory")
    add_robot_arguments(idyn)
    idyn.add_argument("--traj", metavar="PATH", required=True, help="trajectory CSV")
    idyn.add_argument("--method", choices=Settings.METHODS, default="dqne")
    add_output_argument(idyn)

    validate = subparsers.add_parser("validate", help="compare both formulations")
    add_robot_arguments(validate)
    validate.add_argument("--samples", type=int, default=Settings.DEFAULT_SAMPLES)
    validate.add_argument("--seed", type=int, default=Settings.DEFAULT_SEED)
    validate.add_argument(
        "--threshold",
        type=float,
        default=Settings.DEFAULT_THRESHOLD_PERCENT,
        help="largest accepted mean error, in percent",
    )
    add_output_argument(validate)

    cost = subparsers.add_parser("cost", help="operation counts of both formulations")
    cost.add_argument("--range", dest="n_range", default="1..7", help="N, A..B or A-B")
    cost.add_argument("--format", dest="output_format", choices=Settings.OUTPUT_FORMATS, default="csv")
    add_output_argument(cost)

    return parser


def run_command(args: argparse.Namespace) -> int:
    from cli import (
        TwoLinkParams,
        cmd_cost,
        cmd_idyn,
        cmd_validate,
        emit,
        load_trajectory,
        resolve_robot,
    )
    from config.settings import ValidationSettings
    from validation.validator import InputValidator

    if args.command == "idyn":
        chain = resolve_robot(args.robot, args.builtin)
        trajectory = load_trajectory(args.traj, chain.n)
        emit(cmd_idyn(chain, trajectory, args.method), args.output)
        status(f"✅ {len(trajectory)} rows computed with {args.method}")
        return EXIT_OK

    if args.command == "validate":
        samples = InputValidator.validate_sample_count(args.samples)
        threshold = InputValidator.validate_threshold(args.threshold)
        chain = resolve_robot(args.robot, args.builtin)
        settings = ValidationSettings(samples=samples, seed=args.seed, threshold_percent=threshold)
        oracle = TwoLinkParams() if args.builtin == "twolink" else None
        report = cmd_validate(chain, settings, oracle)
        emit(report.render(), args.output)
        if not report.passed:
            status(
                f"❌ mean error {report.worst_mean_percent():.3e} % exceeds {threshold:.3e} %"
            )
            return EXIT_THRESHOLD
        status(f"✅ all mean errors within {threshold:.3e} %")
        return EXIT_OK

    n_values = InputValidator.parse_n_range(args.n_range)
    emit(cmd_cost(n_values, args.output_format), args.output)
    return EXIT_OK


def main(argv=None) -> int:
    if not check_dependencies():
        return EXIT_INPUT

    from validation.errors import DynamicsError

    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")
    else:
        logging.basicConfig(level=logging.WARNING, format="⚠️  %(message)s")

    try:
        return run_command(args)
    except DynamicsError as e:
        status(f"❌ {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
