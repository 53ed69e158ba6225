import argparse
import os
import sys
from typing import List, Optional

from loguru import logger

# Add the project directory to sys.path so core/, controllers/ and views/ import
current_dir = os.path.dirname(os.path.abspath(__file__))
if current_dir not in sys.path:
    sys.path.insert(0, current_dir)

from controllers.experiment_controller import EXIT_ERROR, ExperimentController
from core.config_loader import ConfigLoader
from core.dependency_validator import format_dependency_report, validate_or_raise
from core.exceptions import BierKitError, ConfigError
from views.report_view import ReportView

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level} | {message}"


def configure_logging(config: ConfigLoader) -> None:
    """Stderr sink at the configured level, plus an optional rotating file sink."""
    logger.remove()
    level = str(config.get("log_level")).upper()
    logger.add(sys.stderr, level=level, format=LOG_FORMAT)
    if config.get("log_to_file"):
        log_dir = config.get("log_dir")
        if not os.path.isabs(log_dir):
            log_dir = os.path.join(current_dir, log_dir)
        os.makedirs(log_dir, exist_ok=True)
        logger.add(os.path.join(log_dir, "bierkit_{time}.log"), level=level,
                   rotation="10 MB", format=LOG_FORMAT)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bierkit",
                                     description="Exact experiments on Bier spheres and deformation cones")
    parser.add_argument("--config", help="path to a JSON configuration file")
    sub = parser.add_subparsers(dest="command", required=True)

    bier = sub.add_parser("bier", help="build the Bier sphere of a simplicial complex")
    bier.add_argument("--complex", required=True, help="complex JSON path or builtin:<name>")
    bier.add_argument("--out", help="also write the sphere JSON here")

    verify = sub.add_parser("verify", help="check that a vertex matrix realizes a Bier sphere")
    verify.add_argument("--vertices", required=True, help="CSV with one point per row")
    verify.add_argument("--complex", required=True, help="complex JSON path or builtin:<name>")
    verify.add_argument("--round", type=int, dest="round_digits",
                        help="round every entry to this many decimal places first")
    verify.add_argument("--hull-out", help="write the HullResult JSON here")

    defcone = sub.add_parser("defcone", help="dimension of a deformation cone")
    source = defcone.add_mutually_exclusive_group(required=True)
    source.add_argument("--hypersimplex", metavar="N,K", help="median hypersimplex, n = 2k")
    source.add_argument("--complex", help="complex JSON, builtin:<name>, or fan JSON path")
    defcone.add_argument("--coarsen", choices=["diplo"], help="coarsen onto the diplo-simplex fan")
    defcone.add_argument("--rows", action="store_true", help="include the wall rows in the report")
    defcone.add_argument("--out", help="also write the report here")

    threshold = sub.add_parser("threshold", help="decide whether a complex is a threshold complex")
    threshold.add_argument("--complex", required=True, help="complex JSON path or builtin:<name>")
    threshold.add_argument("--out", help="also write the certificate here")

    minkowski = sub.add_parser("minkowski-check", help="permutahedron as a sum of hypersimplices")
    minkowski.add_argument("--n", type=int, required=True, help="length of x")
    minkowski.add_argument("--x", help="comma-separated non-increasing decimals (default n,...,1)")

    facial = sub.add_parser("facial", help="diplo-simplex face lattice and polar dual")
    facial.add_argument("--n", type=int, required=True)
    return parser


def dispatch(controller: ExperimentController, args: argparse.Namespace):
    if args.command == "bier":
        return controller.run_bier(args.complex, out=args.out)
    if args.command == "verify":
        return controller.run_verify(args.vertices, args.complex, round_digits=args.round_digits,
                                     hull_out=args.hull_out)
    if args.command == "defcone":
        return controller.run_defcone(hypersimplex_arg=args.hypersimplex, complex_ref=args.complex,
                                      coarsen=args.coarsen, out=args.out, include_rows=args.rows)
    if args.command == "threshold":
        return controller.run_threshold(args.complex, out=args.out)
    if args.command == "minkowski-check":
        return controller.run_minkowski_check(args.n, x=args.x)
    return controller.run_facial(args.n)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    view = ReportView()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    try:
        if args.config and not os.path.exists(args.config):
            raise ConfigError(f"Configuration file not found: {args.config}", path=args.config)
        config = ConfigLoader(args.config)
        configure_logging(config)
        logger.info(f"Starting bierkit {args.command}")

        report = validate_or_raise()
        for line in format_dependency_report(report):
            logger.debug(line)

        controller = ExperimentController(config)
        exit_code = view.render(dispatch(controller, args))
        logger.info(f"bierkit {args.command} finished with exit code {exit_code}")
        return exit_code
    except BierKitError as be:
        logger.error(f"{type(be).__name__}: {be}")
        view.error(str(be))
    except (OSError, ValueError) as e:
        logger.error(f"Error running {args.command}: {e}")
        view.error(str(e))
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
