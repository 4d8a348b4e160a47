"""Command-line runner: one subcommand per experiment plus ``fit`` and ``plot``."""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from fiolab.client import FioLabClient
from fiolab.exceptions import FioLabError

from .config import MAX_SEED, ExperimentConfig, load_config
from .models import verdict_label
from .types import ExperimentKind

logger = logging.getLogger(__name__)

EXIT_FAILED_VERDICT = 1
EXIT_ERROR = 2

SUBCOMMANDS: dict[str, ExperimentKind] = {
    "sweep": "upper_bound_sweep",
    "sharpness": "knapp_sharpness",
    "embedding": "embedding",
    "flow": "flow_lemma",
    "tube": "tube_bound",
    "converge": "convergence",
    "oracle": "mean_oracle",
    "smoothing": "local_smoothing",
    "invariance": "invariance",
}


def _seed(value: str) -> int:
    seed = int(value)
    if not 0 <= seed <= MAX_SEED:
        msg = f"seed must lie in [0, {MAX_SEED}]"
        raise argparse.ArgumentTypeError(msg)
    return seed


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Returns:
        argparse.ArgumentParser: Parser with every subcommand registered.

    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--quiet",
        action="store_true",
        help="Log warnings and errors only",
    )
    experiment = argparse.ArgumentParser(add_help=False, parents=[common])
    experiment.add_argument(
        "--config",
        type=Path,
        default=None,
        help="JSON experiment document; defaults apply when omitted",
    )
    experiment.add_argument(
        "--out",
        type=Path,
        default=None,
        help="Directory receiving CSV and SVG reports",
    )
    experiment.add_argument(
        "--seed",
        type=_seed,
        default=None,
        help="Unsigned 64-bit seed overriding the document",
    )

    parser = argparse.ArgumentParser(
        prog="fiolab",
        description="Numerical experiments on maximal functions of FIOs",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, kind in SUBCOMMANDS.items():
        commands.add_parser(name, parents=[experiment], help=f"Run {kind}")
    fit = commands.add_parser("fit", parents=[common], help="Re-fit report CSVs")
    fit.add_argument("reports", type=Path, nargs="+")
    plot = commands.add_parser("plot", parents=[common], help="Render report CSVs")
    plot.add_argument("reports", type=Path, nargs="+")
    return parser


def _run_experiment(client: FioLabClient, args: argparse.Namespace) -> int:
    kind = SUBCOMMANDS[args.command]
    config = load_config(args.config) if args.config else ExperimentConfig()
    config = config.resolved(kind, seed=args.seed, output_dir=args.out)
    run = client.lab.run(config)
    for report, files in zip(run.reports, run.artifacts, strict=True):
        sys.stdout.write(f"{files[0]} {verdict_label(report.verdict)}\n")
    return 0 if run.passed else EXIT_FAILED_VERDICT


def _refit(client: FioLabClient, paths: Sequence[Path]) -> int:
    passed = True
    for path in paths:
        report = client.lab.refit(path)
        verdict = report.verdict
        passed = passed and verdict is not False
        sys.stdout.write(
            f"{path} slope={report.slope!r} residual={report.max_residual!r} "
            f"predicted={report.predicted!r} verdict={verdict_label(verdict)}\n",
        )
    return 0 if passed else EXIT_FAILED_VERDICT


def _plot(client: FioLabClient, paths: Sequence[Path]) -> int:
    for path in paths:
        sys.stdout.write(f"{client.lab.render(path)}\n")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name, ``sys.argv`` when omitted.

    Returns:
        int: 0 when every verdict passes, 1 on a failed verdict, 2 on an error.

    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    client = FioLabClient()
    try:
        if args.command == "fit":
            return _refit(client, args.reports)
        if args.command == "plot":
            return _plot(client, args.reports)
        return _run_experiment(client, args)
    except FioLabError:
        logger.exception("%s failed", args.command)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
