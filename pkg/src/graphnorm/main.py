"""
graphnorm - Entry Point
Parses the command line, runs the requested experiments and renders/stores their reports.
"""

import argparse
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# ruff: noqa: E402
from .config import Settings
from .experiments import ALL_COMMAND, COMMANDS, ExperimentContext, execute_all
from .models import ModelRegistry
from .storage import (
    ConditionViolationError,
    ConfigurationError,
    DomainViolationError,
    ExperimentReport,
    GraphNormError,
    IndexRangeError,
    LiteralSyntaxError,
    ReportStore,
    RuntimeGuardError,
    UnsupportedOperationError,
)
from .ui import display_error, display_report, display_run_summary, display_saved

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# flags that parse but describe an invalid configuration count as usage errors too
USAGE_ERRORS = (
    LiteralSyntaxError,
    DomainViolationError,
    ConditionViolationError,
    ConfigurationError,
    IndexRangeError,
    RuntimeGuardError,
    UnsupportedOperationError,
)

# options that never reach an experiment
RUN_ONLY_OPTIONS = ("command", "out", "csv", "eps", "workers")


def configure_logging(settings: Settings) -> None:
    """DEBUG (or GRAPHNORM_LOG_LEVEL) to the log file only; the console belongs to rich."""
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper()),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        handlers=[logging.FileHandler(settings.log_file)],
    )


def build_parser() -> argparse.ArgumentParser:
    """One subcommand per experiment plus `all` and `show`."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", choices=ModelRegistry.ids(), help="Bundled operator model")
    common.add_argument("--symbol", help="Polynomial symbol a_n for the diag model, e.g. 'n' or '2n^2+1'")
    common.add_argument("--phi", help="Vector literal(s) spanning M, separated by ';'")
    common.add_argument("--functional", help="H_{-1} functional literal(s), separated by ';'")
    common.add_argument("--psi", help="Vectors fed to the resolvent, separated by ';'")
    common.add_argument("--theta", help="Comma list of extension phases in (-pi, pi]")
    common.add_argument("--samples", type=int, help="Number of deterministic samples")
    common.add_argument("--seed", type=int, help="Sampling seed")
    common.add_argument("--eps", type=float, help="Certified-sum accuracy (overrides GRAPHNORM_EPS)")
    common.add_argument("--workers", type=int, help="Thread count (overrides GRAPHNORM_WORKERS)")
    common.add_argument("--out", help="Write the JSON report here")
    common.add_argument("--csv", help="Write the report rows as CSV here")

    parser = argparse.ArgumentParser(
        prog="graphnorm",
        description="Extensions, restrictions and self-adjoint extensions of unbounded operators, as reproducible experiments.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (definition, _) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=definition["description"], parents=[common])
        for key, argument in definition["arguments"].items():
            sub.add_argument(argument["flag"], dest=key, help=f"{argument['help']} (default {argument['default']})")
    subparsers.add_parser(ALL_COMMAND["name"], help=ALL_COMMAND["description"], parents=[common])
    show = subparsers.add_parser("show", help="Render a stored JSON report")
    show.add_argument("path", help="Path to a report written with --out")
    return parser


def _output_path(path: str, index: int, report: ExperimentReport, many: bool) -> str:
    if not many:
        return path
    p = Path(path)
    return str(p.with_name(f"{p.stem}.{index:02d}-{report.command}{p.suffix}"))


def save_reports(store: ReportStore, reports: list[ExperimentReport], out: str | None, csv_path: str | None) -> None:
    many = len(reports) > 1
    for i, report in enumerate(reports):
        if out:
            display_saved(str(store.save_json(report, _output_path(out, i, report, many))), "JSON")
        if csv_path:
            display_saved(str(store.save_csv(report, _output_path(csv_path, i, report, many))), "CSV")


def run(args: argparse.Namespace, settings: Settings) -> int:
    """
    Execute a parsed command line.

    Returns:
        Exit code: 0 if every report passes, 1 otherwise
    """
    store = ReportStore(settings.report_dir)
    if args.command == "show":
        report = store.load(args.path)
        display_report(report)
        return EXIT_PASS if report.passed else EXIT_FAIL

    options = {k: v for k, v in vars(args).items() if k not in RUN_ONLY_OPTIONS}
    ctx = ExperimentContext(settings, options)
    logger.info(f"Running {args.command} with {options}")

    if args.command == ALL_COMMAND["name"]:
        reports = execute_all(ctx, COMMANDS)
        for report in reports:
            display_report(report)
        display_run_summary(reports)
    else:
        _, execute = COMMANDS[args.command]
        reports = [execute(ctx)]
        display_report(reports[0])

    save_reports(store, reports, args.out, args.csv)
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    """
    graphnorm entry point.

    Args:
        argv: Command-line arguments (defaults to sys.argv[1:])

    Returns:
        0 if every requested experiment passes, 1 on a failed tolerance, 2 on a usage error
    """
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env().with_overrides(
            eps=getattr(args, "eps", None),
            workers=getattr(args, "workers", None),
        )
    except ConfigurationError as e:
        display_error(str(e))
        return EXIT_USAGE
    configure_logging(settings)

    try:
        return run(args, settings)
    except USAGE_ERRORS as e:
        logger.warning(f"Usage error: {e}")
        display_error(str(e))
        return EXIT_USAGE
    except (FileNotFoundError, ValueError) as e:
        display_error(str(e))
        return EXIT_USAGE
    except GraphNormError as e:
        logger.error(f"{type(e).__name__}: {e}", exc_info=True)
        display_error(f"{type(e).__name__}: {e}")
        return EXIT_FAIL
    except KeyboardInterrupt:
        display_error("Interrupted")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
