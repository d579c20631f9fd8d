import argparse
import logging
import sys
from collections.abc import Sequence

from src import __version__
from src.cli.commands import (
    CommandContext,
    bench_command,
    check_command,
    count_command,
    generate_command,
    oracle_command,
)
from src.config import VALID_PIVOT_STRATEGIES, AppConfig, Settings, generate_default_config
from src.utils.errors import EXIT_OK, InputError, LamanError, handle_error

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting with argparse's own status."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(f"{self.prog}: {message}")


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help='edge-list file, or "-" for stdin')
    parser.add_argument("--graph6", action="store_true", help="read a graph6 string instead")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="laman", description="Count realizations of Laman graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="YAML config path (overrides LAMAN_CONFIG_PATH)")
    parser.add_argument("--records", help="run-record file (overrides LAMAN_RECORDS_PATH)")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    check = sub.add_parser("check", help="test the Laman property")
    _add_input(check)
    check.set_defaults(handler=check_command)

    count = sub.add_parser("count", help="compute the Laman number")
    _add_input(count)
    count.add_argument("--jobs", type=int, help="worker processes (0 = physical cores)")
    count.add_argument("--pivot-strategy", choices=VALID_PIVOT_STRATEGIES)
    count.add_argument("--no-early-zero", action="store_true", help="disable the twin-biedge shortcut")
    count.add_argument("--no-reuse", action="store_true", help="recompute even if a record exists")
    count.add_argument("--no-record", action="store_true", help="neither read nor write run records")
    count.set_defaults(handler=count_command)

    oracle = sub.add_parser("oracle", help="count solutions of the edge-length system")
    _add_input(oracle)
    oracle.add_argument("--seed", type=int)
    oracle.add_argument("--prime", type=int)
    oracle.add_argument("--jobs", type=int, help="worker processes for the trials")
    oracle.set_defaults(handler=oracle_command)

    generate = sub.add_parser("generate", help="list Laman graphs up to isomorphism")
    generate.add_argument("n", type=int, help="number of vertices")
    generate.add_argument("--output", help="write one edge-list file per graph into this directory")
    generate.add_argument("--jobs", type=int)
    generate.set_defaults(handler=generate_command)

    bench = sub.add_parser("bench", help="count every Laman graph up to a vertex bound")
    bench.add_argument("--max-vertices", type=int)
    bench.add_argument("--format", choices=("csv", "text"), default="csv")
    bench.add_argument("--jobs", type=int)
    bench.add_argument("--pivot-strategy", choices=("default", "first"))
    bench.add_argument("--no-early-zero", action="store_true")
    bench.set_defaults(handler=bench_command)

    return parser


def load_config(config_path: str | None) -> AppConfig:
    settings = Settings()
    if config_path:
        settings = settings.model_copy(update={"config_path": config_path})
    elif generate_default_config(settings.config_path):
        logger.info(f"Created default config at {settings.config_path}")
    return AppConfig(settings)


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)

    try:
        args = build_parser().parse_args(argv)
        config = load_config(args.config)
        logging.getLogger().setLevel(logging.DEBUG if args.verbose else config.log_level)
        args.handler(args, CommandContext(config=config, out=sys.stdout))
    except (LamanError, OSError, ValueError) as e:
        result = handle_error(e)
        logger.log(result.log_level, result.message)
        return result.exit_code
    return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
