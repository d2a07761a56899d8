import argparse
import logging
import sys
from typing import List, Optional

from ramanujanpi import __version__
from ramanujanpi.cli.commands import COMMAND_HANDLERS
from ramanujanpi.cli.config import FORMATS, RunConfig, available_methods
from ramanujanpi.settings import VERIFY_DIGITS

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--out", dest="output_path", default=None, help="output file")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(
        prog="pi",
        description="Digits of pi from Ramanujan-type series for 1/pi.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser(
        "compute", parents=[common], help="print pi to a number of decimals"
    )
    compute.add_argument(
        "--method",
        required=True,
        help=f"one of {', '.join(available_methods())}",
    )
    compute.add_argument("--digits", type=int, required=True)
    compute.add_argument("--workers", type=int, default=1)

    verify = commands.add_parser(
        "verify", parents=[common], help="run the verification suite"
    )
    verify.add_argument("--digits", type=int, default=VERIFY_DIGITS)
    verify.add_argument("--tables", default=None, help="singular-value table file")

    commands.add_parser("catalog", parents=[common], help="list the series catalog")

    bench = commands.add_parser(
        "bench", parents=[common], help="compare the convergence of the catalog"
    )
    bench.add_argument("--digits", type=int, default=None)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``pi`` command.

    Returns
    -------
    status: int
        0 on success, 1 if verification fails, 2 on usage or domain errors. An
        ArithmeticError counts as a failed verification under ``verify`` and as an
        error (2) under every other command.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        cfg = RunConfig(
            command=args.command,
            method=getattr(args, "method", None),
            digits=getattr(args, "digits", None),
            output_path=args.output_path,
            format=args.format,
            tables=getattr(args, "tables", None),
            workers=getattr(args, "workers", 1),
            verbose=args.verbose,
        )
        logger.debug("running %s", cfg)
        return COMMAND_HANDLERS[cfg.command](cfg)
    except (ValueError, TypeError) as error:
        print(f"pi: error: {error}", file=sys.stderr)
        return 2
    except ArithmeticError as error:
        print(f"pi: error: {error}", file=sys.stderr)
        return 1 if args.command == "verify" else 2


if __name__ == "__main__":
    sys.exit(main())
