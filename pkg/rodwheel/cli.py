import argparse
import logging
import sys
from typing import List, Optional, TextIO

from . import __version__
from .commands import COMMANDS
from .settings import configure


logger = logging.getLogger(__name__)

VERBOSITY_LEVELS = {
    0: logging.WARNING,
    1: logging.INFO,
    2: logging.DEBUG,
}


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rodwheel",
        description=(
            "Simulate and audit the rodwheel: a rolling disk balancing a motorized rod"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v",
        "--verbosity",
        type=int,
        choices=sorted(VERBOSITY_LEVELS),
        default=0,
        help="0 = warnings, 1 = run progress, 2 = debug details",
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        help="Enable timing logs on the 'profile' logger",
    )

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    for (name, command_class) in COMMANDS.items():
        subparser = subparsers.add_parser(name, help=command_class.help)
        command_class().add_arguments(subparser)

    return parser


def main(
    argv: Optional[List[str]] = None, stdout: TextIO = None, stderr: TextIO = None
) -> int:
    """
    Entry point of the `rodwheel` console script.

    Returns:
        0 on success, 1 on usage, configuration or solver errors and 2 when a simulation fell.
    """

    parser = create_parser()

    try:
        options = vars(parser.parse_args(argv))
    except SystemExit as e:
        return 0 if e.code == 0 else 1

    logging.basicConfig(
        level=VERBOSITY_LEVELS[options.pop("verbosity")],
        format="%(levelname)s %(name)s: %(message)s",
    )

    if options.pop("debug"):
        configure(DEBUG=True)

    command = COMMANDS[options.pop("command")](stdout=stdout, stderr=stderr)

    return command.execute(**options)


if __name__ == "__main__":
    sys.exit(main())
