import logging
import sys
from argparse import ArgumentParser
from typing import Any, TextIO

from ..errors import (
    CommandError,
    InvalidControllerError,
    InvalidSweepParameterError,
    ScenarioError,
    SingularMassError,
)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FALL = 2


class OutputWrapper:
    """
    Thin wrapper around a text stream that terminates every message with a newline.
    """

    def __init__(self, out: TextIO, ending: str = "\n"):
        self._out = out
        self.ending = ending

    def write(self, msg: str = "", ending: str = None) -> None:
        ending = self.ending if ending is None else ending

        if ending and not msg.endswith(ending):
            msg += ending

        self._out.write(msg)

    def flush(self) -> None:
        if hasattr(self._out, "flush"):
            self._out.flush()


class BaseCommand:
    """
    One `rodwheel` subcommand. Subclasses declare their arguments in `add_arguments` and do the
    work in `handle`, which returns the exit code.
    """

    help = ""

    def __init__(self, stdout: TextIO = None, stderr: TextIO = None):
        self.stdout = OutputWrapper(stdout or sys.stdout)
        self.stderr = OutputWrapper(stderr or sys.stderr)

    def add_arguments(self, parser: ArgumentParser) -> None:
        pass

    def handle(self, *args, **options) -> int:
        raise NotImplementedError(
            "Subclasses of BaseCommand must provide a handle() method"
        )

    def execute(self, *args, **options: Any) -> int:
        """
        Runs `handle` and maps expected failures to exit code 1 with a message on stderr.
        """

        try:
            return self.handle(*args, **options)
        except ScenarioError as e:
            self.stderr.write(f"Error: {e}")

            for location in e.locations or []:
                self.stderr.write(f"  searched: {location}")

            return EXIT_ERROR
        except (
            CommandError,
            InvalidControllerError,
            InvalidSweepParameterError,
        ) as e:
            self.stderr.write(f"Error: {e}")

            return EXIT_ERROR
        except SingularMassError as e:
            logger.exception(e)
            self.stderr.write(f"Solver error: {e}")

            return EXIT_ERROR
