"""Exception hierarchy and the mapping from exceptions to CLI exit codes."""

import logging
from dataclasses import dataclass

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_PARSE = 2
EXIT_NOT_LAMAN = 3
EXIT_OVERFLOW = 4
EXIT_INCONCLUSIVE = 5


class LamanError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LamanError):
    """Invalid arguments: unknown edge ids, bad pivots, sizes out of range."""


class ParseError(InputError):
    """Malformed graph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotLamanError(InputError):
    """A Laman graph was required."""


class NotPseudoLamanError(InputError):
    """A pseudo-Laman bigraph was required."""


class LamanOverflowError(LamanError):
    """A count left the unsigned 64-bit range."""


class OracleInconclusiveError(LamanError):
    """Random trials never agreed within the retry cap."""


class OracleBudgetError(LamanError):
    """The Groebner basis computation exceeded its pair budget."""


class PivotDisagreementError(LamanError):
    """Different pivot choices produced different counts."""


class RecordConflictError(LamanError):
    """A fingerprint was recorded with two different Laman numbers."""


@dataclass
class ErrorResult:
    """How the command line reports an error."""

    message: str
    exit_code: int
    log_level: int = logging.ERROR


def handle_error(error: Exception) -> ErrorResult:
    """Map an exception to its message and exit code.

    Args:
        error: The exception raised while running a command.

    Returns:
        ErrorResult with the diagnostic message and exit code.
    """
    if isinstance(error, ParseError):
        return ErrorResult(f"Parse error: {error}", EXIT_PARSE)

    if isinstance(error, (NotLamanError, NotPseudoLamanError)):
        return ErrorResult(f"Not Laman: {error}", EXIT_NOT_LAMAN)

    if isinstance(error, LamanOverflowError):
        return ErrorResult(f"Overflow: {error}", EXIT_OVERFLOW)

    if isinstance(error, OracleInconclusiveError):
        return ErrorResult(f"Oracle inconclusive: {error}", EXIT_INCONCLUSIVE, logging.WARNING)

    if isinstance(error, LamanError):
        return ErrorResult(f"{type(error).__name__}: {error}", EXIT_OTHER)

    if isinstance(error, OSError):
        return ErrorResult(f"I/O error: {error}", EXIT_OTHER)

    logger.debug(f"Unexpected error ({type(error).__name__}): {error}")
    return ErrorResult(f"An unexpected error occurred: {type(error).__name__}: {error}", EXIT_OTHER)
