import logging
import os
import sys
from contextlib import contextmanager

from django.core.management.base import CommandError

from .exceptions import DetailedError, PipeDreamsException

logger = logging.getLogger("pipedreams")

INVALID_INPUT = 2
CHECK_FAILED = 1


@contextmanager
def handle_pipedreams_errors(body=None):
    """
    Turn errors raised by the library into CommandErrors. Bad input exits with 2,
    a computation that could not finish (no preimage, class too large, ...) with 1.
    """
    try:
        yield
    except CommandError:
        raise
    except (ValueError, OSError) as ex:
        logger.debug("invalid input %r: %s", body, ex)
        raise CommandError(str(ex), returncode=INVALID_INPUT)
    except DetailedError as ex:
        logger.warning("computation failed for %r: %s", body, ex)
        raise CommandError(str(ex), returncode=CHECK_FAILED)
    except PipeDreamsException as ex:
        raise CommandError(str(ex), returncode=CHECK_FAILED)


def read_input(value: str) -> str:
    """A file name, "-" for stdin, or the literal text itself"""
    if value == "-":
        return sys.stdin.read()
    if os.path.exists(value):
        with open(value) as f:
            return f.read()
    return value
