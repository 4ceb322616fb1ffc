"""
Decorator utilities.

``exit_codes`` turns a CLI command into one that never raises: configuration
and usage problems map to exit code 1, anything else to 2.
"""

import functools
import logging

from seconet.constants import CLI_LOGGER_NAME, EXIT_CONFIG_ERROR, EXIT_RUNTIME_ERROR
from seconet.exceptions import ConfigurationError


def exit_codes(func):
    """
    Wrap a ``_cmd_*`` function so exceptions become exit codes.

    Usage:
        @exit_codes
        def _cmd_sweep(args) -> int:
            ...
    """
    logger = logging.getLogger(CLI_LOGGER_NAME)

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except ConfigurationError as e:
            logger.error("Configuration error: %s", e.message)
            logger.debug("Traceback for %s", func.__qualname__, exc_info=True)
            return EXIT_CONFIG_ERROR
        except KeyboardInterrupt:
            logger.error("Interrupted")
            return EXIT_RUNTIME_ERROR
        except Exception as e:
            logger.exception("Exception in %s: %s", func.__qualname__, e)
            return EXIT_RUNTIME_ERROR

    return wrapper
