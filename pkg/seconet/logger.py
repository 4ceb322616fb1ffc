# seconet/logger.py

import datetime
import json as _json
import logging
import os
import sys
from typing import Optional

from seconet.constants import (
    DEFAULT_LOG_LEVEL,
    LOG_DATE_FORMAT,
    LOG_ENV_VAR,
    LOG_FORMAT,
    LOG_FORMAT_ENV_VAR,
    LOGGER_NAME,
)


class JsonFormatter(logging.Formatter):
    """Emit one JSON object per log line, for batch jobs and log aggregation."""

    def format(self, record: logging.LogRecord) -> str:
        obj = {
            "ts":     datetime.datetime.fromtimestamp(
                record.created, tz=datetime.timezone.utc
            ).isoformat(),
            "level":  record.levelname,
            "logger": record.name,
            "msg":    record.getMessage(),
        }
        if record.exc_info:
            obj["exc"] = self.formatException(record.exc_info)
        return _json.dumps(obj, ensure_ascii=False)


def resolve_level(level: Optional[str] = None) -> str:
    """Pick the log level: explicit argument, then ``SECONET_LOG``, then the default."""
    candidate = level or os.environ.get(LOG_ENV_VAR) or DEFAULT_LOG_LEVEL
    candidate = candidate.strip().upper()
    if candidate not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        return DEFAULT_LOG_LEVEL
    return candidate


def setup_logging(
    level: Optional[str] = None,
    log_format: Optional[str] = None,
) -> logging.Logger:
    """
    Configure application logging on standard error.

    Args:
        level:      Log level string ("DEBUG", "INFO", "WARNING", "ERROR").
                    Falls back to the ``SECONET_LOG`` environment variable.
        log_format: ``"json"`` to emit one JSON object per line. Falls back to
                    the ``SECONET_LOG_FORMAT`` environment variable; anything
                    else uses the human-readable ``LOG_FORMAT`` constant.

    Returns:
        The "SeCoNet" logger instance.
    """
    # Remove any handlers attached in a previous call (e.g., during testing)
    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        handler.close()

    resolved = resolve_level(level)
    fmt = (log_format or os.environ.get(LOG_FORMAT_ENV_VAR, "")).lower()

    if fmt == "json":
        formatter: logging.Formatter = JsonFormatter()
    else:
        formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)

    root_logger.setLevel(getattr(logging, resolved))
    root_logger.addHandler(console_handler)

    logger = logging.getLogger(LOGGER_NAME)
    logger.debug("Logging initialised — level=%s format=%s", resolved, fmt or "text")
    return logger
