"""Structured logging configuration for the command-line tools."""
import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Any

# Attributes every LogRecord carries; anything else arrived through ``extra=``.
_RESERVED_ATTRS = frozenset(
    vars(logging.LogRecord("", logging.INFO, "", 0, "", None, None)).keys()
) | {"message", "asctime", "extra_fields"}

# Names of loggers set up by get_logger
_configured: set[str] = set()


class JSONLogFormatter(logging.Formatter):
    """JSON-lines formatter; one object per record."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as a single JSON line."""
        log_data: dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        # Fields passed as logger.info(..., extra={...})
        for key, value in vars(record).items():
            if key not in _RESERVED_ATTRS:
                log_data[key] = value

        # Context fields from LoggerAdapter
        if hasattr(record, "extra_fields"):
            log_data.update(record.extra_fields)

        return json.dumps(log_data, default=str)


def get_logger(name: str) -> logging.Logger:
    """
    Get a configured logger instance.

    Args:
        name: Logger name (usually __name__ of the module)

    Returns:
        Configured logger instance writing to stderr
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        # stdout carries reports and CSV, logs go to stderr
        logger.addHandler(logging.StreamHandler(sys.stderr))
        logger.propagate = False
        _configured.add(name)
        _apply_settings(logger)

    return logger


def _apply_settings(logger: logging.Logger) -> None:
    log_level = os.getenv("LOG_LEVEL", "INFO").upper()
    logger.setLevel(getattr(logging, log_level, logging.INFO))

    environment = os.getenv("ENVIRONMENT", "production")
    for handler in logger.handlers:
        handler.setLevel(logger.level)
        if environment == "production":
            handler.setFormatter(JSONLogFormatter())
        else:
            formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
            handler.setFormatter(formatter)


def reconfigure_loggers() -> None:
    """Re-read LOG_LEVEL and ENVIRONMENT for every logger created by get_logger.

    Module-level loggers exist before a .env file is loaded; call this afterwards.
    """
    for name in sorted(_configured):
        _apply_settings(logging.getLogger(name))


class LoggerAdapter(logging.LoggerAdapter):  # type: ignore[type-arg]
    """Logger adapter with support for extra fields."""

    def process(self, msg: str, kwargs: Any) -> tuple[str, Any]:
        """Merge the adapter context into the record's extra fields."""
        extra = dict(kwargs.get("extra", {}))
        if self.extra:
            extra.update(self.extra)
        kwargs["extra"] = {"extra_fields": extra}
        return msg, kwargs


def get_logger_with_context(name: str, **context: Any) -> LoggerAdapter:
    """
    Get a logger with context fields that will be included in every log.

    Args:
        name: Logger name
        **context: Context fields to include in all logs

    Returns:
        Logger adapter with context
    """
    logger = get_logger(name)
    return LoggerAdapter(logger, context)
