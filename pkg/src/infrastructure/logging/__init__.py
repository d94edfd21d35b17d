"""Infrastructure logging module."""
from src.infrastructure.logging.logger import (
    get_logger,
    get_logger_with_context,
    reconfigure_loggers,
)

__all__ = ["get_logger", "get_logger_with_context", "reconfigure_loggers"]
