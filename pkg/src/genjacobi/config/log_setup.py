"""structlog wiring for the command line."""

import logging
import os
import sys
from typing import Optional

import structlog

from genjacobi.errors import ParseError

LOG_LEVEL_ENV = "GENJACOBI_LOG_LEVEL"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def resolve_level(level: Optional[str] = None) -> int:
    """
    Numeric level from the environment override, then `level`, then INFO.

    Raises:
        ParseError: the chosen name is not a standard level
    """
    override = os.getenv(LOG_LEVEL_ENV)
    name = (override or level or "INFO").upper()
    if name not in LOG_LEVELS:
        source = LOG_LEVEL_ENV if override else "logging.level"
        raise ParseError(f"unknown log level {name!r} in {source}", key=source)
    return logging.getLevelName(name)


def configure_logging(level: Optional[str] = None, json: bool = False) -> None:
    """
    Configure structlog once per process.

    Output goes to stderr so reports printed on stdout stay clean.
    """
    renderer = structlog.processors.JSONRenderer() if json else structlog.dev.ConsoleRenderer()
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(resolve_level(level)),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
