"""
heapkit Logging Configuration

Logging outputs:
- Console (colored, stderr)
- File (rotating, optional)
- JSON (serialized records, optional)
"""

from __future__ import annotations

import functools
import sys
from collections.abc import Callable
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, TypeVar

from loguru import logger

F = TypeVar("F", bound=Callable[..., Any])

DEFAULT_LOG_DIR = Path.home() / ".heapkit" / "logs"
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} | {message}"


class LogLevel(Enum):
    """Log levels with numeric values."""

    TRACE = 5
    DEBUG = 10
    INFO = 20
    SUCCESS = 25
    WARNING = 30
    ERROR = 40
    CRITICAL = 50

    @classmethod
    def parse(cls, name: str) -> LogLevel:
        try:
            return cls[name.upper()]
        except KeyError as e:
            raise ValueError(f"Unknown log level: {name}") from e


@dataclass
class LogConfig:
    """Logging configuration."""

    console_enabled: bool = True
    console_level: LogLevel = LogLevel.WARNING
    console_format: str = (
        "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
    )

    file_enabled: bool = False
    file_level: LogLevel = LogLevel.DEBUG
    file_path: Path = field(default_factory=lambda: DEFAULT_LOG_DIR / "heapkit.log")
    file_rotation: str = "10 MB"
    file_retention: str = "7 days"

    json_enabled: bool = False
    json_path: Path = field(default_factory=lambda: DEFAULT_LOG_DIR / "heapkit.json")


def setup_logging(config: LogConfig | None = None) -> None:
    """
    Configure heapkit logging.

    Args:
        config: Logging configuration (uses defaults if None)
    """
    if config is None:
        config = LogConfig()

    logger.remove()

    if config.console_enabled:
        logger.add(
            sys.stderr,
            format=config.console_format,
            level=config.console_level.name,
            colorize=True,
        )

    if config.file_enabled:
        config.file_path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            str(config.file_path),
            format=FILE_FORMAT,
            level=config.file_level.name,
            rotation=config.file_rotation,
            retention=config.file_retention,
            enqueue=True,
        )

    if config.json_enabled:
        config.json_path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            str(config.json_path),
            format="{message}",
            level=config.file_level.name,
            rotation=config.file_rotation,
            retention=config.file_retention,
            serialize=True,
            enqueue=True,
        )

    logger.debug(f"Logging initialized (console={config.console_level.name})")


def get_logger(name: str = "heapkit") -> Any:
    """Get a logger bound to a component name."""
    return logger.bind(name=name)


def log_function_call(func: F) -> F:
    """Decorator to log calls to catalog and verification entry points."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        func_logger = get_logger(func.__module__)
        func_logger.debug(
            f"Calling {func.__name__}", args=str(args)[:100], kwargs=str(kwargs)[:100]
        )
        try:
            result = func(*args, **kwargs)
            func_logger.debug(f"Completed {func.__name__}", result_type=type(result).__name__)
            return result
        except Exception as e:
            func_logger.debug(f"Error in {func.__name__}: {e}")
            raise

    return wrapper  # type: ignore[return-value]


class LogPerformance:
    """Context manager for performance logging."""

    def __init__(self, operation: str, logger_name: str = "performance"):
        self.operation = operation
        self.logger = get_logger(logger_name)
        self.start_time: datetime | None = None
        self.duration_ms: float = 0.0

    def __enter__(self) -> LogPerformance:
        self.start_time = datetime.now()
        self.logger.debug(f"Starting: {self.operation}")
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> bool:
        if self.start_time is not None:
            self.duration_ms = (datetime.now() - self.start_time).total_seconds() * 1000
        if exc_type:
            self.logger.warning(
                f"Failed: {self.operation}", duration_ms=self.duration_ms, error=str(exc_val)
            )
        else:
            self.logger.info(f"Completed: {self.operation}", duration_ms=self.duration_ms)
        return False
