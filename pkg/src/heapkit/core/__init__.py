"""heapkit core: errors, logging and verification reports."""

from heapkit.core.logging_config import (
    LogConfig,
    LogLevel,
    LogPerformance,
    get_logger,
    log_function_call,
    setup_logging,
)
from heapkit.core.reports import Check, VerificationReport

__all__ = [
    "LogConfig",
    "LogLevel",
    "LogPerformance",
    "get_logger",
    "log_function_call",
    "setup_logging",
    "Check",
    "VerificationReport",
]
