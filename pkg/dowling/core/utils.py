#!/usr/bin/env python3
"""
Logging Utilities

- setup_logger: per-module logger writing to stderr (and optionally a file)
- log_exception: decorator that logs an exception on its way out

Output of the CLI goes to stdout, so every handler here writes to stderr or a file.
"""

import logging
import traceback
from functools import wraps
from typing import Any, Callable, Optional

from .config import Config
from .errors import DowlingError


def log_exception(logger: logging.Logger) -> Callable:
    """
    Decorator that logs exceptions raised by the wrapped function and re-raises them.

    Refused preconditions and other DowlingErrors are expected outcomes of bad input and
    are logged at warning without a stack trace; anything else is a fault and is logged
    at error with the trace.
    An exception passing through nested decorated calls is logged once, where it was raised.
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return func(*args, **kwargs)
            except DowlingError as e:
                if not getattr(e, "logged", False):
                    logger.warning(f"{func.__name__} refused: {e}")
                    e.logged = True
                raise
            except Exception as e:
                if not getattr(e, "logged", False):
                    logger.error(
                        f"Exception in {func.__name__}: {str(e)}\n"
                        f"Stack trace: {traceback.format_exc()}"
                    )
                    e.logged = True
                raise
        return wrapper
    return decorator


def setup_logger(name: str, log_file: Optional[str] = Config.LOG_FILE) -> logging.Logger:
    """Sets up a logger with a stderr console handler and an optional file handler"""
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, Config.LOG_LEVEL.upper(), logging.WARNING))

    # Disable propagation to parent loggers (root logger)
    logger.propagate = False

    # Modules are imported once but tests may call this again
    if logger.handlers:
        return logger

    formatter = logging.Formatter(Config.LOG_FORMAT)

    # Console handler; stdout is reserved for command output
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    # File handler (optional)
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger
