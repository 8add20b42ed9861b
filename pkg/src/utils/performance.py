"""Timing helpers for long-running computations."""

import functools
import time
from typing import Callable

from .logging_config import get_logger

logger = get_logger(__name__)

SLOW_CALL_SECONDS = 1.0


def performance_monitor(func: Callable) -> Callable:
    """Decorator to log how long a computation took."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
            execution_time = time.perf_counter() - start_time

            if execution_time > SLOW_CALL_SECONDS:
                logger.warning(f"{func.__name__} took {execution_time:.2f}s to execute")
            else:
                logger.debug(f"{func.__name__} executed in {execution_time:.3f}s")

            return result
        except Exception as e:
            execution_time = time.perf_counter() - start_time
            logger.error(f"{func.__name__} failed after {execution_time:.3f}s: {e}")
            raise

    return wrapper


class Stopwatch:
    """Context manager measuring wall-clock time in seconds."""

    def __init__(self):
        self.elapsed = 0.0
        self._start = None

    def __enter__(self) -> "Stopwatch":
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.elapsed = time.perf_counter() - self._start
