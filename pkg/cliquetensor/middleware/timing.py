"""
Timing middleware for command dispatch.
"""
import time
from typing import Callable, TypeVar

from cliquetensor.core.logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")


class TimingMiddleware:
    """Logs each command and its wall time."""

    def dispatch(self, command: str, call_next: Callable[[], T]) -> T:
        start_time = time.perf_counter()
        logger.info(f"Command: {command}")
        try:
            return call_next()
        finally:
            process_time = time.perf_counter() - start_time
            logger.info(f"Command {command} took {process_time:.4f}s")
