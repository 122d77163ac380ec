"""Reusable decorators for pipeline stages."""

import functools
import logging
import time
from typing import Any, Callable

logger = logging.getLogger(__name__)


# Decorator Pattern: wraps a stage to add timing without touching its body
def timer(func: Callable) -> Callable:
    """Log the wall time of the wrapped call."""
    # @functools.wraps keeps the wrapped name and docstring for logs and click help
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        start = time.perf_counter()
        result = func(*args, **kwargs)
        elapsed = time.perf_counter() - start
        logger.info(f"{func.__name__} executed in {elapsed:.2f}s")
        return result
    return wrapper


def log_execution(func: Callable) -> Callable:
    """Log start, completion and failure of the wrapped call; failures are re-raised."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        logger.info(f"Executing {func.__name__}")
        try:
            result = func(*args, **kwargs)
            logger.info(f"{func.__name__} completed successfully")
            return result
        except Exception as e:
            logger.error(f"{func.__name__} failed: {e}")
            raise
    return wrapper
