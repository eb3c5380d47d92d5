"""
Worker pool helper.

Parallelism is capped by the BIHARM_THREADS environment variable.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """Number of worker threads (BIHARM_THREADS, default: machine parallelism)."""
    raw = os.getenv("BIHARM_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            logger.warning(f"Ignoring non-integer BIHARM_THREADS={raw!r}")
    return os.cpu_count() or 1


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply func to every item, possibly concurrently, preserving input order.

    Args:
        func: Pure function of one item
        items: Inputs
        workers: Thread count override (default: worker_count())

    Returns:
        Results in the order of items
    """
    items = list(items)
    workers = workers or worker_count()
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
