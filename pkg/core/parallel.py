"""
Ordered worker-pool map.

Results always come back in input order, so callers merge them
deterministically whatever the worker count.
"""

import multiprocessing
from typing import Callable, Iterable, Iterator, List, Sequence, TypeVar

from loguru import logger

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Iterable[T], size: int) -> Iterator[List[T]]:
    chunk: List[T] = []
    for item in items:
        chunk.append(item)
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def ordered_map(func: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """
    Apply a module-level (picklable) function to every item.

    threads <= 1, or fewer than two items, runs in-process.
    """
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    processes = min(threads, len(items))
    logger.debug(f"Dispatching {len(items)} tasks to {processes} worker processes")
    with multiprocessing.Pool(processes=processes) as pool:
        return pool.map(func, items)
