"""
Helper utilities for the classification engine.

This module provides general utility functions for timing, range parsing
and the order-preserving thread pool used by the scans.
"""

import re
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Tuple, TypeVar

from app.errors import ParseError

T = TypeVar("T")
R = TypeVar("R")

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def calculate_elapsed_time(start_time: float) -> float:
    """Calculate elapsed time since start.

    Args:
        start_time: Start time from time.time()

    Returns:
        float: Elapsed time in seconds
    """
    return round(time.time() - start_time, 3)


def parse_range(text: str) -> Tuple[int, int]:
    """Parse an inclusive range written ``lo..hi``.

    Args:
        text: Range literal such as ``2..12``

    Returns:
        Tuple[int, int]: The bounds ``(lo, hi)``

    Raises:
        ParseError: if the literal is malformed or ``hi < lo``
    """
    match = _RANGE.match(text or "")
    if not match:
        raise ParseError("expected a range like 2..12", token=text)
    lo, hi = int(match.group(1)), int(match.group(2))
    if hi < lo:
        raise ParseError("range upper bound is below the lower bound", token=text)
    return lo, hi


def chunk_range(size: int, parts: int) -> List[range]:
    """Split ``range(size)`` into at most ``parts`` contiguous blocks.

    Args:
        size: Number of indices
        parts: Desired number of blocks

    Returns:
        List[range]: Blocks in ascending order covering every index once
    """
    parts = max(1, min(parts, size))
    if size == 0:
        return [range(0)]

    step, extra = divmod(size, parts)
    blocks = []
    start = 0
    for i in range(parts):
        end = start + step + (1 if i < extra else 0)
        blocks.append(range(start, end))
        start = end

    return blocks


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """Apply ``func`` to every item, returning results in input order.

    With a single thread no pool is created.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))
