"""Ordered process-pool map used to spread searches across workers.

Results always come back in input order, so the worker count never changes
what a caller sees.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))


def chunk_range(start: int, stop: int, pieces: int) -> list[tuple[int, int]]:
    """Split ``[start, stop)`` into at most ``pieces`` contiguous half-open ranges."""
    n = stop - start
    if n <= 0:
        return []
    pieces = max(1, min(pieces, n))
    bounds = [start + (n * i) // pieces for i in range(pieces + 1)]
    return [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
