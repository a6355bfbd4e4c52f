"""
Fixed-size worker pool with deterministic result ordering
"""

import logging
from multiprocessing import Pool
from typing import Callable, List, Sequence, TypeVar

from freeway_oracle.exceptions import UsageError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_pool(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Applies `func` to every item and returns the results in input order. With more than one worker the calls are
    spread over a process pool, so `func` and the items must be picklable. The worker count never changes the
    output.
    """
    if workers < 1:
        raise UsageError(f"workers must be >= 1, got {workers}")

    if workers == 1 or len(items) <= 1:
        return [func(item) for item in items]

    chunksize = max(1, len(items) // (workers * 4))
    logger.debug("running %d jobs on %d workers (chunksize %d)", len(items), workers, chunksize)

    with Pool(processes=workers) as pool:
        return pool.map(func, items, chunksize=chunksize)
