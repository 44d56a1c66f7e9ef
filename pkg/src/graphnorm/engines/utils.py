"""
Utility functions shared by the engines: deterministic pseudo-random coefficients
and an order-preserving thread fan-out.
"""

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1


class LcgStream:
    """
    64-bit linear congruential generator (Knuth's MMIX constants).

    Plain integer arithmetic, so the stream is identical on every platform and
    numpy version. Only the top 53 bits feed the floats.
    """

    def __init__(self, seed: int):
        self.state = seed & LCG_MASK

    def next_raw(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & LCG_MASK
        return self.state

    def uniform(self) -> float:
        """Uniform value in [-1, 1)."""
        return (self.next_raw() >> 11) / float(1 << 52) - 1.0

    def complex(self) -> complex:
        re = self.uniform()
        return complex(re, self.uniform())

    def choice(self, n: int) -> int:
        """Index in [0, n)."""
        if n <= 0:
            raise ValueError(f"Cannot choose from {n} items")
        return (self.next_raw() >> 11) % n

    def coefficients(self, n: int) -> list[complex]:
        return [self.complex() for _ in range(n)]


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """
    Map fn over items, optionally across threads.

    Results come back in input order regardless of completion order, so reports
    stay deterministic.

    Args:
        fn: Function applied to each item
        items: Inputs
        workers: Thread count; 1 runs inline

    Returns:
        List of fn(item) in the order of items
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
