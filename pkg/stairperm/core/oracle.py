"""
Brute-force enumeration of permutation classes.

Av_n is grown from Av_{n-1} by inserting the new maximum at every position. Classes are closed
downwards, so a child can only contain a basis pattern through an occurrence that uses the new
maximum as the pattern's maximum; only those occurrences are searched.
"""
import threading
from functools import lru_cache
from typing import List, Tuple

from tqdm import tqdm

from stairperm.common.models.permutation import Basis, Permutation, occurs


# Bases whose levels are kept; the least recently used basis is dropped first
CACHED_BASES = 64

_lock = threading.Lock()


@lru_cache(maxsize=CACHED_BASES)
def _levels(basis: Basis) -> List[List[Tuple[int, ...]]]:
    return [[()]]


def _grow(basis: Basis, parents: List[Tuple[int, ...]], size: int, progress: bool) -> List[Tuple[int, ...]]:
    pins = [(pattern, pattern.index(len(pattern))) for pattern in basis]
    children = []
    for parent in tqdm(parents, desc=f"Av_{size}({basis})", disable=not progress, leave=False):
        for position in range(size):
            child = parent[:position] + (size,) + parent[position:]
            if not any(occurs(child, pattern, (index, position)) for pattern, index in pins):
                children.append(child)
    children.sort()
    return children


def enumerate_class(basis: Basis, n: int, progress: bool = False) -> List[Permutation]:
    """
    All size-``n`` permutations avoiding every pattern of ``basis``, in lexicographic order.

    Levels are cached for the most recently used bases, so repeated and incremental calls are cheap.

    :param basis: The basis of the class
    :type basis: Basis
    :param n: The size
    :type n: int
    :param progress: Show a progress bar while growing levels
    :type progress: bool
    :return: The class members of size ``n``; size 0 gives the empty permutation
    :rtype: List[Permutation]
    """
    if n < 0:
        raise ValueError(f"Size must be non-negative, got {n}")

    levels = _levels(basis)
    while len(levels) <= n:
        size = len(levels)
        level = _grow(basis, levels[size - 1], size, progress)
        with _lock:
            if len(levels) == size:
                levels.append(level)
    return [Permutation._trusted(values) for values in levels[n]]


def count_class(basis: Basis, n: int) -> int:
    """Number of size-``n`` members of Av(basis)."""
    return len(enumerate_class(basis, n))

