"""Fork-join helpers: split enumerations by smallest part, merge in input order."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, Tuple


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("UNREF_JOBS", "1")))
    except ValueError:
        return 1


def first_part_ranges(N: int, jobs: int) -> List[Tuple[int, int]]:
    """Disjoint ``(lo, hi)`` ranges covering every possible smallest part of ``N``.

    Small first parts carry most of the work, so the low end is split finer.
    """
    if jobs <= 1:
        return [(1, N)]
    chunks = max(2, 4 * jobs)
    cuts = sorted({max(1, round(N * (i / chunks) ** 2)) for i in range(1, chunks)})
    ranges, lo = [], 1
    for c in cuts:
        if c >= lo:
            ranges.append((lo, c))
            lo = c + 1
    if lo <= N:
        ranges.append((lo, N))
    return ranges


def fork_join(fn: Callable, items: Sequence, jobs: int = 1) -> list:
    """``[fn(x) for x in items]``, optionally across processes; order is preserved."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))
