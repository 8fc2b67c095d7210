"""Largest-part bounds, enumeration of unrefinable partitions and their maximal ones."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from .criteria import is_unrefinable
from .partitions import (
    PROPER,
    DistinctPartition,
    _trusted,
    enumerate_distinct,
    missing_parts,
    triangular,
    triangular_decompose,
)


class OutOfRange(ValueError):
    pass


class EmptyUniverse(ValueError):
    pass


class PatternCollision(ValueError):
    pass


MIN_BOUND_N = 6


@dataclass(frozen=True)
class LargestPartBound:
    n: int
    d: int
    bound: int
    regime: str  # triangular | d=1 | d=2 | d=3 | general-odd | general-even


def lambda_t_bound(n: int, d: int) -> LargestPartBound:
    """Sharp upper bound for the largest part of an unrefinable partition of ``T_n - d``."""
    if n < MIN_BOUND_N:
        raise OutOfRange(f"bounds are only stated for n >= {MIN_BOUND_N}, got n={n}")
    if not 0 <= d <= n - 1:
        raise OutOfRange(f"d must lie in [0, {n - 1}], got {d}")
    if d == 0:
        return LargestPartBound(n, d, 2 * n - 4, "triangular")
    if d == 1:
        return LargestPartBound(n, d, 2 * n - 2, "d=1")
    if d == 2:
        return LargestPartBound(n, d, 2 * n - 3, "d=2")
    if d == 3:
        return LargestPartBound(n, d, 2 * n - 4, "d=3")
    if (n - d) % 2:
        return LargestPartBound(n, d, 2 * n - 4, "general-odd")
    return LargestPartBound(n, d, 2 * n - 5, "general-even")


def bound_for_weight(N: int) -> LargestPartBound:
    wd = triangular_decompose(N)
    return lambda_t_bound(wd.n, wd.d)


def _search(
    N: int,
    cap: int,
    last: Optional[int] = None,
    first_parts: Optional[Tuple[int, int]] = None,
) -> Iterator[DistinctPartition]:
    """Backtracking over ascending parts, abandoning a prefix at its first
    refinable part.  ``last`` forces the largest part."""
    chosen: List[int] = []
    lo0, hi0 = first_parts if first_parts is not None else (1, cap)

    def ok(p: int, mask: int) -> bool:
        for a in range(1, (p + 1) // 2):
            if not (mask >> a) & 1 and not (mask >> (p - a)) & 1:
                return False
        return True

    def rec(rem: int, prev: int, mask: int, lo: int, hi: int) -> Iterator[DistinctPartition]:
        if last is not None:
            # remaining parts all lie in (prev, last); the final one is ``last``
            if rem == last and last > prev and last >= lo and ok(last, mask):
                if chosen:
                    yield _trusted(tuple(chosen) + (last,), N)
            top = min(rem - last, last - 1, hi)
            for p in range(max(prev + 1, lo), top + 1):
                r = rem - p
                if r - last != 0 and r - last <= p:
                    continue
                if ok(p, mask):
                    chosen.append(p)
                    yield from rec(r, p, mask | (1 << p), 1, cap)
                    chosen.pop()
            return
        top = min(rem, cap, hi)
        for p in range(max(prev + 1, lo), top + 1):
            r = rem - p
            if r and r <= p:
                continue
            if not ok(p, mask):
                continue
            if r == 0:
                if chosen:
                    yield _trusted(tuple(chosen) + (p,), N)
            else:
                chosen.append(p)
                yield from rec(r, p, mask | (1 << p), 1, cap)
                chosen.pop()

    yield from rec(N, 0, 0, lo0, hi0)


def _search_range(args) -> List[Tuple[int, ...]]:
    N, lo, hi = args
    return [p.parts for p in _search(N, N, first_parts=(lo, hi))]


def enumerate_unrefinable(N: int, prune: bool = True, jobs: int = 1) -> Iterator[DistinctPartition]:
    """Unrefinable partitions of ``N`` with at least two parts, lexicographic order.

    ``prune=False`` filters the full distinct-part stream instead of pruning.
    """
    if not prune:
        yield from (p for p in enumerate_distinct(N, PROPER) if is_unrefinable(p))
        return
    if jobs <= 1:
        yield from _search(N, N)
        return
    from .parallel import first_part_ranges, fork_join

    chunks = fork_join(_search_range, [(N, lo, hi) for lo, hi in first_part_ranges(N, jobs)], jobs)
    for chunk in chunks:
        for parts in chunk:
            yield _trusted(parts, N)


def unrefinable_with_largest(N: int, largest: int) -> List[DistinctPartition]:
    return list(_search(N, largest, last=largest))


def maximal_unrefinable(N: int, method: str = "exhaustive", jobs: int = 1) -> List[DistinctPartition]:
    """Unrefinable partitions of ``N`` with the largest possible largest part.

    ``method="pinned"`` only searches partitions whose largest part equals the
    tabulated bound (requires ``n >= 6``); ``"exhaustive"`` enumerates all of U_N.
    """
    if method == "pinned":
        lb = bound_for_weight(N)
        out = unrefinable_with_largest(N, lb.bound)
        if not out:
            raise EmptyUniverse(f"no unrefinable partition of {N} with largest part {lb.bound}")
        return out
    if method != "exhaustive":
        raise ValueError("method must be 'exhaustive' or 'pinned'")
    best: List[DistinctPartition] = []
    top = 0
    for p in enumerate_unrefinable(N, jobs=jobs):
        if p.largest > top:
            top, best = p.largest, [p]
        elif p.largest == top:
            best.append(p)
    if not best:
        raise EmptyUniverse(f"no unrefinable partition of {N}")
    return best


def attains_missing_bound(p: DistinctPartition) -> bool:
    return missing_parts(p).m == p.largest // 2


def max_missing_subfamily(mup: Iterable[DistinctPartition]) -> List[DistinctPartition]:
    mup = list(mup)
    if len({p.largest for p in mup}) > 1:
        raise ValueError("all partitions must share the same largest part")
    return [p for p in mup if attains_missing_bound(p)]


def complementary_family(N: int, largest: int) -> List[DistinctPartition]:
    """Unrefinable partitions of ``N`` with largest part ``largest`` that contain
    exactly one of ``x`` and ``largest - x`` for each ``x`` (the middle excluded).

    These are the candidates for the max-missing subfamily; the search space is
    ``2^(largest // 2)`` pairs, pruned by weight.
    """
    L = largest
    pairs = [(x, L - x) for x in range(1, (L + 1) // 2)]
    target = N - L
    # suffix bounds on the achievable weight
    lo_suf = [0] * (len(pairs) + 1)
    hi_suf = [0] * (len(pairs) + 1)
    for i in range(len(pairs) - 1, -1, -1):
        lo_suf[i] = lo_suf[i + 1] + pairs[i][0]
        hi_suf[i] = hi_suf[i + 1] + pairs[i][1]
    out = []
    pick: List[int] = []

    def rec(i: int, acc: int):
        if acc + lo_suf[i] > target or acc + hi_suf[i] < target:
            return
        if i == len(pairs):
            p = _trusted(tuple(sorted(pick)) + (L,), N)
            if is_unrefinable(p):
                out.append(p)
            return
        for v in pairs[i]:
            pick.append(v)
            rec(i + 1, acc + v)
            pick.pop()

    rec(0, 0)
    return sorted(out)


KINDS = ("pi", "sigma", "tau", "zeta")


@dataclass(frozen=True)
class ExceptionalPartition:
    kind: str
    n: int
    partition: DistinctPartition
    k: Optional[int] = None

    @property
    def expected_weight(self) -> int:
        T = triangular(self.n)
        if self.kind == "pi":
            return T
        if self.kind == "sigma":
            return T - 3
        if self.kind == "tau":
            return T - 4
        return T - (self.n - 2 * self.k + 1)


def exceptional(kind: str, n: int, k: Optional[int] = None) -> ExceptionalPartition:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if kind == "pi":
        parts = list(range(1, n - 2)) + [n + 1, 2 * n - 4]
    elif kind == "sigma":
        parts = list(range(1, n - 1)) + [2 * n - 4]
    elif kind == "tau":
        parts = list(range(1, n - 1)) + [2 * n - 5]
    else:
        if k is None:
            raise ValueError("zeta needs k")
        parts = (
            list(range(1, n - k - 2))
            + list(range(n - k - 1, n - 2))
            + [n - 2 + k, 2 * n - 4]
        )
    if any(x < 1 for x in parts) or any(a >= b for a, b in zip(parts, parts[1:])):
        raise PatternCollision(f"{kind} pattern is not strictly increasing for n={n}, k={k}")
    ex = ExceptionalPartition(kind, n, _trusted(tuple(parts)), k if kind == "zeta" else None)
    if ex.partition.weight != ex.expected_weight:
        raise PatternCollision(
            f"{kind} pattern has weight {ex.partition.weight}, expected {ex.expected_weight}"
        )
    return ex
