"""Partitions into distinct parts, missing parts and triangular weight decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Iterator, Optional, Tuple


class PartitionError(ValueError):
    pass


class DuplicatePart(PartitionError):
    pass


class NonPositivePart(PartitionError):
    pass


class EmptyPartition(PartitionError):
    pass


@dataclass(frozen=True, order=True)
class DistinctPartition:
    """Strictly increasing positive parts; compares lexicographically by parts."""

    parts: Tuple[int, ...]
    weight: int = field(compare=False)

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __contains__(self, x: object) -> bool:
        return x in self._members

    @property
    def _members(self) -> frozenset:
        # cached lazily; frozen dataclass so go through object.__setattr__
        try:
            return self.__dict__["_memberset"]
        except KeyError:
            s = frozenset(self.parts)
            object.__setattr__(self, "_memberset", s)
            return s

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def make_partition(values: Iterable[int]) -> DistinctPartition:
    vals = sorted(int(v) for v in values)
    if not vals:
        raise EmptyPartition("a partition needs at least one part")
    if vals[0] < 1:
        raise NonPositivePart(f"part {vals[0]} is not positive")
    for a, b in zip(vals, vals[1:]):
        if a == b:
            raise DuplicatePart(f"part {a} repeated")
    return DistinctPartition(tuple(vals), sum(vals))


def _trusted(parts: Tuple[int, ...], weight: Optional[int] = None) -> DistinctPartition:
    # skips validation; callers guarantee strictly increasing positive parts
    return DistinctPartition(parts, sum(parts) if weight is None else weight)


def parse_parts(text: str) -> DistinctPartition:
    """Parse ``"1,2,5,6,8"`` (spaces and surrounding parentheses tolerated)."""
    body = text.strip().strip("()[]")
    items = [x for x in body.replace(" ", "").split(",") if x]
    return make_partition(int(x) for x in items)


def is_proper(p: DistinctPartition) -> bool:
    return p.t >= 2


@dataclass(frozen=True)
class MissingParts:
    values: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.values)


def missing_parts(p: DistinctPartition) -> MissingParts:
    present = set(p.parts)
    return MissingParts(tuple(x for x in range(1, p.largest + 1) if x not in present))


def triangular(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class WeightDecomposition:
    N: int
    n: int
    d: int

    @property
    def T_n(self) -> int:
        return triangular(self.n)

    @property
    def is_triangular(self) -> bool:
        return self.d == 0


def triangular_decompose(N: int) -> WeightDecomposition:
    """Unique ``(n, d)`` with ``N = T_n - d`` and ``0 <= d <= n - 1``."""
    if N < 1:
        raise ValueError("N must be positive")
    # smallest n with T_n >= N
    n = (isqrt(8 * N + 1) - 1) // 2
    if triangular(n) < N:
        n += 1
    return WeightDecomposition(N, n, triangular(n) - N)


PARITIES = ("all", "odd", "even")


@dataclass(frozen=True)
class PartClassFilter:
    min_parts: int = 1
    max_part: Optional[int] = None
    parity: str = "all"

    def __post_init__(self):
        if self.min_parts < 1:
            raise ValueError("min_parts must be >= 1")
        if self.parity not in PARITIES:
            raise ValueError(f"parity must be one of {PARITIES}")


PROPER = PartClassFilter(min_parts=2)


def enumerate_distinct(
    N: int,
    filt: PartClassFilter = PartClassFilter(),
    first_parts: Optional[Tuple[int, int]] = None,
) -> Iterator[DistinctPartition]:
    """Yield partitions of ``N`` into distinct parts in lexicographic order.

    ``first_parts=(lo, hi)`` restricts the smallest part to ``lo..hi`` so that
    disjoint ranges can be enumerated independently.
    """
    if N < 1:
        raise ValueError("N must be positive")
    step = 1 if filt.parity == "all" else 2
    start = {"all": 1, "odd": 1, "even": 2}[filt.parity]
    cap = N if filt.max_part is None else min(N, filt.max_part)
    lo, hi = first_parts if first_parts is not None else (start, cap)
    min_parts = filt.min_parts
    chosen: list = []

    def max_sum(after: int) -> int:
        # sum of every admissible part in (after, cap]
        first = after + 1 if step == 1 else after + 2
        if first > cap:
            return 0
        count = (cap - first) // step + 1
        return count * (first + first + (count - 1) * step) // 2

    def rec(rem: int, prev: int, first_lo: int, first_hi: int) -> Iterator[DistinctPartition]:
        p = max(prev + step if prev else start, first_lo)
        if (p - start) % step:
            p += 1
        top = min(rem, cap, first_hi)
        while p <= top:
            r = rem - p
            if r == 0:
                if len(chosen) + 1 >= min_parts:
                    yield _trusted(tuple(chosen) + (p,), N)
            elif r >= p + step and max_sum(p) >= r:
                chosen.append(p)
                yield from rec(r, p, 0, cap)
                chosen.pop()
            p += step

    yield from rec(N, 0, lo, hi)
