"""Numerical sets stored by their gaps, and the gap/partition correspondence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .partitions import DistinctPartition, _trusted

ARROW = "->"


@dataclass(frozen=True)
class NumericalSet:
    """Cofinite subset of the non-negative integers containing 0.

    Only the finite gap set is stored. ``frobenius`` is 0 when there are no gaps.
    """

    gaps: Tuple[int, ...]

    def __post_init__(self):
        g = self.gaps
        if any(x < 1 for x in g) or any(a >= b for a, b in zip(g, g[1:])):
            raise ValueError("gaps must be strictly increasing positive integers")

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSet":
        return cls(tuple(sorted(set(int(x) for x in gaps))))

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else 0

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def multiplicity(self) -> int:
        gaps = set(self.gaps)
        m = 1
        while m in gaps:
            m += 1
        return m

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x >= 0 and x not in set(self.gaps)

    def __str__(self) -> str:
        return format_set(self)


def from_partition(p: DistinctPartition) -> NumericalSet:
    return NumericalSet(p.parts)


def to_partition(s: NumericalSet) -> DistinctPartition:
    if not s.gaps:
        raise ValueError("the numerical set without gaps has no partition")
    return _trusted(s.gaps)


def small_elements(s: NumericalSet, bound: int) -> Tuple[int, ...]:
    """Members of ``s`` in ``[0, bound]``; index ``i`` holds the element ``s_i``."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    gaps = set(s.gaps)
    return tuple(x for x in range(bound + 1) if x not in gaps)


def is_semigroup(s: NumericalSet) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Closure under addition; on failure returns the first pair ``(a, b)``
    (``a <= b``, smallest sum first) whose sum is a gap."""
    F = s.frobenius
    gaps = set(s.gaps)
    members = [x for x in range(1, F + 1) if x not in gaps]
    for g in s.gaps:
        for a in members:
            if 2 * a > g:
                break
            if (g - a) not in gaps:
                return False, (a, g - a)
    return True, None


def parse_set(text: str) -> NumericalSet:
    """Parse ``"0,3,4,7,9,->"``: members up to ``F + 1`` then the arrow token."""
    items = [x.strip() for x in text.split(",") if x.strip()]
    if not items or items[-1] != ARROW:
        raise ValueError("numerical set text must end with '->'")
    try:
        members = [int(x) for x in items[:-1]]
    except ValueError:
        raise ValueError(f"non-integer member in {text!r}") from None
    if any(a >= b for a, b in zip(members, members[1:])):
        raise ValueError("members must be listed in increasing order")
    if not members or members[0] != 0:
        raise ValueError("a numerical set contains 0")
    top = members[-1]
    present = set(members)
    # everything from the last listed element on is a member
    return NumericalSet(tuple(x for x in range(1, top) if x not in present))


def format_set(s: NumericalSet) -> str:
    if not s.gaps:
        return "0," + ARROW
    return ",".join(map(str, small_elements(s, s.frobenius + 1))) + "," + ARROW


def numerical_set(gaps: Iterable[int]) -> NumericalSet:
    return NumericalSet.from_gaps(gaps)
