"""Unrefinability deciders: the missing-part definition and the hook criterion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .numset import from_partition
from .partitions import PROPER, DistinctPartition, enumerate_distinct
from .young import kn_transform


@dataclass(frozen=True)
class RefinabilityVerdict:
    unrefinable: bool
    witness: Optional[Tuple[int, int, int]] = None  # (mu_i, mu_j, part), mu_i < mu_j
    offending_hooks: Optional[Tuple[Tuple[int, int, int], ...]] = None  # (i, j, h)

    def __bool__(self) -> bool:
        return self.unrefinable

    def to_dict(self) -> dict:
        out = {"unrefinable": self.unrefinable}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.offending_hooks is not None:
            out["offending_hooks"] = [list(c) for c in self.offending_hooks]
        return out


def refinement_witness(p: DistinctPartition) -> Optional[Tuple[int, int, int]]:
    """Smallest ``(mu_i, mu_j, part)`` by ``(part, mu_i)`` with two distinct missing
    parts summing to a part, or ``None``."""
    mask = 0
    for x in p.parts:
        mask |= 1 << x
    for part in p.parts:
        for a in range(1, (part + 1) // 2):
            if not (mask >> a) & 1 and not (mask >> (part - a)) & 1:
                return (a, part - a, part)
    return None


def is_unrefinable_definitional(p: DistinctPartition) -> RefinabilityVerdict:
    w = refinement_witness(p)
    if w is None:
        return RefinabilityVerdict(True)
    return RefinabilityVerdict(False, witness=w)


def is_unrefinable_geometric(p: DistinctPartition) -> RefinabilityVerdict:
    """Every hook must be a part, or half the first-column hook of its row."""
    hg = kn_transform(from_partition(p)).hooks
    parts = set(p.parts)
    bad = []
    for i, row in enumerate(hg.grid, 1):
        head = row[0]
        for j, h in enumerate(row[1:], 2):
            if h not in parts and head != 2 * h:
                bad.append((i, j, h))
    if bad:
        return RefinabilityVerdict(False, offending_hooks=tuple(bad))
    return RefinabilityVerdict(True)


def doubling_cells(p: DistinctPartition) -> Tuple[Tuple[int, int, int], ...]:
    """Cells outside the first column that pass only through the doubling clause."""
    hg = kn_transform(from_partition(p)).hooks
    parts = set(p.parts)
    return tuple(
        (i, j, h)
        for i, row in enumerate(hg.grid, 1)
        for j, h in enumerate(row[1:], 2)
        if h not in parts and row[0] == 2 * h
    )


def is_unrefinable(p: DistinctPartition) -> bool:
    return refinement_witness(p) is None


def _agree_range(args) -> Optional[Tuple[int, ...]]:
    N, lo, hi = args
    for p in enumerate_distinct(N, PROPER, first_parts=(lo, hi)):
        if is_unrefinable_definitional(p).unrefinable != is_unrefinable_geometric(p).unrefinable:
            return p.parts
    return None


def verdicts_agree(N: int, jobs: int = 1) -> Tuple[bool, Optional[DistinctPartition]]:
    """Run both deciders on every proper distinct partition of ``N``."""
    from .parallel import first_part_ranges, fork_join
    from .partitions import make_partition

    ranges = [(N, lo, hi) for lo, hi in first_part_ranges(N, jobs)]
    for bad in fork_join(_agree_range, ranges, jobs):
        if bad is not None:
            return False, make_partition(bad)
    return True, None
