"""Young diagrams from numerical sets (Keith-Nath lattice path), hook grids and probes.

Rows are listed top-down (English notation), so row 1 is the longest and the
top-left hook equals the Frobenius number of the underlying set.  All public
indices are 1-based to match the usual ``h_{i,j}`` notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple

from .numset import NumericalSet


class NoGaps(ValueError):
    pass


class ShapeMismatch(ValueError):
    """A diagram does not have the square-plus-extra-column / symmetric shape expected."""


class NoZColumn(ShapeMismatch):
    pass


@dataclass(frozen=True)
class YoungDiagram:
    rows: Tuple[int, ...]

    def __post_init__(self):
        r = self.rows
        if any(x < 1 for x in r) or any(a < b for a, b in zip(r, r[1:])):
            raise ValueError(f"rows must be weakly decreasing positive integers: {r}")

    @classmethod
    def of(cls, rows: Sequence[int]) -> "YoungDiagram":
        return cls(tuple(int(x) for x in rows))

    @property
    def cell_count(self) -> int:
        return sum(self.rows)

    @cached_property
    def column_heights(self) -> Tuple[int, ...]:
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r >= j) for j in range(1, self.rows[0] + 1))

    @cached_property
    def hooks(self) -> "HookGrid":
        return hook_grid(self)

    def has_cell(self, i: int, j: int) -> bool:
        return 1 <= i <= len(self.rows) and 1 <= j <= self.rows[i - 1]

    def arm(self, i: int, j: int) -> int:
        return self.rows[i - 1] - j

    def leg(self, i: int, j: int) -> int:
        return self.column_heights[j - 1] - i


@dataclass(frozen=True)
class HookGrid:
    rows: Tuple[int, ...]
    column_heights: Tuple[int, ...]
    grid: Tuple[Tuple[int, ...], ...]

    def h(self, i: int, j: int) -> int:
        return self.grid[i - 1][j - 1]

    @property
    def first_column(self) -> Tuple[int, ...]:
        return tuple(row[0] for row in self.grid)

    @property
    def first_row(self) -> Tuple[int, ...]:
        return self.grid[0] if self.grid else ()

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.grid[i][i] for i in range(len(self.grid)) if i < len(self.grid[i]))

    def cells(self):
        """Yield ``(i, j, h)`` row by row."""
        for i, row in enumerate(self.grid, 1):
            for j, h in enumerate(row, 1):
                yield i, j, h


def hook_grid(y: YoungDiagram) -> HookGrid:
    cols = y.column_heights
    grid = tuple(
        tuple((r - j) + (cols[j - 1] - i) + 1 for j in range(1, r + 1))
        for i, r in enumerate(y.rows, 1)
    )
    return HookGrid(y.rows, cols, grid)


def kn_transform(s: NumericalSet) -> YoungDiagram:
    """Row ``i`` counts the members of ``s`` below its ``i``-th largest gap."""
    if not s.gaps:
        raise NoGaps("the set of all non-negative integers has an empty diagram")
    gaps = s.gaps
    rows = []
    # members below g = g - (number of gaps below g), 0 counted as a member
    for idx in range(len(gaps) - 1, -1, -1):
        rows.append(gaps[idx] - idx)
    return YoungDiagram(tuple(rows))


def lattice_path(s: NumericalSet) -> str:
    """East/north steps ``'E'``/``'N'`` for ``k = 0..F(S)``."""
    return "".join("N" if k in set(s.gaps) else "E" for k in range(s.frobenius + 1))


def kn_inverse(y: YoungDiagram) -> NumericalSet:
    """Walk the boundary path bottom-up: east steps are members, north steps gaps."""
    gaps = []
    k = 0
    x = 0
    for r in reversed(y.rows):
        while x < r:
            x += 1
            k += 1
        gaps.append(k)
        k += 1
    return NumericalSet(tuple(gaps))


def conjugate(y: YoungDiagram) -> YoungDiagram:
    return YoungDiagram(y.column_heights)


def is_self_conjugate(y: YoungDiagram) -> bool:
    return y.column_heights == y.rows


def durfee_size(y: YoungDiagram) -> int:
    return sum(1 for i, r in enumerate(y.rows, 1) if r >= i)


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> YoungDiagram:
    """Diagram whose diagonal cell ``i`` has arm ``arms[i-1]`` and leg ``legs[i-1]``."""
    if len(arms) != len(legs) or not arms:
        raise ValueError("need matching, non-empty arm and leg lists")
    for seq in (arms, legs):
        if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
            raise ValueError("arms and legs must be strictly decreasing and >= 0")
    r = len(arms)
    col_heights = [legs[j] + j + 1 for j in range(r)]
    rows = [arms[i] + i + 1 for i in range(r)]
    for i in range(r + 1, col_heights[0] + 1):
        rows.append(sum(1 for c in col_heights if c >= i))
    return YoungDiagram(tuple(rows))


@dataclass(frozen=True)
class QuasiSymmetricProfile:
    z: int
    extra_column_hooks: Tuple[int, ...]  # h_{i,z+1} for i = 2..z, top-down
    diagonal_hooks: Tuple[int, ...]  # h_{i,i} for i = 1..z

    @property
    def eta(self) -> Tuple[int, ...]:
        return tuple(sorted(self.extra_column_hooks))


def quasi_symmetric_profile(y: YoungDiagram, n: int) -> QuasiSymmetricProfile:
    """Locate the column ``z + 1`` whose top hook is ``n - 2`` and read the extra column.

    Raises :class:`NoZColumn` when no first-row hook equals ``n - 2`` and
    :class:`ShapeMismatch` when the square/extra-column structure is broken.
    """
    hg = y.hooks
    first_row = hg.first_row
    try:
        z = first_row.index(n - 2)
    except ValueError:
        raise NoZColumn(f"no first-row hook equals n-2 = {n - 2}") from None
    if z == 0:
        raise ShapeMismatch("the column with hook n-2 is the first column")
    col = z + 1
    if y.column_heights[col - 1] != z:
        raise ShapeMismatch(f"column {col} has {y.column_heights[col - 1]} cells, expected {z}")
    if durfee_size(y) != z:
        raise ShapeMismatch(f"main diagonal has {durfee_size(y)} cells, expected {z}")
    diag = tuple(hg.h(i, i) for i in range(1, z + 1))
    extra = tuple(hg.h(i, col) for i in range(1, z + 1))
    for i in range(z):
        if diag[i] != 2 * extra[i]:
            raise ShapeMismatch(
                f"h({i + 1},{i + 1}) = {diag[i]} is not twice h({i + 1},{col}) = {extra[i]}"
            )
    return QuasiSymmetricProfile(z, extra[1:], diag)


def render(y: YoungDiagram, mode: str = "cells", fmt: str = "ascii") -> str:
    if mode not in ("cells", "hooks"):
        raise ValueError("mode must be 'cells' or 'hooks'")
    if fmt == "ascii":
        return _render_ascii(y, mode)
    if fmt == "svg":
        return _render_svg(y, mode)
    raise ValueError("format must be 'ascii' or 'svg'")


def _render_ascii(y: YoungDiagram, mode: str) -> str:
    grid = y.hooks.grid
    if mode == "hooks":
        w = max(len(str(h)) for row in grid for h in row)
        lines = ["".join("[" + str(h).rjust(w) + "]" for h in row) for row in grid]
    else:
        lines = ["[ ]" * r for r in y.rows]
    return "\n".join(lines)


def _render_svg(y: YoungDiagram, mode: str, unit: int = 24) -> str:
    width = (y.rows[0] if y.rows else 0) * unit
    height = len(y.rows) * unit
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width + 2}" height="{height + 2}" '
        f'viewBox="-1 -1 {width + 2} {height + 2}">'
    ]
    for i, j, h in y.hooks.cells():
        x, yy = (j - 1) * unit, (i - 1) * unit
        out.append(
            f'<rect x="{x}" y="{yy}" width="{unit}" height="{unit}" fill="none" stroke="black"/>'
        )
        if mode == "hooks":
            out.append(
                f'<text x="{x + unit / 2:g}" y="{yy + unit / 2:g}" text-anchor="middle" '
                f'dominant-baseline="central" font-size="{unit // 2}">{h}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def diagrams(cells: int):
    """Every diagram with exactly ``cells`` cells, rows in reverse lexicographic order."""
    if cells < 1:
        return

    def rec(rem: int, cap: int, acc: list):
        if rem == 0:
            yield YoungDiagram(tuple(acc))
            return
        for r in range(min(rem, cap), 0, -1):
            acc.append(r)
            yield from rec(rem - r, r, acc)
            acc.pop()

    yield from rec(cells, cells, [])
