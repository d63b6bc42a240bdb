"""
Dyck paths, their peaks, the statistic k = (sum of peak heights) - (number of peaks),
the sets D_{n,k} and the triangle T(n,k).

Coordinates start at the origin: after p steps the path is at x = p.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Tuple

from .config import LOGGER_NAME
from .exceptions import InvalidPath

logger = logging.getLogger(LOGGER_NAME)

UP = "U"
DOWN = "D"


@dataclass(frozen=True)
class Peak:
    """Apex of a U step immediately followed by a D step."""

    position: int
    height: int

    def __post_init__(self):
        if self.height < 1:
            raise ValueError(f"Peak height must be at least 1, got {self.height}")

    def to_json(self) -> List[int]:
        return [self.position, self.height]


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for index, step in enumerate(self.steps):
            if step == UP:
                height += 1
            elif step == DOWN:
                height -= 1
            else:
                raise InvalidPath(f"Step {step!r} at index {index} is neither 'U' nor 'D'")
            if height < 0:
                raise InvalidPath(f"Path {self.steps} drops below the axis after {index + 1} steps")
        if height != 0:
            raise InvalidPath(f"Path {self.steps} ends at height {height}, not on the axis")

    @classmethod
    def sawtooth(cls, semilength: int) -> "DyckPath":
        return cls((UP + DOWN) * semilength)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> List[int]:
        """Height after each prefix, starting with 0 at the origin."""
        result = [0]
        for step in self.steps:
            result.append(result[-1] + (1 if step == UP else -1))
        return result

    def __str__(self) -> str:
        return self.steps

    def to_json(self) -> Dict[str, Any]:
        return {"steps": self.steps}


def peaks(d: DyckPath) -> List[Peak]:
    heights = d.heights()
    return [
        Peak(position=index + 1, height=heights[index + 1])
        for index in range(len(d.steps) - 1)
        if d.steps[index] == UP and d.steps[index + 1] == DOWN
    ]


def statistic_k(d: DyckPath) -> int:
    return sum(peak.height - 1 for peak in peaks(d))


def reverse_path(d: DyckPath) -> DyckPath:
    """Mirror left to right: reverse the step order and swap U and D."""
    swap = {UP: DOWN, DOWN: UP}
    return DyckPath("".join(swap[step] for step in reversed(d.steps)))


def peak_block(peak: Peak) -> Optional[Tuple[int, int]]:
    """
    The square block of the triangular lattice whose top corner is this apex,
    as segment coordinates (i, m). Bottom triangles (height 1) have no block.

    Block T_i^m has its top corner at (i + m, m - i + 2).
    """
    if peak.height < 2:
        return None
    return (peak.position + 2 - peak.height) // 2, (peak.position + peak.height - 2) // 2


def block_label(i: int, m: int) -> str:
    letters = [str(letter) for letter in range(m, i - 1, -1)]
    return "".join(letters) if m < 10 else ",".join(letters)


def _paths(n: int, k: int) -> Iterator[str]:
    steps: List[str] = []

    def extend(ups_left: int, height: int, partial: int) -> Iterator[str]:
        if ups_left == 0 and height == 0:
            if partial == k:
                yield "".join(steps)
            return
        if ups_left > 0:
            steps.append(UP)
            yield from extend(ups_left - 1, height + 1, partial)
            steps.pop()
        if height > 0:
            gain = height - 1 if steps and steps[-1] == UP else 0
            if partial + gain <= k:
                steps.append(DOWN)
                yield from extend(ups_left, height - 1, partial + gain)
                steps.pop()

    yield from extend(n, 0, 0)


def enumerate_paths(n: int, k: int) -> List[DyckPath]:
    """All Dyck paths of semilength n with statistic k, in lexicographic order (D < U)."""
    if n < 0 or k < 0:
        return []
    return sorted((DyckPath(steps) for steps in _paths(n, k)), key=lambda d: d.steps)


@lru_cache(maxsize=None)
def _count(ups_left: int, height: int, after_up: bool, k_left: int) -> int:
    if ups_left == 0 and height == 0:
        return 1 if k_left == 0 else 0
    total = 0
    if ups_left > 0:
        total += _count(ups_left - 1, height + 1, True, k_left)
    if height > 0:
        gain = height - 1 if after_up else 0
        if gain <= k_left:
            total += _count(ups_left, height - 1, False, k_left - gain)
    return total


def count_T(n: int, k: int) -> int:
    """|D_{n,k}|, by memoizing the same step-by-step recursion the enumerator walks."""
    if n < 0 or k < 0:
        return 0
    return _count(n, 0, False, k)


def max_statistic(n: int) -> int:
    """Largest k with T(n, k) > 0."""
    return n * n // 4


def t_table(n_max: int) -> List[List[int]]:
    """Rows 0..n_max of the T(n,k) triangle, each cut after its last non-zero entry."""
    return [[count_T(n, k) for k in range(max_statistic(n) + 1)] for n in range(n_max + 1)]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def format_table(rows: List[List[int]]) -> str:
    """Left-aligned columns, one row per line, like the printed array."""
    width = max((len(str(value)) for row in rows for value in row), default=1)
    return "\n".join(" ".join(str(value).ljust(width) for value in row).rstrip() for row in rows)


def render_ascii(d: DyckPath) -> str:
    """
    Monospace drawing: one column per step, '/' for U and '\\' for D, the axis
    underneath, then one line per peak block with its segment label.
    """
    heights = d.heights()
    top = max(heights)
    grid = [[" "] * len(d.steps) for _ in range(top)]
    for x, step in enumerate(d.steps):
        if step == UP:
            grid[heights[x]][x] = "/"
        else:
            grid[heights[x] - 1][x] = "\\"
    lines = ["".join(row).rstrip() for row in reversed(grid)]
    lines.append("-" * len(d.steps))
    for peak in peaks(d):
        block = peak_block(peak)
        if block is not None:
            i, m = block
            lines.append(f"{block_label(i, m)} T_{i}^{m} at ({peak.position},{peak.height})")
    return "\n".join(lines)


SVG_UNIT = 24
SVG_MARGIN = 16


def render_svg(d: DyckPath) -> str:
    """
    Standalone SVG 1.1 drawing of the path on the triangular lattice, with the
    blocks T_i^m outlined and the blocks under peaks filled and labeled.
    """
    n = d.semilength
    width = 2 * n * SVG_UNIT + 2 * SVG_MARGIN
    height = max(n, 1) * SVG_UNIT + 2 * SVG_MARGIN

    def point(x: int, y: int) -> str:
        return f"{SVG_MARGIN + x * SVG_UNIT},{SVG_MARGIN + (max(n, 1) - y) * SVG_UNIT}"

    marked = {peak_block(peak) for peak in peaks(d)} - {None}
    parts = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<polyline points="{point(0, 0)} {point(n, n)} {point(2 * n, 0)}" '
        f'fill="none" stroke="#999999" stroke-dasharray="4,3"/>',
        f'<line x1="{SVG_MARGIN}" y1="{SVG_MARGIN + max(n, 1) * SVG_UNIT}" '
        f'x2="{SVG_MARGIN + 2 * n * SVG_UNIT}" y2="{SVG_MARGIN + max(n, 1) * SVG_UNIT}" '
        f'stroke="#000000"/>',
    ]
    for i in range(1, n):
        for m in range(i, n):
            cx, cy = i + m, m - i + 1
            corners = " ".join(
                point(x, y) for x, y in ((cx - 1, cy), (cx, cy + 1), (cx + 1, cy), (cx, cy - 1))
            )
            fill = "#dddddd" if (i, m) in marked else "none"
            parts.append(f'<polygon points="{corners}" fill="{fill}" stroke="#bbbbbb"/>')
            if (i, m) in marked:
                x, y = point(cx, cy).split(",")
                parts.append(
                    f'<text x="{x}" y="{y}" font-family="monospace" font-size="10" '
                    f'text-anchor="middle" dominant-baseline="middle">{block_label(i, m)}</text>'
                )
    heights = d.heights()
    path_points = " ".join(point(x, y) for x, y in enumerate(heights))
    parts.append(
        f'<polyline points="{path_points}" fill="none" stroke="#e07000" stroke-width="2"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
