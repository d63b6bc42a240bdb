"""
The bijection Φ: C_{n,k} → D_{n+1,k} between fully commutative elements of
length k in type A_n and Dyck paths of semilength n+1 with statistic k, and its
inverse Ψ.

Block T_i^m of the triangular lattice has its top corner at (i + m, m - i + 2),
so a peak at (p, h) with h >= 2 reads off i = (p + 2 - h)/2 and m = (p + h - 2)/2.
"""
import logging
from typing import List, Tuple, Union

from .canonical import CanonicalForm, Segment
from .config import LOGGER_NAME
from .dyck import DOWN, UP, DyckPath, Peak, peak_block, peaks
from .exceptions import CoordinateParity, InvalidPath

logger = logging.getLogger(LOGGER_NAME)


class Bottom:
    """Marker for a height-1 peak in a bottom triangle; Ψ ignores these."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BOTTOM"


BOTTOM = Bottom()


def segment_of_peak(p: Peak) -> Union[Segment, Bottom]:
    if (p.position + p.height) % 2:
        raise CoordinateParity(
            f"Apex ({p.position},{p.height}) is not a lattice point of a Dyck path"
        )
    block = peak_block(p)
    if block is None:
        return BOTTOM
    i, m = block
    return Segment(i, m)


def apex_of(s: Segment) -> Tuple[int, int]:
    return s.i + s.m, s.m - s.i + 2


def _connect(start: Tuple[int, int], end: Tuple[int, int]) -> str:
    """
    Steps from one apex to the next with no other peak of height >= 2.

    With valley height v = (h1 + h2 - (p2 - p1)) / 2 >= 1 the path goes straight
    down and up; otherwise it drops to the axis, runs a UD sawtooth and climbs.
    """
    (p1, h1), (p2, h2) = start, end
    valley = (h1 + h2 - (p2 - p1)) // 2
    if valley >= 1:
        return DOWN * (h1 - valley) + UP * (h2 - valley)
    teeth = ((p2 - h2) - (p1 + h1)) // 2
    return DOWN * h1 + (UP + DOWN) * teeth + UP * h2


def phi(c: CanonicalForm) -> DyckPath:
    """The path of semilength rank+1 whose height >= 2 peaks are exactly the blocks of c."""
    semilength = c.rank + 1
    apexes: List[Tuple[int, int]] = [(0, 0)]
    apexes.extend(apex_of(s) for s in c.segments)
    apexes.append((2 * semilength, 0))
    steps = "".join(_connect(a, b) for a, b in zip(apexes, apexes[1:]))
    return DyckPath(steps)


def psi(d: DyckPath) -> CanonicalForm:
    """Read the blocks under the peaks left to right, skipping bottom triangles."""
    if d.semilength < 2:
        raise InvalidPath(
            f"Path {d.steps or '(empty)'} has semilength {d.semilength}; at least 2 is needed for rank >= 1"
        )
    segments = [s for s in (segment_of_peak(p) for p in peaks(d)) if isinstance(s, Segment)]
    return CanonicalForm(tuple(segments), d.semilength - 1)
