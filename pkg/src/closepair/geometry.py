"""Planar points and the instrumented distance primitive.

Every solver in this package charges its pairwise work through
``squared_distance``, which bumps an :class:`OpCounter` by exactly one per
evaluation.  Comparisons are done on squared distances throughout; the square
root is applied once, at reporting time, by ``final_distance`` and is never
counted.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Point:
    """A 2-D point with finite coordinates."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


class PointSet:
    """An ordered, indexable collection of points. Duplicates are allowed."""

    __slots__ = ("points",)

    def __init__(self, points):
        self.points = tuple(points)
        for p in self.points:
            if not isinstance(p, Point):
                raise TypeError(f"expected Point, got {type(p).__name__}")

    @classmethod
    def from_coords(cls, coords):
        """Build a set from an iterable of (x, y) pairs."""
        return cls(Point(float(x), float(y)) for x, y in coords)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __repr__(self):
        return f"PointSet(n={len(self.points)})"


@dataclass(slots=True)
class OpCounter:
    """Counts distance computations for a single solver invocation.

    ``scan_spans``, when set to a list, additionally records how many
    successor comparisons each strip point received during strip scans.
    It exists so the per-point scan bound can be observed from outside;
    it does not affect counting.
    """

    dc: int = 0
    scan_spans: list | None = None


@dataclass(frozen=True, slots=True)
class ClosestPairResult:
    """Winning index pair, its squared distance, and the DCs spent finding it."""

    i: int
    j: int
    dist_sq: float
    dc_used: int


def squared_distance(p: Point, q: Point, counter: OpCounter) -> float:
    """Squared Euclidean distance between p and q; costs exactly one DC.

    The expression order is fixed as (p.x-q.x)**2 + (p.y-q.y)**2 so that
    every solver produces bit-identical values for the same winning pair.
    """
    counter.dc += 1
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def final_distance(dist_sq: float) -> float:
    """Square root applied at reporting time only; never counted."""
    return math.sqrt(dist_sq)
