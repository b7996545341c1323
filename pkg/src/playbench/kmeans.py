"""One-pass nearest-center clustering over integer stage points.

Distances are exact integer squared Euclidean distances, so assignment has no
floating-point component at all; ties go to the lowest center index.  There
is no iterative refinement — each point is labelled once against the fixed
mass centers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .dataset import Point
from .errors import ValidationError

# Fixed 10-color wheel; cluster i gets PALETTE[i % 10].
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def squared_distance(p: Point, q: Point) -> int:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


@dataclass(frozen=True)
class Assignment:
    """Per-point cluster labels (0-based) and the winning squared distances."""

    clusters: tuple[int, ...]
    distances: tuple[int, ...]


def assign_clusters(points: list[Point], centers: list[Point]) -> Assignment:
    """Label every point with its nearest center, lowest index winning ties."""
    if not points:
        raise ValidationError("cannot cluster an empty point cloud", ("points",))
    if not centers:
        raise ValidationError("need at least one mass center", ("centers",))
    clusters = []
    distances = []
    for p in points:
        best_idx = 0
        best_d = squared_distance(p, centers[0])
        for idx in range(1, len(centers)):
            d = squared_distance(p, centers[idx])
            if d < best_d:
                best_d = d
                best_idx = idx
        clusters.append(best_idx)
        distances.append(best_d)
    return Assignment(tuple(clusters), tuple(distances))


@dataclass(frozen=True)
class ColouredCloud:
    """A labelled cloud ready for display: parallel point/cluster/color rows."""

    points: tuple[Point, ...]
    centers: tuple[Point, ...]
    clusters: tuple[int, ...]
    colors: tuple[str, ...]

    def entries(self) -> Iterator[tuple[Point, int, str]]:
        return zip(self.points, self.clusters, self.colors)

    def to_json_dict(self) -> dict:
        return {
            "points": [list(p) for p in self.points],
            "centers": [list(c) for c in self.centers],
            "clusters": list(self.clusters),
            "colors": list(self.colors),
        }


def colour_points(
    points: list[Point], centers: list[Point], assignment: Assignment
) -> ColouredCloud:
    """Attach palette colors to an assignment (``PALETTE[cluster % 10]``)."""
    if len(assignment.clusters) != len(points):
        raise ValidationError(
            "assignment does not match the point cloud", ("points", "assignment")
        )
    colors = tuple(PALETTE[c % len(PALETTE)] for c in assignment.clusters)
    return ColouredCloud(tuple(points), tuple(centers), assignment.clusters, colors)
