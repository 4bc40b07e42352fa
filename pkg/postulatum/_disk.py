"""
Beltrami-Klein disk: points strictly inside the unit circle, lines the open chords
between two rational points of the circle. Ideal endpoints are not points of the
model, so two chords sharing only an endpoint are parallel.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from postulatum._geom.dirset import DirectionSet, dirset_classify, dirset_subtract
from postulatum._geom.exact import Point2, cross, direction_between, orient, parse_point
from postulatum._kinds import ParallelKind
from postulatum._sphere import plane_point, rational_circle_point
from postulatum.exceptions import (
    DegenerateChord,
    NotOnBoundary,
    ParseError,
    PointOnLine,
    PointOutsideSpace,
)

LOG = logging.getLogger(__name__)


def norm_squared(p: Point2) -> Fraction:
    return p.x * p.x + p.y * p.y


def circle_point(t: Fraction) -> Point2:
    """Rational point of the unit circle ((1 - t^2), 2t) / (1 + t^2)."""
    return plane_point(rational_circle_point(t))


@dataclass(frozen=True, eq=False)
class DiskChord:
    """An open chord of the unit disk, identified with its unordered ideal endpoints."""

    q1: Point2
    q2: Point2

    def __post_init__(self):
        if self.q1 == self.q2:
            raise DegenerateChord(f"chord endpoints coincide at {self.q1.to_text()}")
        for point in (self.q1, self.q2):
            if norm_squared(point) != 1:
                raise NotOnBoundary(f"{point.to_text()} is not on the unit circle")

    def __eq__(self, other):
        if not isinstance(other, DiskChord):
            return NotImplemented
        return frozenset((self.q1, self.q2)) == frozenset((other.q1, other.q2))

    def __hash__(self):
        return hash(frozenset((self.q1, self.q2)))

    def contains(self, point: Point2) -> bool:
        return norm_squared(point) < 1 and orient(self.q1, self.q2, point) == 0

    def to_text(self) -> str:
        return f"{self.q1.to_text()}:{self.q2.to_text()}"

    def to_json(self):
        return [self.q1.to_json(), self.q2.to_json()]


def parse_disk_chord(token: str) -> DiskChord:
    parts = token.split(":")
    if len(parts) != 2:
        raise ParseError(token, "expected x1,y1:x2,y2")
    return DiskChord(parse_point(parts[0]), parse_point(parts[1]))


def _require_inside(p: Point2):
    if norm_squared(p) >= 1:
        raise PointOutsideSpace(f"{p.to_text()} is not inside the open unit disk")


def disk_parallels(p: Point2, l: DiskChord) -> DirectionSet:
    """
    Directions through p whose chord misses l. The line through p in direction d
    meets l inside the disk iff d lies strictly between the directions to its
    endpoints; the two limiting chords are parallels.
    """
    _require_inside(p)
    if l.contains(p):
        raise PointOnLine(f"{p.to_text()} lies on {l.to_text()}")
    v1, v2 = l.q1 - p, l.q2 - p
    d1, d2 = direction_between(p, l.q1), direction_between(p, l.q2)
    if cross(v1.x, v1.y, v2.x, v2.y) > 0:
        blocked = DirectionSet.arc(d1, d2, False, False)
    else:
        blocked = DirectionSet.arc(d2, d1, False, False)
    return dirset_subtract(DirectionSet.full_turn(), blocked)


def classify_disk(p: Point2, l: DiskChord) -> ParallelKind:
    kind = dirset_classify(disk_parallels(p, l))
    LOG.debug(f"{p.to_text()} against {l.to_text()} in the disk: {kind}")
    return kind


def chord_towards(p: Point2, q: Point2) -> DiskChord:
    """The chord through p ending at the ideal point q."""
    v = q - p
    # the roots of |p + s v|^2 = 1 multiply to (|p|^2 - 1) / |v|^2, and s = 1 is one
    s = (norm_squared(p) - 1) / norm_squared(v)
    return DiskChord(q, Point2(p.x + s * v.x, p.y + s * v.y))


def limiting_parallels(p: Point2, l: DiskChord) -> Tuple[DiskChord, DiskChord]:
    """The two parallels through p sharing an ideal endpoint with l."""
    _require_inside(p)
    if l.contains(p):
        raise PointOnLine(f"{p.to_text()} lies on {l.to_text()}")
    return chord_towards(p, l.q1), chord_towards(p, l.q2)
