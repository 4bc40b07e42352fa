"""
The geometry on the closed unit square whose lines are the chords joining two
opposite sides, and in which two lines are parallel when they do not meet.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil
from typing import FrozenSet, List, Optional, Tuple

from postulatum._geom.dirset import (
    Arc,
    DirectionSet,
    dirset_classify,
    dirset_subtract,
)
from postulatum._geom.exact import (
    HORIZONTAL,
    VERTICAL,
    Direction,
    Overlap,
    PlanarLine,
    Point2,
    Segment,
    cross,
    direction_between,
    parse_point,
    segment_intersection_point,
    segments_intersect,
)
from postulatum._kinds import FINITE_MANY, ParallelKind
from postulatum.exceptions import (
    AdjacentSidesOnly,
    DegenerateChord,
    NotOnBoundary,
    ParseError,
    PointOnLine,
    PointOutsideSpace,
)

LOG = logging.getLogger(__name__)

A = Point2(0, 0)
B = Point2(1, 0)
C = Point2(1, 1)
D = Point2(0, 1)
CORNERS = {"A": A, "B": B, "C": C, "D": D}
E = Point2(0, Fraction(1, 2))

MIN_BLOCKING_SAMPLES = 8


class Side(Enum):
    BOTTOM = "Bottom"
    RIGHT = "Right"
    TOP = "Top"
    LEFT = "Left"

    @property
    def opposite(self) -> "Side":
        return OPPOSITES[self]

    @property
    def endpoints(self) -> Tuple[Point2, Point2]:
        """Corners of the side in counterclockwise order."""
        return SIDE_ENDPOINTS[self]


OPPOSITES = {
    Side.BOTTOM: Side.TOP,
    Side.TOP: Side.BOTTOM,
    Side.LEFT: Side.RIGHT,
    Side.RIGHT: Side.LEFT,
}
SIDE_ENDPOINTS = {
    Side.BOTTOM: (A, B),
    Side.RIGHT: (B, C),
    Side.TOP: (C, D),
    Side.LEFT: (D, A),
}


def in_square(point: Point2) -> bool:
    return 0 <= point.x <= 1 and 0 <= point.y <= 1


def sides_of(point: Point2) -> FrozenSet[Side]:
    if not in_square(point):
        return frozenset()
    sides = set()
    if point.y == 0:
        sides.add(Side.BOTTOM)
    if point.x == 1:
        sides.add(Side.RIGHT)
    if point.y == 1:
        sides.add(Side.TOP)
    if point.x == 0:
        sides.add(Side.LEFT)
    return frozenset(sides)


def opposite_assignable(q1: Point2, q2: Point2) -> bool:
    return any(s.opposite in sides_of(q2) for s in sides_of(q1))


@dataclass(frozen=True, eq=False)
class Chord:
    """A line of the square model, identified with its unordered endpoint pair."""

    q1: Point2
    q2: Point2

    def __post_init__(self):
        if self.q1 == self.q2:
            raise DegenerateChord(f"chord endpoints coincide at {self.q1.to_text()}")
        for point in (self.q1, self.q2):
            if not sides_of(point):
                raise NotOnBoundary(f"{point.to_text()} is not on the square boundary")
        if not opposite_assignable(self.q1, self.q2):
            raise AdjacentSidesOnly(
                f"{self.q1.to_text()} and {self.q2.to_text()} do not join opposite sides"
            )

    def __eq__(self, other):
        if not isinstance(other, Chord):
            return NotImplemented
        return frozenset((self.q1, self.q2)) == frozenset((other.q1, other.q2))

    def __hash__(self):
        return hash(frozenset((self.q1, self.q2)))

    @property
    def segment(self) -> Segment:
        return Segment(self.q1, self.q2)

    @property
    def supporting_line(self) -> PlanarLine:
        return PlanarLine.through(self.q1, self.q2)

    def contains(self, point: Point2) -> bool:
        return self.segment.contains(point)

    def mirrored(self) -> "Chord":
        """Reflection across x = 1/2."""
        return Chord(Point2(1 - self.q1.x, self.q1.y), Point2(1 - self.q2.x, self.q2.y))

    def to_text(self) -> str:
        return f"{self.q1.to_text()}:{self.q2.to_text()}"

    def to_json(self):
        return [self.q1.to_json(), self.q2.to_json()]


CE = Chord(C, E)
AB = Chord(A, B)


def chord_validate(q1: Point2, q2: Point2) -> Chord:
    return Chord(q1, q2)


def parse_chord(token: str) -> Chord:
    parts = token.split(":")
    if len(parts) != 2:
        raise ParseError(token, "expected x1,y1:x2,y2")
    return chord_validate(parse_point(parts[0]), parse_point(parts[1]))


def is_parallel(l1: Chord, l2: Chord) -> bool:
    return not segments_intersect(l1.segment, l2.segment)


def _require_in_square(point: Point2):
    if not in_square(point):
        raise PointOutsideSpace(f"{point.to_text()} is outside the closed unit square")


def chord_through(p: Point2, d: Direction) -> Optional[Chord]:
    """The maximal clip of the line through p with direction d, if it is a chord."""
    _require_in_square(p)
    low: Optional[Fraction] = None
    high: Optional[Fraction] = None
    for coord, delta in ((p.x, d.dx), (p.y, d.dy)):
        if delta == 0:
            continue
        t0, t1 = -coord / delta, (1 - coord) / delta
        lo, hi = min(t0, t1), max(t0, t1)
        low = lo if low is None else max(low, lo)
        high = hi if high is None else min(high, hi)
    if low is None or high is None or low >= high:
        return None
    q1 = Point2(p.x + low * d.dx, p.y + low * d.dy)
    q2 = Point2(p.x + high * d.dx, p.y + high * d.dy)
    if not opposite_assignable(q1, q2):
        return None
    return Chord(q1, q2)


def valid_directions(p: Point2) -> DirectionSet:
    """
    Directions d for which chord_through(p, d) exists. The exit sides of the line
    through p only change at directions towards a corner, and along the sides.
    """
    _require_in_square(p)
    candidates = [direction_between(p, corner) for corner in CORNERS.values() if corner != p]
    candidates += [HORIZONTAL, VERTICAL]
    return DirectionSet.from_predicate(candidates, lambda d: chord_through(p, d) is not None)


def blocked_directions(p: Point2, l: Chord) -> DirectionSet:
    """Directions whose line through p meets l: the closed arc l subtends at p."""
    if l.contains(p):
        raise PointOnLine(f"{p.to_text()} lies on {l.to_text()}")
    v1, v2 = l.q1 - p, l.q2 - p
    d1, d2 = Direction(v1.x, v1.y), Direction(v2.x, v2.y)
    turn = cross(v1.x, v1.y, v2.x, v2.y)
    if turn == 0:
        return DirectionSet.single(d1)
    if turn > 0:
        return DirectionSet.arc(d1, d2)
    return DirectionSet.arc(d2, d1)


def _arc_spans(arc: Arc) -> List[Tuple[Direction, Tuple[Fraction, Fraction]]]:
    """Splits an arc into pieces of less than a half-turn, as (start, end vector)."""
    start, end = arc.start, arc.end
    if start == end:
        turn = start.perpendicular
        return [
            (start, (turn.dx, turn.dy)),
            (turn, (-start.dx, -start.dy)),
        ]
    if start.precedes(end):
        return [(start, (end.dx, end.dy))]
    return [(start, (-end.dx, -end.dy))]


def sample_directions(directions: DirectionSet, count: int) -> List[Direction]:
    """Up to `count` distinct members: the isolated directions, then arc interiors."""
    samples = list(directions.isolated)[:count]
    spans = [span for arc in directions.arcs for span in _arc_spans(arc)]
    if not spans or len(samples) >= count:
        return samples
    per_span = ceil((count - len(samples)) / len(spans))
    for start, (ex, ey) in spans:
        for i in range(1, per_span + 1):
            t = Fraction(i, per_span + 1)
            samples.append(Direction((1 - t) * start.dx + t * ex, (1 - t) * start.dy + t * ey))
    return samples[:count]


@dataclass(frozen=True)
class WitnessBundle:
    unique_parallel: Optional[Chord] = None
    bounding_pencil: Optional[Tuple[Chord, Chord]] = None
    blocking_samples: Tuple[Tuple[Direction, Point2], ...] = ()
    parallel_chords: Tuple[Chord, ...] = ()
    extreme_parallels: Tuple[Chord, ...] = ()

    def to_json(self) -> dict:
        result: dict = {}
        if self.unique_parallel is not None:
            result["unique_parallel"] = self.unique_parallel.to_json()
        if self.bounding_pencil is not None:
            u, v = self.bounding_pencil
            result["bounding_pencil"] = {"u": u.to_json(), "v": v.to_json()}
        if self.blocking_samples:
            result["blocking_samples"] = [
                {"direction": d.to_json(), "meets_at": q.to_json()}
                for d, q in self.blocking_samples
            ]
        if self.parallel_chords:
            result["parallel_chords"] = [c.to_json() for c in self.parallel_chords]
        if self.extreme_parallels:
            result["extreme_parallels"] = [c.to_json() for c in self.extreme_parallels]
        return result


@dataclass(frozen=True)
class Classification:
    point: Point2
    line: Chord
    kind: ParallelKind
    parallels: DirectionSet = field(repr=False)
    witnesses: WitnessBundle

    def to_json(self) -> dict:
        result = {"model": "square", "point": self.point.to_json(), "line": self.line.to_json()}
        result.update(self.kind.to_dict())
        result["parallels"] = self.parallels.to_json()
        result["witnesses"] = self.witnesses.to_json()
        return result


def _meeting_point(chord: Chord, l: Chord) -> Optional[Point2]:
    hit = segment_intersection_point(chord.segment, l.segment)
    if isinstance(hit, Overlap):
        return hit.shared.p
    return hit


def _pencil_edge(p: Point2, arc: Arc, at_start: bool) -> Chord:
    direction = arc.start if at_start else arc.end
    chord = chord_through(p, direction)
    if chord is not None:
        return chord
    # open arc end without a chord: fall back to a direction strictly inside
    inner = sample_directions(DirectionSet.from_arcs([arc]), 1)[0]
    return chord_through(p, inner)  # type: ignore


def _extreme_parallels(p: Point2, parallels: DirectionSet) -> Tuple[Chord, ...]:
    """Chords along the closed ends of the parallel arcs; these are parallels themselves."""
    ends: List[Direction] = []
    for arc in parallels.arcs:
        if arc.start == arc.end:
            continue
        for direction, closed in ((arc.start, arc.start_closed), (arc.end, arc.end_closed)):
            if closed:
                ends.append(direction)
    chords = (chord_through(p, d) for d in ends)
    return tuple(dict.fromkeys(c for c in chords if c is not None))


def witnesses(p: Point2, l: Chord, parallels: DirectionSet) -> WitnessBundle:
    kind = dirset_classify(parallels)
    if kind == ParallelKind.EUCLIDEAN:
        return WitnessBundle(unique_parallel=chord_through(p, parallels.isolated[0]))
    if kind.name == FINITE_MANY:
        chords = tuple(chord_through(p, d) for d in parallels.isolated)
        return WitnessBundle(parallel_chords=chords)  # type: ignore
    if kind == ParallelKind.HYPERBOLIC:
        # the pencil runs through the endpoints of l
        u = chord_through(p, direction_between(p, l.q1))
        v = chord_through(p, direction_between(p, l.q2))
        if u is None or v is None or u == v:
            arc = parallels.arcs[0]
            u, v = _pencil_edge(p, arc, True), _pencil_edge(p, arc, False)
        return WitnessBundle(
            bounding_pencil=(u, v), extreme_parallels=_extreme_parallels(p, parallels)
        )
    samples = []
    for direction in sample_directions(valid_directions(p), MIN_BLOCKING_SAMPLES):
        chord = chord_through(p, direction)
        hit = _meeting_point(chord, l) if chord is not None else None
        if hit is not None:
            samples.append((direction, hit))
    return WitnessBundle(blocking_samples=tuple(samples))


def parallels_at(p: Point2, l: Chord) -> DirectionSet:
    _require_in_square(p)
    if l.contains(p):
        raise PointOnLine(f"{p.to_text()} lies on {l.to_text()}")
    return dirset_subtract(valid_directions(p), blocked_directions(p, l))


def classify_kind(p: Point2, l: Chord) -> ParallelKind:
    """The kind alone, skipping witness construction."""
    return dirset_classify(parallels_at(p, l))


def classify(p: Point2, l: Chord) -> Classification:
    parallels = parallels_at(p, l)
    kind = dirset_classify(parallels)
    LOG.debug(f"{p.to_text()} against {l.to_text()}: {kind}")
    return Classification(p, l, kind, parallels, witnesses(p, l, parallels))
