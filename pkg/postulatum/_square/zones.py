"""
Exact partition of the square by parallel behaviour with respect to a chord l.

Classification only changes across the critical lines: the lines joining a corner
to an endpoint of l, the supporting line of l, and the sides. Their arrangement
is built by cutting convex cells; each cell is classified at its vertex centroid.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from postulatum._geom.exact import PlanarLine, Point2, orient
from postulatum._kinds import ParallelKind, sorted_kinds
from postulatum._square.model import CORNERS, Chord, Side, classify_kind
from postulatum.exceptions import PointOnLine

LOG = logging.getLogger(__name__)

Polygon = Tuple[Point2, ...]

UNIT_SQUARE: Polygon = (Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1))


def polygon_area(polygon: Sequence[Point2]) -> Fraction:
    """Signed shoelace area, positive for counterclockwise vertex order."""
    total = Fraction(0)
    for i, vertex in enumerate(polygon):
        following = polygon[(i + 1) % len(polygon)]
        total += vertex.x * following.y - following.x * vertex.y
    return total / 2


def vertex_centroid(polygon: Sequence[Point2]) -> Point2:
    count = len(polygon)
    return Point2(sum(v.x for v in polygon) / count, sum(v.y for v in polygon) / count)


def contains_point(polygon: Sequence[Point2], point: Point2, strict: bool = True) -> bool:
    """Membership in a counterclockwise convex polygon."""
    for i, vertex in enumerate(polygon):
        turn = orient(vertex, polygon[(i + 1) % len(polygon)], point)
        if turn < 0 or (strict and turn == 0):
            return False
    return True


def convex_hull(points: Sequence[Point2]) -> Polygon:
    """Monotone chain, counterclockwise, collinear vertices dropped."""
    ordered = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(ordered) < 3:
        return tuple(ordered)

    def chain(sequence):
        hull: List[Point2] = []
        for point in sequence:
            while len(hull) >= 2 and orient(hull[-2], hull[-1], point) <= 0:
                hull.pop()
            hull.append(point)
        return hull

    lower = chain(ordered)
    upper = chain(reversed(ordered))
    return tuple(lower[:-1] + upper[:-1])


def split_polygon(polygon: Polygon, line: PlanarLine) -> List[Polygon]:
    values = [line.value(v) for v in polygon]
    if all(v >= 0 for v in values) or all(v <= 0 for v in values):
        return [polygon]
    positive: List[Point2] = []
    negative: List[Point2] = []
    for i, vertex in enumerate(polygon):
        j = (i + 1) % len(polygon)
        here, there = values[i], values[j]
        if here >= 0:
            positive.append(vertex)
        if here <= 0:
            negative.append(vertex)
        if here * there < 0:
            t = here / (here - there)
            following = polygon[j]
            crossing = Point2(
                vertex.x + t * (following.x - vertex.x),
                vertex.y + t * (following.y - vertex.y),
            )
            positive.append(crossing)
            negative.append(crossing)
    return [tuple(part) for part in (positive, negative) if polygon_area(part) > 0]


def critical_lines(l: Chord) -> List[PlanarLine]:
    lines = set()
    for corner in CORNERS.values():
        for endpoint in (l.q1, l.q2):
            if corner != endpoint:
                lines.add(PlanarLine.through(corner, endpoint))
    lines.add(l.supporting_line)
    for side in Side:
        lines.add(PlanarLine.through(*side.endpoints))
    return sorted(lines, key=lambda line: (line.a, line.b, line.c))


def arrangement_cells(lines: Sequence[PlanarLine]) -> List[Polygon]:
    cells = [UNIT_SQUARE]
    for line in lines:
        cells = [part for cell in cells for part in split_polygon(cell, line)]
    LOG.debug(f"{len(lines)} critical lines cut the square into {len(cells)} cells")
    return cells


@dataclass(frozen=True)
class ZoneCell:
    polygon: Polygon
    kind: ParallelKind

    @property
    def area(self) -> Fraction:
        return polygon_area(self.polygon)

    def to_json(self) -> dict:
        result: dict = {"polygon": [v.to_json() for v in self.polygon]}
        result.update(self.kind.to_dict())
        return result


@dataclass(frozen=True)
class BoundaryInterval:
    """A piece of one side; start == end marks a single breakpoint."""

    side: Side
    start: Point2
    end: Point2
    start_closed: bool
    end_closed: bool
    kind: Optional[ParallelKind]

    @property
    def length(self) -> Fraction:
        return abs(self.end.x - self.start.x) + abs(self.end.y - self.start.y)

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "end": self.end.to_json(),
            "start_closed": self.start_closed,
            "end_closed": self.end_closed,
            "kind": self.kind.to_dict() if self.kind else None,
        }


@dataclass(frozen=True)
class ZoneMap:
    line: Chord
    cells: Tuple[ZoneCell, ...]
    boundary_intervals: Dict[Side, Tuple[BoundaryInterval, ...]]
    corner_kinds: Dict[str, Optional[ParallelKind]]
    arrangement_size: int

    @property
    def kinds_present(self) -> List[ParallelKind]:
        kinds = {cell.kind for cell in self.cells}
        for intervals in self.boundary_intervals.values():
            kinds.update(i.kind for i in intervals if i.kind is not None)
        kinds.update(k for k in self.corner_kinds.values() if k is not None)
        return sorted_kinds(kinds)

    def kind_at(self, point: Point2) -> Optional[ParallelKind]:
        """Looks a point up in the map instead of classifying it."""
        for cell in self.cells:
            if contains_point(cell.polygon, point, strict=False):
                return cell.kind
        return None

    def to_json(self) -> dict:
        return {
            "line": self.line.to_json(),
            "cells": [cell.to_json() for cell in self.cells],
            "boundary": {
                side.value: [i.to_json() for i in self.boundary_intervals[side]]
                for side in Side
            },
            "corners": {
                name: kind.to_dict() if kind else None
                for name, kind in self.corner_kinds.items()
            },
        }


def _kind_or_none(point: Point2, l: Chord) -> Optional[ParallelKind]:
    try:
        return classify_kind(point, l)
    except PointOnLine:
        return None


def _merge_cells(cells: List[ZoneCell]) -> List[ZoneCell]:
    """Greedily unites same-kind cells whose union stays convex."""
    merged = list(cells)
    changed = True
    while changed:
        changed = False
        for i, first in enumerate(merged):
            for j in range(i + 1, len(merged)):
                second = merged[j]
                if first.kind != second.kind:
                    continue
                hull = convex_hull(first.polygon + second.polygon)
                if polygon_area(hull) == first.area + second.area:
                    merged[i] = ZoneCell(hull, first.kind)
                    del merged[j]
                    changed = True
                    break
            if changed:
                break
    return merged


def _side_breakpoints(side: Side, lines: Sequence[PlanarLine]) -> List[Fraction]:
    start, end = side.endpoints
    params = {Fraction(0), Fraction(1)}
    for line in lines:
        at_start, at_end = line.value(start), line.value(end)
        if at_start == at_end:
            # parallel to, or along, the side
            continue
        t = at_start / (at_start - at_end)
        if 0 <= t <= 1:
            params.add(t)
    return sorted(params)


def _along(side: Side, t: Fraction) -> Point2:
    start, end = side.endpoints
    return Point2(start.x + t * (end.x - start.x), start.y + t * (end.y - start.y))


def boundary_restriction(
    side: Side, l: Chord, lines: Sequence[PlanarLine]
) -> Tuple[BoundaryInterval, ...]:
    params = _side_breakpoints(side, lines)
    pieces: List[BoundaryInterval] = []
    for index in range(len(params) - 1):
        low, high = params[index], params[index + 1]
        if index > 0:
            breakpoint_ = _along(side, low)
            pieces.append(
                BoundaryInterval(
                    side, breakpoint_, breakpoint_, True, True, _kind_or_none(breakpoint_, l)
                )
            )
        middle = _along(side, (low + high) / 2)
        pieces.append(
            BoundaryInterval(
                side, _along(side, low), _along(side, high), False, False, _kind_or_none(middle, l)
            )
        )
    merged: List[BoundaryInterval] = []
    for piece in pieces:
        if merged and merged[-1].kind == piece.kind:
            last = merged.pop()
            piece = BoundaryInterval(
                side, last.start, piece.end, last.start_closed, piece.end_closed, piece.kind
            )
        merged.append(piece)
    return tuple(merged)


def exact_zone_map(l: Chord) -> ZoneMap:
    lines = critical_lines(l)
    raw = arrangement_cells(lines)
    cells = [ZoneCell(polygon, classify_kind(vertex_centroid(polygon), l)) for polygon in raw]
    merged = _merge_cells(cells)
    boundary = {side: boundary_restriction(side, l, lines) for side in Side}
    corners = {name: _kind_or_none(corner, l) for name, corner in CORNERS.items()}
    LOG.debug(f"zone map for {l.to_text()}: {len(raw)} cells, {len(merged)} after merging")
    return ZoneMap(l, tuple(merged), boundary, corners, len(raw))


def _fractions(totals: Dict[ParallelKind, Fraction], kinds) -> Dict[ParallelKind, Fraction]:
    whole = sum(totals.values(), Fraction(0))
    return {kind: (totals.get(kind, Fraction(0)) / whole if whole else Fraction(0)) for kind in kinds}


@dataclass(frozen=True)
class DegreeOfNegation:
    area_fraction: Dict[ParallelKind, Fraction]
    boundary_length_fraction: Dict[ParallelKind, Fraction]
    corner_kinds: Dict[str, Optional[ParallelKind]]

    @property
    def negation_degree_area(self) -> Fraction:
        return 1 - self.area_fraction.get(ParallelKind.EUCLIDEAN, Fraction(0))

    @property
    def negation_degree_boundary(self) -> Fraction:
        return 1 - self.boundary_length_fraction.get(ParallelKind.EUCLIDEAN, Fraction(0))

    def to_json(self) -> dict:
        return {
            "area": {k.label: str(v) for k, v in self.area_fraction.items()},
            "boundary": {k.label: str(v) for k, v in self.boundary_length_fraction.items()},
            "corners": {
                name: kind.to_dict() if kind else None
                for name, kind in self.corner_kinds.items()
            },
            "negation_degree_area": str(self.negation_degree_area),
            "negation_degree_boundary": str(self.negation_degree_boundary),
        }


def degree_of_negation(l: Chord, zone_map: Optional[ZoneMap] = None) -> DegreeOfNegation:
    zone_map = zone_map if zone_map is not None else exact_zone_map(l)
    areas: Dict[ParallelKind, Fraction] = defaultdict(Fraction)
    for cell in zone_map.cells:
        areas[cell.kind] += cell.area
    lengths: Dict[ParallelKind, Fraction] = defaultdict(Fraction)
    for intervals in zone_map.boundary_intervals.values():
        for interval in intervals:
            if interval.kind is not None:
                lengths[interval.kind] += interval.length
    kinds = sorted_kinds(set(zone_map.kinds_present) | {ParallelKind.EUCLIDEAN})
    return DegreeOfNegation(
        area_fraction=_fractions(areas, kinds),
        boundary_length_fraction=_fractions(lengths, kinds),
        corner_kinds=dict(zone_map.corner_kinds),
    )
