"""
The Euclidean plane z = 0 cutting the unit sphere along the equator (C).

Sphere points are rational rays and great circles are rational normals; neither is
normalised, so incidence, antipodality and circle membership stay exact sign and
zero tests.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import List, Optional, Tuple, Union

from postulatum._geom.exact import (
    PlanarLine,
    Point2,
    format_rational,
    orient,
    parse_rational,
    primitive_integers,
)
from postulatum._kinds import ParallelKind
from postulatum.exceptions import (
    AntipodalPair,
    CoincidentPoints,
    DegenerateDirection,
    IrrationalCirclePoint,
    NotOnC,
    ParseError,
    PointOnLine,
)

LOG = logging.getLogger(__name__)

Triple = Tuple[Fraction, Fraction, Fraction]


def parse_triple(token: str) -> Triple:
    parts = token.split(",")
    if len(parts) != 3:
        raise ParseError(token, "expected x,y,z")
    x, y, z = (parse_rational(part) for part in parts)
    return x, y, z


def cross3(u: Triple, v: Triple) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot3(u: Triple, v: Triple) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _is_zero(u: Triple) -> bool:
    return all(c == 0 for c in u)


@dataclass(frozen=True)
class SpherePoint:
    """The unit-sphere point in the direction of `ray`; the sign is significant."""

    ray: Triple

    def __post_init__(self):
        ray = tuple(Fraction(c) for c in self.ray)
        if len(ray) != 3 or _is_zero(ray):  # type: ignore
            raise DegenerateDirection("a sphere point needs a non-zero ray")
        object.__setattr__(self, "ray", tuple(Fraction(c) for c in primitive_integers(*ray)))

    @property
    def antipode(self) -> "SpherePoint":
        return SpherePoint(tuple(-c for c in self.ray))  # type: ignore

    def to_json(self):
        return [format_rational(c) for c in self.ray]


@dataclass(frozen=True)
class GreatCircle:
    """Points of the unit sphere orthogonal to `normal`; n and t*n are the same circle."""

    normal: Triple

    def __post_init__(self):
        normal = tuple(Fraction(c) for c in self.normal)
        if len(normal) != 3 or _is_zero(normal):  # type: ignore
            raise DegenerateDirection("a great circle needs a non-zero normal")
        ints = primitive_integers(*normal)
        leader = next(c for c in ints if c != 0)
        if leader < 0:
            ints = tuple(-c for c in ints)
        object.__setattr__(self, "normal", tuple(Fraction(c) for c in ints))

    def contains(self, point: SpherePoint) -> bool:
        return dot3(self.normal, point.ray) == 0

    def to_json(self):
        return [format_rational(c) for c in self.normal]


@dataclass(frozen=True)
class Identical:
    circle: GreatCircle

    def to_json(self) -> dict:
        return {"meet": "identical", "circle": self.circle.to_json()}


@dataclass(frozen=True)
class TwoPoints:
    p: SpherePoint
    antipode: SpherePoint

    def to_json(self) -> dict:
        return {"meet": "two-points", "points": [self.p.to_json(), self.antipode.to_json()]}


def great_circles_meet(c1: GreatCircle, c2: GreatCircle) -> Union[Identical, TwoPoints]:
    ray = cross3(c1.normal, c2.normal)
    if _is_zero(ray):
        return Identical(c1)
    # first non-zero component positive for p, its negation for the antipode
    point = GreatCircle(ray)
    p = SpherePoint(point.normal)
    return TwoPoints(p, p.antipode)


def classify_sphere(p: SpherePoint, l: GreatCircle) -> ParallelKind:
    if l.contains(p):
        raise PointOnLine(f"{p.to_json()} lies on the great circle {l.to_json()}")
    return ParallelKind.ELLIPTIC


def circles_through(p: SpherePoint, count: int) -> List[GreatCircle]:
    """`count` distinct great circles through p (normals orthogonal to p)."""
    ray = p.ray
    axes = (
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    )
    u = next(n for n in (cross3(ray, axis) for axis in axes) if not _is_zero(n))
    v = cross3(ray, u)
    # u and v span the plane orthogonal to p; distinct t give non-parallel normals
    return [
        GreatCircle(tuple((1 - t) * a + t * b for a, b in zip(u, v)))  # type: ignore
        for t in (Fraction(i, count) for i in range(count))
    ]


def classify_sphere_witness(p: SpherePoint, l: GreatCircle, count: int = 8):
    """Each great circle through p with the pair of points where it meets l."""
    classify_sphere(p, l)
    return [(circle, great_circles_meet(circle, l)) for circle in circles_through(p, count)]


def classify_plane(p: Point2, l: PlanarLine) -> Tuple[ParallelKind, PlanarLine]:
    if l.contains(p):
        raise PointOnLine(f"{p.to_text()} lies on the line {l.to_text()}")
    return ParallelKind.EUCLIDEAN, PlanarLine(l.a, l.b, -(l.a * p.x + l.b * p.y))


@dataclass(frozen=True)
class ModelM:
    """Plane z = 0 through the centre of the unit sphere, meeting it along (C)."""

    plane_normal: Triple = (Fraction(0), Fraction(0), Fraction(1))

    @property
    def equator(self) -> GreatCircle:
        return GreatCircle(self.plane_normal)


@dataclass(frozen=True)
class DualStatus:
    is_line_on_sphere: bool
    is_line_in_plane: bool
    witnesses: Tuple[Point2, Point2, Point2]
    normal: Triple

    def to_json(self) -> dict:
        return {
            "is_line_on_sphere": self.is_line_on_sphere,
            "is_line_in_plane": self.is_line_in_plane,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def dual_status_of_C(m: Optional[ModelM] = None) -> DualStatus:  # pylint: disable=invalid-name
    m = m if m is not None else ModelM()
    equator = m.equator
    witnesses = (Point2(1, 0), Point2(0, 1), Point2(-1, 0))
    on_sphere = all(
        equator.contains(SpherePoint((w.x, w.y, Fraction(0)))) for w in witnesses
    ) and dot3(equator.normal, equator.normal) > 0
    in_plane = orient(*witnesses) == 0
    return DualStatus(on_sphere, in_plane, witnesses, equator.normal)


def _exact_sqrt(value: Fraction) -> Optional[Fraction]:
    num, den = value.numerator, value.denominator
    root_num, root_den = isqrt(num), isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


def plane_point(point: SpherePoint) -> Point2:
    """The point of (C) in plane coordinates, when the ray normalises rationally."""
    x, y, z = point.ray
    if z != 0:
        raise NotOnC(f"{point.to_json()} is not on (C)")
    norm = _exact_sqrt(x * x + y * y)
    if norm is None:
        raise IrrationalCirclePoint(f"{point.to_json()} has an irrational unit point")
    return Point2(x / norm, y / norm)


def rational_circle_point(t: Fraction) -> SpherePoint:
    """Rational point of (C) from the parameter t: ((1 - t^2), 2t, 0) / (1 + t^2)."""
    t = Fraction(t)
    scale = 1 + t * t
    return SpherePoint(((1 - t * t) / scale, 2 * t / scale, Fraction(0)))


@dataclass(frozen=True)
class DualRepresentation:
    planar: PlanarLine
    spherical: GreatCircle
    shared_points: Tuple[SpherePoint, SpherePoint]

    def to_json(self) -> dict:
        return {
            "planar": self.planar.to_json(),
            "spherical": self.spherical.to_json(),
            "shared_points": [p.to_json() for p in self.shared_points],
        }


def circle_meets_line(line: PlanarLine, a: Point2, b: Point2) -> bool:
    """
    True iff the unit circle meets the line through a and b exactly at {a, b}:
    along a + s(b - a) the circle equation reduces to s(|d|^2 s + 2 a.d) = 0.
    """
    if not (line.contains(a) and line.contains(b)):
        return False
    dx, dy = b.x - a.x, b.y - a.y
    norm = dx * dx + dy * dy
    constant = a.x * a.x + a.y * a.y - 1
    if constant != 0:
        return False
    return -2 * (a.x * dx + a.y * dy) / norm == 1


def dual_representation_of_AB(  # pylint: disable=invalid-name
    a: SpherePoint, b: SpherePoint
) -> DualRepresentation:
    for point in (a, b):
        if point.ray[2] != 0:
            raise NotOnC(f"{point.to_json()} is not on (C)")
    if a == b:
        raise CoincidentPoints(f"{a.to_json()} given twice")
    if a == b.antipode:
        raise AntipodalPair(f"{a.to_json()} and {b.to_json()} are antipodal")
    spherical = GreatCircle(cross3(a.ray, b.ray))
    pa, pb = plane_point(a), plane_point(b)
    planar = PlanarLine.through(pa, pb)
    if not circle_meets_line(planar, pa, pb):
        raise AssertionError("chord and circle must share exactly the two given points")
    return DualRepresentation(planar, spherical, (a, b))
