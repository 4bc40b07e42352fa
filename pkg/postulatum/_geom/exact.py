"""
Exact rational primitives for the plane: points, segments, undirected directions
and homogeneous lines. Every predicate is decided with Fraction arithmetic.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple, Union

from postulatum.exceptions import DegenerateDirection, ParseError

LOG = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")
DECIMAL_RE = re.compile(r"^-?\d*\.\d*([eE][-+]?\d+)?$|^-?\d+[eE][-+]?\d+$")


def parse_rational(token: str) -> Fraction:
    """
    Parses `p` or `p/q` (optional leading minus, q > 0) into a Fraction.

    :param token: literal to parse

    :return: the exact rational value
    """
    text = token.strip()
    if not RATIONAL_RE.match(text):
        hint = "decimals are not accepted, use p/q form" if DECIMAL_RE.match(text) else ""
        raise ParseError(token, hint)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        # pylint: disable=raise-missing-from
        raise ParseError(token, "denominator must be positive")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def primitive_integers(*values: Fraction) -> Tuple[int, ...]:
    """Scales a rational vector to the coprime integer vector on the same ray."""
    scale = 1
    for value in values:
        den = Fraction(value).denominator
        scale = scale * den // gcd(scale, den)
    ints = [int(Fraction(value) * scale) for value in values]
    divisor = 0
    for item in ints:
        divisor = gcd(divisor, item)
    if divisor == 0:
        return tuple(ints)
    return tuple(item // divisor for item in ints)


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _as_fraction(self.x))
        object.__setattr__(self, "y", _as_fraction(self.y))

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def to_text(self) -> str:
        return f"{format_rational(self.x)},{format_rational(self.y)}"

    def to_json(self):
        return [format_rational(self.x), format_rational(self.y)]


def parse_point(token: str) -> Point2:
    parts = token.split(",")
    if len(parts) != 2:
        raise ParseError(token, "expected x,y")
    return Point2(parse_rational(parts[0]), parse_rational(parts[1]))


def cross(ax: Fraction, ay: Fraction, bx: Fraction, by: Fraction) -> Fraction:
    return ax * by - ay * bx


def orient(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of (b - a) x (c - a): +1 counterclockwise, -1 clockwise, 0 collinear."""
    return sign(cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y))


@dataclass(frozen=True)
class Segment:
    p: Point2
    q: Point2

    def __post_init__(self):
        if self.p == self.q:
            raise DegenerateDirection(f"segment endpoints coincide at {self.p.to_text()}")

    def at(self, t: Fraction) -> Point2:
        return Point2(self.p.x + t * (self.q.x - self.p.x), self.p.y + t * (self.q.y - self.p.y))

    def contains(self, point: Point2) -> bool:
        if orient(self.p, self.q, point) != 0:
            return False
        return (
            min(self.p.x, self.q.x) <= point.x <= max(self.p.x, self.q.x)
            and min(self.p.y, self.q.y) <= point.y <= max(self.p.y, self.q.y)
        )


@dataclass(frozen=True)
class Overlap:
    """Collinear segments sharing more than one point."""

    shared: Segment


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments share at least one point."""
    o1 = orient(s1.p, s1.q, s2.p)
    o2 = orient(s1.p, s1.q, s2.q)
    o3 = orient(s2.p, s2.q, s1.p)
    o4 = orient(s2.p, s2.q, s1.q)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and s1.contains(s2.p))
        or (o2 == 0 and s1.contains(s2.q))
        or (o3 == 0 and s2.contains(s1.p))
        or (o4 == 0 and s2.contains(s1.q))
    )


def segment_intersection_point(
    s1: Segment, s2: Segment
) -> Optional[Union[Point2, Overlap]]:
    d1 = s1.q - s1.p
    d2 = s2.q - s2.p
    w = s2.p - s1.p
    denom = cross(d1.x, d1.y, d2.x, d2.y)
    if denom != 0:
        t = cross(w.x, w.y, d2.x, d2.y) / denom
        u = cross(w.x, w.y, d1.x, d1.y) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            return s1.at(t)
        return None
    if cross(w.x, w.y, d1.x, d1.y) != 0:
        return None
    # collinear: project s2 onto s1's parameter line
    norm = d1.x * d1.x + d1.y * d1.y
    t0 = (w.x * d1.x + w.y * d1.y) / norm
    end = s2.q - s1.p
    t1 = (end.x * d1.x + end.y * d1.y) / norm
    low = max(Fraction(0), min(t0, t1))
    high = min(Fraction(1), max(t0, t1))
    if low > high:
        return None
    if low == high:
        return s1.at(low)
    return Overlap(Segment(s1.at(low), s1.at(high)))


@dataclass(frozen=True)
class Direction:
    """
    An undirected direction. (dx, dy) and (-dx, -dy) are identified; the stored
    form is the coprime integer vector with dy > 0, or dy = 0 and dx > 0.
    """

    dx: Fraction
    dy: Fraction

    def __post_init__(self):
        dx, dy = _as_fraction(self.dx), _as_fraction(self.dy)
        if dx == 0 and dy == 0:
            raise DegenerateDirection("direction (0,0) is undefined")
        ix, iy = primitive_integers(dx, dy)
        if iy < 0 or (iy == 0 and ix < 0):
            ix, iy = -ix, -iy
        object.__setattr__(self, "dx", Fraction(ix))
        object.__setattr__(self, "dy", Fraction(iy))

    def cross(self, other: "Direction") -> Fraction:
        return cross(self.dx, self.dy, other.dx, other.dy)

    def precedes(self, other: "Direction") -> bool:
        """Strict angular order on the half-turn [0, pi), starting at (1,0)."""
        return self.cross(other) > 0

    @property
    def perpendicular(self) -> "Direction":
        return Direction(-self.dy, self.dx)

    def to_text(self) -> str:
        return f"{format_rational(self.dx)},{format_rational(self.dy)}"

    def to_json(self):
        return [format_rational(self.dx), format_rational(self.dy)]


HORIZONTAL = Direction(1, 0)
VERTICAL = Direction(0, 1)


def compare_directions(first: Direction, second: Direction) -> int:
    if first == second:
        return 0
    return -1 if first.precedes(second) else 1


def direction_between(a: Point2, b: Point2) -> Direction:
    if a == b:
        raise DegenerateDirection(f"no direction between coincident points {a.to_text()}")
    return Direction(b.x - a.x, b.y - a.y)


@dataclass(frozen=True)
class PlanarLine:
    """The line a*x + b*y + c = 0, stored as coprime integers with a positive leader."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = (_as_fraction(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise DegenerateDirection("line coefficients (a, b) must not both be zero")
        ia, ib, ic = primitive_integers(a, b, c)
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        object.__setattr__(self, "a", Fraction(ia))
        object.__setattr__(self, "b", Fraction(ib))
        object.__setattr__(self, "c", Fraction(ic))

    @classmethod
    def through(cls, p: Point2, q: Point2) -> "PlanarLine":
        if p == q:
            raise DegenerateDirection(f"no unique line through {p.to_text()} twice")
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, -(a * p.x + b * p.y))

    def value(self, point: Point2) -> Fraction:
        return self.a * point.x + self.b * point.y + self.c

    def side(self, point: Point2) -> int:
        return sign(self.value(point))

    def contains(self, point: Point2) -> bool:
        return self.value(point) == 0

    @property
    def direction(self) -> Direction:
        return Direction(-self.b, self.a)

    def to_json(self):
        return [format_rational(v) for v in (self.a, self.b, self.c)]

    def to_text(self) -> str:
        return ",".join(self.to_json())
