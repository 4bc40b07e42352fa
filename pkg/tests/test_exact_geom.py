import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st
from postulatum._geom.exact import (
    Direction,
    Overlap,
    PlanarLine,
    Point2,
    Segment,
    direction_between,
    orient,
    parse_point,
    parse_rational,
    segment_intersection_point,
    segments_intersect,
)
from postulatum.exceptions import DegenerateDirection, ParseError

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=12)
points = st.builds(Point2, rationals, rationals)
small_ints = st.integers(min_value=-8, max_value=8)


def seg(x1, y1, x2, y2):
    return Segment(Point2(x1, y1), Point2(x2, y2))


class TestParsing(unittest.TestCase):
    def test_parse_rational(self):
        self.assertEqual(Fraction(3, 4), parse_rational("3/4"))
        self.assertEqual(Fraction(-2), parse_rational("-2"))
        self.assertEqual(Fraction(1, 2), parse_rational("2/4"))

    def test_decimal_rejected_with_hint(self):
        with self.assertRaises(ParseError) as ctx:
            parse_rational("0.5")
        self.assertIn("0.5", str(ctx.exception))
        self.assertIn("p/q", str(ctx.exception))
        self.assertEqual(2, ctx.exception.exit_code)

    def test_bad_tokens(self):
        for token in ["1/0", "abc", "", "1/-2", "--1"]:
            with self.assertRaises(ParseError):
                parse_rational(token)

    def test_parse_point(self):
        self.assertEqual(Point2(Fraction(1, 2), 0), parse_point("1/2,0"))
        with self.assertRaises(ParseError):
            parse_point("1,2,3")

    def test_point_text_round_trip(self):
        point = Point2(Fraction(-3, 7), Fraction(5, 2))
        self.assertEqual(point, parse_point(point.to_text()))


class TestPredicates(unittest.TestCase):
    def test_orient(self):
        self.assertEqual(1, orient(Point2(0, 0), Point2(1, 0), Point2(0, 1)))
        self.assertEqual(0, orient(Point2(0, 0), Point2(1, 1), Point2(2, 2)))
        self.assertEqual(-1, orient(Point2(0, 0), Point2(0, 1), Point2(1, 0)))

    def test_segments_intersect(self):
        self.assertTrue(segments_intersect(seg(0, 0, 1, 1), seg(0, 1, 1, 0)))
        self.assertFalse(segments_intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1)))
        self.assertTrue(
            segments_intersect(seg("1/2", 0, 0, 1), seg(0, "1/2", 1, 1))
        )

    def test_endpoint_touching_counts(self):
        self.assertTrue(segments_intersect(seg(0, 0, 1, 0), seg(1, 0, 1, 1)))

    def test_intersection_point(self):
        self.assertEqual(
            Point2(Fraction(1, 5), Fraction(3, 5)),
            segment_intersection_point(seg("1/2", 0, 0, 1), seg(0, "1/2", 1, 1)),
        )
        self.assertIsNone(segment_intersection_point(seg(0, 0, 1, 0), seg(0, 1, 1, 1)))
        self.assertEqual(
            Point2(1, 0), segment_intersection_point(seg(0, 0, 1, 0), seg(1, 0, 1, 1))
        )

    def test_collinear_overlap_is_a_value(self):
        actual = segment_intersection_point(seg(0, 0, 2, 0), seg(1, 0, 3, 0))
        self.assertIsInstance(actual, Overlap)
        self.assertEqual(seg(1, 0, 2, 0), actual.shared)
        self.assertEqual(
            Point2(2, 0), segment_intersection_point(seg(0, 0, 2, 0), seg(2, 0, 3, 0))
        )

    def test_degenerate_segment(self):
        with self.assertRaises(DegenerateDirection):
            seg(1, 1, 1, 1)

    @settings(max_examples=200, deadline=None)
    @given(points, points, points)
    def test_orient_antisymmetric(self, a, b, c):
        self.assertEqual(orient(a, b, c), -orient(b, a, c))
        self.assertEqual(orient(a, b, c), -orient(a, c, b))
        self.assertEqual(orient(a, b, c), orient(b, c, a))

    @settings(max_examples=200, deadline=None)
    @given(points, points, points, points)
    def test_intersection_symmetric(self, a, b, c, d):
        if a == b or c == d:
            return
        s1, s2 = Segment(a, b), Segment(c, d)
        self.assertEqual(segments_intersect(s1, s2), segments_intersect(s2, s1))
        self.assertTrue(segments_intersect(s1, s1))
        hit = segment_intersection_point(s1, s2)
        self.assertEqual(segments_intersect(s1, s2), hit is not None)
        if isinstance(hit, Point2):
            self.assertTrue(s1.contains(hit) and s2.contains(hit))


class TestDirection(unittest.TestCase):
    def test_direction_between(self):
        self.assertEqual(Direction(2, 3), direction_between(Point2(0, 0), Point2(2, 3)))
        self.assertEqual(Direction(2, 3), direction_between(Point2(2, 3), Point2(0, 0)))
        self.assertEqual(Direction(0, 1), direction_between(Point2(1, 1), Point2(1, 0)))
        with self.assertRaises(DegenerateDirection):
            direction_between(Point2(1, 1), Point2(1, 1))

    def test_canonical_form(self):
        direction = Direction(Fraction(-1, 2), Fraction(-1))
        self.assertEqual((Fraction(1), Fraction(2)), (direction.dx, direction.dy))
        self.assertEqual(Direction(1, 0), Direction(-5, 0))
        with self.assertRaises(DegenerateDirection):
            Direction(0, 0)

    def test_precedes(self):
        self.assertTrue(Direction(1, 0).precedes(Direction(1, 1)))
        self.assertTrue(Direction(1, 1).precedes(Direction(-1, 1)))
        self.assertFalse(Direction(-1, 1).precedes(Direction(1, 0)))

    @settings(max_examples=200, deadline=None)
    @given(small_ints, small_ints)
    def test_canonicalization_idempotent(self, dx, dy):
        if dx == 0 and dy == 0:
            return
        direction = Direction(dx, dy)
        self.assertEqual(direction, Direction(direction.dx, direction.dy))
        self.assertEqual(direction, Direction(-dx, -dy))


class TestPlanarLine(unittest.TestCase):
    def test_through(self):
        self.assertEqual(PlanarLine(1, -1, 0), PlanarLine.through(Point2(0, 0), Point2(1, 1)))
        self.assertEqual(PlanarLine(1, 0, -1), PlanarLine(-2, 0, 2))

    def test_contains_and_side(self):
        line = PlanarLine(2, 3, -6)
        self.assertTrue(line.contains(Point2(3, 0)))
        self.assertEqual(-1, line.side(Point2(0, 0)))
        self.assertEqual(Direction(-3, 2), line.direction)

    def test_degenerate(self):
        with self.assertRaises(DegenerateDirection):
            PlanarLine(0, 0, 1)
