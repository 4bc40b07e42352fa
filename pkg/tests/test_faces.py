import unittest
from collections import Counter
from fractions import Fraction

import mock
import numpy as np
from postulatum._geom.exact import PlanarLine, Point2
from postulatum._square import faces
from postulatum._square.faces import ON_LINE, FaceClassifier, face_lines
from postulatum._square.model import CE, Chord, classify_kind
from postulatum._square.zones import critical_lines
from postulatum.exceptions import PointOnLine


def exact_counts(line, xs, ys, denominator):
    counts = Counter()
    for x, y in zip(xs, ys):
        try:
            point = Point2(Fraction(int(x), denominator), Fraction(int(y), denominator))
            counts[classify_kind(point, line)] += 1
        except PointOnLine:
            counts[ON_LINE] += 1
    return counts


def lattice(denominator):
    xs, ys = np.meshgrid(np.arange(denominator + 1), np.arange(denominator + 1), indexing="ij")
    return xs.ravel(), ys.ravel()


class TestFaceLines(unittest.TestCase):
    def test_contains_the_critical_lines(self):
        lines = face_lines(CE)
        self.assertTrue(set(critical_lines(CE)) <= set(lines))
        self.assertIn(PlanarLine(1, -1, 0), lines)
        self.assertIn(PlanarLine(0, 2, -1), lines)
        self.assertEqual(len(lines), len(set(lines)))


class TestFaceClassifier(unittest.TestCase):
    def test_lattice_matches_exact_classification(self):
        xs, ys = lattice(12)
        for line in (CE, Chord(Point2(Fraction(1, 3), 0), Point2(Fraction(3, 4), 1))):
            with self.subTest(line=line.to_text()):
                self.assertEqual(
                    exact_counts(line, xs, ys, 12), FaceClassifier(line).count(xs, ys, 12)
                )

    def test_one_exact_classification_per_face(self):
        rng = np.random.default_rng(1)
        xs, ys = rng.integers(1, 2 ** 20, size=(2, 3000))
        classifier = FaceClassifier(CE)
        with mock.patch.object(faces, "classify_kind", wraps=classify_kind) as m_classify:
            counts = classifier.count(xs, ys, 2 ** 20)
        self.assertEqual(3000, sum(counts.values()))
        on_a_line = int((classifier.signs(xs, ys, 2 ** 20) == 0).any(axis=1).sum())
        self.assertEqual(classifier.faces_seen + on_a_line, m_classify.call_count)
        self.assertLess(classifier.faces_seen, 200)

    def test_cached_faces_are_reused(self):
        classifier = FaceClassifier(CE)
        xs, ys = np.array([1, 3, 5]), np.array([7, 7, 7])
        first = classifier.count(xs, ys, 8)
        with mock.patch.object(faces, "classify_kind") as m_classify:
            second = classifier.count(xs, ys, 8)
        m_classify.assert_not_called()
        self.assertEqual(first, second)

    def test_large_coefficients_use_python_integers(self):
        tiny = Fraction(1, 2 ** 40 + 1)
        line = Chord(Point2(0, tiny), Point2(1, 1 - tiny))
        classifier = FaceClassifier(line)
        self.assertGreaterEqual(classifier.bound * 2 ** 32, faces.INT64_BOUND)
        rng = np.random.default_rng(2)
        xs, ys = rng.integers(1, 2 ** 32, size=(2, 40), dtype=np.int64)
        self.assertEqual(exact_counts(line, xs, ys, 2 ** 32), classifier.count(xs, ys, 2 ** 32))

    def test_signs(self):
        classifier = FaceClassifier(CE)
        signs = classifier.signs(np.array([1]), np.array([1]), 2)
        self.assertEqual((1, len(classifier.lines)), signs.shape)
        centre = Point2(Fraction(1, 2), Fraction(1, 2))
        self.assertEqual([line.side(centre) for line in classifier.lines], signs[0].tolist())

    def test_empty(self):
        self.assertEqual(Counter(), FaceClassifier(CE).count(np.array([]), np.array([]), 4))
