"""
Bulk classification of points with a common denominator against one chord.

The kind is constant on every open face of the arrangement of the critical lines
of l, so a point off all of those lines takes the kind of its face, and each face
is classified exactly once. Points on a line are classified one by one. The sign
tests run on integer numerators, vectorised when the products fit in int64.
"""
import logging
import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List

import numpy as np

from postulatum._geom.exact import PlanarLine, Point2
from postulatum._kinds import ParallelKind
from postulatum._square.model import CORNERS, Chord, classify_kind
from postulatum._square.zones import critical_lines
from postulatum.exceptions import PointOnLine

LOG = logging.getLogger(__name__)

ON_LINE = "on-line"
INT64_BOUND = 2 ** 61


def face_lines(l: Chord) -> List[PlanarLine]:
    """Critical lines of l, with the diagonals and the axis lines through its endpoints."""
    lines = set(critical_lines(l))
    lines.add(PlanarLine.through(CORNERS["A"], CORNERS["C"]))
    lines.add(PlanarLine.through(CORNERS["B"], CORNERS["D"]))
    for endpoint in (l.q1, l.q2):
        lines.add(PlanarLine(1, 0, -endpoint.x))
        lines.add(PlanarLine(0, 1, -endpoint.y))
    return sorted(lines, key=lambda line: (line.a, line.b, line.c))


class FaceClassifier:
    def __init__(self, line: Chord):
        self.line = line
        self.lines = face_lines(line)
        self.coefficients = np.array(
            [[int(v) for v in (f.a, f.b, f.c)] for f in self.lines], dtype=object
        )
        self.bound = max(abs(int(v)) for v in self.coefficients.flat)
        self.weights = 3 ** np.arange(len(self.lines), dtype=np.int64)
        self._kinds: Dict[int, ParallelKind] = {}
        self._lock = threading.Lock()

    @property
    def faces_seen(self) -> int:
        return len(self._kinds)

    def signs(self, xs: np.ndarray, ys: np.ndarray, denominator: int) -> np.ndarray:
        """Side of every point (xs/denominator, ys/denominator) of every line, as -1, 0, 1."""
        if self.bound * denominator < INT64_BOUND:
            coefficients = self.coefficients.astype(np.int64)
            xs, ys = np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64)
            values = (
                np.outer(xs, coefficients[:, 0])
                + np.outer(ys, coefficients[:, 1])
                + coefficients[:, 2] * np.int64(denominator)
            )
            return np.sign(values).astype(np.int8)
        rows = [
            [
                (a * x + b * y + c * denominator > 0) - (a * x + b * y + c * denominator < 0)
                for a, b, c in self.coefficients.tolist()
            ]
            for x, y in zip(np.asarray(xs).tolist(), np.asarray(ys).tolist())
        ]
        return np.array(rows, dtype=np.int8).reshape(len(rows), len(self.lines))

    def _point(self, x, y, denominator: int) -> Point2:
        return Point2(Fraction(int(x), denominator), Fraction(int(y), denominator))

    def _face_kind(self, key: int, x, y, denominator: int) -> ParallelKind:
        with self._lock:
            kind = self._kinds.get(key)
        if kind is None:
            kind = classify_kind(self._point(x, y, denominator), self.line)
            with self._lock:
                self._kinds[key] = kind
        return kind

    def count(self, xs: np.ndarray, ys: np.ndarray, denominator: int) -> Counter:
        """Kind counts of the points; points on l count under ON_LINE."""
        xs, ys = np.asarray(xs), np.asarray(ys)
        counts: Counter = Counter()
        if len(xs) == 0:
            return counts
        signs = self.signs(xs, ys, denominator)
        on_a_line = (signs == 0).any(axis=1)
        for index in np.flatnonzero(on_a_line):
            try:
                point = self._point(xs[index], ys[index], denominator)
                counts[classify_kind(point, self.line)] += 1
            except PointOnLine:
                counts[ON_LINE] += 1
        inside = ~on_a_line
        keys = ((signs[inside].astype(np.int64) + 1) * self.weights).sum(axis=1)
        unique, first, sizes = np.unique(keys, return_index=True, return_counts=True)
        face_x, face_y = xs[inside], ys[inside]
        for key, index, size in zip(unique.tolist(), first.tolist(), sizes.tolist()):
            counts[self._face_kind(key, face_x[index], face_y[index], denominator)] += size
        LOG.debug(
            f"{len(xs)} points, {int(on_a_line.sum())} on a critical line, "
            f"{len(unique)} faces"
        )
        return counts


@lru_cache(maxsize=32)
def face_classifier(line: Chord) -> FaceClassifier:
    return FaceClassifier(line)
