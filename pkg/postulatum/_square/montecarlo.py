"""
Sampled kind fractions over the open square, used to cross-check exact_zone_map.

Points are dyadic rationals, so every sample is still classified exactly, face by
face (see faces.py). Sample indices are cut into fixed-size batches; batch i draws
from a generator seeded with [seed, i], which makes the result independent of the
worker count. Batches run on a process pool.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
from scipy import stats

from postulatum._geom.exact import Point2
from postulatum._kinds import ParallelKind, sorted_kinds
from postulatum._square.faces import ON_LINE, face_classifier
from postulatum._square.model import Chord
from postulatum._threaded import fan_out

LOG = logging.getLogger(__name__)

BATCH_SIZE = 4096
RESOLUTION = 2 ** 32
CONFIDENCE = 0.99


def wilson_interval(successes: int, trials: int, confidence: float = CONFIDENCE):
    z = stats.norm.ppf(1 - (1 - confidence) / 2)
    phat = successes / trials
    denominator = 1 + z ** 2 / trials
    centre = (phat + z ** 2 / (2 * trials)) / denominator
    spread = z * math.sqrt(phat * (1 - phat) / trials + z ** 2 / (4 * trials ** 2))
    return centre - spread / denominator, centre + spread / denominator


def batch_layout(samples: int, batch_size: int = BATCH_SIZE) -> List[Tuple[int, int]]:
    return [
        (index, min(batch_size, samples - start))
        for index, start in enumerate(range(0, samples, batch_size))
    ]


def dyadic_numerators(seed: int, batch: Tuple[int, int]) -> np.ndarray:
    """Numerators over RESOLUTION of the batch's points, one (x, y) row per sample."""
    index, size = batch
    rng = np.random.default_rng([seed, index])
    return rng.integers(1, RESOLUTION, size=(size, 2), dtype=np.uint64).astype(np.int64)


def dyadic_points(seed: int, batch: Tuple[int, int]) -> List[Point2]:
    return [
        Point2(Fraction(int(x), RESOLUTION), Fraction(int(y), RESOLUTION))
        for x, y in dyadic_numerators(seed, batch)
    ]


def _classify_batch(batch: Tuple[int, int], line: Chord, seed: int) -> Counter:
    raw = dyadic_numerators(seed, batch)
    counts = face_classifier(line).count(raw[:, 0], raw[:, 1], RESOLUTION)
    LOG.debug(f"batch {batch[0]}: {batch[1]} samples classified")
    return counts


@dataclass(frozen=True)
class KindEstimate:
    count: int
    frequency: float
    low: float
    high: float

    def covers(self, value) -> bool:
        return self.low <= float(value) <= self.high

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "frequency": self.frequency,
            "interval": [self.low, self.high],
        }


@dataclass(frozen=True)
class MonteCarloEstimate:
    samples: int
    seed: int
    estimates: Dict[ParallelKind, KindEstimate]
    on_line: int

    def estimate(self, kind: ParallelKind) -> KindEstimate:
        if kind in self.estimates:
            return self.estimates[kind]
        low, high = wilson_interval(0, self.samples)
        return KindEstimate(0, 0.0, low, high)

    def to_json(self) -> dict:
        return {
            "mode": "mc",
            "samples": self.samples,
            "seed": self.seed,
            "confidence": CONFIDENCE,
            "fractions": {k.label: e.to_json() for k, e in self.estimates.items()},
            "on_line": self.on_line,
        }


def zone_measures_mc(
    line: Chord, samples: int, seed: int, threads: int = 1, batch_size: int = BATCH_SIZE
) -> MonteCarloEstimate:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    batches = batch_layout(samples, batch_size)
    results = fan_out(
        _classify_batch, {"line": line, "seed": seed}, batches, threads, processes=True
    )
    totals: Counter = Counter()
    for counts in results:
        totals.update(counts)
    on_line = totals.pop(ON_LINE, 0)
    estimates = {}
    for kind in sorted_kinds(totals):
        low, high = wilson_interval(totals[kind], samples)
        estimates[kind] = KindEstimate(totals[kind], totals[kind] / samples, low, high)
    LOG.info(f"{samples} samples over {len(batches)} batches, {on_line} on the line")
    return MonteCarloEstimate(samples, seed, estimates, on_line)


@dataclass(frozen=True)
class GridEstimate:
    resolution: int
    fractions: Dict[ParallelKind, Fraction]
    on_line: int

    def to_json(self) -> dict:
        return {
            "mode": "grid",
            "resolution": self.resolution,
            "fractions": {k.label: str(v) for k, v in self.fractions.items()},
            "on_line": self.on_line,
        }


def zone_measures_grid(line: Chord, resolution: int) -> GridEstimate:
    """Classifies the centres of a resolution x resolution grid of sub-squares."""
    if resolution < 1:
        raise ValueError("resolution must be at least 1")
    centres = np.arange(1, 2 * resolution, 2, dtype=np.int64)
    xs, ys = np.meshgrid(centres, centres, indexing="ij")
    counts = face_classifier(line).count(xs.ravel(), ys.ravel(), 2 * resolution)
    on_line = counts.pop(ON_LINE, 0)
    total = resolution * resolution
    fractions = {kind: Fraction(counts[kind], total) for kind in sorted_kinds(counts)}
    return GridEstimate(resolution, fractions, on_line)
