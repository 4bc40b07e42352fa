"""
Deciding whether the parallel postulate is denied in several ways in a model: it is
when the postulate behaves in at least two different ways within the same space.

A model supplies deterministic instance sampling and a behaviour per instance.
Verdicts from sampling are sound but not complete; reference models whose
behaviour is analytically constant are flagged as such.
"""
import logging
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from postulatum._disk import DiskChord, circle_point, classify_disk, norm_squared
from postulatum._geom.exact import PlanarLine, Point2
from postulatum._kinds import FINITE_MANY, ParallelKind, sorted_kinds
from postulatum._sphere import GreatCircle, SpherePoint, classify_plane, classify_sphere
from postulatum._square.model import CE, CORNERS, Chord, Side, classify_kind
from postulatum._threaded import fan_out
from postulatum.exceptions import UnknownModel

LOG = logging.getLogger(__name__)

EVALUATION_BATCH = 64
SQUARE_DENOMINATOR = 64
EXPLORE_DENOMINATOR = 12
COORDINATE_RANGE = 9


@dataclass(frozen=True)
class Instance:
    """One (point, line) pair of a model."""

    model: str
    point: Any
    line: Any

    def to_json(self) -> dict:
        return {"model": self.model, "point": self.point.to_json(), "line": self.line.to_json()}


class GeometryModel(ABC):
    name: str = ""
    analytic: bool = False

    def sample_instances(self, count: int, seed: int) -> List[Instance]:
        """
        Draws `count` instances; instance i comes from a generator seeded with
        [seed, i], so a smaller count always yields a prefix of a larger one.
        """
        return [self.sample(np.random.default_rng([seed, index])) for index in range(count)]

    @abstractmethod
    def sample(self, rng: np.random.Generator) -> Instance:
        pass

    @abstractmethod
    def behavior(self, instance: Instance) -> ParallelKind:
        pass

    def critical_instances(self) -> List[Instance]:
        return []


def _rational(rng: np.random.Generator, denominator: int) -> Fraction:
    return Fraction(int(rng.integers(0, denominator + 1)), denominator)


def _small_int(rng: np.random.Generator) -> int:
    return int(rng.integers(-COORDINATE_RANGE, COORDINATE_RANGE + 1))


def random_chord(rng: np.random.Generator, denominator: int) -> Chord:
    """A chord between the bottom and top sides or between the left and right sides."""
    s, t = _rational(rng, denominator), _rational(rng, denominator)
    if rng.integers(0, 2):
        return Chord(Point2(s, 0), Point2(t, 1))
    return Chord(Point2(0, s), Point2(1, t))


class SquareModel(GeometryModel):
    """Chords of the unit square; `line=None` draws a fresh chord per instance."""

    name = "square"
    analytic = False

    def __init__(self, line: Optional[Chord] = CE, denominator: int = SQUARE_DENOMINATOR):
        self.line = line
        self.denominator = denominator

    def sample(self, rng: np.random.Generator) -> Instance:
        while True:
            line = self.line if self.line is not None else random_chord(rng, self.denominator)
            point = Point2(_rational(rng, self.denominator), _rational(rng, self.denominator))
            if not line.contains(point):
                return Instance(self.name, point, line)

    def behavior(self, instance: Instance) -> ParallelKind:
        return classify_kind(instance.point, instance.line)

    def critical_instances(self) -> List[Instance]:
        if self.line is None:
            return []
        points = [Point2(Fraction(1, 2), Fraction(1, 4)), Point2(Fraction(1, 2), 0)]
        points += list(CORNERS.values())
        return [Instance(self.name, p, self.line) for p in points if not self.line.contains(p)]


class SphereModel(GeometryModel):
    """Great circles of the unit sphere: the pure elliptic reference."""

    name = "sphere"
    analytic = True

    def sample(self, rng: np.random.Generator) -> Instance:
        while True:
            normal = (_small_int(rng), _small_int(rng), _small_int(rng))
            ray = (_small_int(rng), _small_int(rng), _small_int(rng))
            if not any(normal) or not any(ray):
                continue
            circle, point = GreatCircle(normal), SpherePoint(ray)
            if not circle.contains(point):
                return Instance(self.name, point, circle)

    def behavior(self, instance: Instance) -> ParallelKind:
        return classify_sphere(instance.point, instance.line)


class EuclideanPlaneModel(GeometryModel):
    """Lines of the rational plane: the pure Euclidean reference."""

    name = "euclidean-plane"
    analytic = True

    def sample(self, rng: np.random.Generator) -> Instance:
        while True:
            a, b, c = _small_int(rng), _small_int(rng), _small_int(rng)
            if a == 0 and b == 0:
                continue
            line = PlanarLine(a, b, c)
            point = Point2(
                Fraction(_small_int(rng), int(rng.integers(1, COORDINATE_RANGE + 1))),
                Fraction(_small_int(rng), int(rng.integers(1, COORDINATE_RANGE + 1))),
            )
            if not line.contains(point):
                return Instance(self.name, point, line)

    def behavior(self, instance: Instance) -> ParallelKind:
        kind, _ = classify_plane(instance.point, instance.line)
        return kind


class KleinDiskModel(GeometryModel):
    """Chords of the Beltrami-Klein disk: the pure hyperbolic reference."""

    name = "hyperbolic-disk"
    analytic = True

    def sample(self, rng: np.random.Generator) -> Instance:
        while True:
            t1, t2 = (
                Fraction(_small_int(rng), int(rng.integers(1, COORDINATE_RANGE + 1)))
                for _ in range(2)
            )
            if t1 == t2:
                continue
            line = DiskChord(circle_point(t1), circle_point(t2))
            point = Point2(
                Fraction(_small_int(rng), COORDINATE_RANGE + 1),
                Fraction(_small_int(rng), COORDINATE_RANGE + 1),
            )
            if norm_squared(point) < 1 and not line.contains(point):
                return Instance(self.name, point, line)

    def behavior(self, instance: Instance) -> ParallelKind:
        return classify_disk(instance.point, instance.line)


def split_budget(budget: int, parts: int) -> List[int]:
    return [budget // parts + (1 if index < budget % parts else 0) for index in range(parts)]


class MultiSpace(GeometryModel):
    """Several models evaluated as one heterogeneous space."""

    def __init__(self, name: str, models: Sequence[GeometryModel]):
        if not models:
            raise ValueError("a multi-space needs at least one model")
        self.name = name
        self.models = tuple(models)
        self.analytic = all(m.analytic for m in self.models)
        self._by_name = {m.name: m for m in self.models}

    def sample_instances(self, count: int, seed: int) -> List[Instance]:
        instances: List[Instance] = []
        for model, share in zip(self.models, split_budget(count, len(self.models))):
            instances += model.sample_instances(share, seed)
        return instances

    def sample(self, rng: np.random.Generator) -> Instance:
        return self.models[int(rng.integers(0, len(self.models)))].sample(rng)

    def behavior(self, instance: Instance) -> ParallelKind:
        return self._by_name[instance.model].behavior(instance)

    def critical_instances(self) -> List[Instance]:
        return [i for m in self.models for i in m.critical_instances()]


@dataclass(frozen=True)
class DenialVerdict:
    model: str
    behaviors_seen: Tuple[ParallelKind, ...]
    witnesses: Dict[ParallelKind, Instance] = field(repr=False)
    instances_examined: int
    analytic: bool = False

    def __post_init__(self):
        if set(self.witnesses) != set(self.behaviors_seen):
            raise ValueError("every behaviour seen needs exactly one witness")

    @property
    def denied(self) -> bool:
        return len(self.behaviors_seen) >= 2

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "denied": self.denied,
            "behaviors": [kind.to_dict() for kind in self.behaviors_seen],
            "witnesses": {kind.label: self.witnesses[kind].to_json() for kind in self.behaviors_seen},
            "instances_examined": self.instances_examined,
            "analytic": self.analytic,
        }


def _behaviors(chunk: List[Instance], model: GeometryModel) -> List[ParallelKind]:
    return [model.behavior(instance) for instance in chunk]


def _chunks(instances: List[Instance], size: int) -> List[List[Instance]]:
    return [instances[start : start + size] for start in range(0, len(instances), size)]


def axiom_denied(
    m: GeometryModel, budget: int, seed: int, early_exit: bool = False, threads: int = 1
) -> DenialVerdict:
    """
    Examines the model's critical instances and `budget` sampled ones.

    :param m: the model to examine
    :param budget: number of sampled instances, at least 1
    :param seed: sampling seed, non-negative
    :param early_exit: stop after the first batch that brings a second behaviour
    :param threads: worker threads for behaviour evaluation

    :return: the verdict with one witness per behaviour seen
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    instances = m.critical_instances() + m.sample_instances(budget, seed)
    chunks = _chunks(instances, EVALUATION_BATCH)
    witnesses: Dict[ParallelKind, Instance] = {}
    examined = 0
    if early_exit:
        for chunk in chunks:
            for instance, kind in zip(chunk, _behaviors(chunk, m)):
                witnesses.setdefault(kind, instance)
            examined += len(chunk)
            if len(witnesses) >= 2:
                break
    else:
        results = fan_out(_behaviors, {"model": m}, chunks, threads)
        for chunk, kinds in zip(chunks, results):
            for instance, kind in zip(chunk, kinds):
                witnesses.setdefault(kind, instance)
        examined = len(instances)
    verdict = DenialVerdict(
        model=m.name,
        behaviors_seen=tuple(sorted_kinds(witnesses)),
        witnesses=witnesses,
        instances_examined=examined,
        analytic=m.analytic,
    )
    LOG.info(
        f"{m.name}: {examined} instances, behaviours "
        f"{', '.join(k.label for k in verdict.behaviors_seen)}, denied={verdict.denied}"
    )
    return verdict


def multispace_denied(
    ms: MultiSpace, budget: int, seed: int, early_exit: bool = False, threads: int = 1
) -> DenialVerdict:
    """Each sub-model gets an even share of the budget; behaviours are united."""
    return axiom_denied(ms, budget, seed, early_exit=early_exit, threads=threads)


def sphere_plane() -> MultiSpace:
    return MultiSpace("sphere-plane", (EuclideanPlaneModel(), SphereModel()))


MODELS = {
    "square": SquareModel,
    "sphere": SphereModel,
    "euclidean-plane": EuclideanPlaneModel,
    "hyperbolic-disk": KleinDiskModel,
    "sphere-plane": sphere_plane,
}


def get_model(name: str) -> GeometryModel:
    try:
        factory = MODELS[name]
    except KeyError:
        # pylint: disable=raise-missing-from
        raise UnknownModel(f"unknown model '{name}', expected one of {', '.join(MODELS)}")
    return factory()


@dataclass(frozen=True)
class ExplorationReport:
    samples: int
    seed: int
    counts: Dict[ParallelKind, int]
    finite_instances: Tuple[Tuple[Instance, ParallelKind], ...]

    @property
    def found(self) -> bool:
        return bool(self.finite_instances)

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "counts": {kind.label: self.counts[kind] for kind in sorted_kinds(self.counts)},
            "found": self.found,
            "finite_many": [
                dict(instance.to_json(), **kind.to_dict())
                for instance, kind in self.finite_instances
            ],
        }


def _side_point(rng: np.random.Generator) -> Point2:
    side = list(Side)[int(rng.integers(0, 4))]
    start, end = side.endpoints
    t = _rational(rng, EXPLORE_DENOMINATOR)
    return Point2(start.x + t * (end.x - start.x), start.y + t * (end.y - start.y))


def explore_finite(samples: int, seed: int, threads: int = 1) -> ExplorationReport:
    """
    Searches random square-model instances for FiniteMany behaviour. A coarse grid
    makes corners, boundary points and side-aligned chords frequent; every other
    sample puts the point on the boundary.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    model = SquareModel(line=None, denominator=EXPLORE_DENOMINATOR)
    instances = []
    for index in range(samples):
        rng = np.random.default_rng([seed, index])
        instance = model.sample(rng)
        if index % 2:
            point = _side_point(rng)
            if not instance.line.contains(point):
                instance = Instance(model.name, point, instance.line)
        instances.append(instance)
    chunks = _chunks(instances, EVALUATION_BATCH)
    counts: Counter = Counter()
    found = []
    for chunk, kinds in zip(chunks, fan_out(_behaviors, {"model": model}, chunks, threads)):
        for instance, kind in zip(chunk, kinds):
            counts[kind] += 1
            if kind.name == FINITE_MANY:
                found.append((instance, kind))
    LOG.info(f"explored {samples} instances, {len(found)} with finitely many parallels")
    return ExplorationReport(samples, seed, dict(counts), tuple(found))
