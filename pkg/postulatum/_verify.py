"""
The pinned claim suite: the three worked points of the square model, the sphere
meeting property, the dual status of the circle (C) and the denial verdicts of
the five registered models.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import numpy as np
import tabulate

from postulatum._axioms import (
    EuclideanPlaneModel,
    KleinDiskModel,
    SphereModel,
    SquareModel,
    axiom_denied,
    sphere_plane,
)
from postulatum._geom.dirset import Arc
from postulatum._geom.exact import Direction, Point2
from postulatum._kinds import ParallelKind
from postulatum._logger import PrintMsg
from postulatum._sphere import GreatCircle, TwoPoints, cross3, dual_status_of_C, great_circles_meet
from postulatum._square.model import (
    AB,
    C,
    D,
    Chord,
    chord_through,
    classify,
    is_parallel,
    sample_directions,
    valid_directions,
)
from postulatum.exceptions import PostulatumException

LOG = logging.getLogger(__name__)

N = Point2(Fraction(1, 2), Fraction(1, 4))
EDGE_SAMPLES = 100
BLOCKING_SAMPLES = 8
SPHERE_PAIRS = 1000
DENIAL_BUDGET = 200
PENCIL_SAMPLES = 8


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"claim": self.name, "passed": self.passed, "detail": self.detail}


def line_for(e_position: Fraction) -> Chord:
    e_position = Fraction(e_position)
    if not 0 < e_position < 1:
        raise ValueError(f"E must lie strictly inside side DA, got y = {e_position}")
    return Chord(C, Point2(0, e_position))


def claim_n_hyperbolic(line: Chord, **_) -> Tuple[bool, str]:
    result = classify(N, line)
    if result.kind != ParallelKind.HYPERBOLIC:
        return False, f"N is {result.kind}"
    pencil = result.witnesses.bounding_pencil
    if pencil is None or not all(N in (c.q1, c.q2) or c.contains(N) for c in pencil):
        return False, "no bounding pencil through N"
    inner = [chord_through(N, d) for d in sample_directions(result.parallels, PENCIL_SAMPLES)]
    if not inner or not all(c is not None and is_parallel(c, line) for c in inner):
        return False, "a chord inside the pencil meets l"
    u, v = pencil
    return True, f"pencil u={u.to_text()} v={v.to_text()}, {len(inner)} inner chords parallel"


def claim_m_euclidean(line: Chord, **_) -> Tuple[bool, str]:
    for i in range(1, EDGE_SAMPLES + 1):
        m = Point2(Fraction(i, EDGE_SAMPLES + 1), 0)
        result = classify(m, line)
        if result.kind != ParallelKind.EUCLIDEAN or result.witnesses.unique_parallel != AB:
            return False, f"M={m.to_text()} is {result.kind}"
    return True, f"{EDGE_SAMPLES} interior points of AB, unique parallel AB"


def _arc_ends(arc: Arc) -> List[Direction]:
    ends = ((arc.start, arc.start_closed), (arc.end, arc.end_closed))
    return [direction for direction, closed in ends if closed]


def claim_d_elliptic(line: Chord, **_) -> Tuple[bool, str]:
    result = classify(D, line)
    if result.kind != ParallelKind.ELLIPTIC:
        return False, f"D is {result.kind}"
    valid = valid_directions(D)
    extremes = list(valid.isolated) + [d for arc in valid.arcs for d in _arc_ends(arc)]
    for direction in extremes:
        chord = chord_through(D, direction)
        if chord is None or is_parallel(chord, line):
            return False, f"the chord through D along {direction.to_text()} misses l"
    samples = result.witnesses.blocking_samples
    confirmed = [
        (d, q) for d, q in samples
        if line.contains(q)
        and (chord := chord_through(D, d)) is not None
        and chord.contains(q)
        and not is_parallel(chord, line)
    ]
    if len(confirmed) < BLOCKING_SAMPLES:
        return False, f"only {len(confirmed)} of {BLOCKING_SAMPLES} blocking samples confirmed"
    return True, f"{len(confirmed)} blocking chords and {len(extremes)} extreme chords meet l"


def claim_sphere_meets(seed: int = 0, **_) -> Tuple[bool, str]:
    pairs = 0
    for index in range(SPHERE_PAIRS):
        rng = np.random.default_rng([seed, index])
        n1, n2 = (tuple(int(v) for v in rng.integers(-9, 10, size=3)) for _ in range(2))
        if not any(n1) or not any(n2) or not any(cross3(n1, n2)):
            continue
        c1, c2 = GreatCircle(n1), GreatCircle(n2)
        meet = great_circles_meet(c1, c2)
        if not isinstance(meet, TwoPoints):
            return False, f"{c1.to_json()} and {c2.to_json()} do not meet in two points"
        if meet.antipode.ray != tuple(-c for c in meet.p.ray):
            return False, "intersection points are not antipodal"
        if not all(c.contains(p) for c in (c1, c2) for p in (meet.p, meet.antipode)):
            return False, "intersection point off a circle"
        pairs += 1
    return True, f"{pairs} non-identical pairs meet in two antipodal points"


def claim_dual_status(**_) -> Tuple[bool, str]:
    status = dual_status_of_C()
    passed = status.is_line_on_sphere and not status.is_line_in_plane
    return passed, (
        f"line on sphere={status.is_line_on_sphere}, line in plane={status.is_line_in_plane}"
    )


def claim_denial_verdicts(line: Chord, seed: int = 0, **_) -> Tuple[bool, str]:
    square = axiom_denied(SquareModel(line), DENIAL_BUDGET, seed)
    mixed = axiom_denied(sphere_plane(), DENIAL_BUDGET, seed)
    plane = axiom_denied(EuclideanPlaneModel(), DENIAL_BUDGET, seed)
    sphere = axiom_denied(SphereModel(), DENIAL_BUDGET, seed)
    disk = axiom_denied(KleinDiskModel(), DENIAL_BUDGET, seed)
    expected = {ParallelKind.EUCLIDEAN, ParallelKind.ELLIPTIC}
    checks = [
        square.denied and len(square.behaviors_seen) >= 3,
        mixed.denied and set(mixed.behaviors_seen) == expected,
        not plane.denied,
        not sphere.denied,
        not disk.denied and disk.behaviors_seen == (ParallelKind.HYPERBOLIC,),
    ]
    detail = ", ".join(
        f"{v.model}={'denied' if v.denied else 'not denied'}"
        for v in (square, mixed, plane, sphere, disk)
    )
    return all(checks), detail


CLAIMS: List[Tuple[str, Callable[..., Tuple[bool, str]]]] = [
    ("N is hyperbolic", claim_n_hyperbolic),
    ("M on AB is euclidean", claim_m_euclidean),
    ("D is elliptic", claim_d_elliptic),
    ("great circles always meet", claim_sphere_meets),
    ("(C) is and is not a line", claim_dual_status),
    ("denial verdicts", claim_denial_verdicts),
]


def run_claims(e_position: Fraction = Fraction(1, 2), seed: int = 0) -> List[ClaimResult]:
    line = line_for(e_position)
    results = []
    for name, claim in CLAIMS:
        try:
            passed, detail = claim(line=line, seed=seed)
        except PostulatumException as e:
            passed, detail = False, f"{e.__class__.__name__}: {e}"
        LOG.debug(f"{name}: {passed} ({detail})")
        results.append(ClaimResult(name, passed, detail))
    return results


def results_table(results: List[ClaimResult]) -> str:
    rows = [
        [r.name, "PASS" if r.passed else "FAIL", r.detail] for r in results
    ]
    return tabulate.tabulate(rows, headers=["claim", "result", "detail"])


def log_results(results: List[ClaimResult], e_position: Optional[Fraction] = None) -> None:
    if e_position is not None:
        LOG.info(f"claims for E = (0,{e_position})")
    LOG.info("\n" + results_table(results) + "\n", extra={"nametag": ""})
    for result in results:
        if result.passed:
            LOG.info(result.name, extra={"nametag": PrintMsg.PASS})
        else:
            LOG.error(result.name, extra={"nametag": PrintMsg.FAIL})
