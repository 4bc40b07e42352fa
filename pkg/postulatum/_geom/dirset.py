"""
Exact subsets of the circle of undirected directions (the half-turn [0, pi)).

A DirectionSet is stored as its sorted breakpoints together with the membership
of every breakpoint and of every open gap between consecutive breakpoints (the
last gap wraps through the horizontal). The normal form has no breakpoint whose
membership equals both neighbouring gaps, so two equal sets are equal values.
"""
import logging
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, Iterable, List, Sequence, Tuple

from postulatum._geom.exact import HORIZONTAL, Direction, compare_directions
from postulatum._kinds import ParallelKind

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arc:
    """Counterclockwise arc from start to end; wraps through (1,0) when end < start."""

    start: Direction
    end: Direction
    start_closed: bool = True
    end_closed: bool = True

    def contains(self, direction: Direction) -> bool:
        if direction == self.start:
            return self.start_closed or (self.start == self.end and self.end_closed)
        if direction == self.end:
            return self.end_closed
        if self.start == self.end:
            return True
        if self.start.precedes(self.end):
            return self.start.precedes(direction) and direction.precedes(self.end)
        return self.start.precedes(direction) or direction.precedes(self.end)

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "end": self.end.to_json(),
            "start_closed": self.start_closed,
            "end_closed": self.end_closed,
        }


def sort_directions(directions: Iterable[Direction]) -> List[Direction]:
    return sorted(set(directions), key=cmp_to_key(compare_directions))


def gap_sample(breaks: Sequence[Direction], index: int) -> Direction:
    """A direction strictly inside the open gap following breaks[index]."""
    if len(breaks) == 1:
        return breaks[0].perpendicular
    first = breaks[index]
    second = breaks[(index + 1) % len(breaks)]
    if index < len(breaks) - 1:
        return Direction(first.dx + second.dx, first.dy + second.dy)
    # the wrapping gap runs from the last break up to the first one turned by pi
    return Direction(first.dx - second.dx, first.dy - second.dy)


@dataclass(frozen=True)
class DirectionSet:
    breaks: Tuple[Direction, ...] = ()
    point_in: Tuple[bool, ...] = ()
    gap_in: Tuple[bool, ...] = ()
    full: bool = False

    @classmethod
    def empty(cls) -> "DirectionSet":
        return cls()

    @classmethod
    def full_turn(cls) -> "DirectionSet":
        return cls(full=True)

    @classmethod
    def single(cls, direction: Direction) -> "DirectionSet":
        return cls((direction,), (True,), (False,))

    @classmethod
    def from_predicate(
        cls, candidates: Iterable[Direction], predicate: Callable[[Direction], bool]
    ) -> "DirectionSet":
        """
        Builds the set of directions satisfying `predicate`, which must be constant
        on every open gap between the candidate breakpoints.
        """
        breaks = sort_directions(candidates)
        if not breaks:
            return cls(full=predicate(HORIZONTAL))
        point_in = [predicate(b) for b in breaks]
        gap_in = [predicate(gap_sample(breaks, i)) for i in range(len(breaks))]
        return cls._normalized(breaks, point_in, gap_in)

    @classmethod
    def from_arcs(
        cls, arcs: Iterable[Arc] = (), isolated: Iterable[Direction] = ()
    ) -> "DirectionSet":
        arcs = list(arcs)
        isolated = list(isolated)
        candidates = [a.start for a in arcs] + [a.end for a in arcs] + isolated
        members = set(isolated)
        return cls.from_predicate(
            candidates, lambda d: d in members or any(a.contains(d) for a in arcs)
        )

    @classmethod
    def arc(
        cls,
        start: Direction,
        end: Direction,
        start_closed: bool = True,
        end_closed: bool = True,
    ) -> "DirectionSet":
        if start == end:
            if start_closed and end_closed:
                return cls.single(start)
            return cls.empty()
        return cls.from_arcs([Arc(start, end, start_closed, end_closed)])

    @staticmethod
    def _normalized(breaks, point_in, gap_in) -> "DirectionSet":
        breaks, point_in, gap_in = list(breaks), list(point_in), list(gap_in)
        changed = True
        while changed and breaks:
            changed = False
            for i in range(len(breaks)):
                before = gap_in[i - 1]
                if point_in[i] == before == gap_in[i]:
                    if len(breaks) == 1:
                        return DirectionSet(full=before)
                    del breaks[i]
                    del point_in[i]
                    del gap_in[i]
                    changed = True
                    break
        return DirectionSet(tuple(breaks), tuple(point_in), tuple(gap_in))

    def contains(self, direction: Direction) -> bool:
        if not self.breaks:
            return self.full
        for i, brk in enumerate(self.breaks):
            if direction == brk:
                return self.point_in[i]
            if direction.precedes(brk):
                # strictly inside the gap that ends at breaks[i]
                return self.gap_in[i - 1]
        return self.gap_in[-1]

    def __contains__(self, direction: Direction) -> bool:
        return self.contains(direction)

    @property
    def is_empty(self) -> bool:
        return not self.breaks and not self.full

    @property
    def has_interior(self) -> bool:
        return self.full or any(self.gap_in)

    def _runs(self) -> List[List[Tuple[str, int]]]:
        elements = []
        for i in range(len(self.breaks)):
            elements.append(("point", i))
            elements.append(("gap", i))
        flags = {("point", i): v for i, v in enumerate(self.point_in)}
        flags.update({("gap", i): v for i, v in enumerate(self.gap_in)})
        # rotate so that the sequence starts right after an excluded element
        first_out = next(j for j, e in enumerate(elements) if not flags[e])
        rotated = elements[first_out + 1 :] + elements[: first_out + 1]
        runs: List[List[Tuple[str, int]]] = []
        current: List[Tuple[str, int]] = []
        for element in rotated:
            if flags[element]:
                current.append(element)
            elif current:
                runs.append(current)
                current = []
        if current:
            runs.append(current)
        return runs

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        if self.full:
            return (Arc(HORIZONTAL, HORIZONTAL, True, False),)
        if not self.breaks:
            return ()
        result = []
        count = len(self.breaks)
        for run in self._runs():
            if len(run) == 1 and run[0][0] == "point":
                continue
            kind, index = run[0]
            start, start_closed = self.breaks[index], kind == "point"
            kind, index = run[-1]
            if kind == "point":
                end, end_closed = self.breaks[index], True
            else:
                end, end_closed = self.breaks[(index + 1) % count], False
            result.append(Arc(start, end, start_closed, end_closed))
        return tuple(sorted(result, key=cmp_to_key(lambda a, b: compare_directions(a.start, b.start))))

    @property
    def isolated(self) -> Tuple[Direction, ...]:
        if not self.breaks:
            return ()
        return tuple(
            self.breaks[run[0][1]]
            for run in self._runs()
            if len(run) == 1 and run[0][0] == "point"
        )

    def union(self, other: "DirectionSet") -> "DirectionSet":
        return DirectionSet.from_predicate(
            self.breaks + other.breaks, lambda d: d in self or d in other
        )

    def intersection(self, other: "DirectionSet") -> "DirectionSet":
        return DirectionSet.from_predicate(
            self.breaks + other.breaks, lambda d: d in self and d in other
        )

    def to_json(self) -> dict:
        return {
            "arcs": [arc.to_json() for arc in self.arcs],
            "isolated": [d.to_json() for d in self.isolated],
        }


def dirset_subtract(a: DirectionSet, b: DirectionSet) -> DirectionSet:
    return DirectionSet.from_predicate(
        a.breaks + b.breaks, lambda d: d in a and d not in b
    )


def dirset_classify(directions: DirectionSet) -> ParallelKind:
    if directions.is_empty:
        return ParallelKind.ELLIPTIC
    if directions.has_interior:
        return ParallelKind.HYPERBOLIC
    # a DirectionSet holds finitely many isolated directions, never a countable infinity
    count = len(directions.isolated)
    if count == 1:
        return ParallelKind.EUCLIDEAN
    return ParallelKind.finite_many(count)
