from dataclasses import dataclass
from typing import Optional

from postulatum.exceptions import ParseError

ELLIPTIC = "Elliptic"
EUCLIDEAN = "Euclidean"
FINITE_MANY = "FiniteMany"
COUNTABLY_INFINITE = "CountablyInfinite"
HYPERBOLIC = "Hyperbolic"

# zone numbering follows the five-way enumeration of parallel behaviours
ZONES = {
    EUCLIDEAN: 1,
    FINITE_MANY: 2,
    COUNTABLY_INFINITE: 3,
    HYPERBOLIC: 4,
    ELLIPTIC: 5,
}

DESCRIPTIONS = {
    EUCLIDEAN: "exactly one parallel",
    FINITE_MANY: "finitely many parallels (at least two)",
    COUNTABLY_INFINITE: "countably many parallels",
    HYPERBOLIC: "uncountably many parallels",
    ELLIPTIC: "no parallel",
}


@dataclass(frozen=True)
class ParallelKind:
    """How the parallel postulate behaves at one (point, line) instance."""

    name: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.name not in ZONES:
            raise ValueError(f"unknown parallel kind {self.name}")
        if self.name == FINITE_MANY:
            if self.k is None or self.k < 2:
                raise ValueError("FiniteMany requires a count k >= 2")
        elif self.k is not None:
            raise ValueError(f"{self.name} carries no count")

    @classmethod
    def finite_many(cls, k: int) -> "ParallelKind":
        return cls(FINITE_MANY, k)

    @classmethod
    def from_label(cls, label: str) -> "ParallelKind":
        if label.startswith(f"{FINITE_MANY}(") and label.endswith(")"):
            try:
                return cls.finite_many(int(label[len(FINITE_MANY) + 1 : -1]))
            except ValueError:
                # pylint: disable=raise-missing-from
                raise ParseError(label, "FiniteMany(k) needs an integer k >= 2")
        try:
            return cls(label)
        except ValueError:
            # pylint: disable=raise-missing-from
            raise ParseError(label, f"expected one of {', '.join(ZONES)}")

    @property
    def zone(self) -> int:
        return ZONES[self.name]

    @property
    def sort_key(self):
        return self.zone, self.k or 0

    @property
    def label(self) -> str:
        if self.name == FINITE_MANY:
            return f"{FINITE_MANY}({self.k})"
        return self.name

    @property
    def description(self) -> str:
        return DESCRIPTIONS[self.name]

    def to_dict(self) -> dict:
        result: dict = {"kind": self.name}
        if self.k is not None:
            result["k"] = self.k
        return result

    def __str__(self):
        return self.label


ParallelKind.ELLIPTIC = ParallelKind(ELLIPTIC)  # type: ignore
ParallelKind.EUCLIDEAN = ParallelKind(EUCLIDEAN)  # type: ignore
ParallelKind.COUNTABLY_INFINITE = ParallelKind(COUNTABLY_INFINITE)  # type: ignore
ParallelKind.HYPERBOLIC = ParallelKind(HYPERBOLIC)  # type: ignore


def sorted_kinds(kinds):
    return sorted(kinds, key=lambda kind: kind.sort_key)
