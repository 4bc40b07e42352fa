"""
postulatum python module
"""
from ._axioms import axiom_denied, get_model, multispace_denied  # noqa: F401
from ._cli import main  # noqa: F401
from ._config import Config  # noqa: F401
from ._kinds import ParallelKind  # noqa: F401
from ._square.model import Chord, classify  # noqa: F401
from ._square.zones import degree_of_negation, exact_zone_map  # noqa: F401

__all__ = [
    "Chord",
    "Config",
    "ParallelKind",
    "axiom_denied",
    "classify",
    "degree_of_negation",
    "exact_zone_map",
    "get_model",
    "main",
    "multispace_denied",
]
