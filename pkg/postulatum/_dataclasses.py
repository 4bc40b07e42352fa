import logging
from dataclasses import dataclass, field
from typing import Any, Dict, NewType, Optional

from dataclasses_jsonschema import FieldEncoder, JsonSchemaMixin

from postulatum._common_utils import merge_nested_dict

LOG = logging.getLogger(__name__)

# property descriptions

METADATA = {
    "model": {
        "description": "Geometry model: square, sphere, euclidean-plane, sphere-plane "
        "or hyperbolic-disk"
    },
    "line": {
        "description": "Line of the model: a chord 'x1,y1:x2,y2' for square, a normal "
        "'x,y,z' for sphere, coefficients 'a,b,c' for euclidean-plane, a chord of the unit "
        "circle for hyperbolic-disk"
    },
    "point": {
        "description": "Point to classify: 'x,y' in the plane or square, a ray 'x,y,z' "
        "on the sphere"
    },
    "mode": {"description": "Zone measure mode: exact, grid or mc"},
    "samples": {
        "description": "Monte Carlo sample count, or grid resolution in grid mode"
    },
    "seed": {"description": "Non-negative sampling seed"},
    "budget": {"description": "Sampled instances examined by a denial check"},
    "threads": {"description": "Worker threads used for sampling"},
    "output": {"description": "Path to also write the JSON result to"},
    "svg": {"description": "Path to write the SVG zone rendering to"},
    "e_position": {
        "description": "y coordinate of E on side DA, strictly between 0 and 1"
    },
}

# types

Rational = NewType("Rational", str)
Tuple2 = NewType("Tuple2", str)
LineSpec = NewType("LineSpec", str)
Mode = NewType("Mode", str)
ModelName = NewType("ModelName", str)

MODES = ("exact", "grid", "mc")

RATIONAL_PATTERN = r"-?[0-9]+(/[0-9]+)?"

# regex validation


class RationalField(FieldEncoder):
    @property
    def json_schema(self):
        return {
            "type": "string",
            "pattern": rf"^{RATIONAL_PATTERN}$",
            "description": "Exact rational 'p' or 'p/q', decimals are rejected",
        }


JsonSchemaMixin.register_field_encoders({Rational: RationalField()})


class Tuple2Field(FieldEncoder):
    @property
    def json_schema(self):
        return {
            "type": "string",
            "pattern": rf"^{RATIONAL_PATTERN}(,{RATIONAL_PATTERN}){{1,2}}$",
            "description": "Comma separated rationals, 'x,y' or 'x,y,z'",
        }


JsonSchemaMixin.register_field_encoders({Tuple2: Tuple2Field()})


class LineSpecField(FieldEncoder):
    @property
    def json_schema(self):
        return {
            "type": "string",
            "pattern": rf"^{RATIONAL_PATTERN}(,{RATIONAL_PATTERN})+"
            rf"(:{RATIONAL_PATTERN}(,{RATIONAL_PATTERN})+)?$",
            "description": "Chord 'x1,y1:x2,y2' or coefficient triple 'a,b,c'",
        }


JsonSchemaMixin.register_field_encoders({LineSpec: LineSpecField()})


class ModeField(FieldEncoder):
    @property
    def json_schema(self):
        return {
            "type": "string",
            "pattern": f"^({'|'.join(MODES)})$",
            "description": f"Must be one of {', '.join(MODES)}",
        }


JsonSchemaMixin.register_field_encoders({Mode: ModeField()})


class ModelNameField(FieldEncoder):
    @property
    def json_schema(self):
        return {
            "type": "string",
            "pattern": r"^[a-z][a-z-]*$",
            "description": "Registered model name",
        }


JsonSchemaMixin.register_field_encoders({ModelName: ModelNameField()})


# pylint raises false positive due to json-dataclass
# pylint: disable=no-member,too-many-instance-attributes
@dataclass
class RunConfig(JsonSchemaMixin, allow_additional_props=False):  # type: ignore
    """postulatum run configuration"""

    model: Optional[ModelName] = field(default=None, metadata=METADATA["model"])
    line: Optional[LineSpec] = field(default=None, metadata=METADATA["line"])
    point: Optional[Tuple2] = field(default=None, metadata=METADATA["point"])
    mode: Optional[Mode] = field(default=None, metadata=METADATA["mode"])
    samples: Optional[int] = field(default=None, metadata=METADATA["samples"])
    seed: Optional[int] = field(default=None, metadata=METADATA["seed"])
    budget: Optional[int] = field(default=None, metadata=METADATA["budget"])
    threads: Optional[int] = field(default=None, metadata=METADATA["threads"])
    output: Optional[str] = field(default=None, metadata=METADATA["output"])
    svg: Optional[str] = field(default=None, metadata=METADATA["svg"])
    e_position: Optional[Rational] = field(
        default=None, metadata=METADATA["e_position"]
    )

    # pylint doesn't like instance variables being added in post_init
    # pylint: disable=attribute-defined-outside-init
    def __post_init__(self):
        for name in ("samples", "budget", "threads"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be at least 1, got {value}")
        if self.seed is not None and self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        self._source: Dict[str, Any] = {}
        self.set_source("UNKNOWN")

    def set_source(self, source_name: str) -> None:
        self._source = {
            key: source_name for key, value in self.to_dict().items() if value is not None
        }

    @property
    def source(self) -> Dict[str, Any]:
        return dict(self._source)

    @classmethod
    def merge(cls, base_config: "RunConfig", merge_config: "RunConfig") -> "RunConfig":
        merged = base_config.to_dict()
        merge_nested_dict(merged, merge_config.to_dict())

        merged_source = base_config._source.copy()
        merge_nested_dict(merged_source, merge_config._source)

        config = cls.from_dict(merged)
        config._source = merged_source  # pylint: disable=protected-access
        return config
