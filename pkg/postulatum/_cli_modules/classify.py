import logging

from postulatum._cli_core import CliCore
from postulatum._common_utils import emit_json
from postulatum._config import Config
from postulatum._disk import classify_disk, disk_parallels, limiting_parallels, parse_disk_chord
from postulatum._geom.exact import PlanarLine, parse_point
from postulatum._sphere import (
    GreatCircle,
    SpherePoint,
    classify_plane,
    classify_sphere,
    classify_sphere_witness,
    parse_triple,
)
from postulatum._square.model import classify, parse_chord
from postulatum.exceptions import ParseError, UnknownModel

LOG = logging.getLogger(__name__)


def classify_square(line: str, point: str) -> dict:
    return classify(parse_point(point), parse_chord(line)).to_json()


def classify_on_sphere(line: str, point: str) -> dict:
    circle = GreatCircle(parse_triple(line))
    ray = SpherePoint(parse_triple(point))
    kind = classify_sphere(ray, circle)
    meetings = classify_sphere_witness(ray, circle)
    result = {"model": "sphere", "point": ray.to_json(), "line": circle.to_json()}
    result.update(kind.to_dict())
    result["witnesses"] = {
        "blocking_circles": [
            {"circle": c.to_json(), "meets": meet.to_json()} for c, meet in meetings
        ]
    }
    return result


def classify_in_plane(line: str, point: str) -> dict:
    planar = PlanarLine(*parse_triple(line))
    p = parse_point(point)
    kind, parallel = classify_plane(p, planar)
    result = {"model": "euclidean-plane", "point": p.to_json(), "line": planar.to_json()}
    result.update(kind.to_dict())
    result["witnesses"] = {"unique_parallel": parallel.to_json()}
    return result


def classify_in_sphere_plane(line: str, point: str) -> dict:
    """Three coordinates address the sphere, two the plane."""
    if len(point.split(",")) == 3:
        return classify_on_sphere(line, point)
    return classify_in_plane(line, point)


def classify_in_disk(line: str, point: str) -> dict:
    chord = parse_disk_chord(line)
    p = parse_point(point)
    kind = classify_disk(p, chord)
    result = {"model": "hyperbolic-disk", "point": p.to_json(), "line": chord.to_json()}
    result.update(kind.to_dict())
    result["parallels"] = disk_parallels(p, chord).to_json()
    limiting = limiting_parallels(p, chord)
    result["witnesses"] = {"limiting_parallels": [c.to_json() for c in limiting]}
    return result


CLASSIFIERS = {
    "square": classify_square,
    "sphere": classify_on_sphere,
    "euclidean-plane": classify_in_plane,
    "sphere-plane": classify_in_sphere_plane,
    "hyperbolic-disk": classify_in_disk,
}


class Classify:
    """classifies the parallel behaviour at one point against one line"""

    @CliCore.param_choices("model", CLASSIFIERS)
    def __init__(
        self,
        model: str = None,
        line: str = None,
        point: str = None,
        output: str = None,
        config: str = None,
    ):
        """
        :param model: square, sphere, euclidean-plane, sphere-plane or hyperbolic-disk
        :param line: chord 'x1,y1:x2,y2' (square, hyperbolic-disk), normal 'x,y,z' (sphere) or
        coefficients 'a,b,c' of ax + by + c = 0 (plane)
        :param point: 'x,y', or a ray 'x,y,z' on the sphere
        :param output: also write the JSON result to this path
        :param config: JSON or YAML file with default flag values
        """
        run = Config.create(
            args={"model": model, "line": line, "point": point, "output": output},
            config_path=config,
        ).config
        if not run.point:
            raise ParseError("--point", "a point is required")
        try:
            classifier = CLASSIFIERS[run.model]
        except KeyError:
            # pylint: disable=raise-missing-from
            raise UnknownModel(f"unknown model '{run.model}'")
        result = classifier(run.line, run.point)
        LOG.info(f"{run.point} against {run.line}: {result['kind']}")
        emit_json(result, run.output)
