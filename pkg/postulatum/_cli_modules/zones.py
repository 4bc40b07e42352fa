import logging
from math import isqrt
from pathlib import Path

from postulatum._cli_core import CliCore
from postulatum._common_utils import emit_json
from postulatum._config import Config
from postulatum._dataclasses import MODES
from postulatum._render import render_zone_svg
from postulatum._square.model import parse_chord
from postulatum._square.montecarlo import zone_measures_grid, zone_measures_mc
from postulatum._square.zones import degree_of_negation, exact_zone_map

LOG = logging.getLogger(__name__)


class Zones:
    """partitions the square into zones of parallel behaviour for a chord"""

    @CliCore.longform_param_required("seed")
    @CliCore.longform_param_required("svg")
    @CliCore.param_choices("mode", MODES)
    def __init__(
        self,
        line: str = None,
        mode: str = None,
        samples: int = None,
        seed: int = None,
        svg: str = None,
        output: str = None,
        config: str = None,
        threads: int = None,
    ):
        """
        :param line: chord 'x1,y1:x2,y2', defaults to CE with E=(0,1/2)
        :param mode: exact (arrangement), grid (cell centres) or mc (Monte Carlo)
        :param samples: Monte Carlo samples, or total grid points in grid mode
        :param seed: Monte Carlo seed, defaults to POSTULATUM_SEED or 0
        :param svg: write an SVG rendering of the exact zone map to this path
        :param output: also write the JSON result to this path
        :param config: JSON or YAML file with default flag values
        :param threads: worker threads for Monte Carlo sampling
        """
        run = Config.create(
            args={
                "line": line,
                "mode": mode,
                "samples": samples,
                "seed": seed,
                "svg": svg,
                "output": output,
                "threads": threads,
            },
            config_path=config,
        ).config
        chord = parse_chord(run.line)
        zone_map = exact_zone_map(chord)
        if run.mode == "exact":
            result = {
                "mode": "exact",
                "zone_map": zone_map.to_json(),
                "degree_of_negation": degree_of_negation(chord, zone_map).to_json(),
            }
        elif run.mode == "grid":
            result = zone_measures_grid(chord, max(1, isqrt(run.samples))).to_json()
        else:
            result = zone_measures_mc(chord, run.samples, run.seed, run.threads).to_json()
        if run.mode != "exact":
            area = degree_of_negation(chord, zone_map).area_fraction
            result["exact_area"] = {kind.label: str(value) for kind, value in area.items()}
        result["line"] = chord.to_json()
        emit_json(result, run.output)
        if run.svg:
            render_zone_svg(zone_map, Path(run.svg))
