import logging

from postulatum._axioms import MODELS, SquareModel, axiom_denied, get_model
from postulatum._cli_core import CliCore
from postulatum._common_utils import emit_json
from postulatum._config import Config
from postulatum._square.model import parse_chord

LOG = logging.getLogger(__name__)


class SDenied:
    """decides whether the parallel postulate is denied in several ways in a model"""

    CLINAME = "sdenied"

    @CliCore.param_choices("model", MODELS)
    def __init__(
        self,
        model: str = None,
        line: str = None,
        budget: int = None,
        seed: int = None,
        threads: int = None,
        early_exit: bool = False,
        output: str = None,
        config: str = None,
    ):
        """
        :param model: square, sphere, euclidean-plane, sphere-plane or hyperbolic-disk
        :param line: chord of the square model, defaults to CE
        :param budget: sampled instances to examine besides the critical ones
        :param seed: sampling seed
        :param threads: worker threads for behaviour evaluation
        :param early_exit: stop once a second behaviour has been seen
        :param output: also write the JSON verdict to this path
        :param config: JSON or YAML file with default flag values
        """
        run = Config.create(
            args={
                "model": model,
                "line": line,
                "budget": budget,
                "seed": seed,
                "threads": threads,
                "output": output,
            },
            config_path=config,
        ).config
        geometry = get_model(run.model)
        if isinstance(geometry, SquareModel):
            geometry = SquareModel(parse_chord(run.line))
        verdict = axiom_denied(
            geometry, run.budget, run.seed, early_exit=early_exit, threads=run.threads
        )
        emit_json(verdict.to_json(), run.output)
