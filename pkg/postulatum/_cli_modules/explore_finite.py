import logging

from postulatum._axioms import explore_finite
from postulatum._cli_core import CliCore
from postulatum._common_utils import emit_json
from postulatum._config import Config

LOG = logging.getLogger(__name__)


class ExploreFinite:
    """searches random square-model instances for finitely many parallels"""

    CLINAME = "explore-finite"

    @CliCore.longform_param_required("seed")
    def __init__(
        self,
        samples: int = None,
        seed: int = None,
        threads: int = None,
        output: str = None,
        config: str = None,
    ):
        """
        :param samples: number of random instances to classify
        :param seed: sampling seed
        :param threads: worker threads
        :param output: also write the JSON report to this path
        :param config: JSON or YAML file with default flag values
        """
        run = Config.create(
            args={"samples": samples, "seed": seed, "threads": threads, "output": output},
            config_path=config,
        ).config
        report = explore_finite(run.samples, run.seed, run.threads)
        if not report.found:
            LOG.info(f"no FiniteMany instance among {run.samples} samples")
        emit_json(report.to_json(), run.output)
