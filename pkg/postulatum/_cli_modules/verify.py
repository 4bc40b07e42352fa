import logging

from postulatum._common_utils import emit_json
from postulatum._config import Config
from postulatum._geom.exact import parse_rational
from postulatum._verify import log_results, run_claims
from postulatum.exceptions import PointOutsideSpace, VerificationFailed

LOG = logging.getLogger(__name__)


class Verify:
    """runs the pinned claim suite and reports pass or fail per claim"""

    def __init__(
        self,
        json_: bool = False,
        e_position: str = None,
        seed: int = None,
        config: str = None,
    ):
        """
        :param json_: print machine-readable results instead of the table
        :param e_position: y of E on side DA, strictly between 0 and 1 (default 1/2)
        :param seed: seed for the sampled claims
        :param config: JSON or YAML file with default flag values
        """
        run = Config.create(
            args={"e_position": e_position, "seed": seed}, config_path=config
        ).config
        position = parse_rational(run.e_position) if run.e_position else parse_rational("1/2")
        if not 0 < position < 1:
            raise PointOutsideSpace(f"E=(0,{position}) is not strictly inside side DA")
        results = run_claims(position, run.seed)
        if json_:
            emit_json(
                {
                    "e_position": str(position),
                    "seed": run.seed,
                    "passed": all(r.passed for r in results),
                    "claims": [r.to_json() for r in results],
                }
            )
        else:
            log_results(results, position)
        failed = [r.name for r in results if not r.passed]
        if failed:
            raise VerificationFailed(failed)
