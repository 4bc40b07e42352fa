import logging
import os
import re
from pathlib import Path
from typing import Dict, Optional, Union

import yaml
from dataclasses_jsonschema import ValidationError
from jsonschema.exceptions import ValidationError as SchemaError

from postulatum._dataclasses import RunConfig
from postulatum._geom.exact import parse_rational
from postulatum.exceptions import ParseError

LOG = logging.getLogger(__name__)

ENV_PREFIX = "POSTULATUM_"
INT_FIELDS = ("samples", "seed", "budget", "threads")

GRAMMAR_FIELDS = ("line", "point", "e_position")

DEFAULTS = {
    "model": "square",
    "line": "1,1:0,1/2",
    "mode": "exact",
    "samples": 10000,
    "seed": 0,
    "budget": 200,
    "threads": 1,
}

# line defaults of the models whose lines are not chords
MODEL_LINES = {
    "square": "1,1:0,1/2",
    "sphere": "0,0,1",
    "euclidean-plane": "0,1,0",
    "sphere-plane": "0,1,0",
    "hyperbolic-disk": "1,0:-1,0",
}


def _check_tokens(config_dict: dict) -> None:
    """Parses every rational of the grammar fields so errors name the bad token."""
    for key in GRAMMAR_FIELDS:
        value = config_dict.get(key)
        if value is None:
            continue
        for token in re.split(r"[,:]", str(value)):
            parse_rational(token)


def _config_from_dict(config_dict: dict, source_name: str) -> RunConfig:
    _check_tokens(config_dict)
    try:
        config = RunConfig.from_dict(config_dict)
    except (ValidationError, SchemaError, ValueError, TypeError, KeyError) as e:
        # pylint: disable=raise-missing-from
        raise ParseError(source_name, str(e).splitlines()[0] if str(e) else "invalid")
    config.set_source(source_name)
    return config


class Config:
    def __init__(self, sources: list):
        self.config = _config_from_dict(DEFAULTS, "POSTULATUM_DEFAULT")
        for source in sources:
            source_config = _config_from_dict(source["config"], source["source"])
            self.config = RunConfig.merge(self.config, source_config)
        if self.config.model in MODEL_LINES and "line" not in self._explicit:
            self.config.line = MODEL_LINES[self.config.model]
        LOG.debug(f"config sources: {self.config.source}")

    @property
    def _explicit(self):
        return {
            key for key, value in self.config.source.items() if value != "POSTULATUM_DEFAULT"
        }

    @classmethod
    def create(
        cls,
        args: Optional[dict] = None,
        config_path: Optional[Path] = None,
        env_vars: Optional[Union[os._Environ, Dict[str, str]]] = None,
    ) -> "Config":
        """
        Layers the built-in defaults, an optional config file, POSTULATUM_* environment
        variables and CLI arguments, later layers winning. Arguments set to None are
        treated as not given.
        """
        sources = []
        if config_path:
            sources.append(
                {"source": str(config_path), "config": cls._dict_from_file(Path(config_path))}
            )
        sources.append(
            {"source": "EnvironmentVariable", "config": cls._dict_from_env_vars(env_vars)}
        )
        if args:
            sources.append(
                {
                    "source": "CliArgument",
                    "config": {k: v for k, v in args.items() if v is not None},
                }
            )
        return cls(sources=sources)

    @staticmethod
    def _dict_from_file(file_path: Path) -> dict:
        if not file_path.is_file():
            raise ParseError(str(file_path), "config file not found")
        try:
            with open(str(file_path), "r") as file_handle:
                config_dict = yaml.safe_load(file_handle)
        except OSError as e:
            # pylint: disable=raise-missing-from
            raise ParseError(str(file_path), f"cannot read config file: {e.strerror or e}")
        except yaml.YAMLError as e:
            LOG.debug(str(e), exc_info=True)
            # pylint: disable=raise-missing-from
            raise ParseError(str(file_path), "not valid JSON or YAML")
        if config_dict is None:
            return {}
        if not isinstance(config_dict, dict):
            raise ParseError(str(file_path), "top level must be a mapping")
        config_dict = {str(key).replace("-", "_"): value for key, value in config_dict.items()}
        for key in GRAMMAR_FIELDS:
            if key in config_dict and config_dict[key] is not None:
                config_dict[key] = str(config_dict[key])
        return config_dict

    @staticmethod
    def _dict_from_env_vars(
        env_vars: Optional[Union[os._Environ, Dict[str, str]]] = None
    ) -> dict:
        if env_vars is None:
            env_vars = os.environ
        config_dict: Dict[str, Union[str, int]] = {}
        for key, value in env_vars.items():
            if not key.startswith(ENV_PREFIX):
                continue
            key = key[len(ENV_PREFIX) :].lower()
            if key not in RunConfig.__dataclass_fields__:  # pylint: disable=no-member
                LOG.debug(f"ignoring unknown environment variable {ENV_PREFIX}{key.upper()}")
                continue
            if key in INT_FIELDS:
                try:
                    config_dict[key] = int(value)
                except ValueError:
                    # pylint: disable=raise-missing-from
                    raise ParseError(value, f"{ENV_PREFIX}{key.upper()} must be an integer")
            else:
                config_dict[key] = value
        return config_dict
