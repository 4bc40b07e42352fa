import collections.abc
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from postulatum.exceptions import OutputError

LOG = logging.getLogger(__name__)


def exit_with_code(code, msg=""):
    if msg:
        LOG.error(msg)
    sys.exit(code)


def merge_nested_dict(old, new):
    for k, v in new.items():
        if isinstance(old.get(k), dict) and isinstance(v, collections.abc.Mapping):
            merge_nested_dict(old[k], v)
        else:
            old[k] = v


def dump_json(data) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_text(path: Path, text: str) -> None:
    try:
        path = Path(path).expanduser()
        if path.parent and not path.parent.is_dir():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as e:
        # pylint: disable=raise-missing-from
        raise OutputError(f"cannot write {path}: {e.strerror or e}")
    LOG.info(f"wrote {path}")


def emit_json(data, output: Optional[str] = None) -> str:
    """Prints JSON results to stdout and, when given, to an output file as well."""
    text = dump_json(data)
    sys.stdout.write(text)
    sys.stdout.flush()
    if output:
        write_text(Path(output), text)
    return text
