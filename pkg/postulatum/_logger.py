import logging
import os
import sys

LOG = logging.getLogger(__name__)


def _colour_enabled(stream) -> bool:
    if os.environ.get("NO_COLOR"):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _tag(label: str, colour: str, enabled: bool = True) -> str:
    if not enabled:
        return f"[{label:<7}] : "
    return f"{colour}[{label:<7}]{PrintMsg.rst_color} : "


class PrintMsg:
    name_color = "\x1b[0;37;44m"
    aqua = "\x1b[0;30;46m"
    green = "\x1b[0;30;42m"
    white = "\x1b[0;30;47m"
    orange = "\x1b[0;30;43m"
    red = "\x1b[0;30;41m"
    rst_color = "\x1b[0m"

    # log levels, plus the verdicts of the claim suite
    LEVELS = {
        "CRITICAL": ("FATAL", red),
        "ERROR": ("ERROR", red),
        "WARNING": ("WARN", orange),
        "INFO": ("INFO", white),
        "DEBUG": ("DEBUG", aqua),
        "PASS": ("PASS", green),
        "FAIL": ("FAIL", red),
    }

    PASS = "PASS"
    FAIL = "FAIL"

    @classmethod
    def tag(cls, name: str, colour: bool = True) -> str:
        label, code = cls.LEVELS[name]
        return _tag(label, code, colour)


class AppFilter(logging.Filter):
    """Sets `color_loglevel`; a `nametag` extra replaces the level tag."""

    def __init__(self, colour: bool = True):
        super().__init__()
        self.colour = colour

    def filter(self, record):
        nametag = getattr(record, "nametag", None)
        if nametag is None:
            record.color_loglevel = PrintMsg.tag(record.levelname, self.colour)
        elif nametag in PrintMsg.LEVELS:
            record.color_loglevel = PrintMsg.tag(nametag, self.colour)
        else:
            record.color_loglevel = nametag
        return True


def init_postulatum_cli_logger(loglevel=None, stream=None):
    """Attaches the stderr handler; stdout is left to JSON results."""
    stream = stream if stream is not None else sys.stderr
    log = logging.getLogger(__package__)
    cli_handler = logging.StreamHandler(stream)
    cli_handler.setFormatter(logging.Formatter("%(color_loglevel)s%(message)s"))
    cli_handler.addFilter(AppFilter(colour=_colour_enabled(stream)))
    log.addHandler(cli_handler)
    if loglevel:
        log.setLevel(getattr(logging, loglevel.upper(), logging.INFO))
    return log
