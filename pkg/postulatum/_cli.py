import signal
import sys

from pkg_resources import get_distribution

from postulatum._cli_core import GLOBAL_ARGS, CliCore, _get_log_level
from postulatum._common_utils import exit_with_code
from postulatum._logger import init_postulatum_cli_logger
from postulatum.exceptions import PostulatumException

from . import _cli_modules

LOG = init_postulatum_cli_logger(loglevel="ERROR")
BANNER = (
    "                 _         _       _\n"
    " _ __   ___  ___| |_ _   _| | __ _| |_ _   _ _ __ ___\n"
    "| '_ \\ / _ \\/ __| __| | | | |/ _` | __| | | | '_ ` _ \\\n"
    "| |_) | (_) \\__ \\ |_| |_| | | (_| | |_| |_| | | | | | |\n"
    "| .__/ \\___/|___/\\__|\\__,_|_|\\__,_|\\__|\\__,_|_| |_| |_|\n"
    "|_|\n"
)

NAME = "postulatum"
DESCRIPTION = (
    "postulatum classifies how the parallel postulate behaves in mixed "
    "geometries, maps the zones of the square model exactly, decides whether "
    "the postulate is denied in several ways in a model and verifies the "
    "worked claims. Results are printed as JSON on standard output."
)


def main(cli_core_class=CliCore, exit_func=exit_with_code):
    signal.signal(signal.SIGINT, _sigint_handler)
    log_level = _setup_logging(sys.argv)
    args = sys.argv[1:]
    if not args:
        args.append("-h")
    try:
        _welcome()
        version = get_installed_version()
        cli = cli_core_class(NAME, _cli_modules, DESCRIPTION, version, GLOBAL_ARGS.ARGS)
        cli.parse(args)
        cli.run()
    except PostulatumException as e:
        LOG.error(str(e), exc_info=_print_tracebacks(log_level))
        exit_func(e.exit_code)
    except Exception as e:  # pylint: disable=broad-except
        LOG.error(
            "%s %s", e.__class__.__name__, str(e), exc_info=_print_tracebacks(log_level)
        )
        exit_func(1)


def _setup_logging(args, exit_func=exit_with_code):
    log_level = _get_log_level(args, exit_func=exit_func)
    LOG.setLevel(log_level)
    return log_level


def _print_tracebacks(log_level):
    return log_level == "DEBUG"


def _welcome():
    LOG.info(f"{BANNER}", extra={"nametag": ""})
    LOG.info("version %s\n" % get_installed_version(), extra={"nametag": ""})


def get_installed_version():
    try:
        return get_distribution(NAME).version
    except Exception:  # pylint: disable=broad-except
        return "[local source] no pip module installed"


def _sigint_handler(signum, frame):
    LOG.debug(f"SIGNAL {signum} caught at {frame}")
    exit_with_code(1)
