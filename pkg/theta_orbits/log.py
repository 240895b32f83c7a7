import logging
import sys

import coloredlogs

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def setup_logging(level: str = "WARNING") -> None:
    """
    Install colored log output on standard error.

    Reports are written to standard output, so logs never mix with JSON.
    """
    coloredlogs.install(
        level=level.upper(),
        logger=logging.getLogger("theta_orbits"),
        fmt=LOG_FORMAT,
        stream=sys.stderr,
    )
