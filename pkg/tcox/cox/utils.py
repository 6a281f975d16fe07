# Copyright 2026, tcox developers

import logging
import sys

DEFAULT_VERBOSE_PRINT_FILE = sys.stderr
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def verbose_print(*msgs, verbose=0, criteria=1, file=None):
    """ Progress lines for the user, printed to stderr when `verbose > criteria`. """
    if file is None:
        file = DEFAULT_VERBOSE_PRINT_FILE
    if verbose > criteria:
        print(*msgs, file=file)


def log_level(verbose=0):
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


def setup_logging(verbose=0, stream=None):
    """ Route log records of the `tcox` package to stderr at a level set by the -v count. """
    logger = logging.getLogger("tcox")
    logger.setLevel(log_level(verbose))
    for handler in list(logger.handlers):
        if getattr(handler, '_tcox_cli', False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._tcox_cli = True
    logger.addHandler(handler)
    return logger
