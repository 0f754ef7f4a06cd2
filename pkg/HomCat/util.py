import logging
import os
import sys


THREADS_ENV = "HOMCAT_THREADS"
DEFAULT_QMAX = 8

logging_is_setup = False
def logging_setup(loglevel = "info"):
    """
    Sets up logging once for the whole package.
    """
    global logging_is_setup
    if logging_is_setup: return
    loglevel = loglevel.lower()
    logging_map = {"debug" : logging.DEBUG, "info" : logging.INFO, "warning" : logging.WARNING, "error" : logging.ERROR, "critical" : logging.CRITICAL}
    level = logging_map.get(loglevel, logging.INFO)
    logging.basicConfig(format='%(levelname)s: %(filename)s %(lineno)d, %(funcName)s: %(message)s', level = level, stream = sys.stderr)
    logging_is_setup = True


def get_thread_count(threads = None):
    """
    Resolves the worker count: explicit argument, then the HOMCAT_THREADS environment variable, then the core count.

    Args:
        threads (int): Explicit request, ignored if None.

    Returns:
        A positive number of worker threads.
    """
    if threads is None:
        env_value = os.environ.get(THREADS_ENV)
        if env_value:
            try:
                threads = int(env_value)
            except ValueError:
                logging.error(f"{THREADS_ENV}={env_value} is not an integer.")
                raise
    if threads is None:
        threads = os.cpu_count() or 1
    if threads < 1:
        logging.error(f"Thread count must be positive, got {threads}.")
        raise ValueError(f"invalid thread count {threads}")
    return threads
