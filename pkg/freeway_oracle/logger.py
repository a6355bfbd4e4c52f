"""
Logger configuration
"""

import logging
import time
from typing import Any, Callable, Dict, Tuple

import wrapt

PACKAGE_LOGGER = "freeway_oracle"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

logger = logging.getLogger(__name__)


def configure_logging(level: int = logging.WARNING) -> None:
    """Attaches a single stream handler to the package logger. Calling it again only changes the level"""
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    package_logger.setLevel(level)

    if not any(getattr(h, "_freeway_oracle", False) for h in package_logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        setattr(handler, "_freeway_oracle", True)
        package_logger.addHandler(handler)


def log_search_progress() -> None:
    """Sets the logging level to INFO for the oracle so per-solve summaries are emitted"""
    logging.getLogger(f"{PACKAGE_LOGGER}.oracle").setLevel(logging.INFO)


@wrapt.decorator
def log_duration(
    wrapped: Callable[..., Any],
    instance: Any,
    args: Tuple[Any, ...],
    kwargs: Dict[str, Any],
) -> Any:
    """Logs the wall time of the wrapped call at DEBUG on the wrapped function's module logger"""
    started = time.perf_counter()
    try:
        return wrapped(*args, **kwargs)
    finally:
        logging.getLogger(wrapped.__module__).debug(
            "%s took %.3fs", wrapped.__qualname__, time.perf_counter() - started
        )
