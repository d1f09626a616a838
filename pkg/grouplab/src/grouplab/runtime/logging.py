import contextvars
import logging
import sys
from typing import Callable, Optional

# Context variable to hold the progress callback for the current run
# Callback signature: def callback(message: str, level: str) -> None
progress_callback_ctx: contextvars.ContextVar[Optional[Callable[[str, str], None]]] = (
    contextvars.ContextVar("progress_callback_ctx", default=None)
)

_LEVELS = {"debug": logging.DEBUG, "info": logging.INFO, "warning": logging.WARNING}


def report_progress(logger: logging.Logger, message: str, level: str = "info") -> None:
    """Log a progress message and forward it to the run's callback, if any."""
    logger.log(_LEVELS.get(level, logging.INFO), message)
    callback = progress_callback_ctx.get()
    if callback is not None:
        try:
            callback(message, level)
        except Exception:
            logger.debug("progress callback failed", exc_info=True)


_installed: Optional[logging.Handler] = None


def configure_logging(quiet: bool = False, verbose: bool = False) -> None:
    """Install a single stderr handler on the grouplab logger."""
    global _installed
    root = logging.getLogger("grouplab")
    if _installed is not None:
        root.removeHandler(_installed)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    if quiet:
        root.setLevel(logging.ERROR)
    elif verbose:
        root.setLevel(logging.DEBUG)
    else:
        root.setLevel(logging.WARNING)
    _installed = handler
