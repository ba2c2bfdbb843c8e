"""
Logging configuration for cliquetensor.

Standard output carries the command documents, so every handler writes to
standard error (or a file).
"""
import logging
import sys
from pathlib import Path
from typing import Optional

ROOT_LOGGER = "cliquetensor"


def setup_logging(
    log_level: str = "WARNING",
    log_file: Optional[str] = None,
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
) -> None:
    """Route the cliquetensor loggers to standard error and, if given, to ``log_file``."""
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

    level = getattr(logging, log_level.upper(), None)
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {log_level}")

    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    formatter = logging.Formatter(log_format)
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    for handler in handlers:
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    logger.setLevel(level)
    logger.propagate = False

    logger.debug(f"Logging configured with level: {log_level}")


def get_logger(name: str) -> logging.Logger:
    """Child logger of ``cliquetensor``."""
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
