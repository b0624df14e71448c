"""
Logging for the symmetry detector.

One named logger carries every message. The console handler writes to stderr
because stdout is reserved for reports; a rotating file handler is added only
when SYMDETECT_LOG_DIR is set. Library modules log at DEBUG, the CLI at INFO
and above.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

import config

LOGGER_NAME = "symdetect"
LOG_FORMAT = "%(asctime)s %(levelname)-7s %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _is_console(handler: logging.Handler) -> bool:
    # RotatingFileHandler is itself a StreamHandler subclass
    return isinstance(handler, logging.StreamHandler) and not isinstance(handler, RotatingFileHandler)


def _attach_file_handler(logger: logging.Logger, log_file: str, formatter: logging.Formatter) -> None:
    try:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=config.LOG_MAX_BYTES,
            backupCount=config.LOG_BACKUP_COUNT,
        )
    except OSError as e:
        logger.warning(f"Could not create file handler for {log_file}: {e}")
        return
    file_handler.setLevel(logging.INFO)
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)


def setup_logger(name: str = LOGGER_NAME, log_file: Optional[str] = None) -> logging.Logger:
    """
    Configure and return a logger with a stderr console handler.

    Args:
        name: Logger name
        log_file: Rotating log file; defaults to config.LOG_PATH, empty disables

    Returns:
        Configured logger instance (unchanged if it already has handlers)
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger
    logger.setLevel(logging.INFO)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.INFO)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    log_file = config.LOG_PATH if log_file is None else log_file
    if log_file:
        _attach_file_handler(logger, log_file, formatter)
    return logger


def get_logger(name: str = LOGGER_NAME) -> logging.Logger:
    """Shared logger, set up on first use."""
    logger = logging.getLogger(name)
    return logger if logger.handlers else setup_logger(name)


def set_quiet_mode(quiet: bool = True) -> None:
    """
    Show only WARNING and above on the console.

    The file handler, if any, keeps logging INFO.
    """
    for handler in logging.getLogger(LOGGER_NAME).handlers:
        if _is_console(handler):
            handler.setLevel(logging.WARNING if quiet else logging.INFO)


def set_debug_mode(debug: bool = True) -> None:
    """Switch the logger and every handler between DEBUG and INFO."""
    logger = logging.getLogger(LOGGER_NAME)
    level = logging.DEBUG if debug else logging.INFO
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


def configure_cli_logging(debug: bool = False, quiet: bool = False) -> None:
    """Apply --quiet and --debug; debug wins on the console when both are given."""
    if quiet:
        set_quiet_mode(True)
    if debug:
        set_debug_mode(True)
