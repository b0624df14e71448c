"""Utility modules for the symmetry detector."""

from .cache import OperationCache
from .logger import get_logger, setup_logger

__all__ = ["OperationCache", "get_logger", "setup_logger"]
