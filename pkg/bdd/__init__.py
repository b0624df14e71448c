"""Reduced ordered binary decision diagrams."""

from .manager import BoolOp, FuncHandle, Manager, new_manager
from .truth_table import TruthTable

__all__ = ["BoolOp", "FuncHandle", "Manager", "TruthTable", "new_manager"]
