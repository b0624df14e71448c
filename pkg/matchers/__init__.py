"""Symmetry recognition, group aggregation and variable lookup."""

from .classification import PairClassification, SymmetryKind, TotalSymmetry
from .groups import GroupKind, SymmetryGroup, format_summary, group_summary
from .symmetry import SymmetryReport, detect, detect_circuit
from .variable_matcher import VariableMatcher

__all__ = [
    "GroupKind",
    "PairClassification",
    "SymmetryGroup",
    "SymmetryKind",
    "SymmetryReport",
    "TotalSymmetry",
    "VariableMatcher",
    "detect",
    "detect_circuit",
    "format_summary",
    "group_summary",
]
