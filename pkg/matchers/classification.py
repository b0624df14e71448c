"""
Symmetry verdict types shared by the BDD recognizer, the truth-table oracle
and group aggregation.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence


class SymmetryKind(Enum):
    """Pairwise symmetry type."""

    NONE = "NONE"
    NE = "NE"
    E = "E"
    M = "M"

    @classmethod
    def from_checks(cls, ne: bool, e: bool) -> "SymmetryKind":
        if ne and e:
            return cls.M
        if ne:
            return cls.NE
        if e:
            return cls.E
        return cls.NONE

    @property
    def has_ne(self) -> bool:
        return self in (SymmetryKind.NE, SymmetryKind.M)

    @property
    def has_e(self) -> bool:
        return self in (SymmetryKind.E, SymmetryKind.M)


class TotalSymmetry(Enum):
    """Total symmetry verdict."""

    NO = "no"
    YES_NE = "yes-NE"
    YES_MIXED = "yes-mixed-polarity"

    @property
    def is_symmetric(self) -> bool:
        return self is not TotalSymmetry.NO


def var_name(i: int, names: Optional[Sequence[str]] = None) -> str:
    """Declared name of x_i, or 'x<i>' when none is known."""
    if names and 0 < i <= len(names):
        return names[i - 1]
    return f"x{i}"


@dataclass(frozen=True)
class PairClassification:
    """Verdict for the variable pair (x_i, x_j), i < j."""

    i: int
    j: int
    kind: SymmetryKind
    vacuous: bool = False
    filter_passed_ne: bool = True
    filter_passed_e: bool = True

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError(f"pair must satisfy i < j (got {self.i}, {self.j})")
        if self.vacuous and self.kind is not SymmetryKind.M:
            raise ValueError("a vacuous pair is always M-symmetric")

    @property
    def key(self):
        return (self.i, self.j)

    def label(self, names: Optional[Sequence[str]] = None) -> str:
        """Compact notation such as NE{x2,x3} or E{x1,~x2}."""
        first, second = var_name(self.i, names), var_name(self.j, names)
        if self.kind is SymmetryKind.E:
            second = "~" + second
        return f"{self.kind.value}{{{first},{second}}}"
