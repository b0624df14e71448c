"""
Explicit truth tables.

Bit m of a table over n variables is the function value at the assignment
whose i-th most significant bit is x_i, so bits[0] = f(0, ..., 0) and x_1 is
the most significant variable.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple


@dataclass(frozen=True)
class TruthTable:
    """A 2^n bit vector in MSB-first variable order."""

    n: int
    bits: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if self.n < 0:
            raise ValueError(f"variable count must be non-negative (got {self.n})")
        if len(bits) != 1 << self.n:
            raise ValueError(f"truth table over {self.n} variables needs {1 << self.n} bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("truth table bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> "TruthTable":
        """
        Build a table from a clean '0'/'1' string whose length is a power of two.

        Args:
            text: Bit string, e.g. "0110"

        Returns:
            TruthTable over log2(len(text)) variables
        """
        length = len(text)
        if length == 0 or length & (length - 1):
            raise ValueError(f"truth vector length {length} is not a power of two")
        if set(text) - {"0", "1"}:
            raise ValueError(f"truth vector may only contain 0 and 1: {text!r}")
        return cls(length.bit_length() - 1, tuple(int(c) for c in text))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "TruthTable":
        """Build a table from any iterable of 0/1 values."""
        bits = tuple(bits)
        length = len(bits)
        if length == 0 or length & (length - 1):
            raise ValueError(f"truth vector length {length} is not a power of two")
        return cls(length.bit_length() - 1, bits)

    def ones(self) -> int:
        """Number of assignments mapped to 1."""
        return sum(self.bits)

    def __getitem__(self, minterm: int) -> int:
        return self.bits[minterm]

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)
