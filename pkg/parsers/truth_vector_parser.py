"""
Raw truth-vector input: one 0/1 column of length 2^n, MSB-first.

Whitespace, brackets, commas and '#' comments are ignored, so both
"1100 0001 1100 0010" and "[1100000111000010]" are accepted.
"""

import re
from typing import Optional

from bdd.manager import new_manager
from bdd.truth_table import TruthTable
from parsers.circuit_spec import CircuitSpec
from utils.errors import ParseError

COMMENT_PATTERN = re.compile(r"#.*$", re.MULTILINE)
IGNORED_PATTERN = re.compile(r"[\s\[\],]")


class TruthVectorParser:
    """Parser for single-output truth vectors."""

    def __init__(self, max_vars: Optional[int] = None):
        self.max_vars = max_vars

    def parse(self, text: str, name: str = "f") -> CircuitSpec:
        """
        Parse a truth vector into a single-output circuit over x1..xn.

        Raises:
            ParseError: Illegal character or length not a power of two
            LimitError: More variables than max_vars
        """
        bits = IGNORED_PATTERN.sub("", COMMENT_PATTERN.sub("", text))
        illegal = sorted(set(bits) - {"0", "1"})
        if illegal:
            raise ParseError(f"illegal character {illegal[0]!r} in truth vector")
        length = len(bits)
        if length == 0 or length & (length - 1):
            raise ParseError(f"truth vector length {length} is not a power of two")

        table = TruthTable.from_string(bits)
        manager = new_manager(table.n, self.max_vars)
        return CircuitSpec(
            name=name,
            inputs=[f"x{i}" for i in range(1, table.n + 1)],
            outputs=["f"],
            functions=[manager.from_truth_table(table)],
            manager=manager,
            source_format="tt",
        )


def parse_truth_vector(text: str, name: str = "f", max_vars: Optional[int] = None) -> CircuitSpec:
    return TruthVectorParser(max_vars).parse(text, name)
