"""
Resolves user-typed variable references against a circuit's declared inputs.

Accepts declared names, x<k> aliases and plain 1-based indices. Unknown
names are reported with the closest declared name when one is similar enough.
"""

from typing import List, Optional, Sequence

from rapidfuzz import fuzz, process

import config
from utils.errors import ParseError
from utils.logger import get_logger

logger = get_logger()


class VariableMatcher:
    """Maps names or indices to variable positions 1..n."""

    def __init__(self, inputs: Sequence[str], threshold: int = config.FUZZY_MATCH_THRESHOLD):
        """
        Initialize variable matcher.

        Args:
            inputs: Declared input names in variable order
            threshold: Minimum similarity score (0-100) for a suggestion
        """
        self.inputs = list(inputs)
        self.threshold = threshold
        self._positions = {name: i for i, name in enumerate(self.inputs, start=1)}

    def suggest(self, reference: str) -> Optional[str]:
        """Closest declared name, or None if nothing reaches the threshold."""
        if not self.inputs:
            return None
        match_result = process.extractOne(reference, self.inputs, scorer=fuzz.ratio)
        if match_result is None:
            return None
        matched_name, score, _ = match_result
        if score >= self.threshold:
            return matched_name
        logger.debug(
            f"Best match for '{reference}' was '{matched_name}' "
            f"with score {score} (below threshold {self.threshold})"
        )
        return None

    def resolve(self, reference: str) -> int:
        """
        Position of one variable reference.

        Args:
            reference: Declared name, 'x<k>' or '<k>'

        Returns:
            1-based variable index

        Raises:
            ParseError: Unknown name or index out of range
        """
        reference = reference.strip()
        if reference in self._positions:
            return self._positions[reference]

        digits = reference[1:] if reference[:1] == "x" else reference
        if digits.isdigit():
            index = int(digits)
            if 1 <= index <= len(self.inputs):
                return index
            raise ParseError(f"variable {reference} outside x1..x{len(self.inputs)}")

        message = f"unknown variable '{reference}'"
        suggestion = self.suggest(reference)
        if suggestion:
            message += f" (did you mean '{suggestion}'?)"
        raise ParseError(message)

    def resolve_list(self, text: str) -> List[int]:
        """Resolve a comma-separated list such as 'x1,x2' or 'a,b'."""
        parts = [part for part in text.split(",") if part.strip()]
        if not parts:
            raise ParseError("empty variable set")
        return [self.resolve(part) for part in parts]
