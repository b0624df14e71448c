"""
In-memory computed tables for decision diagram operations.

Stores results keyed by operand tuples and keeps hit/miss counters so the
manager can report how well memoization is working.
"""

from typing import Dict, Hashable, Optional


class OperationCache:
    """Unbounded memo table with hit/miss statistics."""

    def __init__(self, name: str):
        """
        Initialize an empty table.

        Args:
            name: Label used when reporting statistics
        """
        self.name = name
        self._table: Dict[Hashable, int] = {}
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[int]:
        """
        Retrieve a memoized node identifier or count.

        Args:
            key: Operand tuple

        Returns:
            Cached value or None if absent
        """
        value = self._table.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def set(self, key: Hashable, value: int) -> None:
        """Store the result for an operand tuple."""
        self._table[key] = value

    def clear(self) -> None:
        """Drop all entries and reset statistics."""
        self._table.clear()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._table)

    def stats(self) -> Dict[str, int]:
        """Entry count and hit/miss counters."""
        return {"entries": len(self._table), "hits": self.hits, "misses": self.misses}
