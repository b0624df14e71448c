"""
Reduced ordered binary decision diagram engine.

Nodes live in parallel arrays owned by a Manager and are hash-consed through a
unique table, so two handles of the same manager denote the same function iff
their root identifiers are equal. Variables are ordered x_1 < x_2 < ... < x_n;
there are no complement edges and no reordering.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Set, Tuple

import config
from bdd.truth_table import TruthTable
from utils.cache import OperationCache
from utils.errors import InvariantError, LimitError, ManagerMismatchError, VariableRangeError
from utils.logger import get_logger

logger = get_logger()

FALSE_ID = 0
TRUE_ID = 1


class BoolOp(Enum):
    """Binary operators supported by Manager.apply."""

    AND = "and"
    OR = "or"
    XOR = "xor"


@dataclass(frozen=True)
class FuncHandle:
    """Canonical reference to a Boolean function inside a Manager."""

    manager: "Manager" = field(repr=False)
    root: int

    @property
    def n(self) -> int:
        """Size of the variable universe."""
        return self.manager.n

    @property
    def is_constant(self) -> bool:
        return self.root in (FALSE_ID, TRUE_ID)

    def __and__(self, other: "FuncHandle") -> "FuncHandle":
        return self.manager.apply(BoolOp.AND, self, other)

    def __or__(self, other: "FuncHandle") -> "FuncHandle":
        return self.manager.apply(BoolOp.OR, self, other)

    def __xor__(self, other: "FuncHandle") -> "FuncHandle":
        return self.manager.apply(BoolOp.XOR, self, other)

    def __invert__(self) -> "FuncHandle":
        return self.manager.not_(self)


class Manager:
    """Owner of the unique table and computed tables for n variables."""

    def __init__(self, n: int):
        """
        Initialize a manager holding only the two terminals.

        Args:
            n: Number of variables in the universe
        """
        self.n = n
        terminal_level = n + 1
        self._var: List[int] = [terminal_level, terminal_level]
        self._low: List[int] = [FALSE_ID, TRUE_ID]
        self._high: List[int] = [FALSE_ID, TRUE_ID]
        self._unique: Dict[Tuple[int, int, int], int] = {}
        self._op_cache = OperationCache("apply")
        self._restrict_cache = OperationCache("restrict")
        # Counts are relative to the node's own level, so they are root independent
        self._count_cache = OperationCache("sat_count")
        self._count_cache.set(FALSE_ID, 0)
        self._count_cache.set(TRUE_ID, 1)

    # ------------------------------------------------------------------ #
    # Handles and validation
    # ------------------------------------------------------------------ #

    @property
    def false(self) -> FuncHandle:
        return FuncHandle(self, FALSE_ID)

    @property
    def true(self) -> FuncHandle:
        return FuncHandle(self, TRUE_ID)

    def constant(self, value: int) -> FuncHandle:
        """Handle for constant 0 or 1."""
        return self.true if value else self.false

    def _own(self, f: FuncHandle) -> int:
        if f.manager is not self:
            raise ManagerMismatchError("function belongs to a different manager")
        return f.root

    def check_var(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.n:
            raise VariableRangeError(f"variable x{i} outside x1..x{self.n}")

    def _mk(self, var: int, low: int, high: int) -> int:
        """Find or create the node (var, low, high), applying the reduction rule."""
        if low == high:
            return low
        key = (var, low, high)
        node = self._unique.get(key)
        if node is None:
            node = len(self._var)
            self._var.append(var)
            self._low.append(low)
            self._high.append(high)
            self._unique[key] = node
        return node

    def _cofactors(self, u: int, level: int) -> Tuple[int, int]:
        if self._var[u] == level:
            return self._low[u], self._high[u]
        return u, u

    # ------------------------------------------------------------------ #
    # Construction
    # ------------------------------------------------------------------ #

    def var(self, i: int) -> FuncHandle:
        """
        Projection function x_i.

        Args:
            i: Variable index in 1..n

        Returns:
            Handle for x_i
        """
        self.check_var(i)
        return FuncHandle(self, self._mk(i, FALSE_ID, TRUE_ID))

    def cube(self, literals: Iterable[Tuple[int, int]]) -> FuncHandle:
        """
        Conjunction of literals.

        Args:
            literals: (variable, bit) pairs; bit 1 is x_i, bit 0 is its complement

        Returns:
            Handle for the product term (constant 0 if a variable appears in both phases)
        """
        fixed: Dict[int, int] = {}
        for i, b in literals:
            self.check_var(i)
            if fixed.setdefault(i, b) != b:
                return self.false
        node = TRUE_ID
        for i in sorted(fixed, reverse=True):
            node = self._mk(i, FALSE_ID, node) if fixed[i] else self._mk(i, node, FALSE_ID)
        return FuncHandle(self, node)

    def from_truth_table(self, tt: TruthTable) -> FuncHandle:
        """
        Build the canonical diagram of an explicit truth table.

        Args:
            tt: Table over exactly n variables

        Returns:
            Handle for the tabulated function
        """
        if tt.n != self.n:
            raise VariableRangeError(f"truth table has {tt.n} variables, manager has {self.n}")

        def build(bits: Tuple[int, ...], level: int) -> int:
            if len(bits) == 1:
                return TRUE_ID if bits[0] else FALSE_ID
            half = len(bits) // 2
            low = build(bits[:half], level + 1)
            high = build(bits[half:], level + 1)
            return self._mk(level, low, high)

        return FuncHandle(self, build(tt.bits, 1))

    # ------------------------------------------------------------------ #
    # Boolean operations
    # ------------------------------------------------------------------ #

    def apply(self, op: BoolOp, f: FuncHandle, g: FuncHandle) -> FuncHandle:
        """
        Combine two functions with AND, OR or XOR.

        Args:
            op: Operator
            f: Left operand
            g: Right operand

        Returns:
            Canonical handle of the result
        """
        u, v = self._own(f), self._own(g)
        return FuncHandle(self, self._apply(op, u, v))

    def _apply(self, op: BoolOp, u: int, v: int) -> int:
        if op is BoolOp.AND:
            if u == FALSE_ID or v == FALSE_ID:
                return FALSE_ID
            if u == TRUE_ID or u == v:
                return v
            if v == TRUE_ID:
                return u
        elif op is BoolOp.OR:
            if u == TRUE_ID or v == TRUE_ID:
                return TRUE_ID
            if u == FALSE_ID or u == v:
                return v
            if v == FALSE_ID:
                return u
        else:
            if u == v:
                return FALSE_ID
            if u == FALSE_ID:
                return v
            if v == FALSE_ID:
                return u

        # All three operators are commutative
        if u > v:
            u, v = v, u
        key = (op, u, v)
        cached = self._op_cache.get(key)
        if cached is not None:
            return cached

        level = min(self._var[u], self._var[v])
        u0, u1 = self._cofactors(u, level)
        v0, v1 = self._cofactors(v, level)
        result = self._mk(level, self._apply(op, u0, v0), self._apply(op, u1, v1))
        self._op_cache.set(key, result)
        return result

    def not_(self, f: FuncHandle) -> FuncHandle:
        """Complement of f."""
        return FuncHandle(self, self._apply(BoolOp.XOR, self._own(f), TRUE_ID))

    def ite(self, f: FuncHandle, g: FuncHandle, h: FuncHandle) -> FuncHandle:
        """If-then-else: f·g ∨ ¬f·h."""
        return (f & g) | (~f & h)

    # ------------------------------------------------------------------ #
    # Cofactors and queries
    # ------------------------------------------------------------------ #

    def restrict(self, f: FuncHandle, i: int, b: int) -> FuncHandle:
        """
        Cofactor of f with x_i fixed to b.

        The result stays in the n-variable universe and no longer depends on x_i.

        Args:
            f: Function
            i: Variable index in 1..n
            b: 0 or 1

        Returns:
            Handle for f restricted by x_i = b
        """
        self.check_var(i)
        return FuncHandle(self, self._restrict(self._own(f), i, 1 if b else 0))

    def _restrict(self, u: int, i: int, b: int) -> int:
        var = self._var[u]
        if var > i:
            return u
        if var == i:
            return self._high[u] if b else self._low[u]
        key = (u, i, b)
        cached = self._restrict_cache.get(key)
        if cached is not None:
            return cached
        result = self._mk(var, self._restrict(self._low[u], i, b), self._restrict(self._high[u], i, b))
        self._restrict_cache.set(key, result)
        return result

    def restrict_many(self, f: FuncHandle, assignment: Iterable[Tuple[int, int]]) -> FuncHandle:
        """Apply restrict for each (variable, bit) pair in turn."""
        for i, b in assignment:
            f = self.restrict(f, i, b)
        return f

    def sat_count(self, f: FuncHandle) -> int:
        """
        Exact number of satisfying assignments over all 2^n inputs.

        Returns:
            Non-negative integer (arbitrary precision)
        """
        u = self._own(f)
        return self._count(u) << (self._var[u] - 1)

    def _count(self, u: int) -> int:
        # Satisfying assignments of the variables at or below u's level
        cached = self._count_cache.get(u)
        if cached is not None:
            return cached
        var = self._var[u]
        low, high = self._low[u], self._high[u]
        result = (self._count(low) << (self._var[low] - var - 1)) + \
                 (self._count(high) << (self._var[high] - var - 1))
        self._count_cache.set(u, result)
        return result

    def equal(self, f: FuncHandle, g: FuncHandle) -> bool:
        """True iff f and g are the same function."""
        return self._own(f) == self._own(g)

    def support(self, f: FuncHandle) -> Set[int]:
        """Exact set of variables f depends on."""
        seen: Set[int] = set()
        variables: Set[int] = set()
        stack = [self._own(f)]
        while stack:
            u = stack.pop()
            if u in seen or u in (FALSE_ID, TRUE_ID):
                continue
            seen.add(u)
            variables.add(self._var[u])
            stack.append(self._low[u])
            stack.append(self._high[u])
        return variables

    def node_count(self, f: Optional[FuncHandle] = None) -> int:
        """Non-terminal nodes reachable from f, or held by the manager when f is None."""
        if f is None:
            return len(self._var) - 2
        seen: Set[int] = set()
        stack = [self._own(f)]
        while stack:
            u = stack.pop()
            if u in seen or u in (FALSE_ID, TRUE_ID):
                continue
            seen.add(u)
            stack.append(self._low[u])
            stack.append(self._high[u])
        return len(seen)

    def to_truth_table(self, f: FuncHandle) -> TruthTable:
        """
        Expand f into an explicit table (guarded by config.TRUTH_TABLE_MAX_VARS).

        Returns:
            TruthTable over the manager's n variables
        """
        if self.n > config.TRUTH_TABLE_MAX_VARS:
            raise LimitError(
                f"truth table expansion limited to {config.TRUTH_TABLE_MAX_VARS} variables (n={self.n})"
            )
        memo: Dict[Tuple[int, int], List[int]] = {}

        def expand(u: int, level: int) -> List[int]:
            if level > self.n:
                return [1 if u == TRUE_ID else 0]
            key = (u, level)
            if key in memo:
                return memo[key]
            low, high = self._cofactors(u, level)
            bits = expand(low, level + 1) + expand(high, level + 1)
            memo[key] = bits
            return bits

        return TruthTable(self.n, tuple(expand(self._own(f), 1)))

    # ------------------------------------------------------------------ #
    # Diagnostics
    # ------------------------------------------------------------------ #

    def audit(self) -> None:
        """
        Walk every node and verify the reduction and ordering invariants.

        Raises:
            InvariantError: On the first violation found
        """
        if len(self._unique) != len(self._var) - 2:
            raise InvariantError("unique table size does not match node count")
        for u in range(2, len(self._var)):
            var, low, high = self._var[u], self._low[u], self._high[u]
            if not 1 <= var <= self.n:
                raise InvariantError(f"node {u} labelled with unknown variable {var}")
            if low == high:
                raise InvariantError(f"node {u} is redundant (low == high)")
            if self._var[low] <= var or self._var[high] <= var:
                raise InvariantError(f"node {u} violates the variable order")
            if self._unique.get((var, low, high)) != u:
                raise InvariantError(f"node {u} is not registered in the unique table")

    def cache_stats(self) -> Dict[str, Dict[str, int]]:
        """Hit/miss statistics of the computed tables."""
        return {
            "apply": self._op_cache.stats(),
            "restrict": self._restrict_cache.stats(),
            "sat_count": self._count_cache.stats(),
        }

    def log_stats(self) -> None:
        stats = self.cache_stats()
        logger.debug(
            f"BDD manager n={self.n}: {self.node_count()} nodes, "
            f"apply {stats['apply']}, restrict {stats['restrict']}, sat_count {stats['sat_count']}"
        )


def new_manager(n: int, max_vars: Optional[int] = None) -> Manager:
    """
    Create a manager for n variables.

    Args:
        n: Variable count
        max_vars: Upper bound (defaults to config.MAX_VARS)

    Returns:
        Empty manager with terminals 0 and 1

    Raises:
        LimitError: If n exceeds the bound
    """
    limit = config.MAX_VARS if max_vars is None else max_vars
    if n < 0:
        raise VariableRangeError(f"variable count must be non-negative (got {n})")
    if n > limit:
        raise LimitError(f"{n} variables exceed the configured maximum of {limit}")
    return Manager(n)
