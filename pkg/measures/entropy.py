"""
Information measures of Boolean functions computed on decision diagrams.

Inputs are uniformly distributed over all 2^n assignments, so every
probability is an exact dyadic rational derived from a satisfying-assignment
count. Entropies are floats in bits and exist for reporting; anything that
must be decided exactly (equality of two measures) is decided on counts.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

import config
from bdd.manager import FuncHandle
from utils.errors import LimitError

# Entropy in bits
Bits = float


@dataclass(frozen=True)
class Prob:
    """Exact dyadic probability numerator / denominator (denominator = 2^k)."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0 or self.denominator & (self.denominator - 1):
            raise ValueError(f"denominator must be a power of two (got {self.denominator})")
        if not 0 <= self.numerator <= self.denominator:
            raise ValueError(f"probability {self.numerator}/{self.denominator} outside [0, 1]")

    @property
    def value(self) -> float:
        return self.numerator / self.denominator

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def complement(self) -> "Prob":
        return Prob(self.denominator - self.numerator, self.denominator)

    def joint(self, other: "Prob") -> "Prob":
        """p(a, b) of two independent events."""
        return Prob(self.numerator * other.numerator, self.denominator * other.denominator)

    def given(self, condition: "Prob") -> Fraction:
        """p(a | b) = p(a, b) / p(b), with self taken as the joint probability."""
        if condition.numerator == 0:
            raise ZeroDivisionError("conditioning on an impossible event")
        return self.as_fraction() / condition.as_fraction()

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def entropy_from_counts(ones: int, total: int) -> Bits:
    """
    Binary Shannon entropy of an output that is 1 on `ones` of `total` assignments.

    The 0·log 0 term is taken as 0.
    """
    if total <= 0:
        raise ValueError("total must be positive")
    entropy = 0.0
    for count in (ones, total - ones):
        if count:
            p = count / total
            entropy -= p * math.log2(p)
    return entropy


def same_entropy(count_a: int, count_b: int, total: int) -> bool:
    """
    Exact entropy equality of two outputs over the same assignment space.

    Binary entropy is symmetric around 1/2 and strictly monotone on each side,
    so H(a/total) = H(b/total) iff b is a or total - a.
    """
    return count_b == count_a or count_b == total - count_a


@dataclass(frozen=True)
class VariableMeasures:
    """Cofactor counts and entropies of one variable."""

    var: int
    count0: int
    count1: int
    h0: Bits
    h1: Bits
    hcond: Bits


@dataclass(frozen=True)
class EntropyProfile:
    """Per-variable measure table of a function.

    count0/count1 are ON-set sizes of f with x_i = 0 / 1 over the 2^(n-1)
    assignments of the other variables.
    """

    n: int
    ones: int
    entropy: Bits
    rows: Tuple[VariableMeasures, ...]

    @property
    def half_space(self) -> int:
        """Size of a single-variable cofactor's assignment space."""
        return 1 << (self.n - 1) if self.n else 1

    def row(self, i: int) -> VariableMeasures:
        return self.rows[i - 1]

    def all_cofactor_entropies_equal(self) -> bool:
        """Whether all 2n cofactor entropies H(f_{x_i}), H(f_{x̄_i}) coincide."""
        if not self.rows:
            return True
        reference = self.rows[0].count0
        return all(
            same_entropy(reference, count, self.half_space)
            for row in self.rows
            for count in (row.count0, row.count1)
        )


def prob_one(f: FuncHandle) -> Prob:
    """p(f = 1) under uniformly distributed inputs."""
    return Prob(f.manager.sat_count(f), 1 << f.n)


def entropy(f: FuncHandle) -> Bits:
    """Shannon entropy H(f) of the output, in bits."""
    return entropy_from_counts(f.manager.sat_count(f), 1 << f.n)


def cofactor_entropy(f: FuncHandle, i: int, b: int) -> Bits:
    """H(f_{x_i}) for b = 1, H(f_{x̄_i}) for b = 0."""
    return entropy(f.manager.restrict(f, i, b))


def cond_entropy(f: FuncHandle, i: int) -> Bits:
    """H(f | x_i) = p(x_i=0)·H(f_{x̄_i}) + p(x_i=1)·H(f_{x_i}) with both weights 1/2."""
    return (cofactor_entropy(f, i, 0) + cofactor_entropy(f, i, 1)) / 2


def cond_entropy_set(f: FuncHandle, variables: Iterable[int]) -> Bits:
    """
    H(f | S): average output entropy over all 2^|S| assignments of S.

    Args:
        f: Function
        variables: Conditioning set S (duplicates ignored)

    Returns:
        Conditional entropy in bits; equals entropy(f) for the empty set
    """
    chosen = sorted(set(variables))
    for i in chosen:
        f.manager.check_var(i)
    if len(chosen) > config.COND_SET_MAX_VARS:
        raise LimitError(
            f"conditioning set of {len(chosen)} variables exceeds {config.COND_SET_MAX_VARS}"
        )
    total = 0.0
    for values in itertools.product((0, 1), repeat=len(chosen)):
        total += entropy(f.manager.restrict_many(f, zip(chosen, values)))
    return total / (1 << len(chosen))


def profile(f: FuncHandle) -> EntropyProfile:
    """
    Per-variable cofactor counts and entropies of f.

    Returns:
        EntropyProfile with one row per variable x_1..x_n
    """
    manager = f.manager
    n = f.n
    ones = manager.sat_count(f)
    half = 1 << (n - 1) if n else 1
    rows: List[VariableMeasures] = []
    for i in range(1, n + 1):
        # restrict keeps the n-variable universe, doubling every count
        count0 = manager.sat_count(manager.restrict(f, i, 0)) >> 1
        count1 = manager.sat_count(manager.restrict(f, i, 1)) >> 1
        h0 = entropy_from_counts(count0, half)
        h1 = entropy_from_counts(count1, half)
        rows.append(VariableMeasures(i, count0, count1, h0, h1, (h0 + h1) / 2))
    return EntropyProfile(n, ones, entropy_from_counts(ones, 1 << n), tuple(rows))
