"""
Aggregation of pairwise symmetries into symmetric groups.

Symmetric pairs are merged with a union-find that also tracks the relative
phase of each variable: an NE pair keeps both variables in the same phase,
an E pair puts them in opposite phases, and an M pair voids phase
constraints for its whole group.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from matchers.classification import (PairClassification, SymmetryKind,
                                     TotalSymmetry, var_name)

POSITIVE = "+"
NEGATIVE = "-"

Summary = Tuple[Tuple[int, int], ...]


class GroupKind(Enum):
    """Kind of a symmetric group."""

    NE = "NE-group"
    E_MIXED = "E-mixed-group"
    M = "M-group"


@dataclass(frozen=True)
class SymmetryGroup:
    """Set of mutually symmetric variables with their phases."""

    members: Tuple[Tuple[int, str], ...]
    kind: GroupKind

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(var for var, _ in self.members)

    def label(self, names: Optional[Sequence[str]] = None) -> str:
        parts = [("~" if phase == NEGATIVE else "") + var_name(var, names) for var, phase in self.members]
        return "{" + ",".join(parts) + "}"


class SignedDisjointSet:
    """Disjoint sets whose elements carry a parity relative to their root."""

    def __init__(self):
        self.parent: Dict[int, int] = {}
        self.parity: Dict[int, int] = {}
        self.rank: Dict[int, int] = {}

    def make_set(self, e: int) -> None:
        if e in self.parent:
            return
        self.parent[e] = e
        self.parity[e] = 0
        self.rank[e] = 0

    def find(self, e: int) -> Tuple[int, int]:
        """Root of e and e's parity relative to it, compressing the path."""
        self.make_set(e)
        path = []
        while self.parent[e] != e:
            path.append(e)
            e = self.parent[e]
        root = e
        # Walk back from the node nearest the root, accumulating parity
        accumulated = 0
        for node in reversed(path):
            accumulated ^= self.parity[node]
            self.parity[node] = accumulated
            self.parent[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, x: int, y: int, parity: int) -> bool:
        """
        Merge the sets of x and y with parity(x) xor parity(y) = parity.

        Returns:
            False if x and y were already related with the opposite parity
        """
        x_root, x_parity = self.find(x)
        y_root, y_parity = self.find(y)
        if x_root == y_root:
            return (x_parity ^ y_parity) == parity
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        self.parity[y_root] = x_parity ^ y_parity ^ parity
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1
        return True

    def sets(self) -> List[List[int]]:
        """Sorted members of every set, ordered by smallest member."""
        groups: Dict[int, List[int]] = {}
        for e in sorted(self.parent):
            groups.setdefault(self.find(e)[0], []).append(e)
        return sorted(groups.values())


def _lookup(classifications: Iterable[PairClassification]) -> Dict[Tuple[int, int], SymmetryKind]:
    return {c.key: c.kind for c in classifications}


def _kind(kinds: Dict[Tuple[int, int], SymmetryKind], a: int, b: int) -> SymmetryKind:
    return kinds.get((min(a, b), max(a, b)), SymmetryKind.NONE)


def _fits(kinds, group: Dict[int, str], v: int, phase: str) -> bool:
    """Whether v with the given phase agrees with every member of group."""
    for w, w_phase in group.items():
        kind = _kind(kinds, w, v)
        if kind is SymmetryKind.NONE:
            return False
        if kind is SymmetryKind.NE and w_phase != phase:
            return False
        if kind is SymmetryKind.E and w_phase == phase:
            return False
    return True


def _make_group(kinds, phases: Dict[int, str]) -> SymmetryGroup:
    members = sorted(phases)
    if any(_kind(kinds, a, b) is SymmetryKind.M for a in members for b in members if a < b):
        return SymmetryGroup(tuple((v, POSITIVE) for v in members), GroupKind.M)
    # Lowest member is the phase reference
    if phases[members[0]] == NEGATIVE:
        phases = {v: (POSITIVE if p == NEGATIVE else NEGATIVE) for v, p in phases.items()}
    kind = GroupKind.NE if all(phases[v] == POSITIVE for v in members) else GroupKind.E_MIXED
    return SymmetryGroup(tuple((v, phases[v]) for v in members), kind)


def _split(kinds, members: List[int]) -> List[Dict[int, str]]:
    """Greedy split into maximal consistent subgroups by ascending variable index."""
    subgroups: List[Dict[int, str]] = []
    for v in members:
        for group in subgroups:
            placed = False
            for phase in (POSITIVE, NEGATIVE):
                if _fits(kinds, group, v, phase):
                    group[v] = phase
                    placed = True
                    break
            if placed:
                break
        else:
            subgroups.append({v: POSITIVE})
    return subgroups


def group_summary(
    classifications: Iterable[PairClassification],
    include_vacuous: bool = False,
) -> Tuple[Tuple[SymmetryGroup, ...], Summary]:
    """
    Merge symmetric pairs into disjoint groups and count them by size.

    Args:
        classifications: All-pairs verdicts
        include_vacuous: Keep pairs of variables the function does not depend on

    Returns:
        (groups ordered by smallest member, (S, N) summary ordered by S descending)
    """
    classifications = list(classifications)
    edges = [
        c for c in classifications
        if c.kind is not SymmetryKind.NONE and (include_vacuous or not c.vacuous)
    ]
    kinds = _lookup(edges)

    dsu = SignedDisjointSet()
    conflicted: Set[int] = set()
    for c in edges:
        parity = 1 if c.kind is SymmetryKind.E else 0
        if not dsu.union(c.i, c.j, parity) and c.kind is not SymmetryKind.M:
            conflicted.add(c.i)

    groups: List[SymmetryGroup] = []
    for members in dsu.sets():
        if len(members) < 2:
            continue
        pairs = [(a, b) for idx, a in enumerate(members) for b in members[idx + 1:]]
        has_m = any(_kind(kinds, a, b) is SymmetryKind.M for a, b in pairs)
        if has_m:
            if all(_kind(kinds, a, b) is not SymmetryKind.NONE for a, b in pairs):
                groups.append(_make_group(kinds, {v: POSITIVE for v in members}))
                continue
        elif not conflicted.intersection(members):
            root_parity = dsu.find(members[0])[1]
            phases = {
                v: POSITIVE if dsu.find(v)[1] == root_parity else NEGATIVE
                for v in members
            }
            if all(_fits(kinds, {a: phases[a]}, b, phases[b]) for a, b in pairs):
                groups.append(_make_group(kinds, phases))
                continue
        for part in _split(kinds, members):
            if len(part) >= 2:
                groups.append(_make_group(kinds, part))

    groups.sort(key=lambda g: g.variables)
    sizes = Counter(g.size for g in groups)
    summary = tuple(sorted(sizes.items(), key=lambda item: -item[0]))
    return tuple(groups), summary


def total_symmetry_verdict(n: int, classifications: Iterable[PairClassification]) -> TotalSymmetry:
    """
    Decide total symmetry from exact all-pairs verdicts.

    yes-NE when every pair is NE (or M); yes-mixed-polarity when every pair is
    NE or E and one phase assignment satisfies them all; no otherwise.
    """
    kinds = _lookup(classifications)
    all_pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if any(kinds.get(p, SymmetryKind.NONE) is SymmetryKind.NONE for p in all_pairs):
        return TotalSymmetry.NO
    if all(kinds[p].has_ne for p in all_pairs):
        return TotalSymmetry.YES_NE
    dsu = SignedDisjointSet()
    for i, j in all_pairs:
        kind = kinds[(i, j)]
        if kind is SymmetryKind.M:
            continue
        if not dsu.union(i, j, 1 if kind is SymmetryKind.E else 0):
            return TotalSymmetry.NO
    return TotalSymmetry.YES_MIXED


def format_summary(summary: Summary) -> str:
    """Render an (S, N) summary as '(3,1) (2,2)'."""
    return " ".join(f"({size},{count})" for size, count in summary)
