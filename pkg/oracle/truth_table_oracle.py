"""
Brute-force truth-table reference for every measure and symmetry check.

Tables are reshaped into n-dimensional 0/1 arrays (axis k-1 is x_k), so a
cofactor is plain indexing and every measure is a count. Grouping and the
total-symmetry verdict are recomputed here by search over the pair list.
Nothing is shared with the decision-diagram path except the report types;
differential tests treat this module as the arbiter.
"""

import itertools
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

import config
from bdd.truth_table import TruthTable
from matchers.classification import PairClassification, SymmetryKind, TotalSymmetry
from matchers.groups import NEGATIVE, POSITIVE, GroupKind, SymmetryGroup
from matchers.symmetry import SymmetryReport
from measures.entropy import EntropyProfile, Prob, VariableMeasures
from utils.errors import LimitError, VariableRangeError


def _guard(t: TruthTable) -> None:
    if t.n > config.ORACLE_MAX_VARS:
        raise LimitError(f"oracle limited to {config.ORACLE_MAX_VARS} variables (n={t.n})")


def _cube(t: TruthTable) -> np.ndarray:
    return np.array(t.bits, dtype=np.uint8).reshape((2,) * t.n)


def _entropy_of(probabilities: Sequence[float]) -> float:
    """-Σ p·log2 p with 0·log 0 = 0."""
    p = np.ma.masked_equal(np.asarray(probabilities, dtype=float), 0)
    return abs(float(np.ma.sum(p * np.ma.log2(p)))) if p.count() else 0.0


def _check_vars(t: TruthTable, variables: Iterable[int]) -> List[int]:
    variables = list(variables)
    if len(set(variables)) != len(variables):
        raise VariableRangeError(f"duplicate variable in {variables}")
    for i in variables:
        if not 1 <= i <= t.n:
            raise VariableRangeError(f"variable x{i} outside x1..x{t.n}")
    return variables


def _slice(cube: np.ndarray, assignments: Sequence[Tuple[int, int]]) -> np.ndarray:
    index: List[object] = [slice(None)] * cube.ndim
    for i, b in assignments:
        index[i - 1] = 1 if b else 0
    return cube[tuple(index)]


def tt_cofactor(t: TruthTable, assignments: Sequence[Tuple[int, int]]) -> TruthTable:
    """
    Fix variables and return the table over the remaining ones.

    Args:
        t: Table over n variables
        assignments: (variable, bit) pairs with distinct variables

    Returns:
        Table over n - len(assignments) variables, MSB-first order preserved
    """
    _guard(t)
    _check_vars(t, [i for i, _ in assignments])
    sub = _slice(_cube(t), assignments)
    return TruthTable(t.n - len(assignments), tuple(int(x) for x in np.ravel(sub)))


def tt_entropy(t: TruthTable) -> float:
    """H(f) from the ON-set count."""
    _guard(t)
    ones = int(np.count_nonzero(_cube(t)))
    total = 1 << t.n
    return _entropy_of([ones / total, (total - ones) / total])


def tt_cond_entropy_set(t: TruthTable, variables: Iterable[int]) -> float:
    """
    H(f | S) = -Σ p(a, s)·log2 p(a | s) over outputs a and assignments s of S.

    Args:
        t: Table
        variables: Conditioning set S

    Returns:
        Conditional entropy in bits
    """
    _guard(t)
    chosen = sorted(set(_check_vars(t, set(variables))))
    cube = _cube(t)
    others = tuple(k for k in range(t.n) if k + 1 not in chosen)
    # ON counts per assignment of S (axes of S kept in ascending order)
    ones = np.sum(cube, axis=others, dtype=np.int64) if others else cube.astype(np.int64)
    block = 1 << len(others)
    total = 1 << t.n
    condition = Prob(block, total)
    entropy = 0.0
    for count in np.ravel(ones):
        for joint_count in (int(count), block - int(count)):
            if joint_count:
                joint = Prob(joint_count, total)
                entropy -= joint.value * np.log2(float(joint.given(condition)))
    return float(entropy)


def tt_cond_entropy(t: TruthTable, i: int) -> float:
    """H(f | x_i)."""
    return tt_cond_entropy_set(t, [i])


def tt_cond_entropy_by_cofactors(t: TruthTable, variables: Iterable[int]) -> float:
    """H(f | S) as the average entropy of the 2^|S| cofactors."""
    chosen = sorted(set(_check_vars(t, set(variables))))
    values = [
        tt_entropy(tt_cofactor(t, list(zip(chosen, bits))))
        for bits in itertools.product((0, 1), repeat=len(chosen))
    ]
    return float(np.mean(values)) if values else tt_entropy(t)


def _support(cube: np.ndarray) -> List[int]:
    return [i for i in range(1, cube.ndim + 1)
            if not np.array_equal(_slice(cube, [(i, 0)]), _slice(cube, [(i, 1)]))]


def tt_support(t: TruthTable) -> List[int]:
    """Variables whose two cofactors differ."""
    _guard(t)
    return _support(_cube(t))


def _profile(t: TruthTable, cube: np.ndarray) -> EntropyProfile:
    half = 1 << (t.n - 1) if t.n else 1
    rows = []
    for i in range(1, t.n + 1):
        count0 = int(np.count_nonzero(_slice(cube, [(i, 0)])))
        count1 = int(np.count_nonzero(_slice(cube, [(i, 1)])))
        h0 = _entropy_of([count0 / half, (half - count0) / half])
        h1 = _entropy_of([count1 / half, (half - count1) / half])
        rows.append(VariableMeasures(i, count0, count1, h0, h1, (h0 + h1) / 2))
    return EntropyProfile(t.n, t.ones(), tt_entropy(t), tuple(rows))


def tt_profile(t: TruthTable) -> EntropyProfile:
    """Per-variable cofactor counts and entropies."""
    _guard(t)
    return _profile(t, _cube(t))


def _classify(cube: np.ndarray, i: int, j: int) -> SymmetryKind:
    ne = np.array_equal(_slice(cube, [(i, 0), (j, 1)]), _slice(cube, [(i, 1), (j, 0)]))
    e = np.array_equal(_slice(cube, [(i, 1), (j, 1)]), _slice(cube, [(i, 0), (j, 0)]))
    return SymmetryKind.from_checks(ne, e)


def tt_classify_pair(t: TruthTable, i: int, j: int) -> SymmetryKind:
    """NE/E/M/NONE straight from the definitions."""
    _guard(t)
    _check_vars(t, [i, j])
    return _classify(_cube(t), i, j)


def _pair_kind(kinds: Dict[Tuple[int, int], SymmetryKind], a: int, b: int) -> SymmetryKind:
    return kinds.get((min(a, b), max(a, b)), SymmetryKind.NONE)


def _phase_fits(kinds, placed: Dict[int, str], v: int, phase: str) -> bool:
    for w, w_phase in placed.items():
        kind = _pair_kind(kinds, v, w)
        if kind is SymmetryKind.NONE:
            return False
        if kind is SymmetryKind.NE and phase != w_phase:
            return False
        if kind is SymmetryKind.E and phase == w_phase:
            return False
    return True


def _phase_assignment(kinds, members: Sequence[int]) -> Optional[Dict[int, str]]:
    """Backtracking search for phases satisfying every pair, lowest member positive."""
    members = sorted(members)
    placed: Dict[int, str] = {}

    def place(k: int) -> bool:
        if k == len(members):
            return True
        v = members[k]
        for phase in ((POSITIVE,) if k == 0 else (POSITIVE, NEGATIVE)):
            if _phase_fits(kinds, placed, v, phase):
                placed[v] = phase
                if place(k + 1):
                    return True
                del placed[v]
        return False

    return dict(placed) if place(0) else None


def _naive_group(kinds, phases: Dict[int, str]) -> SymmetryGroup:
    members = sorted(phases)
    if any(_pair_kind(kinds, a, b) is SymmetryKind.M for a, b in itertools.combinations(members, 2)):
        return SymmetryGroup(tuple((v, POSITIVE) for v in members), GroupKind.M)
    flip = phases[members[0]] == NEGATIVE
    signed = tuple((v, (NEGATIVE if phases[v] == POSITIVE else POSITIVE) if flip else phases[v])
                   for v in members)
    mixed = any(phase == NEGATIVE for _, phase in signed)
    return SymmetryGroup(signed, GroupKind.E_MIXED if mixed else GroupKind.NE)


def _components(n: int, kinds) -> List[List[int]]:
    """Connected components of the symmetric-pair graph, by breadth-first search."""
    seen: Set[int] = set()
    components = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        queue, component = [start], []
        seen.add(start)
        while queue:
            v = queue.pop(0)
            component.append(v)
            for w in range(1, n + 1):
                if w not in seen and _pair_kind(kinds, v, w) is not SymmetryKind.NONE:
                    seen.add(w)
                    queue.append(w)
        components.append(sorted(component))
    return components


def tt_group_summary(
    n: int,
    pairs: Sequence[PairClassification],
    include_vacuous: bool = False,
) -> Tuple[Tuple[SymmetryGroup, ...], Tuple[Tuple[int, int], ...]]:
    """
    Groups and (S, N) summary straight from the pair list.

    A component that is a clique with a consistent phase assignment (or any M
    pair) is one group; otherwise variables are placed greedily in ascending
    order into the first subgroup they fit.
    """
    kinds = {
        c.key: c.kind for c in pairs
        if c.kind is not SymmetryKind.NONE and (include_vacuous or not c.vacuous)
    }
    groups: List[SymmetryGroup] = []
    for members in _components(n, kinds):
        if len(members) < 2:
            continue
        clique = all(_pair_kind(kinds, a, b) is not SymmetryKind.NONE
                     for a, b in itertools.combinations(members, 2))
        has_m = any(_pair_kind(kinds, a, b) is SymmetryKind.M
                    for a, b in itertools.combinations(members, 2))
        if clique and has_m:
            groups.append(_naive_group(kinds, {v: POSITIVE for v in members}))
            continue
        phases = _phase_assignment(kinds, members) if clique else None
        if phases is not None:
            groups.append(_naive_group(kinds, phases))
            continue
        parts: List[Dict[int, str]] = []
        for v in members:
            target = next(
                ((part, phase) for part in parts for phase in (POSITIVE, NEGATIVE)
                 if _phase_fits(kinds, part, v, phase)),
                None,
            )
            if target is None:
                parts.append({v: POSITIVE})
            else:
                target[0][v] = target[1]
        groups.extend(_naive_group(kinds, part) for part in parts if len(part) >= 2)

    groups.sort(key=lambda g: g.variables)
    sizes = sorted({g.size for g in groups}, reverse=True)
    summary = tuple((size, sum(1 for g in groups if g.size == size)) for size in sizes)
    return tuple(groups), summary


def tt_total_symmetry(n: int, pairs: Sequence[PairClassification]) -> TotalSymmetry:
    """no, yes-NE or yes-mixed-polarity, by phase search over all n variables."""
    kinds = {c.key: c.kind for c in pairs}
    every_pair = list(itertools.combinations(range(1, n + 1), 2))
    if any(_pair_kind(kinds, a, b) is SymmetryKind.NONE for a, b in every_pair):
        return TotalSymmetry.NO
    if all(_pair_kind(kinds, a, b).has_ne for a, b in every_pair):
        return TotalSymmetry.YES_NE
    if _phase_assignment(kinds, range(1, n + 1)) is None:
        return TotalSymmetry.NO
    return TotalSymmetry.YES_MIXED


def tt_detect(t: TruthTable, include_vacuous: bool = False) -> SymmetryReport:
    """
    All-pairs analysis of an explicit table, same contract as matchers.symmetry.detect.
    """
    _guard(t)
    cube = _cube(t)
    measures = _profile(t, cube)
    support = set(_support(cube))
    half = measures.half_space

    def folded(count: int) -> int:
        return min(count, half - count)

    pairs = []
    for i in range(1, t.n + 1):
        for j in range(i + 1, t.n + 1):
            ri, rj = measures.row(i), measures.row(j)
            filter_ne = folded(ri.count0) == folded(rj.count0) and folded(ri.count1) == folded(rj.count1)
            filter_e = folded(ri.count1) == folded(rj.count0) and folded(ri.count0) == folded(rj.count1)
            pairs.append(PairClassification(
                i, j,
                _classify(cube, i, j),
                vacuous=i not in support and j not in support,
                filter_passed_ne=filter_ne,
                filter_passed_e=filter_e,
            ))

    groups, summary = tt_group_summary(t.n, pairs, include_vacuous or not support)
    return SymmetryReport(
        n=t.n,
        pairs=tuple(pairs),
        groups=groups,
        summary=summary,
        totally_symmetric=tt_total_symmetry(t.n, pairs),
        profile=measures,
    )
