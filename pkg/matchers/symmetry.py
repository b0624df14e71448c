"""
Symmetry detection and recognition on decision diagrams.

Candidate pairs are screened by comparing cofactor entropies (a necessary
condition for symmetry) and then recognized exactly by comparing two-variable
cofactors:

    NE in {x_i, x_j}:  f_{x̄_i x_j} = f_{x_i x̄_j}
    E  in {x_i, x_j}:  f_{x_i x_j} = f_{x̄_i x̄_j}
    M:                 both
"""

import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from bdd.manager import FuncHandle
from matchers.classification import PairClassification, SymmetryKind, TotalSymmetry
from matchers.groups import Summary, SymmetryGroup, group_summary, total_symmetry_verdict
from measures.entropy import EntropyProfile, profile, same_entropy
from utils.errors import InvariantError, ManagerMismatchError, VariableRangeError
from utils.logger import get_logger

logger = get_logger()


class FilterVerdict(NamedTuple):
    """Entropy filter outcome for one pair."""

    ne: bool
    e: bool


@dataclass(frozen=True)
class SymmetryReport:
    """All-pairs symmetry analysis of a function or a multi-output circuit."""

    n: int
    pairs: Tuple[PairClassification, ...]
    groups: Tuple[SymmetryGroup, ...]
    summary: Summary
    totally_symmetric: TotalSymmetry
    profile: Optional[EntropyProfile] = None
    outputs: Tuple["SymmetryReport", ...] = ()
    time_seconds: float = field(default=0.0, compare=False)
    exact_checks: int = field(default=0, compare=False)

    def pair(self, i: int, j: int) -> PairClassification:
        i, j = min(i, j), max(i, j)
        return self.pairs[_pair_index(self.n, i, j)]

    def symmetric_pairs(self, include_vacuous: bool = False) -> List[PairClassification]:
        return [
            c for c in self.pairs
            if c.kind is not SymmetryKind.NONE and (include_vacuous or not c.vacuous)
        ]


def _pair_index(n: int, i: int, j: int) -> int:
    # Position of (i, j) in the lexicographic list of pairs of 1..n
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


def _all_pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _check_pair(f: FuncHandle, i: int, j: int) -> None:
    f.manager.check_var(i)
    f.manager.check_var(j)
    if i == j:
        raise VariableRangeError(f"symmetry needs two distinct variables (got x{i} twice)")


def _two_cofactor(f: FuncHandle, i: int, bi: int, j: int, bj: int) -> FuncHandle:
    manager = f.manager
    return manager.restrict(manager.restrict(f, i, bi), j, bj)


def check_ne(f: FuncHandle, i: int, j: int) -> bool:
    """True iff f is NE-symmetric in {x_i, x_j}."""
    _check_pair(f, i, j)
    return f.manager.equal(_two_cofactor(f, i, 0, j, 1), _two_cofactor(f, i, 1, j, 0))


def check_e(f: FuncHandle, i: int, j: int) -> bool:
    """True iff f is E-symmetric in {x_i, x_j}."""
    _check_pair(f, i, j)
    return f.manager.equal(_two_cofactor(f, i, 1, j, 1), _two_cofactor(f, i, 0, j, 0))


def _filter_pair(count0_i: int, count1_i: int, count0_j: int, count1_j: int, half: int) -> FilterVerdict:
    ne = same_entropy(count0_i, count0_j, half) and same_entropy(count1_i, count1_j, half)
    e = same_entropy(count1_i, count0_j, half) and same_entropy(count0_i, count1_j, half)
    return FilterVerdict(ne, e)


def entropy_filter(f: FuncHandle, measures: EntropyProfile) -> Dict[Tuple[int, int], FilterVerdict]:
    """
    Screen all pairs by equality of cofactor entropies.

    NE candidates need H(f_{x̄_i}) = H(f_{x̄_j}) and H(f_{x_i}) = H(f_{x_j});
    E candidates need H(f_{x_i}) = H(f_{x̄_j}) and H(f_{x̄_i}) = H(f_{x_j}).
    Either implies H(f|x_i) = H(f|x_j). Equality is decided on exact counts,
    so a truly symmetric pair is never rejected.

    Args:
        f: Function the profile was computed for
        measures: profile(f)

    Returns:
        Mapping (i, j) -> FilterVerdict for every pair i < j
    """
    if measures.n != f.n:
        raise ValueError(f"profile covers {measures.n} variables, function has {f.n}")
    half = measures.half_space
    verdicts = {}
    for i, j in _all_pairs(f.n):
        ri, rj = measures.row(i), measures.row(j)
        verdicts[(i, j)] = _filter_pair(ri.count0, ri.count1, rj.count0, rj.count1, half)
    return verdicts


def classify_pair(f: FuncHandle, i: int, j: int, support: Optional[Set[int]] = None) -> PairClassification:
    """
    Exact NE/E/M classification of one pair, with filter flags and the vacuous mark.

    Args:
        f: Function
        i: First variable
        j: Second variable
        support: support(f), when the caller already has it

    Returns:
        PairClassification for (min(i, j), max(i, j))
    """
    _check_pair(f, i, j)
    i, j = min(i, j), max(i, j)
    manager = f.manager
    if support is None:
        support = manager.support(f)
    half = 1 << (f.n - 1)
    counts = [manager.sat_count(manager.restrict(f, v, b)) >> 1 for v in (i, j) for b in (0, 1)]
    verdict = _filter_pair(*counts, half)
    kind = SymmetryKind.from_checks(check_ne(f, i, j), check_e(f, i, j))
    vacuous = i not in support and j not in support
    return PairClassification(i, j, kind, vacuous, verdict.ne, verdict.e)


def is_totally_symmetric(f: FuncHandle, classifications: Iterable[PairClassification]) -> TotalSymmetry:
    """Total symmetry verdict of f from its all-pairs classifications."""
    return total_symmetry_verdict(f.n, classifications)


def detect(f: FuncHandle, use_filter: bool = True, include_vacuous: bool = False) -> SymmetryReport:
    """
    Detect and recognize all pairwise symmetries of f.

    With the filter on, exact checks are run only for pairs whose entropy
    measures allow the symmetry; the verdicts are the same either way.

    Args:
        f: Function
        use_filter: Skip exact checks the entropy filter proves unnecessary
        include_vacuous: Keep pairs of inessential variables in groups and summary

    Returns:
        SymmetryReport with pairs, groups, (S, N) summary and total-symmetry verdict
    """
    start = time.perf_counter()
    manager = f.manager
    measures = profile(f)
    support = manager.support(f)
    candidates = entropy_filter(f, measures)

    pairs: List[PairClassification] = []
    exact_checks = 0
    for i, j in _all_pairs(f.n):
        candidate = candidates[(i, j)]
        ne = e = False
        if candidate.ne or not use_filter:
            ne = check_ne(f, i, j)
            exact_checks += 1
        if candidate.e or not use_filter:
            e = check_e(f, i, j)
            exact_checks += 1
        if (ne and not candidate.ne) or (e and not candidate.e):
            raise InvariantError(f"entropy filter rejected a symmetric pair (x{i}, x{j})")
        vacuous = i not in support and j not in support
        pairs.append(PairClassification(i, j, SymmetryKind.from_checks(ne, e), vacuous, candidate.ne, candidate.e))

    groups, summary = group_summary(pairs, include_vacuous or not support)
    total = total_symmetry_verdict(f.n, pairs)
    if measures.all_cofactor_entropies_equal():
        logger.debug("all 2n cofactor entropies are equal")

    elapsed = time.perf_counter() - start
    logger.debug(
        f"detect: n={f.n}, {exact_checks} exact checks of {2 * len(pairs)} possible, "
        f"{len(groups)} group(s), {elapsed:.4f}s"
    )
    return SymmetryReport(
        n=f.n,
        pairs=tuple(pairs),
        groups=groups,
        summary=summary,
        totally_symmetric=total,
        profile=measures,
        time_seconds=elapsed,
        exact_checks=exact_checks,
    )


def detect_circuit(
    functions: Sequence[FuncHandle],
    use_filter: bool = True,
    include_vacuous: bool = False,
) -> SymmetryReport:
    """
    Symmetries shared by every output of a multi-output circuit.

    A pair is circuit-NE (circuit-E) iff every output is NE- (E-) symmetric in
    it; outputs that depend on neither variable pass vacuously.

    Args:
        functions: Output functions over one manager
        use_filter: As in detect
        include_vacuous: As in detect

    Returns:
        Circuit-level SymmetryReport; per-output reports in `outputs`
    """
    if not functions:
        raise ValueError("a circuit needs at least one output")
    manager = functions[0].manager
    if any(f.manager is not manager for f in functions):
        raise ManagerMismatchError("circuit outputs must share one manager and variable universe")

    start = time.perf_counter()
    outputs = tuple(detect(f, use_filter, include_vacuous) for f in functions)
    n = manager.n

    pairs: List[PairClassification] = []
    for i, j in _all_pairs(n):
        per_output = [report.pair(i, j) for report in outputs]
        ne = all(c.kind.has_ne for c in per_output)
        e = all(c.kind.has_e for c in per_output)
        pairs.append(PairClassification(
            i, j,
            SymmetryKind.from_checks(ne, e),
            vacuous=all(c.vacuous for c in per_output),
            filter_passed_ne=all(c.filter_passed_ne for c in per_output),
            filter_passed_e=all(c.filter_passed_e for c in per_output),
        ))

    constant_circuit = all(f.is_constant for f in functions)
    groups, summary = group_summary(pairs, include_vacuous or constant_circuit)
    elapsed = time.perf_counter() - start
    return SymmetryReport(
        n=n,
        pairs=tuple(pairs),
        groups=groups,
        summary=summary,
        totally_symmetric=total_symmetry_verdict(n, pairs),
        outputs=outputs,
        time_seconds=elapsed,
        exact_checks=sum(report.exact_checks for report in outputs),
    )
