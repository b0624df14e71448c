"""
Randomized BDD-versus-oracle comparison.

Drives both implementations over the same truth tables and reports every
disagreement in verdicts, groups, summaries or measures, plus any exact
symmetry the entropy filter would have discarded.
"""

import random
from typing import List, Optional

from bdd.manager import new_manager
from bdd.truth_table import TruthTable
from matchers.symmetry import classify_pair, detect
from measures.entropy import cond_entropy, cond_entropy_set, entropy
from oracle.truth_table_oracle import tt_classify_pair, tt_cond_entropy, tt_cond_entropy_set, tt_detect, tt_entropy
from utils.logger import get_logger

logger = get_logger()

TOLERANCE = 1e-9


def random_table(rng: random.Random, n: int) -> TruthTable:
    """Uniformly random function of n variables."""
    return TruthTable(n, tuple(rng.getrandbits(1) for _ in range(1 << n)))


def random_symmetric_table(rng: random.Random, n: int) -> TruthTable:
    """
    Random function symmetric in a random subset of variables under a random phase mask.

    The value depends only on the weight of the masked subset and on the
    remaining variables, so the subset forms an NE or mixed-polarity group.
    """
    if n < 2:
        return random_table(rng, n)
    group = set(rng.sample(range(n), rng.randint(2, n)))
    mask = rng.getrandbits(n)
    lookup = {}
    bits = []
    for m in range(1 << n):
        x = m ^ mask
        weight = sum((x >> (n - 1 - v)) & 1 for v in group)
        rest = tuple((m >> (n - 1 - v)) & 1 for v in range(n) if v not in group)
        key = (weight, rest)
        if key not in lookup:
            lookup[key] = rng.getrandbits(1)
        bits.append(lookup[key])
    return TruthTable(n, tuple(bits))


def compare(table: TruthTable) -> List[str]:
    """
    Analyze one table both ways.

    Returns:
        Human-readable mismatch descriptions (empty when everything agrees)
    """
    manager = new_manager(table.n)
    f = manager.from_truth_table(table)
    filtered = detect(f, use_filter=True)
    unfiltered = detect(f, use_filter=False)
    reference = tt_detect(table)
    mismatches = []

    for label, report in (("filtered", filtered), ("unfiltered", unfiltered)):
        if report.pairs != reference.pairs:
            mismatches.append(f"{table}: {label} pair verdicts differ from oracle")
        if report.groups != reference.groups or report.summary != reference.summary:
            mismatches.append(f"{table}: {label} groups differ from oracle")
        if report.totally_symmetric is not reference.totally_symmetric:
            mismatches.append(f"{table}: {label} total symmetry differs from oracle")

    support = manager.support(f)
    for c in reference.pairs:
        if (c.kind.has_ne and not c.filter_passed_ne) or (c.kind.has_e and not c.filter_passed_e):
            mismatches.append(f"{table}: filter rejects symmetric pair (x{c.i}, x{c.j})")
        if tt_classify_pair(table, c.i, c.j) is not c.kind:
            mismatches.append(f"{table}: oracle pair verdict (x{c.i}, x{c.j}) disagrees with tt_detect")
        if classify_pair(f, c.i, c.j, support) != c:
            mismatches.append(f"{table}: classify_pair(x{c.i}, x{c.j}) differs from oracle")

    if abs(entropy(f) - tt_entropy(table)) > TOLERANCE:
        mismatches.append(f"{table}: H(f) differs from oracle")
    for i in range(1, table.n + 1):
        if abs(cond_entropy(f, i) - tt_cond_entropy(table, i)) > TOLERANCE:
            mismatches.append(f"{table}: H(f|x{i}) differs from oracle")
    if table.n >= 2:
        prefix = range(1, min(table.n, 3) + 1)
        if abs(cond_entropy_set(f, prefix) - tt_cond_entropy_set(table, prefix)) > TOLERANCE:
            mismatches.append(f"{table}: H(f|x1..x{len(prefix)}) differs from oracle")
    return mismatches


def run_selftest(seed: int, samples: int, max_vars: int, min_vars: int = 1,
                 rng: Optional[random.Random] = None) -> List[str]:
    """
    Compare the two implementations on `samples` random functions.

    Every other sample is drawn with built-in symmetries so NE/E/M verdicts
    get exercised, not just NONE.

    Args:
        seed: Random seed (ignored when rng is given)
        samples: Number of functions
        max_vars: Largest variable count
        min_vars: Smallest variable count

    Returns:
        All mismatches found
    """
    rng = rng or random.Random(seed)
    mismatches: List[str] = []
    for k in range(samples):
        n = rng.randint(min_vars, max_vars)
        table = random_symmetric_table(rng, n) if k % 2 else random_table(rng, n)
        found = compare(table)
        if found:
            logger.debug(f"selftest sample {k}: {len(found)} mismatch(es)")
        mismatches.extend(found)
    return mismatches
