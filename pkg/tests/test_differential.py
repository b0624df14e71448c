"""
Differential tests: decision-diagram detection against the truth-table oracle.
"""

import itertools
import random

import pytest

from bdd.manager import new_manager
from bdd.truth_table import TruthTable
from matchers.classification import SymmetryKind
from matchers.symmetry import classify_pair, detect
from oracle.differential import compare, random_symmetric_table, random_table, run_selftest
from oracle.truth_table_oracle import tt_classify_pair

SEED = 20240611


class TestExhaustive:
    """Every function of up to three variables."""

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_all_functions_agree(self, n):
        for bits in itertools.product((0, 1), repeat=1 << n):
            table = TruthTable(n, bits)
            assert compare(table) == [], str(table)

    def test_classify_pair_matches_oracle(self):
        """classify_pair on its own, for every pair of every 3-variable function."""
        for bits in itertools.product((0, 1), repeat=8):
            table = TruthTable(3, bits)
            f = new_manager(3).from_truth_table(table)
            for i, j in itertools.combinations(range(1, 4), 2):
                assert classify_pair(f, i, j).kind is tt_classify_pair(table, i, j), (str(table), i, j)
                assert classify_pair(f, j, i) == classify_pair(f, i, j)


class TestRandomized:
    """Seeded random functions of four to eight variables."""

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_random_functions_agree(self, n):
        rng = random.Random(SEED + n)
        mismatches = []
        for k in range(2000):
            table = random_symmetric_table(rng, n) if k % 2 else random_table(rng, n)
            mismatches.extend(compare(table))
        assert mismatches == []

    def test_run_selftest_clean(self):
        assert run_selftest(seed=7, samples=100, max_vars=6) == []

    def test_run_selftest_reproducible(self):
        """Same seed, same functions."""
        first = [random_table(random.Random(3), 5) for _ in range(3)]
        second = [random_table(random.Random(3), 5) for _ in range(3)]
        assert first == second


class TestGenerators:
    """Test cases for the random function generators."""

    def test_symmetric_generator_has_symmetry(self):
        """Every generated function has at least one NE or E pair."""
        rng = random.Random(SEED)
        for _ in range(50):
            n = rng.randint(2, 6)
            table = random_symmetric_table(rng, n)
            kinds = [tt_classify_pair(table, i, j)
                     for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            assert any(kind is not SymmetryKind.NONE for kind in kinds)

    def test_random_table_shape(self):
        table = random_table(random.Random(SEED), 6)
        assert table.n == 6
        assert len(table.bits) == 64


class TestFilterInvariance:
    """The entropy filter only skips work, it never changes an answer."""

    def test_filter_never_changes_report(self):
        rng = random.Random(SEED)
        for _ in range(300):
            n = rng.randint(2, 7)
            table = random_symmetric_table(rng, n)
            f = new_manager(n).from_truth_table(table)
            filtered, unfiltered = detect(f), detect(f, use_filter=False)
            assert filtered.pairs == unfiltered.pairs
            assert filtered.groups == unfiltered.groups
            assert filtered.summary == unfiltered.summary
            assert filtered.totally_symmetric is unfiltered.totally_symmetric
            assert filtered.exact_checks <= unfiltered.exact_checks
