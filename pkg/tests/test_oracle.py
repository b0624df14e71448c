"""
Unit tests for the truth-table reference implementation.
"""

import random
import warnings
from unittest.mock import patch

import pytest

import config
from bdd.truth_table import TruthTable
from matchers.classification import PairClassification, SymmetryKind, TotalSymmetry
from matchers.groups import GroupKind, group_summary, total_symmetry_verdict
from oracle.truth_table_oracle import (tt_classify_pair, tt_cofactor, tt_cond_entropy,
                                       tt_cond_entropy_by_cofactors, tt_cond_entropy_set, tt_detect,
                                       tt_entropy, tt_group_summary, tt_profile, tt_support,
                                       tt_total_symmetry)
from utils.errors import LimitError, VariableRangeError

from tests.conftest import EX4, EX5, EX7, EX8


def table(bits: str) -> TruthTable:
    return TruthTable.from_string(bits)


class TestCofactor:
    """Test cases for tt_cofactor."""

    def test_example5_cofactors(self):
        assert str(tt_cofactor(table(EX5), [(1, 0)])) == "1110"
        assert str(tt_cofactor(table(EX5), [(1, 1)])) == "0011"

    def test_two_variable_cofactor(self):
        """f with x2=0, x3=1 keeps x1, x4 in order: bits at m = 2, 3, 10, 11."""
        assert str(tt_cofactor(table(EX4), [(2, 0), (3, 1)])) == "0000"
        assert str(tt_cofactor(table(EX4), [(1, 1), (4, 1)])) == "1000"

    def test_duplicate_variable_rejected(self):
        with pytest.raises(VariableRangeError):
            tt_cofactor(table(EX4), [(2, 0), (2, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(VariableRangeError):
            tt_cofactor(table(EX5), [(4, 0)])

    def test_full_assignment(self):
        assert tt_cofactor(table(EX8), [(1, 0), (2, 0), (3, 0)]).bits == (1,)


class TestMeasures:
    """Test cases for oracle entropies."""

    def test_entropy(self):
        assert round(tt_entropy(table(EX4)), 2) == 0.95
        assert tt_entropy(table("0000")) == 0.0
        assert tt_entropy(table("0101")) == 1.0

    def test_zero_probabilities_are_silent(self):
        """Constant outputs and constant cofactors raise no numpy warnings."""
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert tt_entropy(table("1111")) == 0.0
            assert tt_entropy(table("0000")) == 0.0
            rows = tt_profile(table("00001111")).rows
            assert (rows[0].h0, rows[0].h1) == (0.0, 0.0)

    def test_cond_entropy_example8(self):
        t = table(EX8)
        assert tt_cond_entropy(t, 1) == pytest.approx(0.41, abs=0.005)
        assert tt_cond_entropy(t, 2) == pytest.approx(0.91, abs=0.005)
        assert tt_cond_entropy_set(t, [1, 2]) == pytest.approx(0.25, abs=1e-12)
        assert tt_cond_entropy_set(t, [1, 2, 3]) == 0.0

    def test_definition_matches_cofactor_average(self):
        for bits in (EX4, EX5, EX7, EX8):
            t = table(bits)
            for variables in ([1], [2, 3], [1, 2, 3]):
                assert tt_cond_entropy_set(t, variables) == pytest.approx(
                    tt_cond_entropy_by_cofactors(t, variables), abs=1e-12)

    def test_empty_condition_is_entropy(self):
        t = table(EX4)
        assert tt_cond_entropy_set(t, []) == pytest.approx(tt_entropy(t))

    def test_profile_counts(self):
        rows = tt_profile(table(EX4)).rows
        assert [(r.count0, r.count1) for r in rows] == [(3, 3), (4, 2), (4, 2), (3, 3)]

    def test_support(self):
        # f = x3 over four variables
        t = TruthTable(4, tuple((m >> 1) & 1 for m in range(16)))
        assert tt_support(t) == [3]
        assert tt_support(table(EX7)) == [1, 2, 3]


class TestClassification:
    """Test cases for oracle symmetry verdicts."""

    def test_classify_pair(self):
        t = table(EX4)
        assert tt_classify_pair(t, 1, 4) is SymmetryKind.M
        assert tt_classify_pair(t, 2, 3) is SymmetryKind.NE
        assert tt_classify_pair(t, 1, 2) is SymmetryKind.NONE
        assert tt_classify_pair(table(EX5), 1, 2) is SymmetryKind.E

    def test_same_variable_rejected(self):
        with pytest.raises(VariableRangeError):
            tt_classify_pair(table(EX4), 2, 2)

    def test_detect(self):
        report = tt_detect(table(EX4))
        assert report.summary == ((2, 2),)
        assert tt_detect(table(EX7)).totally_symmetric is TotalSymmetry.YES_NE
        assert tt_detect(table("11111111")).summary == ((3, 1),)

    def test_size_guard(self):
        with patch.object(config, "ORACLE_MAX_VARS", 2):
            with pytest.raises(LimitError):
                tt_entropy(table(EX5))


def pair_list(n, kinds):
    return [PairClassification(i, j, kinds.get((i, j), SymmetryKind.NONE))
            for i in range(1, n + 1) for j in range(i + 1, n + 1)]


class TestGroupingReference:
    """Test cases for the search-based grouping used by tt_detect."""

    def test_mixed_polarity_group(self):
        kinds = {(1, 2): SymmetryKind.E, (2, 3): SymmetryKind.E, (1, 3): SymmetryKind.NE}
        groups, summary = tt_group_summary(3, pair_list(3, kinds))
        assert summary == ((3, 1),)
        assert groups[0].kind is GroupKind.E_MIXED
        assert groups[0].members == ((1, "+"), (2, "-"), (3, "+"))

    def test_phase_conflict_split(self):
        """NE(1,2), NE(2,3), E(1,3): greedy placement keeps {x1,x2}."""
        kinds = {(1, 2): SymmetryKind.NE, (2, 3): SymmetryKind.NE, (1, 3): SymmetryKind.E}
        groups, summary = tt_group_summary(3, pair_list(3, kinds))
        assert summary == ((2, 1),)
        assert groups[0].variables == (1, 2)

    def test_m_group(self):
        kinds = {(1, 2): SymmetryKind.M, (1, 3): SymmetryKind.E, (2, 3): SymmetryKind.E}
        groups, _ = tt_group_summary(3, pair_list(3, kinds))
        assert groups[0].kind is GroupKind.M

    def test_total_symmetry(self):
        mixed = {(1, 2): SymmetryKind.E, (1, 3): SymmetryKind.E, (2, 3): SymmetryKind.NE}
        odd = {(1, 2): SymmetryKind.E, (1, 3): SymmetryKind.E, (2, 3): SymmetryKind.E}
        assert tt_total_symmetry(3, pair_list(3, mixed)) is TotalSymmetry.YES_MIXED
        assert tt_total_symmetry(3, pair_list(3, odd)) is TotalSymmetry.NO
        assert tt_total_symmetry(1, []) is TotalSymmetry.YES_NE

    def test_agrees_with_union_find_on_random_pair_lists(self):
        """Arbitrary verdict patterns, including ones no function produces."""
        rng = random.Random(4242)
        choices = [SymmetryKind.NONE, SymmetryKind.NE, SymmetryKind.E, SymmetryKind.M]
        for _ in range(500):
            n = rng.randint(2, 6)
            weights = [rng.randint(0, 4) for _ in choices]
            weights[0] += 1
            kinds = {(i, j): rng.choices(choices, weights)[0]
                     for i in range(1, n + 1) for j in range(i + 1, n + 1)}
            classifications = pair_list(n, kinds)
            assert tt_group_summary(n, classifications) == group_summary(classifications), kinds
            assert tt_total_symmetry(n, classifications) is total_symmetry_verdict(n, classifications)
