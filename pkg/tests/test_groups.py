"""
Unit tests for group aggregation and the signed union-find.
"""

from matchers.classification import PairClassification, SymmetryKind, TotalSymmetry
from matchers.groups import (GroupKind, SignedDisjointSet, format_summary, group_summary,
                             total_symmetry_verdict)

NE, E, M, NONE = SymmetryKind.NE, SymmetryKind.E, SymmetryKind.M, SymmetryKind.NONE


def pairs(n, kinds, vacuous=()):
    """All-pairs classification list with the given kinds (NONE elsewhere)."""
    result = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            result.append(PairClassification(i, j, kinds.get((i, j), NONE), vacuous=(i, j) in vacuous))
    return result


class TestSignedDisjointSet:
    """Test cases for the parity union-find."""

    def test_parity_accumulates(self):
        dsu = SignedDisjointSet()
        assert dsu.union(1, 2, 1)
        assert dsu.union(2, 3, 1)
        root1, p1 = dsu.find(1)
        root3, p3 = dsu.find(3)
        assert root1 == root3
        assert p1 ^ p3 == 0

    def test_conflict_detected(self):
        dsu = SignedDisjointSet()
        dsu.union(1, 2, 0)
        dsu.union(2, 3, 0)
        assert not dsu.union(1, 3, 1)
        assert dsu.union(1, 3, 0)

    def test_sets(self):
        dsu = SignedDisjointSet()
        dsu.union(4, 1, 0)
        dsu.union(2, 3, 1)
        dsu.make_set(5)
        assert dsu.sets() == [[1, 4], [2, 3], [5]]


class TestGroupSummary:
    """Test cases for group_summary."""

    def test_two_pairs(self):
        groups, summary = group_summary(pairs(4, {(2, 3): NE, (1, 4): M}))
        assert summary == ((2, 2),)
        assert [g.variables for g in groups] == [(1, 4), (2, 3)]
        assert [g.kind for g in groups] == [GroupKind.M, GroupKind.NE]

    def test_transitive_ne_group(self):
        groups, summary = group_summary(pairs(3, {(1, 2): NE, (1, 3): NE, (2, 3): NE}))
        assert summary == ((3, 1),)
        assert groups[0].label() == "{x1,x2,x3}"

    def test_mixed_polarity_group(self):
        """E(1,2), E(2,3), NE(1,3): x1 and x3 share a phase opposite to x2."""
        groups, _ = group_summary(pairs(3, {(1, 2): E, (2, 3): E, (1, 3): NE}))
        assert groups[0].kind is GroupKind.E_MIXED
        assert groups[0].members == ((1, "+"), (2, "-"), (3, "+"))
        assert groups[0].label() == "{x1,~x2,x3}"

    def test_phase_conflict_split(self):
        """NE(1,2), NE(2,3), E(1,3) cannot all hold; the greedy split keeps {x1,x2}."""
        groups, summary = group_summary(pairs(3, {(1, 2): NE, (2, 3): NE, (1, 3): E}))
        assert summary == ((2, 1),)
        assert groups[0].variables == (1, 2)

    def test_missing_internal_pair_split(self):
        """NE(1,2) and NE(2,3) without (1,3) is not one group."""
        groups, summary = group_summary(pairs(3, {(1, 2): NE, (2, 3): NE}))
        assert summary == ((2, 1),)
        assert groups[0].variables == (1, 2)

    def test_vacuous_excluded_unless_requested(self):
        classifications = pairs(4, {(1, 2): M, (3, 4): M}, vacuous={(3, 4)})
        assert group_summary(classifications)[1] == ((2, 1),)
        assert group_summary(classifications, include_vacuous=True)[1] == ((2, 2),)

    def test_summary_ordered_by_size(self):
        kinds = {(1, 2): NE, (1, 3): NE, (2, 3): NE, (4, 5): NE, (6, 7): NE}
        _, summary = group_summary(pairs(7, kinds))
        assert summary == ((3, 1), (2, 2))
        assert format_summary(summary) == "(3,1) (2,2)"

    def test_empty(self):
        groups, summary = group_summary(pairs(3, {}))
        assert groups == ()
        assert summary == ()
        assert format_summary(summary) == ""


class TestTotalSymmetry:
    """Test cases for the total symmetry verdict."""

    def test_all_ne(self):
        kinds = {(1, 2): NE, (1, 3): M, (2, 3): NE}
        assert total_symmetry_verdict(3, pairs(3, kinds)) is TotalSymmetry.YES_NE

    def test_mixed(self):
        kinds = {(1, 2): E, (1, 3): E, (2, 3): NE}
        assert total_symmetry_verdict(3, pairs(3, kinds)) is TotalSymmetry.YES_MIXED

    def test_inconsistent_phases(self):
        kinds = {(1, 2): E, (1, 3): E, (2, 3): E}
        assert total_symmetry_verdict(3, pairs(3, kinds)) is TotalSymmetry.NO

    def test_missing_pair(self):
        assert total_symmetry_verdict(3, pairs(3, {(1, 2): NE})) is TotalSymmetry.NO

    def test_trivial_sizes(self):
        """Functions of zero or one variable have no pairs to break symmetry."""
        assert total_symmetry_verdict(1, []) is TotalSymmetry.YES_NE
        assert total_symmetry_verdict(0, []) is TotalSymmetry.YES_NE
