"""
Unit tests for variable matcher.

Tests name, alias and index resolution plus fuzzy suggestions.
"""

import pytest

from matchers.variable_matcher import VariableMatcher
from utils.errors import ParseError


class TestVariableMatcher:
    """Test cases for VariableMatcher."""

    @pytest.fixture
    def matcher(self):
        """Matcher over named inputs."""
        return VariableMatcher(["carry_in", "a0", "b0", "enable"], threshold=80)

    def test_exact_name(self, matcher):
        assert matcher.resolve("enable") == 4
        assert matcher.resolve(" a0 ") == 2

    def test_positional_alias(self, matcher):
        """x<k> works even when inputs have other names."""
        assert matcher.resolve("x1") == 1
        assert matcher.resolve("x3") == 3

    def test_plain_index(self, matcher):
        assert matcher.resolve("2") == 2

    def test_index_out_of_range(self, matcher):
        with pytest.raises(ParseError, match="outside x1..x4"):
            matcher.resolve("x5")
        with pytest.raises(ParseError):
            matcher.resolve("0")

    def test_declared_name_wins_over_alias(self):
        """An input literally called 'x2' in first position is variable 1."""
        matcher = VariableMatcher(["x2", "x1"])
        assert matcher.resolve("x2") == 1

    def test_suggestion_for_typo(self, matcher):
        with pytest.raises(ParseError, match="did you mean 'enable'"):
            matcher.resolve("enabel")

    def test_no_suggestion_below_threshold(self, matcher):
        with pytest.raises(ParseError) as excinfo:
            matcher.resolve("zzz")
        assert "did you mean" not in str(excinfo.value)

    def test_suggest(self, matcher):
        assert matcher.suggest("carry_inn") == "carry_in"
        assert matcher.suggest("q") is None
        assert VariableMatcher([]).suggest("a") is None

    def test_resolve_list(self, matcher):
        assert matcher.resolve_list("a0, b0,x4") == [2, 3, 4]

    def test_empty_list(self, matcher):
        with pytest.raises(ParseError, match="empty variable set"):
            matcher.resolve_list(" , ")
