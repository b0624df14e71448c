"""
Pytest configuration and fixtures.
"""

from pathlib import Path

import pytest

from bdd.manager import new_manager
from bdd.truth_table import TruthTable
from utils.logger import set_debug_mode, set_quiet_mode

FIXTURES_DIR = Path(__file__).parent / "fixtures"

# Reference functions, x1 is the most significant bit
EX4 = "1100000111000010"   # NE{x2,x3}, M{x1,x4}; H(f) = H(f|x1) = 0.95
EX5 = "11100011"           # E{x1,~x2}; {x2,~x3} passes the filter only
EX7 = "00010111"           # majority, totally symmetric
EX8 = "10001111"           # x1 + ~x2 ~x3


def build_function(bits: str):
    """Manager-backed handle for a truth-vector string."""
    table = TruthTable.from_string(bits)
    manager = new_manager(table.n)
    return manager.from_truth_table(table)


@pytest.fixture
def fixtures_dir():
    """Directory of bundled circuit files."""
    return FIXTURES_DIR


@pytest.fixture
def build():
    """Factory turning a truth-vector string into a function handle."""
    return build_function


@pytest.fixture(autouse=True)
def reset_log_levels():
    """CLI tests may switch debug/quiet mode; restore INFO afterwards."""
    yield
    set_debug_mode(False)
    set_quiet_mode(False)
