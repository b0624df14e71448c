"""
Unit tests for the PLA parser.
"""

import itertools
import random
import time

import pytest

from matchers.symmetry import detect
from parsers.pla_parser import PlaParser, default_output_names, parse_pla
from utils.errors import LimitError, ParseError

from tests.conftest import EX8


def table_string(circuit, k=0):
    return str(circuit.manager.to_truth_table(circuit.functions[k]))


def cover_value(cubes, assignment):
    """Brute-force OR of cubes at one assignment (tuple of bits, x1 first)."""
    return int(any(
        all(c == "-" or int(c) == bit for c, bit in zip(cube, assignment))
        for cube in cubes
    ))


class TestPlaParser:
    """Test cases for PlaParser."""

    def test_and_gate(self):
        circuit = parse_pla(".i 2\n.o 1\n11 1\n.e\n")
        assert table_string(circuit) == "0001"
        assert circuit.inputs == ["x1", "x2"]
        assert circuit.outputs == ["f"]

    def test_example8_cover(self, fixtures_dir):
        """Cubes '1--' and '-00' give x1 + ~x2 ~x3."""
        circuit = parse_pla((fixtures_dir / "ex8.pla").read_text(), "ex8")
        assert table_string(circuit) == EX8
        assert circuit.warnings == []

    def test_names_from_ilb_and_ob(self):
        text = ".i 2\n.o 2\n.ilb a b\n.ob sum carry\n10 10\n01 10\n11 01\n.e\n"
        circuit = parse_pla(text)
        assert circuit.inputs == ["a", "b"]
        assert circuit.outputs == ["sum", "carry"]
        assert table_string(circuit, 0) == "0110"
        assert table_string(circuit, 1) == "0001"

    def test_default_output_names(self):
        assert default_output_names(1) == ["f"]
        assert default_output_names(3) == ["f1", "f2", "f3"]

    def test_space_separated_cube(self):
        """Input fields may be split by whitespace."""
        circuit = parse_pla(".i 3\n.o 1\n1 - - 1\n")
        assert table_string(circuit) == "00001111"

    def test_fd_type_accepted(self):
        assert table_string(parse_pla(".type fd\n.i 1\n.o 1\n0 1\n.e\n")) == "10"

    def test_fr_type_rejected(self):
        with pytest.raises(ParseError, match="unsupported PLA type"):
            parse_pla(".i 1\n.o 1\n.type fr\n1 1\n")

    def test_missing_i(self):
        with pytest.raises(ParseError, match="cube before"):
            parse_pla(".o 1\n1 1\n")
        with pytest.raises(ParseError, match="missing .i"):
            parse_pla(".o 1\n.e\n")

    def test_width_mismatch(self, fixtures_dir):
        with pytest.raises(ParseError) as excinfo:
            parse_pla((fixtures_dir / "broken.pla").read_text())
        assert excinfo.value.line == 4

    def test_illegal_character(self):
        with pytest.raises(ParseError, match="illegal input character"):
            parse_pla(".i 2\n.o 1\n1x 1\n")

    def test_unknown_directive(self):
        with pytest.raises(ParseError, match="unknown directive"):
            parse_pla(".i 2\n.o 1\n.phase 1\n11 1\n")

    def test_output_dont_care_warns(self):
        circuit = parse_pla(".i 2\n.o 1\n11 -\n01 1\n")
        assert table_string(circuit) == "0100"
        assert any("don't care" in message for message in circuit.warnings)

    def test_product_count_mismatch_warns(self):
        circuit = parse_pla(".i 2\n.o 1\n.p 3\n11 1\n")
        assert circuit.warnings == [".p declares 3 cubes, found 1"]

    def test_ilb_count_mismatch(self):
        with pytest.raises(ParseError, match=".ilb"):
            parse_pla(".i 2\n.o 1\n.ilb a\n11 1\n")

    def test_zero_outputs_rejected(self):
        with pytest.raises(ParseError):
            parse_pla(".i 2\n.o 0\n")

    def test_variable_limit(self):
        with pytest.raises(LimitError):
            PlaParser(max_vars=2).parse(".i 3\n.o 1\n111 1\n")

    def test_random_covers_match_brute_force(self):
        rng = random.Random(1234)
        for _ in range(40):
            n = rng.randint(1, 10)
            cubes = ["".join(rng.choice("01-") for _ in range(n)) for _ in range(rng.randint(1, 12))]
            text = f".i {n}\n.o 1\n" + "\n".join(f"{cube} 1" for cube in cubes) + "\n.e\n"
            expected = "".join(
                str(cover_value(cubes, assignment))
                for assignment in itertools.product((0, 1), repeat=n)
            )
            assert table_string(parse_pla(text)) == expected


class TestScale:
    """A sixteen-input cover analyzes end-to-end in under five seconds."""

    def test_sixteen_input_cover(self):
        rng = random.Random(99)
        n = 16
        cubes = ["".join(rng.choice("01--") for _ in range(n)) for _ in range(40)]
        text = f".i {n}\n.o 1\n" + "\n".join(f"{cube} 1" for cube in cubes) + "\n.e\n"
        start = time.perf_counter()
        circuit = parse_pla(text, "random16")
        f = circuit.functions[0]
        report = detect(f)
        assert time.perf_counter() - start < 5.0
        manager = circuit.manager
        for cube in cubes:
            literals = [(i, int(c)) for i, c in enumerate(cube, start=1) if c != "-"]
            assert manager.restrict_many(f, literals) == manager.true
        assert report.pairs == detect(f, use_filter=False).pairs
        manager.audit()
