"""
Espresso PLA parser (f / fd types).

Each output is the OR of the cubes whose output column is '1'. Output
characters '0' and '~' add nothing; '-' (don't care) is treated as 0 and
reported as a warning on the parsed circuit.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from bdd.manager import new_manager
from parsers.circuit_spec import CircuitSpec
from utils.errors import ParseError
from utils.logger import get_logger

logger = get_logger()

INPUT_CHARS = set("01-")
OUTPUT_CHARS = set("01-~")
SUPPORTED_TYPES = {"f", "fd"}
# Directives that carry nothing the cover needs
BENIGN_DIRECTIVES = {".p"}


def default_output_names(count: int) -> List[str]:
    """'f' for a single output, f1..fm otherwise."""
    return ["f"] if count == 1 else [f"f{k}" for k in range(1, count + 1)]


@dataclass
class _PlaHeader:
    num_inputs: Optional[int] = None
    num_outputs: Optional[int] = None
    num_products: Optional[int] = None
    input_names: List[str] = field(default_factory=list)
    output_names: List[str] = field(default_factory=list)
    pla_type: str = "f"


class PlaParser:
    """Parser for two-level covers in Espresso PLA format."""

    def __init__(self, max_vars: Optional[int] = None):
        self.max_vars = max_vars

    @staticmethod
    def _count(tokens: List[str], line_no: int) -> int:
        if len(tokens) != 2 or not tokens[1].isdigit():
            raise ParseError(f"{tokens[0]} expects one non-negative integer", line_no)
        return int(tokens[1])

    def _directive(self, header: _PlaHeader, tokens: List[str], line_no: int) -> None:
        keyword = tokens[0]
        if keyword == ".i":
            header.num_inputs = self._count(tokens, line_no)
        elif keyword == ".o":
            header.num_outputs = self._count(tokens, line_no)
            if header.num_outputs == 0:
                raise ParseError(".o must declare at least one output", line_no)
        elif keyword == ".ilb":
            header.input_names = tokens[1:]
        elif keyword == ".ob":
            header.output_names = tokens[1:]
        elif keyword == ".type":
            if len(tokens) != 2 or tokens[1] not in SUPPORTED_TYPES:
                raise ParseError(f"unsupported PLA type {' '.join(tokens[1:])!r} (only f and fd)", line_no)
            header.pla_type = tokens[1]
        elif keyword in BENIGN_DIRECTIVES:
            header.num_products = self._count(tokens, line_no)
        else:
            raise ParseError(f"unknown directive {keyword}", line_no)

    def parse(self, text: str, name: str = "pla") -> CircuitSpec:
        """
        Parse PLA text into a multi-output circuit.

        Args:
            text: PLA source
            name: Circuit name for reports

        Returns:
            CircuitSpec with inputs in .ilb order (x1..xn when absent)

        Raises:
            ParseError: Missing .i/.o, width mismatch, bad character, unsupported type
            LimitError: More inputs than max_vars
        """
        header = _PlaHeader()
        warnings: List[str] = []
        cubes: List[Tuple[int, str, str]] = []

        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if tokens[0] in (".e", ".end"):
                break
            if tokens[0].startswith("."):
                self._directive(header, tokens, line_no)
                continue
            if header.num_inputs is None or header.num_outputs is None:
                raise ParseError("cube before .i and .o", line_no)
            row = "".join(tokens)
            if len(row) != header.num_inputs + header.num_outputs:
                raise ParseError(
                    f"cube width {len(row)} does not match .i {header.num_inputs} + .o {header.num_outputs}",
                    line_no,
                )
            in_part, out_part = row[:header.num_inputs], row[header.num_inputs:]
            if set(in_part) - INPUT_CHARS:
                raise ParseError(f"illegal input character in cube {in_part!r}", line_no)
            if set(out_part) - OUTPUT_CHARS:
                raise ParseError(f"illegal output character in cube {out_part!r}", line_no)
            cubes.append((line_no, in_part, out_part))

        if header.num_inputs is None:
            raise ParseError("missing .i directive")
        if header.num_outputs is None:
            raise ParseError("missing .o directive")

        inputs = header.input_names or [f"x{i}" for i in range(1, header.num_inputs + 1)]
        outputs = header.output_names or default_output_names(header.num_outputs)
        if len(inputs) != header.num_inputs:
            raise ParseError(f".ilb names {len(inputs)} inputs, .i declares {header.num_inputs}")
        if len(outputs) != header.num_outputs:
            raise ParseError(f".ob names {len(outputs)} outputs, .o declares {header.num_outputs}")
        if len(set(inputs)) != len(inputs):
            raise ParseError("duplicate names in .ilb")
        if header.num_products is not None and header.num_products != len(cubes):
            warnings.append(f".p declares {header.num_products} cubes, found {len(cubes)}")

        manager = new_manager(header.num_inputs, self.max_vars)
        functions = [manager.false for _ in outputs]
        for line_no, in_part, out_part in cubes:
            term = manager.cube((i, int(c)) for i, c in enumerate(in_part, start=1) if c != "-")
            for k, c in enumerate(out_part):
                if c == "1":
                    functions[k] = functions[k] | term
                elif c == "-":
                    warnings.append(f"line {line_no}: don't care for output {outputs[k]} treated as 0")

        for message in warnings:
            logger.warning(f"{name}: {message}")
        logger.debug(f"Parsed PLA {name}: {len(inputs)} inputs, {len(outputs)} outputs, {len(cubes)} cubes")
        return CircuitSpec(name, inputs, outputs, functions, manager, "pla", warnings)


def parse_pla(text: str, name: str = "pla", max_vars: Optional[int] = None) -> CircuitSpec:
    return PlaParser(max_vars).parse(text, name)
