"""
Combinational BLIF subset parser.

Supported: .model, .inputs, .outputs, .names (single-output SOP covers) and
.end. Intermediate signals are substituted into one flat BDD per primary
output, in topological order of the signals the outputs actually reach.
"""

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Dict, Iterator, List, Optional, Tuple

from bdd.manager import FuncHandle, Manager, new_manager
from parsers.circuit_spec import CircuitSpec
from utils.errors import CombinationalCycleError, ParseError, UnsupportedConstructError
from utils.logger import get_logger

logger = get_logger()

SEQUENTIAL_DIRECTIVES = {".latch", ".mlatch", ".clock", ".clock_event", ".area", ".delay"}
COVER_CHARS = set("01-")


@dataclass
class _Gate:
    """One .names block: fanin signals, driven signal and its cover."""

    inputs: List[str]
    output: str
    line: int
    rows: List[Tuple[str, str]] = field(default_factory=list)


def _logical_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line number, tokens) with comments dropped and '\\' continuations joined."""
    pending: List[str] = []
    start = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not pending:
            start = line_no
        if line.endswith("\\"):
            pending.append(line[:-1])
            continue
        pending.append(line)
        tokens = " ".join(pending).split()
        pending = []
        if tokens:
            yield start, tokens
    if pending:
        tokens = " ".join(pending).split()
        if tokens:
            yield start, tokens


class BlifParser:
    """Parser for flat combinational BLIF models."""

    def __init__(self, max_vars: Optional[int] = None):
        self.max_vars = max_vars

    def _read(self, text: str, name: str):
        model = name
        inputs: List[str] = []
        outputs: List[str] = []
        gates: Dict[str, _Gate] = {}
        current: Optional[_Gate] = None

        for line_no, tokens in _logical_lines(text):
            keyword = tokens[0]
            if not keyword.startswith("."):
                if current is None:
                    raise ParseError(f"cover row {' '.join(tokens)!r} outside .names", line_no)
                current.rows.append(self._row(current, tokens, line_no))
                continue

            current = None
            if keyword == ".model":
                if len(tokens) > 1:
                    model = tokens[1]
            elif keyword == ".inputs":
                inputs.extend(tokens[1:])
            elif keyword == ".outputs":
                outputs.extend(tokens[1:])
            elif keyword == ".names":
                if len(tokens) < 2:
                    raise ParseError(".names needs at least an output signal", line_no)
                signal = tokens[-1]
                if signal in gates:
                    raise ParseError(f"signal {signal} driven twice", line_no)
                current = _Gate(tokens[1:-1], signal, line_no)
                gates[signal] = current
            elif keyword == ".end":
                break
            elif keyword in SEQUENTIAL_DIRECTIVES:
                raise UnsupportedConstructError(f"sequential construct {keyword} unsupported", line_no)
            else:
                raise UnsupportedConstructError(f"unsupported construct {keyword}", line_no)

        return model, inputs, outputs, gates

    @staticmethod
    def _row(gate: _Gate, tokens: List[str], line_no: int) -> Tuple[str, str]:
        if not gate.inputs:
            if len(tokens) != 1 or tokens[0] not in ("0", "1"):
                raise ParseError(f"constant cover for {gate.output} must be '0' or '1'", line_no)
            return "", tokens[0]
        if len(tokens) != 2:
            raise ParseError(f"cover row for {gate.output} needs an input and an output field", line_no)
        pattern, value = tokens
        if len(pattern) != len(gate.inputs):
            raise ParseError(
                f"cover row width {len(pattern)} does not match {len(gate.inputs)} inputs of {gate.output}",
                line_no,
            )
        if set(pattern) - COVER_CHARS or value not in ("0", "1"):
            raise ParseError(f"illegal character in cover row {' '.join(tokens)!r}", line_no)
        return pattern, value

    @staticmethod
    def _order(outputs: List[str], inputs: List[str], gates: Dict[str, _Gate]) -> List[str]:
        """Gates reachable from the outputs, fanins first."""
        graph: Dict[str, List[str]] = {}
        stack = list(outputs)
        while stack:
            signal = stack.pop()
            if signal in graph or signal in inputs:
                continue
            gate = gates.get(signal)
            if gate is None:
                raise ParseError(f"undefined signal {signal}")
            graph[signal] = list(gate.inputs)
            stack.extend(gate.inputs)
        try:
            order = list(TopologicalSorter(graph).static_order())
        except CycleError as e:
            cycle = " -> ".join(e.args[1]) if len(e.args) > 1 else "?"
            raise CombinationalCycleError(f"combinational cycle: {cycle}") from e
        return [signal for signal in order if signal in gates]

    @staticmethod
    def _cover(manager: Manager, gate: _Gate, fanins: List[FuncHandle]) -> FuncHandle:
        values = {value for _, value in gate.rows}
        if len(values) > 1:
            raise ParseError(f"cover of {gate.output} mixes ON-set and OFF-set rows", gate.line)
        result = manager.false
        for pattern, _ in gate.rows:
            term = manager.true
            for literal, g in zip(pattern, fanins):
                if literal == "1":
                    term = term & g
                elif literal == "0":
                    term = term & ~g
            result = result | term
        # A cover of '0' rows lists the OFF-set
        return ~result if values == {"0"} else result

    def parse(self, text: str, name: str = "blif") -> CircuitSpec:
        """
        Parse a combinational BLIF model.

        Args:
            text: BLIF source
            name: Fallback circuit name when .model is absent

        Returns:
            CircuitSpec over the .inputs in declaration order

        Raises:
            UnsupportedConstructError: .latch or any other unsupported directive
            CombinationalCycleError: Signals that depend on themselves
            ParseError: Undefined signal, malformed cover, missing outputs
            LimitError: More inputs than max_vars
        """
        model, inputs, outputs, gates = self._read(text, name)
        if not outputs:
            raise ParseError("model declares no .outputs")
        if len(set(inputs)) != len(inputs):
            raise ParseError("duplicate names in .inputs")
        driven_inputs = sorted(set(inputs) & set(gates))
        if driven_inputs:
            raise ParseError(f"primary input {driven_inputs[0]} is driven by .names", gates[driven_inputs[0]].line)

        manager = new_manager(len(inputs), self.max_vars)
        signals: Dict[str, FuncHandle] = {
            signal: manager.var(i) for i, signal in enumerate(inputs, start=1)
        }
        for signal in self._order(outputs, inputs, gates):
            gate = gates[signal]
            signals[signal] = self._cover(manager, gate, [signals[s] for s in gate.inputs])

        functions = [signals[signal] for signal in outputs]
        logger.debug(f"Parsed BLIF {model}: {len(inputs)} inputs, {len(outputs)} outputs, {len(gates)} gates")
        return CircuitSpec(model, inputs, outputs, functions, manager, "blif")


def parse_blif(text: str, name: str = "blif", max_vars: Optional[int] = None) -> CircuitSpec:
    return BlifParser(max_vars).parse(text, name)
