"""Exception hierarchy shared by the library and the CLI."""


class SymdetectError(Exception):
    """Base class for all errors raised by symdetect."""


class ParseError(SymdetectError):
    """Input text is not a valid truth vector, PLA or BLIF description."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedConstructError(ParseError):
    """Sequential or otherwise unsupported netlist construct."""


class CombinationalCycleError(ParseError):
    """Signals in a netlist depend on each other cyclically."""


class LimitError(SymdetectError):
    """A configured resource bound would be exceeded."""


class ManagerMismatchError(SymdetectError, ValueError):
    """Operands belong to different BDD managers."""


class VariableRangeError(SymdetectError, ValueError):
    """Variable index outside 1..n, or an invalid pair."""


class InvariantError(SymdetectError):
    """An internal structural invariant does not hold."""
