"""Parsers turning truth-vector, PLA and BLIF files into circuits."""

from pathlib import Path
from typing import Optional, Union

from utils.errors import ParseError

from .blif_parser import BlifParser, parse_blif
from .circuit_spec import CircuitSpec
from .pla_parser import PlaParser, parse_pla
from .truth_vector_parser import TruthVectorParser, parse_truth_vector

FORMATS = ("auto", "tt", "pla", "blif")

__all__ = [
    "BlifParser",
    "CircuitSpec",
    "FORMATS",
    "PlaParser",
    "TruthVectorParser",
    "detect_format",
    "load_circuit",
    "parse_blif",
    "parse_pla",
    "parse_truth_vector",
]


def detect_format(path: Union[str, Path]) -> str:
    """Format implied by the file extension; anything unknown is a truth vector."""
    suffix = Path(path).suffix.lower()
    return {".pla": "pla", ".blif": "blif"}.get(suffix, "tt")


def load_circuit(path: Union[str, Path], fmt: str = "auto", max_vars: Optional[int] = None) -> CircuitSpec:
    """
    Read and parse a circuit file.

    Args:
        path: Input file
        fmt: One of FORMATS; 'auto' picks by extension
        max_vars: Variable bound passed to the manager

    Returns:
        Parsed CircuitSpec named after the file stem (or the BLIF .model)

    Raises:
        ParseError: Unreadable file or invalid contents
        LimitError: Too many inputs
    """
    path = Path(path)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "auto":
        fmt = detect_format(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e

    parser = {"tt": TruthVectorParser, "pla": PlaParser, "blif": BlifParser}[fmt](max_vars)
    return parser.parse(text, path.stem)
