"""
Batch symmetry analysis over a directory of circuit files.

Each file gets its own manager; with more than one worker the files are
spread over a process pool. Rows always come back sorted by file name.
"""

import json
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

import config
from matchers.groups import format_summary
from matchers.symmetry import detect_circuit
from operations.report_writer import CSV_HEADER, csv_text, format_decimal
from parsers import load_circuit
from utils.errors import SymdetectError
from utils.logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class BenchRow:
    """Outcome for one circuit file."""

    file: str
    circuit: str = ""
    inputs: int = 0
    outputs: int = 0
    summary: str = ""
    total_symmetry: str = ""
    time_seconds: float = 0.0
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def analyze_file(
    path: Union[str, Path],
    fmt: str = "auto",
    max_vars: Optional[int] = None,
    use_filter: bool = True,
    include_vacuous: bool = False,
) -> BenchRow:
    """
    Parse and analyze one file; library errors become a failed row.

    Timing covers detection only.
    """
    path = Path(path)
    try:
        circuit = load_circuit(path, fmt, max_vars)
        report = detect_circuit(circuit.functions, use_filter, include_vacuous)
    except SymdetectError as e:
        return BenchRow(file=path.name, error=str(e))
    return BenchRow(
        file=path.name,
        circuit=circuit.name,
        inputs=len(circuit.inputs),
        outputs=len(circuit.outputs),
        summary=format_summary(report.summary),
        total_symmetry=report.totally_symmetric.value,
        time_seconds=report.time_seconds,
    )


def collect_files(directory: Union[str, Path]) -> List[Path]:
    """Circuit files (by extension) directly inside directory, sorted by name."""
    directory = Path(directory)
    if not directory.is_dir():
        raise SymdetectError(f"not a directory: {directory}")
    return sorted(
        (p for p in directory.iterdir() if p.is_file() and p.suffix.lower() in config.CIRCUIT_EXTENSIONS),
        key=lambda p: p.name,
    )


def run_bench(
    directory: Union[str, Path],
    fmt: str = "auto",
    max_vars: Optional[int] = None,
    use_filter: bool = True,
    include_vacuous: bool = False,
    workers: int = config.BENCH_WORKERS,
) -> Tuple[List[BenchRow], List[BenchRow]]:
    """
    Analyze every circuit file of a directory.

    Args:
        directory: Directory to scan
        fmt: Input format override ('auto' by extension)
        max_vars: Variable bound per file
        use_filter: Entropy filter on/off
        include_vacuous: Keep vacuous pairs in groups
        workers: Process count; 1 runs in this process

    Returns:
        (successful rows, failed rows), each sorted by file name
    """
    files = collect_files(directory)
    logger.info(f"Bench: {len(files)} circuit file(s) in {directory}")
    options = dict(fmt=fmt, max_vars=max_vars, use_filter=use_filter, include_vacuous=include_vacuous)

    if workers <= 1 or len(files) <= 1:
        rows = [analyze_file(path, **options) for path in files]
    else:
        rows_by_file = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(analyze_file, path, **options): path for path in files}
            for future in as_completed(futures):
                row = future.result()
                rows_by_file[row.file] = row
        rows = [rows_by_file[path.name] for path in files]

    succeeded = [row for row in rows if row.ok]
    failed = [row for row in rows if not row.ok]
    for row in failed:
        logger.error(f"Skipping {row.file}: {row.error}")
    return succeeded, failed


def render_bench(rows: List[BenchRow], fmt: str = "csv") -> bytes:
    """Render bench rows as CSV (default) or JSON."""
    if fmt == "json":
        payload = [asdict(row) for row in rows]
        return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if fmt != "csv":
        raise ValueError(f"unknown report format {fmt!r}")
    table = [
        [row.circuit, row.inputs, row.outputs, row.summary, row.total_symmetry,
         format_decimal(row.time_seconds, config.TIME_DECIMALS)]
        for row in rows
    ]
    return csv_text(table, CSV_HEADER).encode("utf-8")
