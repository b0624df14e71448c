"""Report rendering and batch analysis."""

from .bench_runner import BenchRow, run_bench
from .report_writer import ReportDocument, build_document, emit_entropy, emit_report, emit_reports

__all__ = ["BenchRow", "ReportDocument", "build_document", "emit_entropy", "emit_report",
           "emit_reports", "run_bench"]
