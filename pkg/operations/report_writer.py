"""
Report rendering for symmetry analyses and entropy tables.

Every renderer is a pure function of its document: JSON keys are sorted,
pairs and groups keep their canonical order, and text/CSV numbers use fixed
decimals, so the same document always yields the same bytes.
"""

import csv
import io
import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import config
from matchers.classification import var_name
from matchers.groups import SymmetryGroup, format_summary
from matchers.symmetry import SymmetryReport
from measures.entropy import EntropyProfile

REPORT_FORMATS = ("text", "json", "csv")
CSV_HEADER = ["circuit", "inputs", "outputs", "summary", "total_symmetry", "time_seconds"]


@dataclass(frozen=True)
class OutputSection:
    """Analysis of one output."""

    name: str
    report: SymmetryReport


@dataclass(frozen=True)
class ReportDocument:
    """Everything a symmetry report shows, ready for rendering."""

    version: str
    circuit: str
    inputs: Tuple[str, ...]
    outputs: Tuple[OutputSection, ...]
    circuit_report: SymmetryReport
    include_vacuous: bool = False
    per_output: bool = False

    @property
    def time_seconds(self) -> float:
        return self.circuit_report.time_seconds


@dataclass(frozen=True)
class EntropyTable:
    """Entropy measures of one output, optionally with H(f | S)."""

    circuit: str
    output: str
    inputs: Tuple[str, ...]
    profile: EntropyProfile
    condition: Tuple[int, ...] = ()
    conditional_entropy: Optional[float] = None


def build_document(
    circuit: str,
    inputs: Sequence[str],
    output_names: Sequence[str],
    report: SymmetryReport,
    include_vacuous: bool = False,
    per_output: bool = False,
) -> ReportDocument:
    """
    Assemble a document from a circuit-level report.

    Args:
        circuit: Circuit name
        inputs: Declared input names, x1..xn order
        output_names: Output names matching report.outputs
        report: Result of detect_circuit (or detect for a lone function)
        include_vacuous: List vacuous pairs as well
        per_output: Show per-output sections in text mode

    Returns:
        ReportDocument
    """
    per_output_reports = report.outputs or (report,)
    if len(per_output_reports) != len(output_names):
        raise ValueError(f"{len(output_names)} output names for {len(per_output_reports)} reports")
    sections = tuple(OutputSection(name, r) for name, r in zip(output_names, per_output_reports))
    return ReportDocument(
        version=config.TOOL_VERSION,
        circuit=circuit,
        inputs=tuple(inputs),
        outputs=sections,
        circuit_report=report,
        include_vacuous=include_vacuous,
        per_output=per_output,
    )


def format_decimal(value: float, decimals: int = config.ENTROPY_DECIMALS) -> str:
    return f"{value:.{decimals}f}"


def _group_json(group: SymmetryGroup, names: Sequence[str]) -> Dict:
    return {
        "kind": group.kind.value,
        "members": [{"var": var, "name": var_name(var, names), "phase": phase} for var, phase in group.members],
    }


def _profile_json(measures: EntropyProfile) -> Dict:
    return {
        "entropy": measures.entropy,
        "ones": measures.ones,
        "variables": [
            {"var": row.var, "count0": row.count0, "count1": row.count1,
             "h0": row.h0, "h1": row.h1, "hcond": row.hcond}
            for row in measures.rows
        ],
    }


def _json_document(doc: ReportDocument) -> Dict:
    names = doc.inputs
    outputs = []
    for section in doc.outputs:
        entry = {
            "name": section.name,
            "pairs": [
                {"i": c.i, "j": c.j, "kind": c.kind.value, "vacuous": c.vacuous}
                for c in section.report.symmetric_pairs(doc.include_vacuous)
            ],
            "groups": [_group_json(g, names) for g in section.report.groups],
        }
        if section.report.profile is not None:
            entry["profile"] = _profile_json(section.report.profile)
        outputs.append(entry)
    return {
        "version": doc.version,
        "circuit": doc.circuit,
        "inputs": list(names),
        "outputs": outputs,
        "circuit_groups": [_group_json(g, names) for g in doc.circuit_report.groups],
        "summary": [{"size": size, "count": count} for size, count in doc.circuit_report.summary],
        "total_symmetry": doc.circuit_report.totally_symmetric.value,
        "time_seconds": doc.time_seconds,
    }


def _groups_text(groups: Sequence[SymmetryGroup], names: Sequence[str]) -> str:
    return ", ".join(f"{g.label(names)} {g.kind.value}" for g in groups) or "none"


def _pairs_text(report: SymmetryReport, names: Sequence[str], include_vacuous: bool) -> str:
    return " ".join(c.label(names) for c in report.symmetric_pairs(include_vacuous)) or "none"


def _text_document(doc: ReportDocument) -> str:
    names = doc.inputs
    report = doc.circuit_report
    lines = [
        f"circuit: {doc.circuit} ({len(doc.inputs)} inputs, {len(doc.outputs)} outputs)",
    ]
    if doc.per_output or len(doc.outputs) == 1:
        for section in doc.outputs:
            lines.append(f"output {section.name}:")
            if section.report.profile is not None:
                lines.append(f"  H = {format_decimal(section.report.profile.entropy)}")
            lines.append(f"  pairs: {_pairs_text(section.report, names, doc.include_vacuous)}")
            lines.append(f"  groups: {_groups_text(section.report.groups, names)}")
    if len(doc.outputs) > 1:
        lines.append(f"circuit pairs: {_pairs_text(report, names, doc.include_vacuous)}")
    lines.append(f"circuit groups: {_groups_text(report.groups, names)}")
    lines.append(f"summary: {format_summary(report.summary) or 'none'}")
    lines.append(f"total symmetry: {report.totally_symmetric.value}")
    lines.append(f"time: {format_decimal(doc.time_seconds, config.TIME_DECIMALS)} s")
    return "\n".join(lines) + "\n"


def csv_text(rows: Sequence[Sequence[object]], header: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def summary_row(doc: ReportDocument) -> List[object]:
    """The CSV row of one document: circuit, I/O counts, (S,N), total symmetry, seconds."""
    report = doc.circuit_report
    return [
        doc.circuit,
        len(doc.inputs),
        len(doc.outputs),
        format_summary(report.summary),
        report.totally_symmetric.value,
        format_decimal(doc.time_seconds, config.TIME_DECIMALS),
    ]


def emit_report(doc: ReportDocument, fmt: str = "text") -> bytes:
    """
    Render a symmetry report.

    Args:
        doc: Report document
        fmt: 'json', 'text' or 'csv'

    Returns:
        UTF-8 encoded report
    """
    if fmt == "json":
        text = json.dumps(_json_document(doc), indent=2, sort_keys=True) + "\n"
    elif fmt == "text":
        text = _text_document(doc)
    elif fmt == "csv":
        text = csv_text([summary_row(doc)], CSV_HEADER)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    return text.encode("utf-8")


def emit_reports(docs: Sequence[ReportDocument], fmt: str = "text") -> bytes:
    """
    Render the reports of several circuits as one stream.

    A single document renders exactly as emit_report. Several documents become
    one JSON array, one CSV table or consecutive text reports.

    Args:
        docs: Report documents in input order
        fmt: 'json', 'text' or 'csv'

    Returns:
        UTF-8 encoded report
    """
    if len(docs) == 1:
        return emit_report(docs[0], fmt)
    if fmt == "json":
        payload = [_json_document(doc) for doc in docs]
        return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if fmt == "csv":
        return csv_text([summary_row(doc) for doc in docs], CSV_HEADER).encode("utf-8")
    return b"".join(emit_report(doc, fmt) for doc in docs)


def _condition_label(table: EntropyTable) -> str:
    return ",".join(var_name(i, table.inputs) for i in table.condition)


def emit_entropy(tables: Sequence[EntropyTable], fmt: str = "text") -> bytes:
    """
    Render entropy tables: H(f) and per-variable H(f_x̄), H(f_x), H(f|x).

    Args:
        tables: One table per output
        fmt: 'json', 'text' or 'csv'

    Returns:
        UTF-8 encoded tables
    """
    if fmt == "json":
        payload = []
        for table in tables:
            entry = {"circuit": table.circuit, "output": table.output, "inputs": list(table.inputs)}
            entry.update(_profile_json(table.profile))
            if table.conditional_entropy is not None:
                entry["conditional"] = {
                    "set": [var_name(i, table.inputs) for i in table.condition],
                    "entropy": table.conditional_entropy,
                }
            payload.append(entry)
        return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")

    if fmt == "csv":
        rows = []
        for table in tables:
            for row in table.profile.rows:
                rows.append([table.circuit, table.output, var_name(row.var, table.inputs),
                             format_decimal(row.h0), format_decimal(row.h1), format_decimal(row.hcond)])
        return csv_text(rows, ["circuit", "output", "var", "h0", "h1", "hcond"]).encode("utf-8")

    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")

    lines: List[str] = []
    for table in tables:
        if lines:
            lines.append("")
        lines.append(f"{table.circuit} / {table.output}")
        lines.append(f"H({table.output}) = {format_decimal(table.profile.entropy)}")
        width = max([len(name) for name in table.inputs] + [3])
        lines.append(f"{'var':<{width}}  H(f_x̄)  H(f_x)  H(f|x)")
        for row in table.profile.rows:
            lines.append(
                f"{var_name(row.var, table.inputs):<{width}}  "
                f"{format_decimal(row.h0):>7}  {format_decimal(row.h1):>6}  {format_decimal(row.hcond):>6}"
            )
        if table.conditional_entropy is not None:
            lines.append(f"H({table.output}|{_condition_label(table)}) = {format_decimal(table.conditional_entropy)}")
    return ("\n".join(lines) + "\n").encode("utf-8")
