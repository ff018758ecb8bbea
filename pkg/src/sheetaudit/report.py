"""Renders analysis results into the three report shapes.

Per-workbook detail, multi-workbook summary, and the constant-value
histogram, each in text-table, CSV, and JSON encodings.  Rendering is
deterministic: identical inputs yield byte-identical bodies (no
timestamps; run metadata belongs in filenames or sidecars).
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from enum import Enum

from .addresses import parse_address
from .detect import (
    AnalysisReport,
    ConstantOccurrence,
    Finding,
    FindingKind,
)
from .model import AuditWarning, Scalar, WarningKind

SCHEMA_VERSION = 1


class Format(Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


_EXTENSIONS = {Format.TEXT: "txt", Format.CSV: "csv", Format.JSON: "json"}


@dataclass(frozen=True)
class RenderedDocument:
    format: Format
    body: bytes
    suggested_filename: str


@dataclass(frozen=True)
class BatchSummaryRow:
    index: int
    workbook_name: str
    workbook_location: str
    worksheet_count: int
    formula_count: int
    hard_coding_count: int
    numeric_value_count: int
    error: str | None = None

    @classmethod
    def from_report(cls, index: int, report: AnalysisReport) -> "BatchSummaryRow":
        return cls(
            index=index,
            workbook_name=report.workbook_name,
            workbook_location=report.workbook_location,
            worksheet_count=report.worksheet_count,
            formula_count=report.formula_count,
            hard_coding_count=report.hard_coding_count,
            numeric_value_count=report.numeric_value_count,
        )


class EmptyBatch(ValueError):
    pass


def format_number(value: float) -> str:
    """Shortest faithful decimal rendering, no trailing-zero padding."""
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def render_scalar(value: Scalar | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "TRUE" if value else "FALSE"
    if isinstance(value, (int, float)):
        return format_number(value)
    return str(value)


def safe_filename(name: str) -> str:
    return re.sub(r"[^-._A-Za-z0-9]", "_", name) or "workbook"


def _finish(fmt: Format, body: str, stem: str) -> RenderedDocument:
    return RenderedDocument(
        format=fmt,
        body=body.encode("utf-8"),
        suggested_filename=f"{stem}.{_EXTENSIONS[fmt]}",
    )


def _json_body(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=1) + "\n"


def _text_table(rows: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _csv_body(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


# --- per-workbook detail ----------------------------------------------

_DETAIL_HEADER = ["No.", "Worksheet", "Cell", "Cell Formula", "Cell Value", "Constants", "Detail"]


def render_detail(
    report: AnalysisReport, format: Format, max_constant_columns: int = 4
) -> RenderedDocument:
    stem = f"{safe_filename(report.workbook_name)}.findings"
    if format is Format.JSON:
        return _finish(format, _json_body(report_to_document(report)), stem)

    head = [
        ["Workbook Name", "Workbook Location", "Wks", "F'm", "Hard", "Num'c"],
        [
            report.workbook_name,
            report.workbook_location,
            str(report.worksheet_count),
            str(report.formula_count),
            str(report.hard_coding_count),
            str(report.numeric_value_count),
        ],
    ]
    body_rows = []
    for number, finding in enumerate(report.findings, start=1):
        constants = [format_number(o.value) for o in finding.constants]
        if format is Format.TEXT and len(constants) > max_constant_columns:
            constants = constants[:max_constant_columns] + [
                f"(+{len(finding.constants) - max_constant_columns} more)"
            ]
        body_rows.append(
            [
                str(number),
                finding.sheet,
                finding.address.render(),
                finding.formula_text or "",
                render_scalar(finding.cached_value),
                " ".join(constants),
                finding.detail,
            ]
        )

    if format is Format.CSV:
        rows = [r + [""] for r in head]
        rows.append(_DETAIL_HEADER)
        rows.extend(body_rows)
        return _finish(format, _csv_body(rows), stem)

    parts = ["Hard-coding audit of workbook\n", _text_table(head), "\n"]
    if body_rows:
        parts.append(_text_table([_DETAIL_HEADER] + body_rows))
    else:
        parts.append("(no findings)\n")
    if report.warnings:
        parts.append("\nWarnings\n")
        for w in report.warnings:
            where = f" ({', '.join(w.locations)})" if w.locations else ""
            parts.append(f"- {w.kind.value} on sheet {w.sheet!r}: {w.count}{where}\n")
    return _finish(format, "".join(parts), stem)


def report_to_document(report: AnalysisReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "detail",
        "workbook": {"name": report.workbook_name, "location": report.workbook_location},
        "counts": {
            "worksheets": report.worksheet_count,
            "formulas": report.formula_count,
            "hard_codings": report.hard_coding_count,
            "numeric_values": report.numeric_value_count,
        },
        "findings": [_finding_to_document(f) for f in report.findings],
        "warnings": [
            {
                "kind": w.kind.value,
                "sheet": w.sheet,
                "count": w.count,
                "locations": list(w.locations),
            }
            for w in report.warnings
        ],
    }


def _finding_to_document(finding: Finding) -> dict:
    doc: dict[str, object] = {
        "kind": finding.kind.value,
        "sheet": finding.sheet,
        "cell": finding.address.render(),
    }
    if finding.formula_text is not None:
        doc["formula"] = finding.formula_text
    if finding.cached_value is not None:
        doc["value"] = finding.cached_value
    if finding.constants:
        doc["constants"] = [
            {"value": o.value, "start": o.start, "end": o.end} for o in finding.constants
        ]
    if finding.detail:
        doc["detail"] = finding.detail
    return doc


def report_from_document(doc: dict) -> AnalysisReport:
    """Inverse of report_to_document, for lossless round-trip checks."""
    findings = []
    for raw in doc["findings"]:
        findings.append(
            Finding(
                kind=FindingKind(raw["kind"]),
                sheet=raw["sheet"],
                address=parse_address(raw["cell"]),
                formula_text=raw.get("formula"),
                cached_value=raw.get("value"),
                constants=tuple(
                    ConstantOccurrence(o["value"], o["start"], o["end"])
                    for o in raw.get("constants", [])
                ),
                detail=raw.get("detail", ""),
            )
        )
    warnings = tuple(
        AuditWarning(
            kind=WarningKind(raw["kind"]),
            sheet=raw["sheet"],
            count=raw["count"],
            locations=tuple(raw["locations"]),
        )
        for raw in doc["warnings"]
    )
    counts = doc["counts"]
    return AnalysisReport(
        workbook_name=doc["workbook"]["name"],
        workbook_location=doc["workbook"]["location"],
        worksheet_count=counts["worksheets"],
        formula_count=counts["formulas"],
        hard_coding_count=counts["hard_codings"],
        numeric_value_count=counts["numeric_values"],
        findings=tuple(findings),
        warnings=warnings,
    )


# --- batch summary ----------------------------------------------------

_SUMMARY_HEADER = [
    "",
    "Workbook Name",
    "Workbook Location",
    "# worksheets",
    "# formulas",
    "# hard codings",
    "# numeric values",
]


def render_batch_summary(rows: list[BatchSummaryRow], format: Format) -> RenderedDocument:
    if not rows:
        raise EmptyBatch("batch summary requires at least one row")
    stem = "summary"
    if format is Format.JSON:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "summary",
            "rows": [
                {
                    "index": r.index,
                    "workbook_name": r.workbook_name,
                    "workbook_location": r.workbook_location,
                    "worksheet_count": r.worksheet_count,
                    "formula_count": r.formula_count,
                    "hard_coding_count": r.hard_coding_count,
                    "numeric_value_count": r.numeric_value_count,
                    "error": r.error,
                }
                for r in rows
            ],
        }
        return _finish(format, _json_body(payload), stem)

    table = [list(_SUMMARY_HEADER)]
    for r in rows:
        if r.error is not None:
            table.append(
                [f"#{r.index}", r.workbook_name, r.workbook_location, f"ERROR: {r.error}", "", "", ""]
            )
        else:
            table.append(
                [
                    f"#{r.index}",
                    r.workbook_name,
                    r.workbook_location,
                    str(r.worksheet_count),
                    str(r.formula_count),
                    str(r.hard_coding_count),
                    str(r.numeric_value_count),
                ]
            )
    if format is Format.CSV:
        return _finish(format, _csv_body(table), stem)
    return _finish(format, "Hard-coding audit summary\n" + _text_table(table), stem)


# --- constant histogram -----------------------------------------------

_HISTOGRAM_HEADER = ["Constant Value", "Number of Occurrences"]


def render_histogram(histogram: list[tuple[float, int]], format: Format) -> RenderedDocument:
    stem = "constants"
    if format is Format.JSON:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "histogram",
            "rows": [{"value": value, "count": count} for value, count in histogram],
        }
        return _finish(format, _json_body(payload), stem)
    table = [list(_HISTOGRAM_HEADER)]
    for value, count in histogram:
        table.append([format_number(value), str(count)])
    if format is Format.CSV:
        return _finish(format, _csv_body(table), stem)
    return _finish(format, _text_table(table), stem)
