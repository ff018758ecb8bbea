"""Hard-coding detection over a workbook's used ranges.

Classifies every populated cell: formulas containing numeric literals
become hard-coding findings, formulas that are nothing but a literal
become constant-only findings, and non-formula numeric entries are
split into expected inputs (inside a declared data region) and direct
entries (outside all of them).  Hidden and very-hidden sheets are
analyzed like any other; hiding is exactly where hard codings evade
manual review.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fnmatch import fnmatchcase

from .addresses import CellAddress
from .lexer import (
    DEFAULT_OPERATOR_SET,
    LexError,
    TokenKind,
    extract_constants,
    heuristic_scan,
    tokenize,
)
from .model import (
    AuditWarning,
    Cell,
    Rectangle,
    Scalar,
    Workbook,
    audit_metadata,
)


class DetectionMode(Enum):
    LEXICAL = "lexical"
    HEURISTIC = "heuristic"


@dataclass(frozen=True)
class DataRegion:
    """Declared input area: sheet-name glob plus optional rectangle.

    An omitted rectangle means the whole sheet.
    """

    sheet_pattern: str
    rect: Rectangle | None = None

    def contains(self, sheet_name: str, row: int, column: int) -> bool:
        if not fnmatchcase(sheet_name, self.sheet_pattern):
            return False
        return self.rect is None or self.rect.contains(row, column)


@dataclass(frozen=True)
class DetectionConfig:
    ignore_constants: frozenset[float] = frozenset()
    data_regions: tuple[DataRegion, ...] = ()
    mode: DetectionMode = DetectionMode.LEXICAL
    heuristic_operator_set: frozenset[str] = DEFAULT_OPERATOR_SET
    max_reported_constants_per_cell: int | None = None

    def __post_init__(self) -> None:
        for value in self.ignore_constants:
            if value != value or value in (float("inf"), float("-inf")):
                raise ValueError("ignore_constants must contain finite numbers")
        if (
            self.max_reported_constants_per_cell is not None
            and self.max_reported_constants_per_cell < 1
        ):
            raise ValueError("max_reported_constants_per_cell must be positive")


class FindingKind(Enum):
    HARD_CODED_CONSTANT = "hard_coded_constant"
    CONSTANT_ONLY_FORMULA = "constant_only_formula"
    DIRECT_NUMERIC_ENTRY = "direct_numeric_entry"
    EXPECTED_INPUT_VALUE = "expected_input_value"
    UNPARSEABLE = "unparseable"


CONSTANT_BEARING_KINDS = frozenset(
    {FindingKind.HARD_CODED_CONSTANT, FindingKind.CONSTANT_ONLY_FORMULA}
)
NUMERIC_ENTRY_KINDS = frozenset(
    {FindingKind.DIRECT_NUMERIC_ENTRY, FindingKind.EXPECTED_INPUT_VALUE}
)


@dataclass(frozen=True)
class ConstantOccurrence:
    value: float
    start: int
    end: int


@dataclass(frozen=True)
class Finding:
    kind: FindingKind
    sheet: str
    address: CellAddress
    formula_text: str | None = None
    cached_value: Scalar | None = None
    constants: tuple[ConstantOccurrence, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class AnalysisReport:
    workbook_name: str
    workbook_location: str
    worksheet_count: int
    formula_count: int
    hard_coding_count: int
    numeric_value_count: int
    findings: tuple[Finding, ...] = ()
    warnings: tuple[AuditWarning, ...] = ()


# constant-only shape in heuristic mode, where no token stream exists
_BARE_NUMBER_RE = re.compile(
    r"^=?\s*-?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[Ee][+-]?[0-9]+)?\s*$"
)
_HEURISTIC_NUMBER_RE = re.compile(r"[0-9]+(?:\.[0-9]+)?")


def analyze_cell(
    cell: Cell, sheet_name: str, config: DetectionConfig, ref_style: str = "A1"
) -> list[Finding]:
    if cell.formula_text is not None:
        return _analyze_formula(cell, sheet_name, config, ref_style)
    value = cell.cached_value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return []
    row, col = cell.address.coords()
    in_region = any(r.contains(sheet_name, row, col) for r in config.data_regions)
    kind = FindingKind.EXPECTED_INPUT_VALUE if in_region else FindingKind.DIRECT_NUMERIC_ENTRY
    return [
        Finding(
            kind=kind,
            sheet=sheet_name,
            address=cell.address.absolute(),
            cached_value=value,
        )
    ]


def _analyze_formula(
    cell: Cell, sheet_name: str, config: DetectionConfig, ref_style: str
) -> list[Finding]:
    formula = cell.formula_text
    if config.mode is DetectionMode.LEXICAL:
        try:
            tokens = tokenize(formula, ref_style)
        except LexError as exc:
            return [
                Finding(
                    kind=FindingKind.UNPARSEABLE,
                    sheet=sheet_name,
                    address=cell.address.absolute(),
                    formula_text=formula,
                    cached_value=cell.cached_value,
                    detail=str(exc),
                )
            ]
        occurrences = [
            ConstantOccurrence(value, start, end)
            for value, (start, end) in extract_constants(tokens)
        ]
        literal_count = len(occurrences)
        structural = {TokenKind.CELL_REF, TokenKind.RANGE_REF, TokenKind.FUNCTION_NAME}
        constant_only = literal_count == 1 and not any(
            tok.kind in structural for tok in tokens
        )
    else:
        occurrences = []
        for offset in heuristic_scan(formula, config.heuristic_operator_set):
            m = _HEURISTIC_NUMBER_RE.match(formula, offset)
            occurrences.append(ConstantOccurrence(float(m.group()), offset, m.end()))
        constant_only = bool(occurrences) and _BARE_NUMBER_RE.match(formula) is not None

    surviving = [o for o in occurrences if o.value not in config.ignore_constants]
    cap = config.max_reported_constants_per_cell
    if cap is not None:
        surviving = surviving[:cap]
    if not surviving:
        return []
    kind = (
        FindingKind.CONSTANT_ONLY_FORMULA if constant_only else FindingKind.HARD_CODED_CONSTANT
    )
    return [
        Finding(
            kind=kind,
            sheet=sheet_name,
            address=cell.address.absolute(),
            formula_text=formula,
            cached_value=cell.cached_value,
            constants=tuple(surviving),
        )
    ]


def analyze_workbook(workbook: Workbook, config: DetectionConfig) -> AnalysisReport:
    findings: list[Finding] = []
    formula_count = 0
    for sheet in workbook.sheets:
        for coords in sorted(sheet.cells):
            cell = sheet.cells[coords]
            if cell.formula_text is not None:
                formula_count += 1
            findings.extend(analyze_cell(cell, sheet.name, config, workbook.ref_style))
    hard_coding_count = sum(
        len(f.constants) for f in findings if f.kind in CONSTANT_BEARING_KINDS
    )
    numeric_value_count = sum(1 for f in findings if f.kind in NUMERIC_ENTRY_KINDS)
    return AnalysisReport(
        workbook_name=workbook.name,
        workbook_location=workbook.source_path,
        worksheet_count=len(workbook.sheets),
        formula_count=formula_count,
        hard_coding_count=hard_coding_count,
        numeric_value_count=numeric_value_count,
        findings=tuple(findings),
        warnings=tuple(audit_metadata(workbook)),
    )


def constant_histogram(reports: list[AnalysisReport]) -> list[tuple[float, int]]:
    """Occurrence counts of every detected constant, ascending by value.

    Values compare numerically, so 0.01 and .01 aggregate together.
    """
    counts: dict[float, int] = {}
    for report in reports:
        for finding in report.findings:
            if finding.kind not in CONSTANT_BEARING_KINDS:
                continue
            for occurrence in finding.constants:
                key = float(occurrence.value)
                counts[key] = counts.get(key, 0) + 1
    return sorted(counts.items())
