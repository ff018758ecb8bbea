"""Immutable in-memory workbook model and JSON interchange format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Union

from .addresses import A1, R1C1, AddressError, CellAddress, column_to_letters, parse_address

Scalar = Union[int, float, str, bool]


class SchemaError(ValueError):
    """Interchange document violates the schema; message carries a
    JSON-pointer-style location of the first violation."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


class SheetVisibility(Enum):
    VISIBLE = "visible"
    HIDDEN = "hidden"
    VERY_HIDDEN = "very_hidden"


@dataclass(frozen=True)
class Rectangle:
    top_left: CellAddress
    bottom_right: CellAddress

    def __post_init__(self) -> None:
        if (
            self.top_left.row > self.bottom_right.row
            or self.top_left.column > self.bottom_right.column
        ):
            raise ValueError("rectangle corners out of order")

    def contains(self, row: int, column: int) -> bool:
        return (
            self.top_left.row <= row <= self.bottom_right.row
            and self.top_left.column <= column <= self.bottom_right.column
        )

    def render(self) -> str:
        return f"{self.top_left.render()}:{self.bottom_right.render()}"


def parse_range(text: str) -> Rectangle:
    try:
        first, _, second = text.partition(":")
        if not second:
            second = first
        return Rectangle(parse_address(first), parse_address(second))
    except (AddressError, ValueError) as exc:
        raise ValueError(f"cannot parse range {text!r}: {exc}") from None


@dataclass(frozen=True)
class Cell:
    address: CellAddress
    formula_text: str | None = None
    cached_value: Scalar | None = None
    is_merged_anchor: bool = False

    def __post_init__(self) -> None:
        if self.formula_text is None and self.cached_value is None:
            raise ValueError(f"cell {self.address.render()} has neither formula nor value")
        if self.formula_text is not None and not self.formula_text.startswith("="):
            object.__setattr__(self, "formula_text", "=" + self.formula_text)


@dataclass
class Sheet:
    name: str
    visibility: SheetVisibility = SheetVisibility.VISIBLE
    cells: dict[tuple[int, int], Cell] = field(default_factory=dict)
    merged_regions: tuple[Rectangle, ...] = ()
    hidden_rows: frozenset[int] = frozenset()
    hidden_cols: frozenset[int] = frozenset()


@dataclass
class Workbook:
    name: str
    source_path: str = ""
    sheets: tuple[Sheet, ...] = ()
    ref_style: str = A1

    def __post_init__(self) -> None:
        names = [s.name for s in self.sheets]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate sheet names in workbook {self.name!r}")


def used_range(sheet: Sheet) -> Rectangle | None:
    """Minimal rectangle covering every populated cell, or None."""
    if not sheet.cells:
        return None
    rows = [r for r, _ in sheet.cells]
    cols = [c for _, c in sheet.cells]
    return Rectangle(
        CellAddress(row=min(rows), column=min(cols)),
        CellAddress(row=max(rows), column=max(cols)),
    )


class WarningKind(Enum):
    HIDDEN_SHEET = "hidden_sheet"
    VERY_HIDDEN_SHEET = "very_hidden_sheet"
    HIDDEN_ROWS = "hidden_rows"
    HIDDEN_COLUMNS = "hidden_columns"
    MERGED_CELLS = "merged_cells"


@dataclass(frozen=True)
class AuditWarning:
    kind: WarningKind
    sheet: str
    count: int
    locations: tuple[str, ...] = ()


def audit_metadata(workbook: Workbook) -> list[AuditWarning]:
    """Visibility and merge complications worth flagging to an auditor.

    Warnings never alter findings; they feed the report's warning
    section only.
    """
    warnings: list[AuditWarning] = []
    for sheet in workbook.sheets:
        if sheet.visibility is SheetVisibility.HIDDEN:
            warnings.append(AuditWarning(WarningKind.HIDDEN_SHEET, sheet.name, 1))
        elif sheet.visibility is SheetVisibility.VERY_HIDDEN:
            warnings.append(AuditWarning(WarningKind.VERY_HIDDEN_SHEET, sheet.name, 1))
        if sheet.hidden_rows:
            rows = tuple(str(r) for r in sorted(sheet.hidden_rows))
            warnings.append(
                AuditWarning(WarningKind.HIDDEN_ROWS, sheet.name, len(rows), rows)
            )
        if sheet.hidden_cols:
            cols = tuple(column_to_letters(c) for c in sorted(sheet.hidden_cols))
            warnings.append(
                AuditWarning(WarningKind.HIDDEN_COLUMNS, sheet.name, len(cols), cols)
            )
        if sheet.merged_regions:
            regions = tuple(r.render() for r in sheet.merged_regions)
            warnings.append(
                AuditWarning(WarningKind.MERGED_CELLS, sheet.name, len(regions), regions)
            )
    return warnings


# --- JSON interchange -------------------------------------------------

_WORKBOOK_KEYS = {"name", "ref_style", "sheets"}
_SHEET_KEYS = {"name", "visibility", "cells", "merged", "hidden_rows", "hidden_cols"}
_CELL_KEYS = {"f", "v"}


def _require_keys(obj: dict, allowed: set[str], location: str) -> None:
    for key in obj:
        if key not in allowed:
            raise SchemaError(location, f"unknown key {key!r}")


def workbook_from_document(doc: object, source_path: str = "") -> Workbook:
    if not isinstance(doc, dict):
        raise SchemaError("", "document must be an object")
    _require_keys(doc, _WORKBOOK_KEYS, "")
    name = doc.get("name")
    if not isinstance(name, str):
        raise SchemaError("/name", "workbook name must be a string")
    ref_style = doc.get("ref_style", A1)
    if ref_style not in (A1, R1C1):
        raise SchemaError("/ref_style", f"must be 'A1' or 'R1C1', got {ref_style!r}")
    raw_sheets = doc.get("sheets", [])
    if not isinstance(raw_sheets, list):
        raise SchemaError("/sheets", "must be an array")
    sheets = tuple(
        _sheet_from_document(raw, f"/sheets/{i}") for i, raw in enumerate(raw_sheets)
    )
    try:
        return Workbook(name=name, source_path=source_path, sheets=sheets, ref_style=ref_style)
    except ValueError as exc:
        raise SchemaError("/sheets", str(exc)) from None


def _sheet_from_document(raw: object, location: str) -> Sheet:
    if not isinstance(raw, dict):
        raise SchemaError(location, "sheet must be an object")
    _require_keys(raw, _SHEET_KEYS, location)
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        raise SchemaError(f"{location}/name", "sheet name must be a nonempty string")
    vis_raw = raw.get("visibility", "visible")
    try:
        visibility = SheetVisibility(vis_raw)
    except ValueError:
        raise SchemaError(f"{location}/visibility", f"unknown visibility {vis_raw!r}") from None

    cells: dict[tuple[int, int], Cell] = {}
    raw_cells = raw.get("cells", {})
    if not isinstance(raw_cells, dict):
        raise SchemaError(f"{location}/cells", "must be an object")
    for addr_text, raw_cell in raw_cells.items():
        cell_loc = f"{location}/cells/{addr_text}"
        try:
            address = parse_address(addr_text)
        except AddressError as exc:
            raise SchemaError(cell_loc, str(exc)) from None
        if not isinstance(raw_cell, dict):
            raise SchemaError(cell_loc, "cell must be an object")
        _require_keys(raw_cell, _CELL_KEYS, cell_loc)
        formula = raw_cell.get("f")
        value = raw_cell.get("v")
        if formula is not None and not isinstance(formula, str):
            raise SchemaError(f"{cell_loc}/f", "formula must be a string")
        if value is not None and not isinstance(value, (int, float, str, bool)):
            raise SchemaError(f"{cell_loc}/v", "value must be a scalar")
        try:
            cells[address.coords()] = Cell(
                address=address, formula_text=formula, cached_value=value
            )
        except ValueError as exc:
            raise SchemaError(cell_loc, str(exc)) from None

    merged: list[Rectangle] = []
    for i, ref in enumerate(raw.get("merged", [])):
        try:
            merged.append(parse_range(ref))
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"{location}/merged/{i}", str(exc)) from None

    hidden_rows = _index_set(raw.get("hidden_rows", []), f"{location}/hidden_rows")
    hidden_cols = _index_set(raw.get("hidden_cols", []), f"{location}/hidden_cols")
    return Sheet(
        name=name,
        visibility=visibility,
        cells=cells,
        merged_regions=tuple(merged),
        hidden_rows=hidden_rows,
        hidden_cols=hidden_cols,
    )


def _index_set(raw: object, location: str) -> frozenset[int]:
    if not isinstance(raw, list):
        raise SchemaError(location, "must be an array of integers")
    out = set()
    for i, item in enumerate(raw):
        if not isinstance(item, int) or isinstance(item, bool) or item < 1:
            raise SchemaError(f"{location}/{i}", "indices must be integers >= 1")
        out.add(item)
    return frozenset(out)


def workbook_to_document(workbook: Workbook) -> dict:
    sheets = []
    for sheet in workbook.sheets:
        cells = {}
        for coords in sorted(sheet.cells):
            cell = sheet.cells[coords]
            entry: dict[str, object] = {}
            if cell.formula_text is not None:
                entry["f"] = cell.formula_text
            if cell.cached_value is not None:
                entry["v"] = cell.cached_value
            cells[cell.address.render()] = entry
        sheets.append(
            {
                "name": sheet.name,
                "visibility": sheet.visibility.value,
                "cells": cells,
                "merged": [r.render() for r in sheet.merged_regions],
                "hidden_rows": sorted(sheet.hidden_rows),
                "hidden_cols": sorted(sheet.hidden_cols),
            }
        )
    return {"name": workbook.name, "ref_style": workbook.ref_style, "sheets": sheets}


def load_json(path: str | Path) -> Workbook:
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError("", f"not valid JSON: {exc}") from None
    return workbook_from_document(doc, source_path=str(path))


def save_json(workbook: Workbook, path: str | Path) -> None:
    doc = workbook_to_document(workbook)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, ensure_ascii=False, indent=1)
        fh.write("\n")
