"""Offline reader for ZIP-packaged SpreadsheetML workbooks.

Reads the workbook part (sheet list, visibility, reference mode),
shared strings, and worksheet parts (cells with stored formula text
and cached values, merge lists, hidden row/column flags).  Formulas
are never recomputed; write support is deliberately absent.
"""

from __future__ import annotations

import zipfile
from pathlib import Path
from xml.etree import ElementTree

from .addresses import A1, R1C1, AddressError, parse_address
from .model import Cell, Rectangle, Scalar, Sheet, SheetVisibility, Workbook, parse_range

_NS = {
    "main": "http://schemas.openxmlformats.org/spreadsheetml/2006/main",
    "r": "http://schemas.openxmlformats.org/officeDocument/2006/relationships",
    "rel": "http://schemas.openxmlformats.org/package/2006/relationships",
}

_VISIBILITY = {
    None: SheetVisibility.VISIBLE,
    "visible": SheetVisibility.VISIBLE,
    "hidden": SheetVisibility.HIDDEN,
    "veryHidden": SheetVisibility.VERY_HIDDEN,
}


class FormatError(ValueError):
    """The file is not a valid SpreadsheetML package."""


def load_xlsx(path: str | Path) -> Workbook:
    path = Path(path)
    try:
        archive = zipfile.ZipFile(path)
    except (OSError, zipfile.BadZipFile) as exc:
        if isinstance(exc, zipfile.BadZipFile):
            raise FormatError(f"{path}: not a ZIP package") from None
        raise
    with archive:
        try:
            workbook_xml = _read_xml(archive, "xl/workbook.xml")
        except KeyError:
            raise FormatError(f"{path}: missing xl/workbook.xml") from None
        rels = _read_relationships(archive)
        shared = _read_shared_strings(archive)

        ref_style = A1
        calc_pr = workbook_xml.find("main:calcPr", _NS)
        if calc_pr is not None and calc_pr.get("refMode") == "R1C1":
            ref_style = R1C1

        sheets = []
        sheet_elems = workbook_xml.findall("main:sheets/main:sheet", _NS)
        if not sheet_elems:
            raise FormatError(f"{path}: workbook part declares no sheets")
        for elem in sheet_elems:
            name = elem.get("name", "")
            rel_id = elem.get(f"{{{_NS['r']}}}id")
            target = rels.get(rel_id)
            if target is None:
                raise FormatError(f"{path}: sheet {name!r} has no worksheet part")
            visibility = _VISIBILITY.get(elem.get("state"), SheetVisibility.VISIBLE)
            sheet_xml = _read_xml(archive, target)
            sheets.append(_read_sheet(sheet_xml, name, visibility, shared))

    return Workbook(
        name=path.name, source_path=str(path), sheets=tuple(sheets), ref_style=ref_style
    )


def _read_xml(archive: zipfile.ZipFile, member: str) -> ElementTree.Element:
    try:
        data = archive.read(member)
    except KeyError:
        raise
    try:
        return ElementTree.fromstring(data)
    except ElementTree.ParseError as exc:
        raise FormatError(f"{member}: malformed XML ({exc})") from None


def _read_relationships(archive: zipfile.ZipFile) -> dict[str, str]:
    try:
        root = _read_xml(archive, "xl/_rels/workbook.xml.rels")
    except KeyError:
        return {}
    rels = {}
    for rel in root.findall("rel:Relationship", _NS):
        target = rel.get("Target", "")
        if target.startswith("/"):
            target = target.lstrip("/")
        else:
            target = "xl/" + target
        rels[rel.get("Id")] = target
    return rels


def _read_shared_strings(archive: zipfile.ZipFile) -> list[str]:
    try:
        root = _read_xml(archive, "xl/sharedStrings.xml")
    except KeyError:
        return []
    strings = []
    for si in root.findall("main:si", _NS):
        strings.append("".join(t.text or "" for t in si.iter(f"{{{_NS['main']}}}t")))
    return strings


def _read_sheet(
    root: ElementTree.Element,
    name: str,
    visibility: SheetVisibility,
    shared: list[str],
) -> Sheet:
    merged: list[Rectangle] = []
    for mc in root.findall("main:mergeCells/main:mergeCell", _NS):
        ref = mc.get("ref")
        if ref:
            merged.append(parse_range(ref))

    hidden_rows = set()
    hidden_cols = set()
    for col in root.findall("main:cols/main:col", _NS):
        if col.get("hidden") in ("1", "true"):
            hidden_cols.update(range(int(col.get("min")), int(col.get("max")) + 1))

    # shared-formula masters, keyed by si attribute
    shared_formulas: dict[str, str] = {}
    cells: dict[tuple[int, int], Cell] = {}
    anchors = {r.top_left.coords() for r in merged}

    for row in root.findall("main:sheetData/main:row", _NS):
        if row.get("hidden") in ("1", "true"):
            hidden_rows.add(int(row.get("r")))
        for c in row.findall("main:c", _NS):
            ref = c.get("r")
            if not ref:
                continue
            try:
                address = parse_address(ref)
            except AddressError:
                raise FormatError(f"sheet {name!r}: bad cell reference {ref!r}") from None
            formula, value = _read_cell_content(c, shared, shared_formulas, name)
            if formula is None and value is None:
                continue
            coords = address.coords()
            if _inside_merge(coords, merged) and coords not in anchors:
                # only the merge anchor may carry content
                continue
            cells[coords] = Cell(
                address=address,
                formula_text=formula,
                cached_value=value,
                is_merged_anchor=coords in anchors,
            )

    return Sheet(
        name=name,
        visibility=visibility,
        cells=cells,
        merged_regions=tuple(merged),
        hidden_rows=frozenset(hidden_rows),
        hidden_cols=frozenset(hidden_cols),
    )


def _read_cell_content(
    c: ElementTree.Element,
    shared: list[str],
    shared_formulas: dict[str, str],
    sheet_name: str,
) -> tuple[str | None, Scalar | None]:
    f_elem = c.find("main:f", _NS)
    formula = None
    if f_elem is not None:
        body = f_elem.text or ""
        si = f_elem.get("si")
        if f_elem.get("t") == "shared" and si is not None:
            if body:
                shared_formulas[si] = body
            else:
                # follower of a shared formula; reuse the master text
                # (references are not re-based, which is fine for a
                # constant audit)
                body = shared_formulas.get(si, "")
        if body:
            formula = "=" + body

    v_elem = c.find("main:v", _NS)
    value: Scalar | None = None
    cell_type = c.get("t", "n")
    if cell_type == "inlineStr":
        is_elem = c.find("main:is", _NS)
        if is_elem is not None:
            value = "".join(t.text or "" for t in is_elem.iter(f"{{{_NS['main']}}}t"))
    elif v_elem is not None and v_elem.text is not None:
        raw = v_elem.text
        if cell_type == "s":
            try:
                value = shared[int(raw)]
            except (ValueError, IndexError):
                raise FormatError(
                    f"sheet {sheet_name!r}: bad shared string index {raw!r}"
                ) from None
        elif cell_type == "b":
            value = raw not in ("0", "false")
        elif cell_type in ("str", "e"):
            value = raw
        else:
            value = _parse_number(raw)
    return formula, value


def _parse_number(raw: str) -> Scalar:
    try:
        as_int = int(raw)
    except ValueError:
        return float(raw)
    return as_int


def _inside_merge(coords: tuple[int, int], merged: list[Rectangle]) -> bool:
    row, col = coords
    return any(r.contains(row, col) for r in merged)
