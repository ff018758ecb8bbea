"""Fixture workbook: the single-model audit example, rebuilt by hand.

Nine formula cells across five calculation sheets plus four numeric
inputs on the Data sheet, inside an 11-sheet workbook.  Expected
constant occurrences are hand counts of each fixture formula.
"""

from __future__ import annotations

SHEET_NAMES = [
    "ExecSummary",
    "C",
    "Prod 2007",
    "F",
    "cp",
    "I",
    "Data",
    "S",
    "P",
    "DM",
    "cgs",
]

_CELLS: dict[str, dict[str, dict]] = {
    "C": {
        "D16": {"f": "=IF(C17*Data!$C$30>200, Data!$C$30**C1C17, 200)", "v": 382},
        "D17": {
            "f": "=IF(C6*(Data!H9+1)*Data!C30>200, C6*(Data!H9+1)*Data!C30, 200)",
            "v": 247.536,
        },
    },
    "Prod 2007": {
        "C6": {"f": "=C1C6*(1+Data!$H$9)", "v": 618.84},
        "D6": {"f": "=IF(C7*Data!$C$30>200, Data!$C$30*C7, 200)", "v": 288.792},
    },
    "F": {
        "J7": {"f": "=I7*(1-Data!$C$24)", "v": 11271.38},
        "J8": {"f": "=I8*(1-Data!$C$24)", "v": 15814.8},
    },
    "cp": {
        "E7": {"f": "=Data!$E$35/12", "v": 30000},
    },
    "I": {
        "G7": {"f": "=IF(F7<0, F7*Data!$E$39/12, 0)", "v": -69.12},
        "G8": {"f": "=IF(F8<0, F8*Data!$E$39/12, 0)", "v": -97.71},
    },
    "Data": {
        "C5": {"v": 9550},
        "C7": {"v": 175},
        "H9": {"v": 0.08},
        "C10": {"v": 0.06},
    },
}

# hand-traced literal occurrences per formula cell, in source order
EXPECTED_OCCURRENCES: dict[tuple[str, str], list[float]] = {
    ("C", "$D$16"): [200, 200],
    ("C", "$D$17"): [1, 200, 1, 200],
    ("Prod 2007", "$C$6"): [1],
    ("Prod 2007", "$D$6"): [200, 200],
    ("F", "$J$7"): [1],
    ("F", "$J$8"): [1],
    ("cp", "$E$7"): [12],
    ("I", "$G$7"): [0, 12, 0],
    ("I", "$G$8"): [0, 12, 0],
}

EXPECTED_VALUE_SETS: dict[tuple[str, str], set[float]] = {
    key: set(values) for key, values in EXPECTED_OCCURRENCES.items()
}

EXPECTED_INPUT_CELLS = {
    ("Data", "$C$5"),
    ("Data", "$C$7"),
    ("Data", "$H$9"),
    ("Data", "$C$10"),
}

FORMULA_COUNT = 9
HARD_CODING_COUNT = sum(len(v) for v in EXPECTED_OCCURRENCES.values())
NUMERIC_VALUE_COUNT = 4


def workbook_document(name: str = "305161814RowNumber7.xls") -> dict:
    sheets = []
    for sheet_name in SHEET_NAMES:
        sheets.append(
            {
                "name": sheet_name,
                "visibility": "visible",
                "cells": _CELLS.get(sheet_name, {}),
                "merged": [],
                "hidden_rows": [],
                "hidden_cols": [],
            }
        )
    return {"name": name, "ref_style": "A1", "sheets": sheets}
