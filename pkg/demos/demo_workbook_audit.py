"""Audit a small workbook end to end and print the detail report.

Run: python3 demos/demo_workbook_audit.py
"""

from sheetaudit import (
    DataRegion,
    DetectionConfig,
    Format,
    analyze_workbook,
    constant_histogram,
    render_detail,
    render_histogram,
    workbook_from_document,
)

# A budgeting model in miniature: a Data sheet holding inputs, one
# mostly-clean calculation sheet, and one with constants typed in.
# Note that 0 and 1 are flagged too; growth factors like (1+rate) are
# reported so a reviewer can dismiss them via ignore_constants.
document = {
    "name": "budget-demo.xls",
    "ref_style": "A1",
    "sheets": [
        {
            "name": "Data",
            "cells": {
                "C5": {"v": 9550},
                "H9": {"v": 0.08},
            },
        },
        {
            "name": "Good",
            "cells": {
                "B2": {"f": "=Data!C5*(1+Data!H9)", "v": 10314},
            },
        },
        {
            "name": "Bad",
            "cells": {
                "B2": {"f": "=Data!C5*1.08", "v": 10314},
                "B3": {"f": "=IF(B2>200, B2*0.08, 200)", "v": 825.12},
                "B4": {"f": "=9732311", "v": 9732311},
                "B5": {"v": 175},
            },
        },
    ],
}

workbook = workbook_from_document(document)
config = DetectionConfig(data_regions=(DataRegion("Data"),))
report = analyze_workbook(workbook, config)

print(render_detail(report, Format.TEXT).body.decode())
print(render_histogram(constant_histogram([report]), Format.TEXT).body.decode())

# Dismiss the reviewed 200-unit threshold and rerun:
reviewed = DetectionConfig(
    ignore_constants=frozenset({200}), data_regions=(DataRegion("Data"),)
)
print("hard codings before review:", report.hard_coding_count)
print("hard codings after dismissing 200:", analyze_workbook(workbook, reviewed).hard_coding_count)
