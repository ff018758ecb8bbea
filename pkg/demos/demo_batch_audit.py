"""Batch-audit several workbook files via the CLI entry point.

Run: python3 demos/demo_batch_audit.py
Writes reports to ./demo-reports/.
"""

import json
import tempfile
from pathlib import Path

from sheetaudit.cli import main


def student_workbook(name: str, constant: int) -> dict:
    return {
        "name": name,
        "sheets": [
            {"name": "Data", "cells": {"C1": {"v": constant}}},
            {
                "name": "Calc",
                "cells": {
                    "B1": {"f": f"=A1*{constant}"},
                    "B2": {"f": "=A2*Data!C1"},
                },
            },
        ],
    }


with tempfile.TemporaryDirectory() as tmp:
    tmp_path = Path(tmp)
    for i, constant in enumerate([200, 12, 100], start=1):
        doc = student_workbook(f"student{i}.xls", constant)
        (tmp_path / f"student{i}.json").write_text(json.dumps(doc))

    exit_code = main(
        [
            str(tmp_path / "*.json"),
            "--out",
            "demo-reports",
            "--format",
            "text",
            "--format",
            "csv",
            "--data-region",
            "Data",
        ]
    )

print(f"exit code: {exit_code} (1 = hard codings above threshold)")
print((Path("demo-reports") / "summary.txt").read_text())
