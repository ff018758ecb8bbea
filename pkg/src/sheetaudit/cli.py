"""Batch command-line front end.

Expands input patterns, audits every matched workbook, writes the
per-workbook detail reports plus one batch summary and one aggregate
constant histogram, and exits linter-style: 0 clean, 1 when hard
codings exceed the threshold, 2 on load failures or bad options.
"""

from __future__ import annotations

import argparse
import glob
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .addresses import A1, R1C1
from .detect import (
    AnalysisReport,
    DataRegion,
    DetectionConfig,
    DetectionMode,
    analyze_workbook,
    constant_histogram,
)
from .lexer import DEFAULT_OPERATOR_SET
from .model import SchemaError, load_json, parse_range
from .report import (
    BatchSummaryRow,
    Format,
    render_batch_summary,
    render_detail,
    render_histogram,
)
from .xlsx import FormatError, load_xlsx

_WORKBOOK_SUFFIXES = {".xlsx", ".xlsm", ".json"}

_CONFIG_KEYS = {
    "ignore_constants",
    "data_regions",
    "mode",
    "heuristic_operators",
    "max_constants_per_cell",
}


@dataclass
class RunOptions:
    inputs: list[str]
    output_dir: Path
    formats: list[Format] = field(default_factory=lambda: [Format.TEXT])
    config_path: Path | None = None
    fail_threshold: int = 0
    mode: DetectionMode | None = None
    ignore_constants: list[float] | None = None
    data_regions: list[str] | None = None
    ref_style: str | None = None


class OptionsError(ValueError):
    pass


def _parse_data_region(text: str) -> DataRegion:
    sheet, sep, rng = text.partition("!")
    if not sheet:
        raise OptionsError(f"empty sheet pattern in data region {text!r}")
    try:
        rect = parse_range(rng) if sep else None
    except ValueError as exc:
        raise OptionsError(str(exc)) from None
    return DataRegion(sheet_pattern=sheet, rect=rect)


def _load_config_document(path: Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise OptionsError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise OptionsError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise OptionsError(f"config {path} must be a JSON object")
    for key in doc:
        if key not in _CONFIG_KEYS:
            raise OptionsError(f"config {path}: unknown key {key!r}")
    return doc


def build_config(options: RunOptions) -> DetectionConfig:
    doc = _load_config_document(options.config_path) if options.config_path else {}

    ignore = options.ignore_constants
    if ignore is None:
        ignore = [float(v) for v in doc.get("ignore_constants", [])]

    if options.data_regions is not None:
        regions = [_parse_data_region(t) for t in options.data_regions]
    else:
        regions = []
        for raw in doc.get("data_regions", []):
            if not isinstance(raw, dict) or "sheet" not in raw:
                raise OptionsError("config data_regions entries need a 'sheet' key")
            rng = raw.get("range")
            text = f"{raw['sheet']}!{rng}" if rng else raw["sheet"]
            regions.append(_parse_data_region(text))

    mode = options.mode
    if mode is None:
        try:
            mode = DetectionMode(doc.get("mode", "lexical"))
        except ValueError:
            raise OptionsError(f"unknown mode {doc.get('mode')!r}") from None

    operators = frozenset(doc.get("heuristic_operators", "")) or DEFAULT_OPERATOR_SET
    cap = doc.get("max_constants_per_cell")
    try:
        return DetectionConfig(
            ignore_constants=frozenset(ignore),
            data_regions=tuple(regions),
            mode=mode,
            heuristic_operator_set=operators,
            max_reported_constants_per_cell=cap,
        )
    except ValueError as exc:
        raise OptionsError(str(exc)) from None


def _expand_inputs(patterns: list[str], err) -> list[Path]:
    matched: list[Path] = []
    for pattern in patterns:
        matched.extend(Path(p) for p in glob.glob(pattern, recursive=True))
    paths = sorted(set(matched))
    workbooks = []
    for path in paths:
        if path.suffix.lower() not in _WORKBOOK_SUFFIXES:
            print(f"notice: skipping non-workbook file {path}", file=err)
            continue
        workbooks.append(path)
    return workbooks


def _load_workbook(path: Path):
    if path.suffix.lower() == ".json":
        return load_json(path)
    return load_xlsx(path)


def run(options: RunOptions, err=None) -> int:
    err = err if err is not None else sys.stderr
    try:
        config = build_config(options)
    except OptionsError as exc:
        print(f"error: {exc}", file=err)
        return 2
    if not options.inputs or not options.formats:
        print("error: need at least one input pattern and one format", file=err)
        return 2

    paths = _expand_inputs(options.inputs, err)
    if not paths:
        print("error: no inputs matched", file=err)
        return 2

    options.output_dir.mkdir(parents=True, exist_ok=True)

    rows: list[BatchSummaryRow] = []
    reports: list[AnalysisReport] = []
    load_failed = False
    for index, path in enumerate(paths, start=1):
        try:
            workbook = _load_workbook(path)
            if options.ref_style is not None:
                workbook.ref_style = options.ref_style
        except (OSError, FormatError, SchemaError) as exc:
            print(f"error: {path}: {exc}", file=err)
            rows.append(
                BatchSummaryRow(
                    index=index,
                    workbook_name=path.name,
                    workbook_location=str(path),
                    worksheet_count=0,
                    formula_count=0,
                    hard_coding_count=0,
                    numeric_value_count=0,
                    error=str(exc),
                )
            )
            load_failed = True
            continue
        report = analyze_workbook(workbook, config)
        reports.append(report)
        rows.append(BatchSummaryRow.from_report(index, report))
        for fmt in options.formats:
            doc = render_detail(report, fmt)
            ext = doc.suggested_filename.rsplit(".", 1)[-1]
            _write(options.output_dir / f"{path.stem}.findings.{ext}", doc.body)

    histogram = constant_histogram(reports)
    for fmt in options.formats:
        summary = render_batch_summary(rows, fmt)
        _write(options.output_dir / summary.suggested_filename, summary.body)
        hist_doc = render_histogram(histogram, fmt)
        _write(options.output_dir / hist_doc.suggested_filename, hist_doc.body)

    if load_failed:
        return 2
    total_hard_codings = sum(r.hard_coding_count for r in reports)
    return 1 if total_hard_codings > options.fail_threshold else 0


def _write(path: Path, body: bytes) -> None:
    with open(path, "wb") as fh:
        fh.write(body)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sheetaudit",
        description="Audit spreadsheet workbooks for hard-coded constants "
        "in formulas and stray numeric entries.",
    )
    parser.add_argument("inputs", nargs="+", help="workbook paths or glob patterns")
    parser.add_argument("--out", default="sheetaudit-reports", help="output directory")
    parser.add_argument(
        "--format",
        action="append",
        choices=[f.value for f in Format],
        help="report format, repeatable (default: text)",
    )
    parser.add_argument("--config", help="JSON detection-config document")
    parser.add_argument("--mode", choices=[m.value for m in DetectionMode])
    parser.add_argument(
        "--ignore-constants",
        help="comma-separated constant values to suppress (e.g. '0,1')",
    )
    parser.add_argument(
        "--data-region",
        action="append",
        metavar="SHEET[!RANGE]",
        help="declared input area, repeatable; sheet part is a glob",
    )
    parser.add_argument("--fail-threshold", type=int, default=0)
    parser.add_argument("--ref-style", choices=["a1", "r1c1"])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    ignore = None
    if args.ignore_constants is not None:
        try:
            ignore = [float(v) for v in args.ignore_constants.split(",") if v.strip()]
        except ValueError:
            print(f"error: bad --ignore-constants value {args.ignore_constants!r}", file=sys.stderr)
            return 2
    if args.fail_threshold < 0:
        print("error: --fail-threshold must be non-negative", file=sys.stderr)
        return 2
    options = RunOptions(
        inputs=args.inputs,
        output_dir=Path(args.out),
        formats=[Format(f) for f in (args.format or ["text"])],
        config_path=Path(args.config) if args.config else None,
        fail_threshold=args.fail_threshold,
        mode=DetectionMode(args.mode) if args.mode else None,
        ignore_constants=ignore,
        data_regions=args.data_region,
        ref_style={"a1": A1, "r1c1": R1C1}.get(args.ref_style) if args.ref_style else None,
    )
    return run(options)


if __name__ == "__main__":
    sys.exit(main())
