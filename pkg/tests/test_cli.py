import json

from sheetaudit.cli import main
from table3 import workbook_document
from xlsx_builder import build_xlsx


def write_fixture(path, name=None):
    doc = workbook_document(name or path.stem)
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


def write_clean(path):
    doc = {
        "name": path.stem,
        "ref_style": "A1",
        "sheets": [
            {
                "name": "Data",
                "cells": {"A1": {"v": 10}, "A2": {"v": 20}},
            },
            {"name": "Calc", "cells": {"B1": {"f": "=Data!A1+Data!A2", "v": 30}}},
        ],
    }
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


class TestExitCodes:
    def test_findings_exceed_default_threshold(self, tmp_path):
        write_fixture(tmp_path / "wb.json")
        code = main([str(tmp_path / "wb.json"), "--out", str(tmp_path / "out")])
        assert code == 1

    def test_clean_workbook_exits_zero(self, tmp_path):
        write_clean(tmp_path / "clean.json")
        code = main(
            [
                str(tmp_path / "clean.json"),
                "--out",
                str(tmp_path / "out"),
                "--data-region",
                "Data",
            ]
        )
        assert code == 0

    def test_empty_glob_exits_two(self, tmp_path, capsys):
        code = main([str(tmp_path / "none" / "*.json"), "--out", str(tmp_path / "out")])
        assert code == 2
        assert "no inputs matched" in capsys.readouterr().err

    def test_unreadable_workbook_exits_two(self, tmp_path):
        bad = tmp_path / "bad.xlsx"
        bad.write_bytes(b"nope")
        write_clean(tmp_path / "ok.json")
        code = main(
            [str(tmp_path / "*.xlsx"), str(tmp_path / "*.json"), "--out", str(tmp_path / "out")]
        )
        assert code == 2
        summary = (tmp_path / "out" / "summary.txt").read_text()
        assert "ERROR" in summary

    def test_fail_threshold_allows_findings(self, tmp_path):
        write_fixture(tmp_path / "wb.json")
        code = main(
            [str(tmp_path / "wb.json"), "--out", str(tmp_path / "out"), "--fail-threshold", "50"]
        )
        assert code == 0

    def test_bad_config_exits_two(self, tmp_path, capsys):
        config = tmp_path / "conf.json"
        config.write_text('{"unknown_key": 1}')
        write_clean(tmp_path / "ok.json")
        code = main(
            [str(tmp_path / "ok.json"), "--out", str(tmp_path / "out"), "--config", str(config)]
        )
        assert code == 2


class TestOutputs:
    def test_reports_written_per_format(self, tmp_path):
        write_fixture(tmp_path / "wb.json")
        main(
            [
                str(tmp_path / "wb.json"),
                "--out",
                str(tmp_path / "out"),
                "--format",
                "json",
                "--format",
                "csv",
                "--data-region",
                "Data",
            ]
        )
        out = tmp_path / "out"
        assert (out / "wb.findings.json").exists()
        assert (out / "wb.findings.csv").exists()
        assert (out / "summary.json").exists()
        assert (out / "constants.csv").exists()

    def test_batch_detail_identical_to_solo(self, tmp_path):
        batch_dir = tmp_path / "batch"
        batch_dir.mkdir()
        for i in range(1, 10):
            write_fixture(batch_dir / f"student{i}.json", name=f"student{i}.xls")
        code = main(
            [
                str(batch_dir / "*.json"),
                "--out",
                str(tmp_path / "batch-out"),
                "--format",
                "json",
                "--data-region",
                "Data",
            ]
        )
        assert code == 1
        summary = json.loads((tmp_path / "batch-out" / "summary.json").read_text())
        assert [r["index"] for r in summary["rows"]] == list(range(1, 10))

        solo_code = main(
            [
                str(batch_dir / "student5.json"),
                "--out",
                str(tmp_path / "solo-out"),
                "--format",
                "json",
                "--data-region",
                "Data",
            ]
        )
        assert solo_code == 1
        batch_body = (tmp_path / "batch-out" / "student5.findings.json").read_bytes()
        solo_body = (tmp_path / "solo-out" / "student5.findings.json").read_bytes()
        assert batch_body == solo_body

    def test_idempotent_rerun(self, tmp_path):
        write_fixture(tmp_path / "wb.json")
        args = [str(tmp_path / "wb.json"), "--out", str(tmp_path / "out"), "--format", "text"]
        main(args)
        first = (tmp_path / "out" / "wb.findings.txt").read_bytes()
        main(args)
        assert (tmp_path / "out" / "wb.findings.txt").read_bytes() == first

    def test_non_workbook_files_skipped_with_notice(self, tmp_path, capsys):
        write_clean(tmp_path / "ok.json")
        (tmp_path / "notes.txt").write_text("hi")
        code = main([str(tmp_path / "*"), "--out", str(tmp_path / "out")])
        assert code == 0
        assert "skipping non-workbook file" in capsys.readouterr().err

    def test_xlsx_input(self, tmp_path):
        build_xlsx(
            tmp_path / "book.xlsx",
            [
                {
                    "name": "S",
                    "rows": '<row r="1"><c r="A1"><f>B1/12</f><v>4</v></c></row>',
                }
            ],
        )
        code = main([str(tmp_path / "book.xlsx"), "--out", str(tmp_path / "out")])
        assert code == 1
        body = (tmp_path / "out" / "book.findings.txt").read_text()
        assert "=B1/12" in body


class TestConfig:
    def test_config_document_and_flag_override(self, tmp_path):
        config = tmp_path / "conf.json"
        config.write_text(
            json.dumps(
                {
                    "ignore_constants": [0, 1, 12, 200],
                    "data_regions": [{"sheet": "Data"}],
                    "mode": "lexical",
                }
            )
        )
        write_fixture(tmp_path / "wb.json")
        code = main(
            [str(tmp_path / "wb.json"), "--out", str(tmp_path / "out"), "--config", str(config)]
        )
        assert code == 0  # every fixture constant suppressed
        # flag overrides the document's ignore list
        code = main(
            [
                str(tmp_path / "wb.json"),
                "--out",
                str(tmp_path / "out2"),
                "--config",
                str(config),
                "--ignore-constants",
                "0,1",
            ]
        )
        assert code == 1

    def test_heuristic_mode_flag(self, tmp_path):
        doc = {
            "name": "h",
            "sheets": [{"name": "S", "cells": {"A1": {"f": "=B22+C3"}}}],
        }
        (tmp_path / "h.json").write_text(json.dumps(doc))
        code = main(
            [str(tmp_path / "h.json"), "--out", str(tmp_path / "out"), "--mode", "heuristic"]
        )
        assert code == 0
