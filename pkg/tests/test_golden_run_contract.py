import json
from pathlib import Path

FAST = ["classify_h6_3", "decompose_h6_3", "mermin_h6_3", "families_3_2", "robustness_n7_lost2_no_row"]


def test_golden_run_produces_contract(tmp_path: Path):
    from hyperstate.golden import default_report_schema_path, main, validate_report

    out_dir = tmp_path / "out"
    argv = ["--out-dir", str(out_dir)]
    for cid in FAST:
        argv += ["--only", cid]
    rc = main(argv)
    assert rc == 0

    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    assert report["summary"]["total"] == len(FAST)
    assert report["summary"]["failed"] == 0
    assert validate_report(report, default_report_schema_path()) == []
    assert not (out_dir / "report.schema_errors.txt").exists()
    assert (out_dir / "report.md").read_text(encoding="utf-8").startswith("# Golden Report")

    r0 = report["results"][0]
    assert r0["status"] in {"PASS", "FAIL", "SKIP"}
    assert isinstance(r0["argv"], list)


def test_golden_failures_and_skips(tmp_path: Path):
    from hyperstate.golden import run_golden

    checks = tmp_path / "checks.yaml"
    checks.write_text(
        "- id: wrong\n"
        "  argv: [classify, --n, '6', --k, '3']\n"
        "  expect:\n"
        "    values:\n"
        "      - {key: stabilizer, equals: '+Y'}\n"
        "- id: later\n"
        "  argv: [families, --k, '3']\n"
        "  expect: {}\n"
        "  skip: not needed\n",
        encoding="utf-8",
    )
    report = run_golden(checks, tmp_path / "out")
    assert report["summary"] == {"total": 2, "passed": 0, "failed": 1, "skipped": 1, "hard_failed": 0}
    assert report["results"][0]["failures"] == ["stabilizer: expected '+Y' got '+X'"]


def test_verify_command_reports_failure(tmp_path: Path, capsys):
    from hyperstate.cli import main

    checks = tmp_path / "checks.yaml"
    checks.write_text(
        "- id: wrong\n"
        "  argv: [families, --k, '3']\n"
        "  expect:\n"
        "    values:\n"
        "      - {key: modulus, equals: 8}\n",
        encoding="utf-8",
    )
    rc = main(["verify", "--checks", str(checks), "--out-dir", str(tmp_path / "out")])
    assert rc == 3
    obj = json.loads(capsys.readouterr().out)
    assert obj["status"] == "FAIL"
    assert obj["failed_ids"] == ["wrong"]
