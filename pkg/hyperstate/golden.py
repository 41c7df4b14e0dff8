"""Golden check catalogue: load, validate, run.

Each check is one CLI invocation plus expectations on its JSON result:

  - id: geomeasure_h43_oracle
    argv: [geomeasure, --n, "4", --k, "3", --method, oracle]
    expect:
      exit_code: 0
      values:
        - {key: value, approx: 0.5716186271093947, tol: 1.0e-7}
        - {key: residuals.value, max: 1.0e-8}
    tags: [entanglement]

`key` is a dotted path into the result; integer parts index lists.
A check whose command dies with an unexpected exception is a hard failure.

Usage:
  python -m hyperstate.golden --out-dir runs/golden/RUN-...
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import yaml
from jsonschema import Draft202012Validator

RUNNER = "hyperstate_golden_v0.1"


def utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


def run_id() -> str:
    return datetime.now(timezone.utc).strftime("RUN-%Y%m%d-%H%M%S")


def repo_root() -> Path:
    return Path(__file__).resolve().parents[1]


def default_checks_path() -> Path:
    return repo_root() / "golden" / "checks.yaml"


def default_schema_path() -> Path:
    return repo_root() / "golden" / "schema.json"


def default_report_schema_path() -> Path:
    return repo_root() / "docs" / "contracts" / "golden_report_v0_1.schema.json"


def load_checks(path: Path) -> list[dict]:
    obj = yaml.safe_load(path.read_text(encoding="utf-8"))
    if not isinstance(obj, list):
        raise TypeError("checks must be a list")
    return obj


def validate_checks(checks: list[dict], schema: dict) -> list[str]:
    v = Draft202012Validator(schema)
    errors = sorted(v.iter_errors(checks), key=lambda e: (list(e.path), e.message))
    out = [f"{list(e.path)}: {e.message}" for e in errors]

    ids = [c.get("id") for c in checks if isinstance(c, dict)]
    dup = sorted({x for x in ids if x and ids.count(x) > 1})
    if dup:
        out.append(f"duplicate ids: {dup}")
    return out


def lookup(obj: Any, key: str) -> Any:
    cur = obj
    for part in key.split("."):
        if isinstance(cur, list):
            cur = cur[int(part)]
        elif isinstance(cur, dict):
            cur = cur[part]
        else:
            raise KeyError(key)
    return cur


def check_values(result: dict | None, expectations: list[dict]) -> list[str]:
    failures: list[str] = []
    for ex in expectations:
        key = ex["key"]
        try:
            got = lookup(result or {}, key)
        except (KeyError, IndexError, ValueError):
            failures.append(f"{key}: missing")
            continue
        if "equals" in ex and got != ex["equals"]:
            failures.append(f"{key}: expected {ex['equals']!r} got {got!r}")
        if "approx" in ex:
            tol = float(ex.get("tol", 1e-9))
            if not isinstance(got, (int, float)) or abs(got - ex["approx"]) > tol:
                failures.append(f"{key}: expected {ex['approx']!r}±{tol:g} got {got!r}")
        if "max" in ex and not (isinstance(got, (int, float)) and got <= ex["max"]):
            failures.append(f"{key}: expected <= {ex['max']!r} got {got!r}")
        if "min" in ex and not (isinstance(got, (int, float)) and got >= ex["min"]):
            failures.append(f"{key}: expected >= {ex['min']!r} got {got!r}")
    return failures


def run_check(check: dict) -> dict:
    from hyperstate.cli import execute

    expect = check.get("expect") or {}
    want_code = int(expect.get("exit_code", 0))
    if check.get("skip"):
        return {
            "id": check["id"],
            "argv": check["argv"],
            "status": "SKIP",
            "skip_reason": str(check.get("skip")),
            "exit_code": None,
            "failures": [],
            "hard_failed": False,
            "tags": check.get("tags", []),
        }

    hard = False
    try:
        code, result, _err = execute([str(a) for a in check["argv"]], log=False)
    except Exception as e:  # noqa: BLE001
        code, result, hard = -1, None, True
        failures = [f"crashed: {type(e).__name__}: {e}"]
    else:
        failures = []
        if code != want_code:
            failures.append(f"exit_code: expected {want_code} got {code}")
        failures += check_values(result, expect.get("values") or [])

    return {
        "id": check["id"],
        "argv": [str(a) for a in check["argv"]],
        "status": "PASS" if not failures else "FAIL",
        "skip_reason": None,
        "exit_code": code,
        "failures": failures,
        "hard_failed": hard,
        "tags": check.get("tags", []),
    }


def render_markdown(report: dict) -> str:
    s = report["summary"]
    lines = [
        f"# Golden Report ({report['run_id']})",
        "",
        f"- created_at: {report['created_at']}",
        f"- total: {s['total']}",
        f"- passed: {s['passed']}",
        f"- failed: {s['failed']}",
        f"- skipped: {s['skipped']}",
        "",
    ]
    for r in report["results"]:
        lines.append(f"## {r['id']}: {r['status']}")
        lines.append("argv: " + " ".join(r["argv"]))
        for f in r["failures"]:
            lines.append(f"- {f}")
        lines.append("")
    return "\n".join(lines) + "\n"


def validate_report(report: dict, schema_path: Path) -> list[str]:
    schema = json.loads(schema_path.read_text(encoding="utf-8"))
    v = Draft202012Validator(schema)
    errors = sorted(v.iter_errors(report), key=lambda e: (list(e.path), e.message))
    return [f"{list(e.path)}: {e.message}" for e in errors]


def run_golden(
    checks_path: Path | None = None,
    out_dir: Path | None = None,
    only: list[str] | None = None,
) -> dict:
    checks_path = checks_path or default_checks_path()
    checks = load_checks(checks_path)
    errs = validate_checks(checks, json.loads(default_schema_path().read_text(encoding="utf-8")))
    if errs:
        raise ValueError("invalid golden checks: " + "; ".join(errs))
    if only:
        checks = [c for c in checks if c["id"] in only]

    results = [run_check(c) for c in checks]
    summary = {
        "total": len(results),
        "passed": sum(1 for r in results if r["status"] == "PASS"),
        "failed": sum(1 for r in results if r["status"] == "FAIL"),
        "skipped": sum(1 for r in results if r["status"] == "SKIP"),
        "hard_failed": sum(1 for r in results if r["hard_failed"]),
    }
    report = {
        "run_id": out_dir.name if out_dir else run_id(),
        "created_at": utc_now(),
        "runner": RUNNER,
        "summary": summary,
        "results": results,
    }

    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        schema_errs = validate_report(report, default_report_schema_path())
        if schema_errs:
            (out_dir / "report.schema_errors.txt").write_text(
                "\n".join(schema_errs) + "\n", encoding="utf-8"
            )
        (out_dir / "report.json").write_text(
            json.dumps(report, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
        (out_dir / "report.md").write_text(render_markdown(report), encoding="utf-8")
    return report


def main(argv: list[str] | None = None) -> int:
    import argparse

    p = argparse.ArgumentParser()
    p.add_argument("--checks", default=str(default_checks_path()))
    p.add_argument("--out-dir", default=str(Path("runs") / "golden" / run_id()))
    p.add_argument("--only", action="append", default=None, help="check id (repeatable)")
    ns = p.parse_args(argv)

    report = run_golden(Path(ns.checks), Path(ns.out_dir), ns.only)
    print(json.dumps(report["summary"], ensure_ascii=False))
    return 0 if report["summary"]["failed"] == 0 else 3


if __name__ == "__main__":
    raise SystemExit(main())
