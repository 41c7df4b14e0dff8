import json
from pathlib import Path


def test_logger_writes_jsonl(tmp_path: Path):
    from hyperstate.logger import log_event

    p = tmp_path / "a.jsonl"
    log_event(event="HS_X", log_path=p, tool="t", diagnostics={"k": 1})
    log_event(event="HS_Y", log_path=p, custom="extra")

    lines = p.read_text(encoding="utf-8").splitlines()
    obj = json.loads(lines[0])
    assert obj["event"] == "HS_X"
    assert obj["tool"] == "t"
    assert json.loads(lines[1])["custom"] == "extra"


def test_log_event_matches_contract(tmp_path: Path):
    from jsonschema import Draft202012Validator

    from hyperstate.logger import log_event

    schema = json.loads(
        Path("docs/contracts/log_event_v0_1.schema.json").read_text(encoding="utf-8")
    )
    obj = log_event(event="HS_CLASSIFY", log_path=tmp_path / "b.jsonl", tool="hyperstate")
    assert list(Draft202012Validator(schema).iter_errors(obj)) == []


def test_default_log_path(tmp_path: Path, monkeypatch):
    from hyperstate.logger import default_log_path

    assert default_log_path("hs", tmp_path) == tmp_path / "hs.jsonl"
    monkeypatch.setenv("HYPERSTATE_LOG_DIR", str(tmp_path / "env"))
    assert default_log_path("hs") == tmp_path / "env" / "hs.jsonl"
    monkeypatch.delenv("HYPERSTATE_LOG_DIR")
    assert default_log_path("hs").parent.name == "logs"
