from pathlib import Path

import pytest


@pytest.mark.parametrize(
    "name", ["single_edge", "mermin_odd", "geomeasure_families", "geomeasure_gap", "geomeasure_conjecture"]
)
def test_bundled_sweeps_validate(name):
    from hyperstate.sweep import load_sweep

    cfg = load_sweep(name)
    assert cfg["name"] == name


def test_validate_sweep_errors():
    from hyperstate.sweep import validate_sweep

    assert validate_sweep({"name": "x", "kind": "single_edge", "n_min": 3, "n_max": 5}) == []
    errs = validate_sweep({"name": "x", "kind": "single_edge", "n_min": 6, "n_max": 5})
    assert any("n_min" in e for e in errs)
    assert validate_sweep({"name": "x", "kind": "mermin_odd", "r": [3]}) != []
    assert validate_sweep({"name": "x", "kind": "nope"}) != []


def test_load_sweep_rejects_bad_files(tmp_path: Path):
    from hyperstate.sweep import load_sweep

    p = tmp_path / "bad.yaml"
    p.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(TypeError):
        load_sweep(p)
    p.write_text("name: x\nkind: single_edge\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_sweep(p)


def test_plan_points():
    from hyperstate.sweep import load_sweep, plan_points

    assert len(plan_points(load_sweep("single_edge"))) == 8
    # r=3: 12, 20, 28, 36, 44; r=4: 24, 40; r=5: 48
    pts = plan_points(load_sweep("mermin_odd"))
    assert sorted((p[1], p[2]) for p in pts) == [
        (3, 12), (3, 20), (3, 28), (3, 36), (3, 44), (4, 24), (4, 40), (5, 48)
    ]


def test_run_sweep_and_write_csv(tmp_path: Path):
    from hyperstate.sweep import COLUMNS, run_sweep, write_csv

    cfg = {"name": "t", "kind": "single_edge", "n_min": 3, "n_max": 5, "cross_check": False}
    rows = run_sweep(cfg)
    assert [r["n"] for r in rows] == [3, 4, 5]
    assert rows[0]["value"] > rows[1]["value"] > rows[2]["value"]

    out = write_csv(rows, tmp_path / "csv" / "t.csv")
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(COLUMNS)
    assert len(lines) == 4


def test_geomeasure_family_rows():
    from hyperstate.sweep import run_sweep

    cfg = {
        "name": "t",
        "kind": "geomeasure_families",
        "log_gap": True,
        "families": [{"k": [3], "n": [6, 4]}],
    }
    rows = run_sweep(cfg)
    assert [r["n"] for r in rows] == [4, 6]
    bounded, exact = rows
    assert bounded["method"] == "numeric_opt"
    assert bounded["lower"] <= bounded["value"] <= bounded["upper"]
    assert exact["value"] == 0.609375
    assert exact["residual"] < 1e-9
    assert exact["extra"] == pytest.approx(-0.8519374645445622)


def test_sweep_cli(tmp_path: Path, capsys):
    import json

    from hyperstate.cli import main

    cfg = tmp_path / "s.yaml"
    cfg.write_text("name: s\nkind: single_edge\nn_min: 3\nn_max: 4\ncross_check: false\n", encoding="utf-8")
    out = tmp_path / "s.csv"
    assert main(["sweep", "--sweep", str(cfg), "--csv", str(out)]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["rows"] == 2
    assert out.exists()


def test_plan_points_rejects_unknown_kind():
    from hyperstate.sweep import plan_points

    with pytest.raises(ValueError, match="unknown sweep kind"):
        plan_points({"name": "x", "kind": "nope"})


def test_conjecture_series_rows():
    from hyperstate.sweep import run_sweep

    cfg = {
        "name": "t",
        "kind": "geomeasure_families",
        "conjecture": True,
        "families": [{"k": [5], "n": [12]}, {"k": [9], "n": [16]}],
    }
    rows = run_sweep(cfg)
    assert [(r["series"], r["n"]) for r in rows] == [
        ("CONJECTURE k=5", 12),
        ("k=5", 12),
        ("k=9", 16),
    ]
    conj, exact, nine = rows
    assert conj["method"] == "CONJECTURE"
    assert conj["value"] == pytest.approx(exact["value"], abs=1e-12)
    assert abs(conj["extra"]) < 1e-9
    # no closed form or bounds for 9-uniform: numeric only
    assert nine["method"] == "numeric_opt"
    assert 0 < nine["value"] < 0.75


def test_conjecture_series_planned_only_when_enabled():
    from hyperstate.sweep import _conjecture_point, load_sweep, plan_points

    cfg = load_sweep("geomeasure_conjecture")
    conj = sorted((p[1], p[2]) for p in plan_points(cfg) if p[0] is _conjecture_point)
    assert conj == [((5,), 12), ((5,), 20), ((5,), 28), ((9,), 24), ((9,), 40)]

    cfg["conjecture"] = False
    assert not any(p[0] is _conjecture_point for p in plan_points(cfg))
