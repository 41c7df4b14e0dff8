from pathlib import Path


def test_golden_checks_validate_ok():
    import json

    from hyperstate.golden import load_checks, validate_checks

    schema = json.loads(Path("golden/schema.json").read_text(encoding="utf-8"))
    checks = load_checks(Path("golden/checks.yaml"))
    errs = validate_checks(checks, schema)
    assert errs == []


def test_duplicate_ids_are_reported():
    import json

    from hyperstate.golden import validate_checks

    schema = json.loads(Path("golden/schema.json").read_text(encoding="utf-8"))
    check = {"id": "a", "argv": ["families", "--k", "3"], "expect": {}}
    errs = validate_checks([check, dict(check)], schema)
    assert any("duplicate" in e for e in errs)


def test_check_values():
    from hyperstate.golden import check_values, lookup

    result = {"value": 0.5, "amplitudes": [{"re": -0.5}], "stabilizer": "+X"}
    assert lookup(result, "amplitudes.0.re") == -0.5
    assert check_values(
        result,
        [
            {"key": "value", "approx": 0.5000001, "tol": 1e-6},
            {"key": "stabilizer", "equals": "+X"},
            {"key": "value", "max": 1.0, "min": 0.0},
        ],
    ) == []
    fails = check_values(result, [{"key": "missing"}, {"key": "value", "approx": 0.4}])
    assert fails == [
        "missing: missing",
        "value: expected 0.4±1e-09 got 0.5",
    ]
