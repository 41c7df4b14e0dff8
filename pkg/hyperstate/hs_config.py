"""hyperstate config (v0.1): load and validate runtime limits and defaults.

Config format: JSON (hs_config_v0_1.schema.json)
Example:
{
  "dense_cap": 20,
  "restarts": 64,
  "seed": 7,
  "log_dir": "runs/logs"
}

Rules:
- missing keys fall back to DEFAULTS
- HYPERSTATE_DENSE_CAP / HYPERSTATE_CONTRACTION_CAP override file values

Usage:
  python -m hyperstate.hs_config --config hs_config.json
"""

from __future__ import annotations

import json
import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any

DEFAULTS: dict[str, Any] = {
    "dense_cap": 24,
    "contraction_cap": 128,
    "restarts": 32,
    "seed": 20240101,
    "tol": 1e-9,
    "log_dir": None,
    "workers": 1,
}

ENV_OVERRIDES = {
    "HYPERSTATE_DENSE_CAP": "dense_cap",
    "HYPERSTATE_CONTRACTION_CAP": "contraction_cap",
}


def schema_path() -> Path:
    return (
        Path(__file__).resolve().parents[1]
        / "docs"
        / "contracts"
        / "hs_config_v0_1.schema.json"
    )


def load_config(path: str | Path) -> dict[str, Any]:
    p = Path(path)
    obj = json.loads(p.read_text(encoding="utf-8"))
    if not isinstance(obj, dict):
        raise TypeError("config must be a JSON object")

    # validate best-effort
    try:
        import jsonschema

        schema = json.loads(schema_path().read_text(encoding="utf-8"))
        jsonschema.Draft202012Validator(schema).validate(obj)
    except ImportError:
        pass
    except Exception as e:
        raise ValueError(f"invalid config {str(p)!r}: {e}") from e

    out = dict(DEFAULTS)
    out.update(obj)
    return out


def resolve_config(
    path: str | Path | None = None, env: Mapping[str, str] | None = None
) -> dict[str, Any]:
    cfg = load_config(path) if path else dict(DEFAULTS)
    env = os.environ if env is None else env
    for var, key in ENV_OVERRIDES.items():
        raw = env.get(var)
        if raw in (None, ""):
            continue
        try:
            val = int(raw)
        except ValueError as e:
            raise ValueError(f"{var} must be an integer, got {raw!r}") from e
        if val < 1:
            raise ValueError(f"{var} must be >= 1, got {val!r}")
        cfg[key] = val
    return cfg


def dense_cap(env: Mapping[str, str] | None = None) -> int:
    return int(resolve_config(env=env)["dense_cap"])


def contraction_cap(env: Mapping[str, str] | None = None) -> int:
    return int(resolve_config(env=env)["contraction_cap"])


def main(argv: list[str] | None = None) -> int:
    import argparse

    ap = argparse.ArgumentParser()
    ap.add_argument("--config", default=None)
    ns = ap.parse_args(argv)

    cfg = resolve_config(ns.config)
    print(json.dumps(cfg, ensure_ascii=False, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
