"""Command result shaping (command_result_v0_1).

Every CLI command returns a flat JSON object:
- command / status / inputs
- headline values at top level
- methods: value name -> computation route (closed_form, contraction, numeric_opt, oracle)
- residuals: value name -> cross-check residual (dual-path values only)
- seed / version / wall_time_ms

Numbers are rounded to 15 significant digits; complex numbers become
{"re": ..., "im": ...}. wall_time_ms is the only field that differs
between identical runs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

from hyperstate import __version__

SIG_DIGITS = 15
METHODS = ("closed_form", "contraction", "numeric_opt", "oracle", "decomposition")


def schema_path() -> Path:
    return (
        Path(__file__).resolve().parents[1]
        / "docs"
        / "contracts"
        / "command_result_v0_1.schema.json"
    )


def fmt_real(x: float) -> float | str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0:
        return 0.0
    return float(f"{x:.{SIG_DIGITS}g}")


def to_jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return to_jsonable(value.value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return fmt_real(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        z = complex(value)
        return {"re": fmt_real(z.real), "im": fmt_real(z.imag)}
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}: {value!r}")


@dataclass
class CommandResult:
    command: str
    inputs: dict[str, Any]
    outputs: dict[str, Any] = field(default_factory=dict)
    methods: dict[str, str] = field(default_factory=dict)
    residuals: dict[str, float] = field(default_factory=dict)
    status: str = "OK"
    seed: int | None = None
    wall_time_ms: int = 0

    def put(self, name: str, value: Any, method: str | None = None, residual: float | None = None) -> None:
        if method is not None and method not in METHODS:
            raise ValueError(f"unknown method tag {method!r}")
        self.outputs[name] = value
        if method is not None:
            self.methods[name] = method
        if residual is not None:
            self.residuals[name] = residual

    def to_dict(self) -> dict[str, Any]:
        reserved = {"command", "status", "inputs", "methods", "residuals", "seed", "version", "wall_time_ms"}
        clash = reserved & set(self.outputs)
        if clash:
            raise ValueError(f"output names clash with reserved keys: {sorted(clash)!r}")
        obj: dict[str, Any] = {
            "command": self.command,
            "status": self.status,
            "inputs": to_jsonable(self.inputs),
        }
        obj.update(to_jsonable(self.outputs))
        obj["methods"] = dict(self.methods)
        obj["residuals"] = to_jsonable(self.residuals)
        obj["seed"] = self.seed
        obj["version"] = __version__
        obj["wall_time_ms"] = int(self.wall_time_ms)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


def validate_result(obj: dict, schema: dict | None = None) -> list[str]:
    from jsonschema import Draft202012Validator

    if schema is None:
        schema = json.loads(schema_path().read_text(encoding="utf-8"))
    v = Draft202012Validator(schema)
    errors = sorted(v.iter_errors(obj), key=lambda e: (list(e.path), e.message))
    return [f"{list(e.path)}: {e.message}" for e in errors]
