"""Parameter sweeps driven by YAML configs (sweep_v0_1).

Config shape (see docs/contracts/sweep_v0_1.schema.json):

  name: single_edge
  kind: single_edge | mermin_odd | geomeasure_families
  ...kind-specific keys

Kinds:
  single_edge          E_G of the single N-edge state over an N range
  mermin_odd           log2 of the Y-Mermin value for odd families, r in {3,4,5}
  geomeasure_families  E_G of k-uniform families (closed form, bounds or numeric);
                       with conjecture: true, families of the 2^{r-1}+1 shape get
                       an extra "CONJECTURE k=..." series (bound in value, numeric
                       minus bound in extra)

Every point becomes one CSV row with the columns in COLUMNS; rows are
sorted by (series, n) before writing, so output does not depend on the
worker count.

Usage:
  python -m hyperstate.sweep --sweep single_edge --csv runs/single_edge.csv
  python -m hyperstate.sweep --sweep sweeps/mermin_odd.yaml --csv runs/mermin_odd.csv --workers 4
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

import yaml

COLUMNS = ("series", "n", "value", "method", "residual", "lower", "upper", "extra")
KINDS = ("single_edge", "mermin_odd", "geomeasure_families")


def repo_root() -> Path:
    return Path(__file__).resolve().parents[1]


def schema_path() -> Path:
    return repo_root() / "docs" / "contracts" / "sweep_v0_1.schema.json"


def resolve_sweep_path(name_or_path: str) -> Path:
    p = Path(name_or_path)
    if p.suffix in (".yaml", ".yml") or p.exists():
        return p
    return repo_root() / "sweeps" / f"{name_or_path}.yaml"


def load_sweep(path: str | Path) -> dict[str, Any]:
    p = resolve_sweep_path(str(path))
    obj = yaml.safe_load(p.read_text(encoding="utf-8"))
    if not isinstance(obj, dict):
        raise TypeError(f"sweep config must be a mapping: {str(p)!r}")
    errs = validate_sweep(obj)
    if errs:
        raise ValueError(f"invalid sweep config {str(p)!r}: " + "; ".join(errs))
    return obj


def validate_sweep(obj: dict, schema: dict | None = None) -> list[str]:
    from jsonschema import Draft202012Validator

    if schema is None:
        schema = json.loads(schema_path().read_text(encoding="utf-8"))
    v = Draft202012Validator(schema)
    errors = sorted(v.iter_errors(obj), key=lambda e: (list(e.path), e.message))
    out = [f"{list(e.path)}: {e.message}" for e in errors]

    # ranges the schema cannot express
    lo, hi = obj.get("n_min"), obj.get("n_max")
    if isinstance(lo, int) and isinstance(hi, int) and lo > hi:
        out.append(f"n_min {lo} > n_max {hi}")
    return out


# -- point tasks (top-level so they pickle) -----------------------------------


def _single_edge_point(n: int, cross_check: bool) -> dict[str, Any]:
    from hyperstate.entanglement import geomeasure_symmetric_numeric, single_edge_geomeasure
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric

    res = single_edge_geomeasure(n)
    row = {"series": "single_edge", "n": n, "value": res.value, "method": "numeric_opt"}
    if cross_check:
        alt = geomeasure_symmetric_numeric(
            build_symmetric(HypergraphSpec.complete(n, (n,))), allow_phase=True
        )
        row["residual"] = abs(res.value - alt.value)
    return row


def _mermin_odd_point(r: int, n: int) -> dict[str, Any]:
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric
    from hyperstate.nonlocality import MerminSpec, mermin_expectation, mermin_odd_correction

    k = 2 ** (r - 1) + 1
    s = build_symmetric(HypergraphSpec.complete(n, k))
    qv = abs(mermin_expectation(s, MerminSpec(n, "Y")).real)
    closed = 2.0 ** (n - 2) + mermin_odd_correction(r, n)
    return {
        "series": f"r={r}",
        "n": n,
        "value": math.log2(qv),
        "method": "contraction",
        "residual": abs(qv - closed) / closed,
        "extra": math.log2(qv) - (n - 2),
    }


def _series(k: tuple[int, ...]) -> str:
    return "k=" + "+".join(str(x) for x in k)


def _geomeasure_point(k: tuple[int, ...], n: int, log_gap: bool) -> dict[str, Any]:
    from hyperstate.entanglement import BoundsResult, geomeasure_compare, numeric_for_family
    from hyperstate.errors import UnsupportedFamily

    series = _series(k)
    try:
        res = geomeasure_compare(n, k)
    except UnsupportedFamily:
        res = None
    if res is None:
        # no closed form or bounds: numeric optimum only
        value = numeric_for_family(n, k).value
        row = {"series": series, "n": n, "method": "numeric_opt"}
    elif isinstance(res, BoundsResult):
        value = res.numeric
        row = {"series": series, "n": n, "method": "numeric_opt", "lower": res.lower, "upper": res.upper}
    else:
        value = res.value
        row = {"series": series, "n": n, "method": "closed_form", "residual": res.residual_vs_alternate}
    row["value"] = value
    if log_gap:
        row["extra"] = math.log10(0.75 - value)
    return row


def _conjecture_point(k: tuple[int, ...], n: int) -> dict[str, Any]:
    from hyperstate.entanglement import conjecture_for_family, numeric_for_family

    conj = conjecture_for_family(n, k, numeric_for_family(n, k).value)
    return {
        "series": f"{conj.label} {_series(k)}",
        "n": n,
        "value": conj.bound,
        "method": conj.label,
        "extra": conj.gap,
    }


# -- planning ----------------------------------------------------------------


def plan_points(cfg: dict[str, Any]) -> list[tuple]:
    kind = cfg["kind"]
    if kind not in KINDS:
        raise ValueError(f"unknown sweep kind {kind!r}, expected one of {KINDS!r}")
    if kind == "single_edge":
        return [
            (_single_edge_point, n, bool(cfg.get("cross_check", True)))
            for n in range(cfg["n_min"], cfg["n_max"] + 1)
        ]
    if kind == "mermin_odd":
        pts = []
        for r in cfg["r"]:
            period = 2**r
            k = period // 2 + 1
            for n in range(period // 2, cfg["n_max"] + 1, period):
                if n >= k:
                    pts.append((_mermin_odd_point, r, n))
        return pts
    from hyperstate.entanglement import conjecture_for_family

    pts = []
    for fam in cfg["families"]:
        k = tuple(sorted(fam["k"]))
        for n in fam["n"]:
            pts.append((_geomeasure_point, k, n, bool(cfg.get("log_gap", False))))
            if cfg.get("conjecture") and conjecture_for_family(n, k) is not None:
                pts.append((_conjecture_point, k, n))
    return pts


def _call(point: tuple) -> dict[str, Any]:
    fn, *args = point
    return fn(*args)


def run_sweep(cfg: dict[str, Any], workers: int = 1) -> list[dict[str, Any]]:
    points = plan_points(cfg)
    if not points:
        raise ValueError(f"sweep {cfg.get('name')!r} has no points")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_call, points))
    else:
        rows = [_call(p) for p in points]
    rows.sort(key=lambda r: (str(r["series"]), int(r["n"])))
    return rows


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(float(f"{v:.15g}"))
    return str(v)


def write_csv(rows: list[dict[str, Any]], out: str | Path) -> Path:
    p = Path(out)
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("w", encoding="utf-8", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in COLUMNS])
    return p


def main(argv: list[str] | None = None) -> int:
    import argparse

    p = argparse.ArgumentParser()
    p.add_argument("--sweep", required=True, help="sweep name under sweeps/ or a YAML path")
    p.add_argument("--csv", required=True)
    p.add_argument("--workers", type=int, default=1)
    ns = p.parse_args(argv)

    cfg = load_sweep(ns.sweep)
    rows = run_sweep(cfg, workers=ns.workers)
    write_csv(rows, ns.csv)
    print(json.dumps({"name": cfg["name"], "rows": len(rows), "csv": str(ns.csv)}, ensure_ascii=False))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
