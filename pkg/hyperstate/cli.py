"""hyperstate command line.

Every command prints one JSON object (command_result_v0_1) to stdout.

Exit codes:
  0  success
  2  usage or domain error (message on stderr)
  3  cross-check failure (both values on stderr), or failed golden checks

Usage:
  python -m hyperstate classify --n 6 --k 3
  python -m hyperstate build --n 4 --k 3
  python -m hyperstate transform --n 6 --k 3 --pauli x --method all
  python -m hyperstate decompose --n 12 --k 5
  python -m hyperstate geomeasure --n 4 --k 3 --method oracle
  python -m hyperstate geomeasure --n 4 --edges "[[0,2,3],[1,2,3]]" --method oracle --hadamard 0,1
  python -m hyperstate single-edge --n 5 --method all
  python -m hyperstate mermin --n 6 --k 3 --pauli x
  python -m hyperstate robustness --n 6 --lost 1
  python -m hyperstate families --k 5,3
  python -m hyperstate verify --out-dir runs/golden/RUN-...
  python -m hyperstate sweep --sweep single_edge --csv runs/single_edge.csv
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path
from typing import Any

import numpy as np

from hyperstate import __version__
from hyperstate.errors import CrossCheckFailed, HyperstateError
from hyperstate.hs_config import resolve_config
from hyperstate.hypergraph import HypergraphSpec, StabilizerClass, parse_k
from hyperstate.report import CommandResult

METHOD_CHOICES = ("auto", "closed", "numeric", "oracle", "all")
ORACLE_TOL = 1e-7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


# -- argument helpers ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", default=None, help="hs_config JSON file")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--restarts", type=int, default=None)
    common.add_argument("--out", default=None, help="also write the JSON result here")

    state = _Parser(add_help=False)
    state.add_argument("--n", type=int, required=True)
    g = state.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", default=None, help="cardinality vector, comma list")
    g.add_argument("--edges", default=None, help='explicit hyperedges as JSON, e.g. "[[0,1,2]]"')

    p = _Parser(prog="hyperstate")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    sub.add_parser("classify", parents=[common, state]).add_argument(
        "--method", choices=METHOD_CHOICES, default="auto"
    )
    p_build = sub.add_parser("build", parents=[common, state])
    p_build.add_argument("--method", choices=METHOD_CHOICES, default="auto")

    p_tr = sub.add_parser("transform", parents=[common, state])
    p_tr.add_argument("--pauli", type=str.upper, choices=["X", "Y", "Z"], default=None)
    p_tr.add_argument("--branch", choices=["+", "-"], default="+")
    p_tr.add_argument("--path", default="general", help="closed-form path")
    p_tr.add_argument("--method", choices=METHOD_CHOICES, default="auto")

    p_dec = sub.add_parser("decompose", parents=[common, state])
    p_dec.add_argument("--pauli", type=str.upper, choices=["X", "Y"], default=None)

    p_gm = sub.add_parser("geomeasure", parents=[common, state])
    p_gm.add_argument("--method", choices=METHOD_CHOICES, default="auto")
    p_gm.add_argument("--hadamard", default=None, help="sites to rotate by H before the oracle")
    p_gm.add_argument("--real-only", action="store_true")

    p_se = sub.add_parser("single-edge", parents=[common])
    p_se.add_argument("--n", type=int, required=True)
    p_se.add_argument("--method", choices=METHOD_CHOICES, default="auto")

    p_me = sub.add_parser("mermin", parents=[common, state])
    p_me.add_argument("--pauli", type=str.upper, choices=["X", "Y"], default="X")
    p_me.add_argument("--method", choices=METHOD_CHOICES, default="auto")
    p_me.add_argument("--strict", action="store_true")

    p_rb = sub.add_parser("robustness", parents=[common])
    p_rb.add_argument("--n", type=int, required=True)
    p_rb.add_argument("--lost", type=int, required=True)
    p_rb.add_argument("--variant", choices=["auto", "M0", "M1"], default="auto")
    p_rb.add_argument("--method", choices=METHOD_CHOICES, default="auto")

    p_fam = sub.add_parser("families", parents=[common])
    p_fam.add_argument("--k", required=True)
    p_fam.add_argument("--limit", type=int, default=16)

    p_ver = sub.add_parser("verify", parents=[common])
    p_ver.add_argument("--checks", default=None)
    p_ver.add_argument("--out-dir", default=None)
    p_ver.add_argument("--only", action="append", default=None)

    p_sw = sub.add_parser("sweep", parents=[common])
    p_sw.add_argument("--sweep", dest="sweep", required=True, help="name under sweeps/ or YAML path")
    p_sw.add_argument("--csv", dest="csv", required=True)
    p_sw.add_argument("--workers", type=int, default=None)
    return p


def spec_from_args(ns: argparse.Namespace) -> HypergraphSpec:
    if ns.k is not None:
        return HypergraphSpec.complete(ns.n, parse_k(ns.k))
    try:
        edges = json.loads(ns.edges)
    except json.JSONDecodeError as e:
        raise ValueError(f"--edges must be JSON, got {ns.edges!r}") from e
    if not isinstance(edges, list):
        raise TypeError(f"--edges must be a JSON list, got {type(edges).__name__}")
    return HypergraphSpec.from_edges(ns.n, edges)


def _sites(raw: str | None) -> list[int]:
    return [int(x) for x in raw.split(",") if x.strip()] if raw else []


def _wants(method: str, *names: str) -> bool:
    return method == "all" or method in names


def _cross_check(name: str, a: float, b: float, tol: float, labels=("a", "b")) -> float:
    residual = abs(a - b)
    if residual > tol * max(1.0, abs(a)):
        raise CrossCheckFailed(
            f"{name}: {labels[0]}={a!r} vs {labels[1]}={b!r} (residual {residual:.3e})",
            {labels[0]: a, labels[1]: b},
        )
    return residual


# -- commands ---------------------------------------------------------------------


def cmd_classify(ns, cfg, res: CommandResult) -> None:
    from hyperstate.dense import build_dense, pauli_eigenvalue
    from hyperstate.hypergraph import classify_stabilizer

    spec = spec_from_args(ns)
    oracle = None
    if spec.k is not None:
        stab = classify_stabilizer(spec)
        res.put("stabilizer", stab, "closed_form")
    if spec.k is None or _wants(ns.method, "oracle"):
        state = build_dense(spec, cfg["dense_cap"])
        ex, ey = pauli_eigenvalue(state, "X"), pauli_eigenvalue(state, "Y")
        if ex == 1:
            oracle = StabilizerClass.PLUS_X
        elif ex == -1:
            oracle = StabilizerClass.MINUS_X
        elif ey == 1:
            oracle = StabilizerClass.PLUS_Y
        else:
            oracle = StabilizerClass.NONE
        res.put("oracle_stabilizer" if spec.k is not None else "stabilizer", oracle, "oracle")
    if spec.k is not None and oracle is not None and oracle is not stab:
        raise CrossCheckFailed(
            f"classification {stab.value} != oracle {oracle.value}",
            {"closed_form": stab.value, "oracle": oracle.value},
        )


def cmd_build(ns, cfg, res: CommandResult) -> None:
    from hyperstate.dense import build_dense
    from hyperstate.hypergraph import build_symmetric
    from hyperstate.states import NORM_TOL, dense_weight_projection, symmetric_from_dense

    spec = spec_from_args(ns)
    if spec.is_symmetric:
        s = build_symmetric(spec)
        res.put("amplitudes", s.amp, "closed_form")
        res.put("norm_sq", s.norm_sq())
        if _wants(ns.method, "oracle"):
            proj, asym = dense_weight_projection(build_dense(spec, cfg["dense_cap"]))
            r = float(np.max(np.abs(proj - s.amp)))
            res.put("oracle_residual", max(r, asym), "oracle", residual=max(r, asym))
            if max(r, asym) > 1e-12:
                raise CrossCheckFailed(
                    f"symmetric build differs from gate-by-gate build by {r:.3e}",
                    {"residual": r, "asymmetry": asym},
                )
        return
    d = build_dense(spec, cfg["dense_cap"])
    res.put("dense_amplitudes", d.amp.real, "oracle")
    res.put("norm_sq", d.norm_sq())
    _, asym = dense_weight_projection(d)
    res.put("symmetric", asym <= NORM_TOL)
    res.put("asymmetry", asym, residual=asym)
    if asym <= NORM_TOL:
        # edge list that happens to be permutation symmetric
        res.put("amplitudes", symmetric_from_dense(d).amp, "oracle")


def _default_pauli(spec: HypergraphSpec) -> str:
    from hyperstate.hypergraph import classify_stabilizer

    p = classify_stabilizer(spec).pauli
    if p is None:
        raise ValueError(f"{spec.as_dict()!r} has no Pauli stabilizer; pass --pauli")
    return p


def cmd_transform(ns, cfg, res: CommandResult) -> None:
    from hyperstate.dense import apply_all, build_dense
    from hyperstate.hypergraph import build_symmetric, classify_stabilizer
    from hyperstate.states import dense_weight_projection
    from hyperstate.transforms import apply_tensor_power, closed_form_amplitudes, sqrt_pauli

    spec = spec_from_args(ns)
    if spec.k is None:
        raise ValueError("transform needs a cardinality-vector spec (--k)")
    p = ns.pauli or _default_pauli(spec)
    op = sqrt_pauli(p, ns.branch)
    out = apply_tensor_power(build_symmetric(spec), op, cfg["contraction_cap"])
    res.put("pauli", p)
    res.put("branch", ns.branch)
    res.put("amplitudes", out.amp, "contraction")

    tol = cfg["tol"]
    worst = 0.0
    stab = classify_stabilizer(spec)
    run_closed = ns.method == "closed" or (
        ns.method == "all" and ns.branch == "+" and stab.pauli == p and stab.sign == 1
    )
    if run_closed:
        closed = closed_form_amplitudes(spec.n_qubits, spec.k, ns.path)
        r = float(np.max(np.abs(closed - out.amp)))
        res.put("closed_form_residual", r, "closed_form", residual=r)
        worst = max(worst, r)
    if _wants(ns.method, "oracle"):
        dense = apply_all(build_dense(spec, cfg["dense_cap"]), op)
        proj, asym = dense_weight_projection(dense)
        r = max(float(np.max(np.abs(proj - out.amp))), asym)
        res.put("oracle_residual", r, "oracle", residual=r)
        worst = max(worst, r)
    if worst > max(tol, 1e-10):
        raise CrossCheckFailed(
            f"transformed amplitudes disagree across paths (residual {worst:.3e})",
            {"residual": worst},
        )


def cmd_decompose(ns, cfg, res: CommandResult) -> None:
    from hyperstate.errors import UnsupportedFamily
    from hyperstate.hypergraph import build_symmetric
    from hyperstate.transforms import apply_tensor_power, canonical_form, ghz_odd_decompose, sqrt_pauli

    spec = spec_from_args(ns)
    if spec.k is None:
        raise ValueError("decompose needs a cardinality-vector spec (--k)")
    p = ns.pauli or _default_pauli(spec)
    out = apply_tensor_power(build_symmetric(spec), sqrt_pauli(p, "+"), cfg["contraction_cap"])
    try:
        expected = canonical_form(spec)
    except UnsupportedFamily:
        expected = None
    dec = ghz_odd_decompose(out, expected=expected)
    res.put("pauli", p)
    res.put("ghz_sign", dec.ghz_sign, "decomposition", residual=dec.residual)
    res.put("ghz_basis", dec.ghz_basis)
    res.put("ghz_phase", dec.ghz_phase)
    res.put("relative_sign", dec.relative_sign)
    res.put("odd_amplitudes", dec.odd_amp)
    res.put("canonical_residual", dec.form_residual)


def _oracle_geomeasure(ns, cfg, spec: HypergraphSpec) -> tuple[float, dict[str, Any]]:
    from hyperstate.dense import apply_local, build_dense, product_state_optimize
    from hyperstate.transforms import hadamard

    state = build_dense(spec, cfg["dense_cap"])
    sites = _sites(getattr(ns, "hadamard", None))
    if sites:
        state = apply_local(state, [hadamard()] * len(sites), sites)
    opt = product_state_optimize(
        state,
        restarts=cfg["restarts"],
        real_only=bool(getattr(ns, "real_only", False)),
        seed=cfg["seed"],
        cap=cfg["dense_cap"],
    )
    return opt.value, {"angles": [list(a) for a in opt.angles], "converged_restarts": opt.converged}


def cmd_geomeasure(ns, cfg, res: CommandResult) -> None:
    from hyperstate.entanglement import conjecture_for_family

    _geomeasure_values(ns, cfg, res)
    spec = spec_from_args(ns)
    if spec.k is not None:
        conj = conjecture_for_family(spec.n_qubits, spec.k, res.outputs.get("value"))
        if conj is not None:
            res.put("conjecture", conj.as_dict())


def _geomeasure_values(ns, cfg, res: CommandResult) -> None:
    from hyperstate.entanglement import BoundsResult, geomeasure_closed, numeric_for_family
    from hyperstate.errors import UnsupportedFamily

    spec = spec_from_args(ns)
    tol = cfg["tol"]
    method = ns.method
    closed = None
    if spec.k is not None and method in ("auto", "closed", "all"):
        try:
            closed = geomeasure_closed(spec.n_qubits, spec.k)
        except UnsupportedFamily:
            if method == "closed":
                raise
    numeric = None
    if spec.k is not None and (
        _wants(method, "numeric")
        or (method == "auto" and (closed is None or isinstance(closed, BoundsResult)))
    ):
        numeric = numeric_for_family(spec.n_qubits, spec.k)
    oracle = None
    if _wants(method, "oracle") or (method == "auto" and spec.k is None):
        oracle, diag = _oracle_geomeasure(ns, cfg, spec)
        res.put("oracle_angles", diag["angles"])

    checks: list[tuple[str, float]] = []
    if numeric is not None:
        res.put("numeric", numeric.value, "numeric_opt")
        res.put("optimizer_theta", numeric.optimizer_theta)
        res.put("optimizer_phi", numeric.optimizer_phi)
        checks.append(("numeric", numeric.value))
    if oracle is not None:
        res.put("oracle", oracle, "oracle")
        checks.append(("oracle", oracle))

    if isinstance(closed, BoundsResult):
        res.put("lower", closed.lower, "closed_form")
        res.put("upper", closed.upper, "closed_form")
        for name, v in checks:
            if not closed.lower - tol <= v <= closed.upper + tol:
                raise CrossCheckFailed(
                    f"{name} E_G {v!r} outside bounds [{closed.lower!r}, {closed.upper!r}]",
                    {name: v, "lower": closed.lower, "upper": closed.upper},
                )
        if checks:
            res.put("value", checks[0][1], "numeric_opt" if checks[0][0] == "numeric" else "oracle")
            res.put("strictly_inside", closed.lower + 1e-6 < checks[0][1] < closed.upper - 1e-6)
        return

    if closed is not None:
        worst = 0.0
        for name, v in checks:
            worst = max(
                worst,
                _cross_check("E_G", closed.value, v, tol if name == "numeric" else ORACLE_TOL, ("closed_form", name)),
            )
        res.put("value", closed.value, "closed_form", residual=worst if checks else None)
        return

    if not checks:
        raise UnsupportedFamily(f"no method available for {spec.as_dict()!r} with --method {method}")
    if len(checks) == 2:
        r = _cross_check("E_G", checks[0][1], checks[1][1], ORACLE_TOL, ("numeric", "oracle"))
        res.put("value", checks[0][1], "numeric_opt", residual=r)
    else:
        res.put("value", checks[0][1], "numeric_opt" if checks[0][0] == "numeric" else "oracle")


def cmd_single_edge(ns, cfg, res: CommandResult) -> None:
    from hyperstate.entanglement import geomeasure_symmetric_numeric, single_edge_geomeasure
    from hyperstate.hypergraph import build_symmetric

    n = ns.n
    r1 = single_edge_geomeasure(n)
    res.put("optimizer_theta", r1.optimizer_theta)
    worst = 0.0
    spec = HypergraphSpec.complete(n, (n,))
    if _wants(ns.method, "numeric"):
        alt = geomeasure_symmetric_numeric(build_symmetric(spec), allow_phase=True)
        res.put("complex_numeric", alt.value, "numeric_opt")
        worst = max(worst, _cross_check("E_G", r1.value, alt.value, cfg["tol"], ("real", "complex")))
    if _wants(ns.method, "oracle"):
        oracle, _ = _oracle_geomeasure(ns, cfg, spec)
        res.put("oracle", oracle, "oracle")
        worst = max(worst, _cross_check("E_G", r1.value, oracle, 1e-8, ("real", "oracle")))
    res.put("value", r1.value, "numeric_opt", residual=worst if ns.method != "auto" else None)


def _bell_outputs(res: CommandResult, report, method: str = "contraction") -> None:
    res.put("quantum_value", report.quantum_value, method, residual=report.residual)
    res.put("expectation", report.expectation)
    res.put("classical_bound", report.classical_bound)
    res.put("separability_bound", report.separability_bound)
    res.put("ratio_log2", report.ratio_log2)
    if report.closed_form is not None:
        res.put("closed_form", report.closed_form, "closed_form")


def cmd_mermin(ns, cfg, res: CommandResult) -> None:
    from hyperstate.dense import build_dense
    from hyperstate.nonlocality import MerminSpec, dense_mermin_expectation, mermin_quantum_value

    spec = spec_from_args(ns)
    if spec.k is None:
        raise ValueError("mermin needs a cardinality-vector spec (--k)")
    report = mermin_quantum_value(spec, ns.pauli, strict=ns.strict, tol=max(cfg["tol"], 1e-8))
    res.put("pauli", ns.pauli)
    res.put("hypothesis", report.hypothesis)
    _bell_outputs(res, report)
    res.put("exceeds_classical", report.quantum_value > report.classical_bound)
    if _wants(ns.method, "oracle"):
        e = dense_mermin_expectation(
            build_dense(spec, cfg["dense_cap"]), MerminSpec(spec.n_qubits, ns.pauli)
        )
        r = _cross_check("<B>", report.expectation, e.real, cfg["tol"], ("contraction", "oracle"))
        res.put("oracle", e.real, "oracle", residual=r)


def cmd_robustness(ns, cfg, res: CommandResult) -> None:
    from hyperstate.nonlocality import dense_robustness_expectation, robustness_value

    report = robustness_value(ns.n, ns.lost, ns.variant, tol=cfg["tol"])
    variant = ns.variant
    if variant == "auto":
        variant = "M0" if report.row and report.row.startswith("row1") else "M1"
    res.put("row", report.row)
    res.put("variant", variant)
    _bell_outputs(res, report)
    res.put("violates_separability", report.quantum_value > report.separability_bound + cfg["tol"])
    res.put("persistence_limit", (ns.n - 4) // 2)
    if _wants(ns.method, "oracle"):
        e = dense_robustness_expectation(ns.n, ns.lost, variant, cfg["dense_cap"])
        r = _cross_check("<M>", report.expectation, e.real, cfg["tol"], ("contraction", "oracle"))
        res.put("oracle", e.real, "oracle", residual=r)


def cmd_families(ns, cfg, res: CommandResult) -> None:
    from hyperstate.nonlocality import check_family, stabilizer_families

    desc = stabilizer_families(parse_k(ns.k))
    res.put("k", list(desc.k))
    res.put("m", desc.m)
    res.put("r", desc.r)
    res.put("modulus", desc.modulus)
    res.put("residue", desc.residue)
    res.put("stabilizer", desc.stabilizer, "closed_form")
    checks = check_family(desc, ns.limit)
    res.put("members", sorted(checks))
    bad = sorted(n for n, ok in checks.items() if not ok)
    res.put("consistent", not bad, "oracle")
    if bad:
        raise CrossCheckFailed(f"family prediction fails for N={bad!r}", {"failing_n": bad})


def cmd_verify(ns, cfg, res: CommandResult) -> None:
    from hyperstate.golden import run_golden

    report = run_golden(
        Path(ns.checks) if ns.checks else None,
        Path(ns.out_dir) if ns.out_dir else None,
        ns.only,
    )
    res.put("summary", report["summary"])
    res.put("failed_ids", [r["id"] for r in report["results"] if r["status"] == "FAIL"])
    if report["summary"]["failed"]:
        res.status = "FAIL"


def cmd_sweep(ns, cfg, res: CommandResult) -> None:
    from hyperstate.sweep import load_sweep, run_sweep, write_csv

    sweep_cfg = load_sweep(ns.sweep)
    rows = run_sweep(sweep_cfg, workers=ns.workers or cfg["workers"])
    path = write_csv(rows, ns.csv)
    res.put("name", sweep_cfg["name"])
    res.put("rows", len(rows))
    res.put("csv", str(path))


COMMANDS = {
    "classify": cmd_classify,
    "build": cmd_build,
    "transform": cmd_transform,
    "decompose": cmd_decompose,
    "geomeasure": cmd_geomeasure,
    "single-edge": cmd_single_edge,
    "mermin": cmd_mermin,
    "robustness": cmd_robustness,
    "families": cmd_families,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


# -- entry points -------------------------------------------------------------


def effective_config(ns: argparse.Namespace) -> dict[str, Any]:
    cfg = resolve_config(ns.config)
    for key in ("tol", "seed", "restarts"):
        val = getattr(ns, key, None)
        if val is not None:
            cfg[key] = val
    return cfg


def run(argv: list[str] | None = None) -> CommandResult:
    ns = build_parser().parse_args(argv)
    cfg = effective_config(ns)
    inputs = {k: v for k, v in vars(ns).items() if k not in ("cmd", "out", "config") and v is not None}
    res = CommandResult(command=ns.cmd, inputs=inputs, seed=cfg["seed"])
    t0 = time.perf_counter()
    COMMANDS[ns.cmd](ns, cfg, res)
    res.wall_time_ms = int(math.ceil((time.perf_counter() - t0) * 1000))
    if ns.out:
        out = Path(ns.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(res.to_json() + "\n", encoding="utf-8")
    return res


def execute(argv: list[str], log: bool = True) -> tuple[int, dict | None, str | None]:
    """Run a command and map the outcome to (exit code, result, error text)."""
    code, obj, err = 0, None, None
    try:
        res = run(argv)
        obj = res.to_dict()
        code = 3 if res.status == "FAIL" else 0
    except UsageError as e:
        code, err = 2, str(e)
    except CrossCheckFailed as e:
        code, err = 3, json.dumps({"error": str(e), "values": e.values}, default=str)
    except (HyperstateError, ValueError, TypeError) as e:
        code, err = 2, f"{type(e).__name__}: {e}"

    if log:
        _log(argv, code, obj, err)
    return code, obj, err


def _log(argv: list[str], code: int, obj: dict | None, err: str | None) -> None:
    from hyperstate.logger import default_log_path, log_event

    cmd = argv[0] if argv else "none"
    log_dir = None
    if "--config" in argv:
        i = argv.index("--config")
        if i + 1 < len(argv):
            try:
                log_dir = resolve_config(argv[i + 1]).get("log_dir")
            except (OSError, ValueError, TypeError):
                # the command already failed on this config
                log_dir = None
    try:
        log_event(
            event="HS_" + cmd.upper().replace("-", "_"),
            log_path=default_log_path("hyperstate", log_dir),
            tool="hyperstate",
            tool_version=__version__,
            schema_version="command_result_v0_1",
            inputs=[{"kind": "ARGV", "argv": list(argv)}],
            outputs=[{"kind": "RESULT", "status": (obj or {}).get("status")}],
            stats={"wall_time_ms": (obj or {}).get("wall_time_ms")},
            diagnostics={"exit_code": code, "error": err},
        )
    except OSError as e:
        print(f"warning: event log not written: {e}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        code, obj, err = execute(argv)
    except SystemExit as e:
        # --help / --version
        return int(e.code or 0)
    if obj is not None:
        print(json.dumps(obj, ensure_ascii=False, indent=2))
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
