"""Geometric measure of entanglement for symmetric hypergraph states.

E_G(ψ) = 1 − max_φ |⟨φ|ψ⟩|² over product states φ. For permutation
symmetric states with N ≥ 3 the optimum is a symmetric product state
(cos θ|0⟩ + e^{iφ} sin θ|1⟩)^{⊗N}, so the search is over one or two angles.

Closed forms cover
- 3-uniform, +X (N ≡ 2 mod 4): 3/4 − 1/√2^N − 1/2^N
- 3-uniform, +Y (N ≡ 0 mod 4): bounds [3/4 − 1/2^N − 1/√2^N, 3/4 − 1/2^N]
- 5-uniform, +X (N ≡ 4 mod 8): 3/4 − λ − λ², λ = (cos^N(π/8) − sin^N(π/8))/√2
- 5-uniform, +Y (N ≡ 0 mod 8): bounds [3/4 − λ − λ², 3/4]

For (2^{r−1}+1)-uniform states with N ≡ 2^{r−1} mod 2^r the same shape
3/4 − λ − λ² is only conjectured for r >= 4 (r = 3 is the 5-uniform case
above). Those values carry the CONJECTURE label and are compared with the
numeric optimum, never used as a check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from hyperstate.errors import UnsupportedFamily
from hyperstate.hypergraph import (
    HypergraphSpec,
    StabilizerClass,
    build_symmetric,
    classify_stabilizer,
)
from hyperstate.optimize import grid2d_then_coordinate_golden, grid_then_golden
from hyperstate.states import SymmetricState, binom_row
from hyperstate.transforms import apply_tensor_power, real_rotation, sqrt_pauli

THETA_POINTS = 4096
GRID_2D = (512, 512)


@dataclass(frozen=True)
class GeoMeasureResult:
    value: float
    method: str
    optimizer_theta: float | None = None
    optimizer_phi: float | None = None
    residual_vs_alternate: float | None = None


@dataclass(frozen=True)
class BoundsResult:
    lower: float
    upper: float
    numeric: float | None = None
    method: str = "closed_form"

    def contains(self, tol: float = 1e-9) -> bool:
        if self.numeric is None:
            return True
        return self.lower - tol <= self.numeric <= self.upper + tol

    def strictly_inside(self, margin: float = 1e-6) -> bool:
        if self.numeric is None:
            return False
        return self.lower + margin < self.numeric < self.upper - margin


@dataclass(frozen=True)
class ConjectureResult:
    """Conjectured E_G = 3/4 − λ − λ² for a family; reported, never asserted."""

    r: int
    n: int
    lam: float
    bound: float
    numeric: float | None = None
    label: str = "CONJECTURE"

    @property
    def gap(self) -> float | None:
        return None if self.numeric is None else self.numeric - self.bound

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "r": self.r,
            "k": 2 ** (self.r - 1) + 1,
            "lambda": self.lam,
            "bound": self.bound,
            "numeric": self.numeric,
            "gap": self.gap,
        }


def symmetric_overlap_grid(s: SymmetricState, theta, phi=0.0) -> np.ndarray:
    """Σ_w C(N,w) conj(c_w) cos^{N−w}θ (e^{iφ} sin θ)^w, broadcast over θ and φ."""
    n = s.n_qubits
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c = np.cos(theta)
    z = np.exp(1j * phi) * np.sin(theta)
    weights = binom_row(n) * np.conj(s.amp)
    acc = np.zeros(np.broadcast(c, z).shape, dtype=np.complex128)
    for w in range(n + 1):
        acc = acc + weights[w] * c ** (n - w) * z**w
    return acc


def symmetric_overlap(s: SymmetricState, theta: float, phi: float = 0.0) -> complex:
    return complex(symmetric_overlap_grid(s, theta, phi))


def geomeasure_symmetric_numeric(
    s: SymmetricState, allow_phase: bool = True
) -> GeoMeasureResult:
    if s.n_qubits < 3:
        raise ValueError(f"symmetric optimization needs N >= 3, got {s.n_qubits!r}")
    if not allow_phase:
        res = grid_then_golden(
            lambda th: np.abs(symmetric_overlap_grid(s, th)) ** 2,
            0.0,
            math.pi,
            points=THETA_POINTS,
        )
        theta, phi = res["argmax"] % math.pi, 0.0
    else:
        res = grid2d_then_coordinate_golden(
            lambda th, ph: np.abs(symmetric_overlap_grid(s, th, ph)) ** 2,
            ((0.0, math.pi), (0.0, 2 * math.pi)),
            points=GRID_2D,
        )
        theta, phi = res["argmax"]
        theta, phi = theta % math.pi, phi % (2 * math.pi)
    value = max(0.0, 1.0 - min(1.0, res["maximum"]))
    return GeoMeasureResult(
        value=value,
        method="symmetric_numeric",
        optimizer_theta=float(theta),
        optimizer_phi=float(phi),
    )


def _lambda_k5(n: int) -> float:
    c, s = math.cos(math.pi / 8), math.sin(math.pi / 8)
    return (c**n - s**n) / math.sqrt(2)


def geomeasure_closed(
    n: int, k, stabilizer: StabilizerClass | str | None = None
) -> GeoMeasureResult | BoundsResult:
    k = tuple(sorted(int(x) for x in k))
    actual = classify_stabilizer(HypergraphSpec.complete(n, k))
    if stabilizer is not None and StabilizerClass(stabilizer) is not actual:
        raise ValueError(
            f"stabilizer {StabilizerClass(stabilizer).value!r} does not match {actual.value!r}"
        )
    if k == (3,) and actual is StabilizerClass.PLUS_X and n % 4 == 2:
        return GeoMeasureResult(0.75 - 2 ** (-n / 2) - 2.0**-n, "closed_form")
    if k == (3,) and actual is StabilizerClass.PLUS_Y and n % 4 == 0:
        return BoundsResult(0.75 - 2.0**-n - 2 ** (-n / 2), 0.75 - 2.0**-n)
    if k == (5,) and actual is StabilizerClass.PLUS_X and n % 8 == 4:
        lam = _lambda_k5(n)
        return GeoMeasureResult(0.75 - lam - lam**2, "closed_form")
    if k == (5,) and actual is StabilizerClass.PLUS_Y and n % 8 == 0:
        lam = _lambda_k5(n)
        return BoundsResult(0.75 - lam - lam**2, 0.75)
    raise UnsupportedFamily(f"no closed form for N={n}, k={k!r} ({actual.value})")


def numeric_for_family(n: int, k) -> GeoMeasureResult:
    """Numeric E_G the way the closed forms are derived.

    X-stabilized: √X_+ transform makes the state real, so a 1D real search
    suffices. Otherwise the search keeps the relative phase.
    """
    spec = HypergraphSpec.complete(n, k)
    s = build_symmetric(spec)
    if classify_stabilizer(spec) is StabilizerClass.PLUS_X:
        return geomeasure_symmetric_numeric(
            apply_tensor_power(s, sqrt_pauli("X", "+")), allow_phase=False
        )
    return geomeasure_symmetric_numeric(s, allow_phase=True)


def geomeasure_compare(n: int, k) -> GeoMeasureResult | BoundsResult:
    closed = geomeasure_closed(n, k)
    numeric = numeric_for_family(n, k)
    if isinstance(closed, BoundsResult):
        return BoundsResult(closed.lower, closed.upper, numeric.value, "symmetric_numeric")
    return GeoMeasureResult(
        value=closed.value,
        method="closed_form",
        optimizer_theta=numeric.optimizer_theta,
        optimizer_phi=numeric.optimizer_phi,
        residual_vs_alternate=abs(closed.value - numeric.value),
    )


def conjecture_lambda(r: int, n: int) -> ConjectureResult:
    if r < 3:
        raise ValueError(f"conjecture needs r >= 3, got {r!r}")
    period = 2**r
    if n % period != period // 2:
        raise ValueError(f"N={n} not in the X-stabilized class N ≡ {period // 2} mod {period}")
    terms = []
    for j in range(1, period, 2):
        x = math.pi * j / period
        sgn = 1.0 if math.cos(x) > 0 else -1.0
        terms.append(sgn * math.cos(math.pi / 4 - x) ** n / abs(math.cos(2 * x)))
    lam = 2 / period * math.fsum(terms)
    return ConjectureResult(r=r, n=n, lam=lam, bound=0.75 - lam - lam**2)


def conjecture_order(k) -> int | None:
    """r when k is the single cardinality 2^{r−1}+1 with r >= 3, else None."""
    k = tuple(int(x) for x in k)
    if len(k) != 1:
        return None
    m = k[0] - 1
    if m < 4 or m & (m - 1):
        return None
    return m.bit_length()


def conjecture_for_family(n: int, k, numeric: float | None = None) -> ConjectureResult | None:
    r = conjecture_order(k)
    if r is None or n % 2**r != 2 ** (r - 1):
        return None
    return replace(conjecture_lambda(r, n), numeric=numeric)


def single_edge_overlap(n: int, theta) -> np.ndarray:
    """((a+b)^N − 2b^N)/√2^N with a = cos θ, b = sin θ."""
    theta = np.asarray(theta, dtype=float)
    a, b = np.cos(theta), np.sin(theta)
    return ((a + b) ** n - 2 * b**n) / math.sqrt(2**n)


def single_edge_geomeasure(n: int) -> GeoMeasureResult:
    if n < 3:
        raise ValueError(f"single-edge family needs N >= 3, got {n!r}")
    res = grid_then_golden(
        lambda th: single_edge_overlap(n, th) ** 2, 0.0, math.pi, points=THETA_POINTS
    )
    return GeoMeasureResult(
        value=1.0 - res["maximum"],
        method="symmetric_numeric",
        optimizer_theta=float(res["argmax"] % math.pi),
        optimizer_phi=0.0,
    )


def cyclic_cos_sum(r: int, n: int, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    period = 2**r
    return sum(np.cos(x + math.pi * j / period) ** n for j in range(period))


def cyclic_cos_max_check(r: int, n: int, grid: int = 100_000) -> bool:
    """Max of Σ_j cos^N(x + πj/2^r) over one period sits on the lattice (π/2^r)ℤ."""
    if n % 2 or r < 1:
        raise ValueError(f"need even N and r >= 1, got r={r!r}, N={n!r}")
    span = math.pi / 2**r
    xs = np.linspace(0.0, span, grid, endpoint=False)
    vals = cyclic_cos_sum(r, n, xs)
    lattice = float(cyclic_cos_sum(r, n, 0.0))
    return bool(vals.max() <= lattice + 1e-9 * max(1.0, abs(lattice)))


def h43_rotation_angle() -> float:
    return 0.5 * math.atan(0.5 * (math.sqrt(5) - 1))


def rotated_h43() -> SymmetricState:
    """H₄³ under R(t)^{⊗4}: real, nonnegative, odd weights vanish."""
    s = build_symmetric(HypergraphSpec.complete(4, 3))
    return apply_tensor_power(s, real_rotation(h43_rotation_angle()))
