"""Scalar maximization helpers: grid seeding + golden-section refinement.

Golden-section search keeps a bracket [a, b] and two interior points at
the golden ratio, dropping the side that cannot hold the optimum, until
the bracket is shorter than `tol`.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2  # 1/φ
INV_PHI2 = (3 - math.sqrt(5)) / 2  # 1/φ²


def golden_max(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    max_iter: int = 500,
) -> dict:
    """Maximize a unimodal f on [a, b]."""
    if b < a:
        a, b = b, a
    h = b - a
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    fc, fd = f(c), f(d)
    it = 0
    while h > tol and it < max_iter:
        it += 1
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + INV_PHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INV_PHI * h
            fd = f(d)
    x, fx = (c, fc) if fc >= fd else (d, fd)
    return {"argmax": x, "maximum": fx, "iterations": it, "converged": h <= tol}


def grid_then_golden(
    f_vec: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    points: int = 4096,
    tol: float = 1e-12,
) -> dict:
    """Seed on a uniform grid over [lo, hi), refine around the best point.

    Ties on the grid resolve to the smallest abscissa.
    """
    xs = np.linspace(lo, hi, points, endpoint=False)
    vals = np.asarray(f_vec(xs), dtype=float)
    i = int(np.argmax(vals))
    step = (hi - lo) / points

    def f(x: float) -> float:
        return float(np.asarray(f_vec(np.array([x])))[0])

    res = golden_max(f, xs[i] - step, xs[i] + step, tol=tol)
    if res["maximum"] < vals[i]:
        res = {"argmax": float(xs[i]), "maximum": float(vals[i]), "iterations": 0, "converged": True}
    return res


def grid2d_then_coordinate_golden(
    f_grid: Callable[[np.ndarray, np.ndarray], np.ndarray],
    bounds: tuple[tuple[float, float], tuple[float, float]],
    points: tuple[int, int] = (512, 512),
    tol: float = 1e-12,
    max_rounds: int = 500,
) -> dict:
    """2D grid seed, then alternate 1D golden searches along each axis."""
    (x0, x1), (y0, y1) = bounds
    xs = np.linspace(x0, x1, points[0], endpoint=False)
    ys = np.linspace(y0, y1, points[1], endpoint=False)
    vals = np.asarray(f_grid(xs[:, None], ys[None, :]), dtype=float)
    i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
    x, y, best = float(xs[i]), float(ys[j]), float(vals[i, j])
    hx, hy = (x1 - x0) / points[0], (y1 - y0) / points[1]

    def f(a: float, b: float) -> float:
        return float(np.asarray(f_grid(np.array([[a]]), np.array([[b]])))[0, 0])

    rounds = 0
    while rounds < max_rounds:
        rounds += 1
        prev = best
        rx = golden_max(lambda t: f(t, y), x - hx, x + hx, tol=tol)
        if rx["maximum"] >= best:
            x, best = rx["argmax"], rx["maximum"]
        ry = golden_max(lambda t: f(x, t), y - hy, y + hy, tol=tol)
        if ry["maximum"] >= best:
            y, best = ry["argmax"], ry["maximum"]
        if best - prev <= 1e-16:
            break
    return {"argmax": (x, y), "maximum": best, "iterations": rounds, "converged": rounds < max_rounds}
