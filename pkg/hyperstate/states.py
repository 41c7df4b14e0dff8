"""State containers shared by the symmetric and dense engines.

SymmetricState stores one amplitude per Hamming weight: amp[w] is the
amplitude of EACH basis element of weight w (not a Dicke coefficient), so
the norm carries the C(N, w) multiplicity.

DenseState stores all 2^N amplitudes. Index convention: qubit 0 is the most
significant bit, i.e. amp.reshape((2,) * N)[x_0, ..., x_{N-1}].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hyperstate.errors import CapExceeded

NORM_TOL = 1e-12


def binom(n: int, k: int) -> int:
    """Exact binomial with C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_row(n: int) -> np.ndarray:
    return np.array([float(math.comb(n, w)) for w in range(n + 1)])


def symmetric_norm_sq(amp: np.ndarray) -> float:
    n = len(amp) - 1
    return math.fsum(
        math.comb(n, w) * (abs(a) ** 2) for w, a in enumerate(np.asarray(amp))
    )


def norm_tolerance(n: int) -> float:
    """NORM_TOL, widened once weight-space rounding (about 2^{N/2} ulps) exceeds it."""
    return max(NORM_TOL, 4 * float(np.finfo(np.float64).eps) * math.sqrt(2.0) ** n)


@dataclass(frozen=True)
class SymmetricState:
    n_qubits: int
    amp: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.n_qubits, int) or self.n_qubits < 1:
            raise ValueError(f"n_qubits must be a positive integer, got {self.n_qubits!r}")
        arr = np.array(self.amp, dtype=np.complex128)
        if arr.shape != (self.n_qubits + 1,):
            raise ValueError(
                f"amp must have N+1={self.n_qubits + 1} entries, got shape {arr.shape!r}"
            )
        norm = symmetric_norm_sq(arr)
        if abs(norm - 1.0) > norm_tolerance(self.n_qubits):
            raise ValueError(f"symmetric state not normalized: norm^2={norm!r}")
        arr.setflags(write=False)
        object.__setattr__(self, "amp", arr)

    def norm_sq(self) -> float:
        return symmetric_norm_sq(self.amp)


@dataclass(frozen=True)
class DenseState:
    n_qubits: int
    amp: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.n_qubits, int) or self.n_qubits < 1:
            raise ValueError(f"n_qubits must be a positive integer, got {self.n_qubits!r}")
        arr = np.array(self.amp, dtype=np.complex128).reshape(-1)
        if arr.shape != (2**self.n_qubits,):
            raise ValueError(
                f"amp must have 2^N={2 ** self.n_qubits} entries, got {arr.shape!r}"
            )
        norm = float(np.vdot(arr, arr).real)
        if abs(norm - 1.0) > norm_tolerance(self.n_qubits):
            raise ValueError(f"dense state not normalized: norm^2={norm!r}")
        arr.setflags(write=False)
        object.__setattr__(self, "amp", arr)

    def tensor(self) -> np.ndarray:
        return self.amp.reshape((2,) * self.n_qubits)

    def norm_sq(self) -> float:
        return float(np.vdot(self.amp, self.amp).real)


def ghz_symmetric(n: int) -> SymmetricState:
    amp = np.zeros(n + 1, dtype=np.complex128)
    amp[0] = amp[n] = 1 / math.sqrt(2)
    return SymmetricState(n, amp)


def product_symmetric(n: int, theta: float, phi: float = 0.0) -> SymmetricState:
    """(cos θ|0⟩ + e^{iφ} sin θ|1⟩)^{⊗N} in the weight representation."""
    w = np.arange(n + 1)
    amp = np.cos(theta) ** (n - w) * (np.exp(1j * phi) * np.sin(theta)) ** w
    return SymmetricState(n, amp)


def weights(n: int) -> np.ndarray:
    """Hamming weight of every index 0..2^N-1."""
    idx = np.arange(2**n, dtype=np.int64)
    out = np.zeros(2**n, dtype=np.int64)
    for b in range(n):
        out += (idx >> b) & 1
    return out


def check_cap(n: int, cap: int | None) -> int:
    if cap is None:
        from hyperstate.hs_config import dense_cap

        cap = dense_cap()
    if n > cap:
        raise CapExceeded(f"N={n} exceeds dense cap {cap} (set HYPERSTATE_DENSE_CAP)")
    return cap


def symmetric_to_dense(s: SymmetricState, cap: int | None = None) -> DenseState:
    check_cap(s.n_qubits, cap)
    return DenseState(s.n_qubits, s.amp[weights(s.n_qubits)])


def dense_weight_projection(d: DenseState) -> tuple[np.ndarray, float]:
    """Average amplitudes per weight class.

    Returns the raw per-weight averages and the max deviation of any dense
    amplitude from its class average (0 for permutation-symmetric input). The
    averages are only a normalized state when that deviation vanishes.
    """
    n = d.n_qubits
    w = weights(n)
    sums = np.zeros(n + 1, dtype=np.complex128)
    np.add.at(sums, w, d.amp)
    avg = sums / binom_row(n)
    residual = float(np.max(np.abs(d.amp - avg[w])))
    return avg, residual


def symmetric_from_dense(d: DenseState, tol: float = NORM_TOL) -> SymmetricState:
    avg, residual = dense_weight_projection(d)
    if residual > tol:
        raise ValueError(
            f"dense state is not permutation symmetric (deviation {residual:.3e} > {tol!r})"
        )
    return SymmetricState(d.n_qubits, avg)
