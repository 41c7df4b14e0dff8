"""Local tensor-power transforms in the weight representation.

Single-qubit operators are 2×2 complex matrices with m[i][j] = ⟨i|M|j⟩.
Applying M^{⊗N} to a symmetric state only needs the transition kernel

    G[u][w] = Σ_t C(u,t) C(N−u,w−t) m11^t m10^{u−t} m01^{w−t} m00^{N−u−w+t}

(amplitude flowing from one weight-w input element into a fixed weight-u
output element), so d_u = Σ_w c_w G[u][w] costs O(N³).

The √P branch is pinned to √P_± = ½((1±i)·1 + (1∓i)·P): eigenvalue 1 on
the +1 eigenspace of P and ±i on the −1 eigenspace.

Closed forms for the coefficients after √P_+^{⊗N} live here too, together
with the two trigonometric sum identities they rest on.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from hyperstate.errors import CapExceeded, NotGhzOddForm, UnsupportedFamily
from hyperstate.hypergraph import (
    HypergraphSpec,
    StabilizerClass,
    classify_stabilizer,
    weight_sign,
)
from hyperstate.states import SymmetricState, binom

PAULIS = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


@dataclass(frozen=True)
class SingleQubitOp:
    matrix: np.ndarray
    name: str = field(default="M", compare=False)

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=np.complex128)
        if m.shape != (2, 2):
            raise ValueError(f"single-qubit op must be 2x2, got shape {m.shape!r}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def entries(self) -> tuple[complex, complex, complex, complex]:
        m = self.matrix
        return complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1])

    def is_unitary(self, tol: float = 1e-14) -> bool:
        m = self.matrix
        return bool(np.max(np.abs(m.conj().T @ m - np.eye(2))) < tol)

    def __matmul__(self, other: SingleQubitOp) -> SingleQubitOp:
        return SingleQubitOp(self.matrix @ other.matrix, f"{self.name}·{other.name}")


def _letter(p: str) -> str:
    p = str(p).upper()
    if p not in PAULIS:
        raise ValueError(f"unknown Pauli letter {p!r}")
    return p


def identity() -> SingleQubitOp:
    return SingleQubitOp(PAULIS["I"], "I")


def pauli(p: str) -> SingleQubitOp:
    p = _letter(p)
    return SingleQubitOp(PAULIS[p], p)


def hadamard() -> SingleQubitOp:
    return SingleQubitOp(np.array([[1, 1], [1, -1]]) / math.sqrt(2), "H")


def sqrt_pauli(p: str, branch: str = "+") -> SingleQubitOp:
    p = _letter(p)
    if branch not in ("+", "-"):
        raise ValueError(f"branch must be '+' or '-', got {branch!r}")
    s = 1 if branch == "+" else -1
    m = 0.5 * ((1 + s * 1j) * PAULIS["I"] + (1 - s * 1j) * PAULIS[p])
    return SingleQubitOp(m, f"sqrt{p}{branch}")


def real_rotation(t: float) -> SingleQubitOp:
    c, s = math.cos(t), math.sin(t)
    return SingleQubitOp(np.array([[c, -s], [s, c]]), f"R({t:.6g})")


def pauli_pm_iz(p: str, sign: int) -> SingleQubitOp:
    """P ± iZ, the factors of the Mermin-type operators (not unitary)."""
    p = _letter(p)
    if sign not in (1, -1):
        raise ValueError(f"sign must be ±1, got {sign!r}")
    return SingleQubitOp(PAULIS[p] + sign * 1j * PAULIS["Z"], f"{p}{'+' if sign > 0 else '-'}iZ")


def csum(values) -> complex:
    """Compensated complex sum (exactly rounded real and imaginary parts)."""
    vals = [complex(v) for v in values]
    return complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))


def _powers(x: complex, n: int) -> list[complex]:
    out = [1 + 0j]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def _check_contraction_cap(n: int, cap: int | None) -> None:
    if cap is None:
        from hyperstate.hs_config import contraction_cap

        cap = contraction_cap()
    if n > cap:
        raise CapExceeded(f"N={n} exceeds contraction cap {cap}")


def transition_kernel(n: int, op: SingleQubitOp) -> np.ndarray:
    m00, m01, m10, m11 = op.entries()
    p00, p01, p10, p11 = (_powers(x, n) for x in (m00, m01, m10, m11))
    g = np.zeros((n + 1, n + 1), dtype=np.complex128)
    for u in range(n + 1):
        for w in range(n + 1):
            lo, hi = max(0, w - (n - u)), min(u, w)
            g[u, w] = csum(
                math.comb(u, t)
                * math.comb(n - u, w - t)
                * p11[t]
                * p10[u - t]
                * p01[w - t]
                * p00[n - u - w + t]
                for t in range(lo, hi + 1)
            )
    return g


def tensor_power_amplitudes(
    amp: np.ndarray, op: SingleQubitOp, cap: int | None = None
) -> np.ndarray:
    """Raw weight amplitudes of op^{⊗N} applied to amp (op need not be unitary)."""
    amp = np.asarray(amp, dtype=np.complex128)
    n = len(amp) - 1
    _check_contraction_cap(n, cap)
    g = transition_kernel(n, op)
    return np.array([csum(g[u, :] * amp) for u in range(n + 1)])


def apply_tensor_power(
    s: SymmetricState, op: SingleQubitOp, cap: int | None = None
) -> SymmetricState:
    return SymmetricState(s.n_qubits, tensor_power_amplitudes(s.amp, op, cap))


def sign_period(k) -> int:
    """Period of f(w) = Σ C(w,k_i) mod 2 in w (Lucas: bits of w below max bit length)."""
    return 2 ** max(int(ki).bit_length() for ki in k)


# -- closed forms after √P_+^{⊗N} --------------------------------------------


def _krawtchouk(n: int, e: int, w: int) -> int:
    """Σ_m C(N−e, w−m) C(e, m) (−1)^m, exact."""
    return sum(
        binom(n - e, w - m) * binom(e, m) * (-1) ** m for m in range(0, min(e, w) + 1)
    )


def _gaussian_power_one_plus_i(n: int) -> tuple[int, int]:
    a, b = 1, 0
    for _ in range(n):
        a, b = a - b, a + b
    return a, b


def _prefactor(n: int) -> complex:
    # ((1+i)/(2√2))^N = e^{iπN/4} / 2^N
    return cmath.exp(1j * math.pi * (n % 8) / 4) / 2**n


def _coeff_general_x(n: int, k, e: int) -> complex:
    buckets = [0, 0, 0, 0]
    for w in range(n + 1):
        buckets[(e + w) % 4] += (-1) ** weight_sign(k, w) * _krawtchouk(n, e, w)
    # (−i)^0, (−i)^1, (−i)^2, (−i)^3
    total = complex(buckets[0] - buckets[2], buckets[3] - buckets[1])
    return _prefactor(n) * total


def _coeff_general_y(n: int, k, e: int) -> complex:
    total = sum(
        (-1) ** (weight_sign(k, w) + w) * _krawtchouk(n, e, w) for w in range(n + 1)
    )
    return _prefactor(n) * total


def _coeff_negative_weights(n: int, k, e: int) -> complex:
    a, b = _gaussian_power_one_plus_i(n)
    re_by_phase = (a, b, -a, -b)  # Re((a+bi)(−i)^p) for p mod 4
    acc = 0
    for w in range(n + 1):
        if not weight_sign(k, w):
            continue
        for m in range(0, min(e, w) + 1):
            c = binom(n - e, w - m) * binom(e, m)
            if c:
                acc += c * re_by_phase[(w + e - 2 * m) % 4]
    return complex(1 / math.sqrt(2**n) - 2 * acc / (2 * math.sqrt(2)) ** n)


def _coeff_periodic(n: int, k, e: int, p: str) -> complex:
    period = max(4, sign_period(k))
    outer = []
    for j in range(period):
        x = math.pi * j / period
        weight = math.cos(x) ** (n - e) * math.sin(x) ** e
        if weight == 0.0:
            continue
        inner = []
        for q in range(period):
            phase = cmath.exp(1j * math.pi * j * (n - 2 * q) / period) * (-1j) ** e
            if p == "X":
                inner.append((-1) ** weight_sign(k, q) * (-1j) ** (e + q) * phase.real)
            else:
                inner.append((-1) ** (weight_sign(k, q) + q) * phase.real)
        outer.append(weight * csum(inner))
    return cmath.exp(1j * math.pi * (n % 8) / 4) * csum(outer) / period


def _fast_r(k) -> int:
    if len(k) != 1:
        raise UnsupportedFamily(f"fast path needs a single cardinality, got {tuple(k)!r}")
    r = (k[0] - 1).bit_length()
    if r < 3 or k[0] != 2 ** (r - 1) + 1:
        raise UnsupportedFamily(f"fast path needs k = 2^(r-1)+1 with r >= 3, got {k[0]!r}")
    return r


def _coeff_fast_x(n: int, r: int, e: int) -> complex:
    period = 2**r
    if n % period != period // 2:
        raise UnsupportedFamily(f"N={n} not ≡ {period // 2} mod {period}")
    if e % 2 == 0:
        return complex(1 / math.sqrt(2**n))
    l = n // period
    terms = []
    for j in range(1, period, 2):
        x = math.pi * j / period
        den = math.cos(2 * x)
        terms.append((-1) ** ((j - 1) // 2) * math.cos(x) ** (n - e) * math.sin(x) ** e / den)
    return complex((-1) ** l * 2 / period * math.fsum(terms))


def _coeff_fast_y(n: int, r: int, e: int) -> complex:
    period = 2**r
    if n % period:
        raise UnsupportedFamily(f"N={n} not ≡ 0 mod {period}")
    if e in (0, n):
        return 0.5 + 0j
    if e % 2 == 0:
        return 0j
    l = n // period
    terms = []
    for j in range(1, period, 2):
        x = math.pi * j / period
        terms.append(math.cos(x) ** (n - e) * math.sin(x) ** e / math.sin(2 * x))
    return (-1) ** l * (-1j) ** (e - 1) * 2 / period * math.fsum(terms)


COEFF_PATHS = ("general", "periodic", "negative_weights", "fast")


def coeff_closed_form(
    n: int,
    k,
    stabilizer: StabilizerClass | str,
    w: int,
    path: str = "general",
) -> complex:
    """Amplitude of a weight-w element after √P_+^{⊗N}, P taken from the stabilizer."""
    k = tuple(sorted(int(x) for x in k))
    stab = StabilizerClass(stabilizer)
    actual = classify_stabilizer(HypergraphSpec.complete(n, k))
    if stab is StabilizerClass.NONE or stab is not actual:
        raise ValueError(f"stabilizer {stab.value!r} does not match classification {actual.value!r}")
    if not 0 <= w <= n:
        raise ValueError(f"weight {w!r} out of range 0..{n}")
    p = stab.pauli

    if path == "general":
        return _coeff_general_x(n, k, w) if p == "X" else _coeff_general_y(n, k, w)
    if path == "periodic":
        return _coeff_periodic(n, k, w, p)
    if path == "negative_weights":
        if stab is not StabilizerClass.PLUS_X:
            raise ValueError("negative_weights path needs a +X-stabilized state")
        return _coeff_negative_weights(n, k, w)
    if path == "fast":
        r = _fast_r(k)
        return _coeff_fast_x(n, r, w) if p == "X" else _coeff_fast_y(n, r, w)
    raise ValueError(f"unknown path {path!r} (expected one of {COEFF_PATHS})")


def closed_form_amplitudes(n: int, k, path: str = "general") -> np.ndarray:
    stab = classify_stabilizer(HypergraphSpec.complete(n, k))
    return np.array([coeff_closed_form(n, k, stab, w, path) for w in range(n + 1)])


# -- GHZ + odd decomposition -------------------------------------------------


@dataclass(frozen=True)
class GhzOddDecomposition:
    ghz_sign: int
    ghz_basis: str
    ghz_phase: complex
    relative_sign: int
    odd_amp: np.ndarray
    residual: float
    form_residual: float | None = None


def _sign_of(z: complex) -> int:
    if abs(z.imag) > abs(z.real):
        return 1 if z.imag >= 0 else -1
    return 1 if z.real >= 0 else -1


def ghz_odd_decompose(
    s: SymmetricState,
    tol: float = 1e-10,
    expected: SymmetricState | None = None,
) -> GhzOddDecomposition:
    n = s.n_qubits
    if n % 2:
        raise NotGhzOddForm(f"GHZ + odd form needs even N, got {n!r}")
    a = [complex(x) for x in s.amp]
    evens = range(0, n + 1, 2)

    rel = a[n] / a[0] if abs(a[0]) > 1e-300 else 1
    rel_sign = 1 if abs(rel - 1) <= abs(rel + 1) else -1
    res_z = max(
        [abs(a[w]) for w in evens if w not in (0, n)]
        + [abs(abs(a[0]) - 0.5), abs(a[n] - rel_sign * a[0])]
    )
    scale = math.sqrt(2**n)
    res_x = max([abs(a[w] - a[0]) for w in evens] + [abs(abs(a[0]) * scale - 1)])

    if res_z <= res_x:
        basis, residual, gamma, relative = "Z", res_z, 2 * a[0], rel_sign
    else:
        basis, residual, gamma, relative = "X", res_x, a[0] * scale, 1

    form_residual = None
    if expected is not None:
        if expected.n_qubits != n:
            raise ValueError("expected form has a different qubit count")
        form_residual = float(np.max(np.abs(s.amp - expected.amp)))
        residual = max(residual, form_residual)

    if residual > tol:
        raise NotGhzOddForm(
            f"not of GHZ + odd form: residual {residual:.3e} > {tol:.1e}", residual
        )

    odd = np.array(s.amp, dtype=np.complex128)
    odd[0::2] = 0
    return GhzOddDecomposition(
        ghz_sign=_sign_of(gamma),
        ghz_basis=basis,
        ghz_phase=complex(gamma),
        relative_sign=relative,
        odd_amp=odd,
        residual=float(residual),
        form_residual=form_residual,
    )


def canonical_form(spec: HypergraphSpec) -> SymmetricState:
    """Expected state after √P_+^{⊗N} for the 3-uniform and (3,2)-uniform families."""
    n = spec.n_qubits
    if spec.k not in ((3,), (2, 3)) or n % 2 or n < 4:
        raise UnsupportedFamily(f"no canonical form for {spec.as_dict()!r}")
    amp = np.zeros(n + 1, dtype=np.complex128)
    odd_scale = 1 / math.sqrt(2**n)
    if spec.k == (3,):
        if n % 4 == 2:
            sign = -1 if n % 8 == 6 else 1
            amp[0] = amp[n] = sign / 2
            amp[1::2] = odd_scale
        else:
            sign = -1 if n % 8 == 4 else 1
            amp[0] = amp[n] = sign / 2
            for w in range(1, n, 2):
                amp[w] = (-1j) ** (w - 1) * odd_scale
    else:
        if n % 4 == 0:
            amp[0] = amp[n] = (-1) ** (n // 4) / 2
            amp[1::2] = odd_scale
        else:
            amp[0] = (-1) ** ((n - 2) // 4 + 1) * 0.5j
            amp[n] = -amp[0]
            for w in range(1, n, 2):
                amp[w] = 1j**w * odd_scale
    return SymmetricState(n, amp)


# -- trigonometric sum identities ---------------------------------------------


def mod_binom_sum(n: int, q: int, modulus: int) -> float:
    """Σ_{w ≡ q mod n} C(N, w) via (1/n) Σ_j (2cos(πj/n))^N cos(πj(N−2q)/n)."""
    if not 0 < modulus <= n:
        raise ValueError(f"need 0 < modulus <= N, got modulus={modulus!r}, N={n!r}")
    return math.fsum(
        (2 * math.cos(math.pi * j / modulus)) ** n
        * math.cos(math.pi * j * (n - 2 * q) / modulus)
        for j in range(modulus)
    ) / modulus


def mod_binom_sum_exact(n: int, q: int, modulus: int) -> int:
    return sum(math.comb(n, w) for w in range(n + 1) if (w - q) % modulus == 0)


def alternating_cos_sum(m: int, alpha: float, beta: float) -> float:
    """Re(e^{iπα/β} (−2i sin(π/β))^M)."""
    if beta == 0:
        raise ValueError("beta must be nonzero")
    z = cmath.exp(1j * math.pi * alpha / beta) * (-2j * math.sin(math.pi / beta)) ** m
    return z.real


def alternating_cos_sum_direct(m: int, alpha: float, beta: float) -> float:
    if beta == 0:
        raise ValueError("beta must be nonzero")
    return math.fsum(
        (-1) ** j * math.comb(m, j) * math.cos(math.pi * (2 * j - m + alpha) / beta)
        for j in range(m + 1)
    )
