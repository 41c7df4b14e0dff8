"""Brute-force 2^N statevector oracle.

Ground truth for every weight-space computation at small N, and the only
route for non-symmetric hypergraphs (e.g. the X⊗X-stabilized 4-qubit
example). Index convention: qubit 0 is the most significant bit.

The product-state optimizer is an alternating rank-1 approximation: each
site is replaced by its normalized environment (the state contracted with
all other sites' current conjugated local vectors) until the overlap stops
moving; the best of several random restarts wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hyperstate.errors import NonConvergence
from hyperstate.hypergraph import HypergraphSpec, expand_edges
from hyperstate.states import DenseState, check_cap
from hyperstate.transforms import PAULIS, SingleQubitOp


@dataclass(frozen=True)
class PauliString:
    letters: str
    coeff: complex = 1.0

    def __post_init__(self) -> None:
        letters = str(self.letters).upper()
        bad = set(letters) - set("IXYZ")
        if bad:
            raise ValueError(f"Pauli string has invalid letters {sorted(bad)!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "coeff", complex(self.coeff))


def _edge_mask(n: int, edge) -> int:
    return sum(1 << (n - 1 - v) for v in edge)


def build_dense(spec: HypergraphSpec, cap: int | None = None) -> DenseState:
    n = spec.n_qubits
    check_cap(n, cap)
    amp = np.full(2**n, 1 / math.sqrt(2**n), dtype=np.complex128)
    idx = np.arange(2**n, dtype=np.int64)
    for edge in expand_edges(spec):
        mask = _edge_mask(n, edge)
        amp[(idx & mask) == mask] *= -1
    return DenseState(n, amp)


def basis_state(n: int, bits: str | int) -> DenseState:
    amp = np.zeros(2**n, dtype=np.complex128)
    amp[int(bits, 2) if isinstance(bits, str) else int(bits)] = 1
    return DenseState(n, amp)


def random_state(n: int, rng: np.random.Generator) -> DenseState:
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return DenseState(n, v / np.linalg.norm(v))


def local_apply(amp: np.ndarray, ops, sites) -> np.ndarray:
    """Raw 2^N amplitudes with each 2x2 op applied to its site (op need not be unitary)."""
    amp = np.asarray(amp, dtype=np.complex128).reshape(-1)
    n = int(amp.size).bit_length() - 1
    if amp.size != 2**n:
        raise ValueError(f"amplitude vector length {amp.size} is not a power of two")
    ops, sites = list(ops), [int(s) for s in sites]
    if len(ops) != len(sites):
        raise ValueError(f"got {len(ops)} ops for {len(sites)} sites")
    if len(set(sites)) != len(sites):
        raise ValueError(f"sites must be distinct, got {sites!r}")
    t = amp.reshape((2,) * n)
    for op, site in zip(ops, sites):
        if not 0 <= site < n:
            raise ValueError(f"site {site!r} out of range 0..{n - 1}")
        m = op.matrix if isinstance(op, SingleQubitOp) else np.asarray(op)
        if m.shape != (2, 2):
            raise ValueError(f"op for site {site} must be 2x2, got {m.shape!r}")
        t = np.moveaxis(np.tensordot(m, t, axes=([1], [site])), 0, site)
    return np.ascontiguousarray(t).reshape(-1)


def all_sites_apply(amp: np.ndarray, op: SingleQubitOp, sites=None) -> np.ndarray:
    amp = np.asarray(amp, dtype=np.complex128).reshape(-1)
    sites = list(range(int(amp.size).bit_length() - 1) if sites is None else sites)
    return local_apply(amp, [op] * len(sites), sites)


def apply_local(state: DenseState, ops, sites) -> DenseState:
    """Unitary ops only; the result must stay normalized."""
    return DenseState(state.n_qubits, local_apply(state.amp, ops, sites))


def apply_all(state: DenseState, op: SingleQubitOp, sites=None) -> DenseState:
    sites = range(state.n_qubits) if sites is None else sites
    sites = list(sites)
    return apply_local(state, [op] * len(sites), sites)


def apply_pauli_string(state: DenseState, p: PauliString) -> DenseState:
    if len(p.letters) != state.n_qubits:
        raise ValueError(
            f"Pauli string length {len(p.letters)} != n_qubits {state.n_qubits}"
        )
    sites = [i for i, c in enumerate(p.letters) if c != "I"]
    ops = [PAULIS[p.letters[i]] for i in sites]
    out = apply_local(state, ops, sites)
    return DenseState(state.n_qubits, p.coeff * out.amp)


def pauli_string_expectation(state: DenseState, p: PauliString) -> complex:
    moved = apply_pauli_string(state, PauliString(p.letters))
    return p.coeff * complex(np.vdot(state.amp, moved.amp))


def overlap(a: DenseState, b: DenseState) -> complex:
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"qubit counts differ: {a.n_qubits} vs {b.n_qubits}")
    return complex(np.vdot(a.amp, b.amp))


def equal_up_to_global_phase(a: DenseState, b: DenseState, tol: float = 1e-12) -> bool:
    return abs(abs(overlap(a, b)) - 1) < tol


def pauli_eigenvalue(state: DenseState, letter: str, tol: float = 1e-12) -> int | None:
    """+1 / −1 if P^{⊗N}|ψ⟩ = ±|ψ⟩, else None."""
    moved = apply_pauli_string(state, PauliString(letter * state.n_qubits))
    for sign in (1, -1):
        if np.max(np.abs(moved.amp - sign * state.amp)) < tol:
            return sign
    return None


def controlled_z_on(state: DenseState, verts) -> DenseState:
    """C_e: sign flip where every vertex of e is 1 (C_∅ = −1)."""
    n = state.n_qubits
    mask = _edge_mask(n, verts)
    amp = np.array(state.amp)
    idx = np.arange(2**n, dtype=np.int64)
    amp[(idx & mask) == mask] *= -1
    return DenseState(n, amp)


def hypergraph_stabilizer_apply(
    state: DenseState, spec: HypergraphSpec, vertex: int
) -> DenseState:
    """h_i = X_i ∏_{e ∋ i} C_{e∖{i}} applied to state."""
    out = state
    for edge in expand_edges(spec):
        if vertex in edge:
            out = controlled_z_on(out, [v for v in edge if v != vertex])
    return apply_local(out, [PAULIS["X"]], [vertex])


# -- product-state optimizer ------------------------------------------------


@dataclass(frozen=True)
class OptimizerResult:
    value: float
    overlap_sq: float
    local_states: tuple[np.ndarray, ...]
    angles: tuple[tuple[float, float], ...]
    restarts: int
    converged: int
    seed: int | None
    iterations: int


def _environment(t: np.ndarray, vecs: list[np.ndarray], site: int) -> np.ndarray:
    env = t
    for j in reversed(range(len(vecs))):
        if j != site:
            env = np.tensordot(env, vecs[j].conj(), axes=([j], [0]))
    return env


def _best_real_vector(env: np.ndarray) -> np.ndarray:
    # argmax |v·env| over real unit v: top eigenvector of Re(env env†)
    m = np.real(np.outer(env, env.conj()))
    _, vecs = np.linalg.eigh(m)
    return vecs[:, -1].astype(np.complex128)


def _angles(v: np.ndarray) -> tuple[float, float]:
    theta = math.acos(min(1.0, abs(v[0])))
    phi = 0.0
    if abs(v[0]) > 1e-15 and abs(v[1]) > 1e-15:
        phi = float(np.angle(v[1]) - np.angle(v[0])) % (2 * math.pi)
    return theta, phi


def _random_local(rng: np.random.Generator, real_only: bool) -> np.ndarray:
    if real_only:
        th = rng.uniform(0, math.pi)
        return np.array([math.cos(th), math.sin(th)], dtype=np.complex128)
    # uniform on the Bloch sphere
    cos_b = rng.uniform(-1, 1)
    beta = math.acos(cos_b)
    phi = rng.uniform(0, 2 * math.pi)
    return np.array([math.cos(beta / 2), np.exp(1j * phi) * math.sin(beta / 2)])


def _single_run(
    t: np.ndarray,
    vecs: list[np.ndarray],
    real_only: bool,
    tol: float,
    max_iter: int,
) -> tuple[float, list[np.ndarray], bool, int]:
    n = len(vecs)
    prev = -1.0
    value = 0.0
    for it in range(1, max_iter + 1):
        for i in range(n):
            env = _environment(t, vecs, i)
            if real_only:
                v = _best_real_vector(env)
            else:
                norm = np.linalg.norm(env)
                v = env / norm if norm > 0 else vecs[i]
            vecs[i] = v
        env = _environment(t, vecs, n - 1)
        value = float(abs(np.vdot(vecs[n - 1], env)) ** 2)
        if abs(value - prev) < tol:
            return value, vecs, True, it
        prev = value
    return value, vecs, False, max_iter


def product_state_optimize(
    state: DenseState,
    restarts: int = 32,
    real_only: bool = False,
    seed: int | None = 0,
    tol: float = 1e-13,
    max_iter: int = 10_000,
    cap: int | None = None,
) -> OptimizerResult:
    n = state.n_qubits
    check_cap(n, cap)
    if restarts < 1:
        raise ValueError(f"restarts must be >= 1, got {restarts!r}")
    t = state.tensor()
    if n == 1:
        return OptimizerResult(0.0, 1.0, (state.amp.copy(),), (_angles(state.amp),), restarts, restarts, seed, 0)

    rng = np.random.default_rng(seed)
    best: tuple[float, list[np.ndarray], int] | None = None
    converged = 0
    total_iter = 0
    for _ in range(restarts):
        vecs = [_random_local(rng, real_only) for _ in range(n)]
        value, vecs, ok, iters = _single_run(t, vecs, real_only, tol, max_iter)
        total_iter += iters
        if not ok:
            continue
        converged += 1
        if best is None or value > best[0]:
            best = (value, vecs, iters)
    if best is None:
        raise NonConvergence(
            f"optimizer did not converge in {max_iter} iterations on {restarts} restarts"
        )

    value, vecs, _ = best
    return OptimizerResult(
        value=1.0 - value,
        overlap_sq=value,
        local_states=tuple(vecs),
        angles=tuple(_angles(v) for v in vecs),
        restarts=restarts,
        converged=converged,
        seed=seed,
        iterations=total_iter,
    )
