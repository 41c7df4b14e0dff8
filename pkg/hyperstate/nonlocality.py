"""Mermin-type Bell operators on symmetric hypergraph states.

    B^P_N = ½((P+iZ)^{⊗N} + (P−iZ)^{⊗N})
    M⁰_n  = ½((X+iZ)^{⊗n} + (X−iZ)^{⊗n})
    M¹_n  = (1/2i)((X+iZ)^{⊗n} − (X−iZ)^{⊗n})

Operators are never materialized: each is a pair of tensor-power
expectations, evaluated in the weight representation by splitting the
qubits into two groups (the first N−k sites and the last k sites).
Local-realistic bound 2^{N/2}; separability bound √2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from hyperstate.dense import (
    PauliString,
    all_sites_apply,
    apply_all,
    build_dense,
    pauli_string_expectation,
    random_state,
)
from hyperstate.errors import (
    CrossCheckFailed,
    HypothesisFailed,
    NotGhzOddForm,
    UnsupportedCase,
    UnsupportedFamily,
)
from hyperstate.hypergraph import (
    HypergraphSpec,
    StabilizerClass,
    build_symmetric,
    classify_stabilizer,
)
from hyperstate.states import (
    DenseState,
    SymmetricState,
    ghz_symmetric,
    symmetric_to_dense,
    weights,
)
from hyperstate.transforms import (
    SingleQubitOp,
    apply_tensor_power,
    csum,
    ghz_odd_decompose,
    identity,
    pauli,
    pauli_pm_iz,
    sqrt_pauli,
    transition_kernel,
)

VARIANTS = ("B", "M0", "M1")
SEPARABILITY_BOUND = math.sqrt(2)


@dataclass(frozen=True)
class MerminSpec:
    n_qubits: int
    pauli: str = "X"
    variant: str = "B"
    lost_qubits: int = 0

    def __post_init__(self) -> None:
        p = str(self.pauli).upper()
        if p not in ("X", "Y"):
            raise ValueError(f"pauli must be X or Y, got {self.pauli!r}")
        object.__setattr__(self, "pauli", p)
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if not 0 <= self.lost_qubits < self.n_qubits:
            raise ValueError(
                f"lost_qubits must be in 0..{self.n_qubits - 1}, got {self.lost_qubits!r}"
            )
        if self.variant == "B" and self.lost_qubits:
            raise ValueError("variant B acts on all qubits; use M0/M1 with lost qubits")


@dataclass(frozen=True)
class BellReport:
    quantum_value: float
    classical_bound: float
    separability_bound: float
    ratio_log2: float
    method: str
    expectation: float
    hypothesis: str = "unchecked"
    closed_form: float | None = None
    residual: float | None = None
    row: str | None = None


def _report(
    expectation: complex,
    n_active: int,
    method: str,
    **extra,
) -> BellReport:
    if abs(expectation.imag) > 1e-9 * max(1.0, abs(expectation.real)):
        raise ValueError(f"expectation not real: {expectation!r}")
    qv = abs(expectation.real)
    classical = 2 ** (n_active / 2)
    return BellReport(
        quantum_value=qv,
        classical_bound=classical,
        separability_bound=SEPARABILITY_BOUND,
        ratio_log2=(math.log2(qv) - n_active / 2) if qv > 0 else float("-inf"),
        method=method,
        expectation=expectation.real,
        **extra,
    )


# -- contractions -------------------------------------------------------------


def grouped_tensor_power_expectation(
    s: SymmetricState, op_a: SingleQubitOp, op_b: SingleQubitOp, k: int = 0
) -> complex:
    """⟨s| op_a^{⊗(N−k)} ⊗ op_b^{⊗k} |s⟩ in O(N⁴)."""
    n = s.n_qubits
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < N, got k={k!r}, N={n!r}")
    na = n - k
    ga = transition_kernel(na, op_a)
    gb = transition_kernel(k, op_b)
    ca = [float(math.comb(na, a)) for a in range(na + 1)]
    cb = [float(math.comb(k, b)) for b in range(k + 1)]
    c = s.amp
    terms = []
    for a_out in range(na + 1):
        for b_out in range(k + 1):
            left = np.conj(c[a_out + b_out]) * ca[a_out] * cb[b_out]
            if left == 0:
                continue
            inner = csum(
                ga[a_out, a_in] * gb[b_out, b_in] * c[a_in + b_in]
                for a_in in range(na + 1)
                for b_in in range(k + 1)
            )
            terms.append(left * inner)
    return csum(terms)


def mermin_expectation(s: SymmetricState, spec: MerminSpec) -> complex:
    if spec.n_qubits != s.n_qubits:
        raise ValueError("MerminSpec and state disagree on qubit count")
    k = spec.lost_qubits
    plus = grouped_tensor_power_expectation(s, pauli_pm_iz(spec.pauli, 1), identity(), k)
    minus = grouped_tensor_power_expectation(s, pauli_pm_iz(spec.pauli, -1), identity(), k)
    if spec.variant == "M1":
        return (plus - minus) / 2j
    return (plus + minus) / 2


# -- dense oracle routes -----------------------------------------------------


def dense_mermin_apply(amp: np.ndarray, spec: MerminSpec) -> np.ndarray:
    active = range(spec.n_qubits - spec.lost_qubits)
    plus = all_sites_apply(amp, pauli_pm_iz(spec.pauli, 1), active)
    minus = all_sites_apply(amp, pauli_pm_iz(spec.pauli, -1), active)
    if spec.variant == "M1":
        return (plus - minus) / 2j
    return (plus + minus) / 2


def dense_mermin_expectation(state: DenseState, spec: MerminSpec) -> complex:
    return complex(np.vdot(state.amp, dense_mermin_apply(state.amp, spec)))


def expand_tensor_power_sum(n: int, p: str, sign: int) -> dict[str, complex]:
    """(P + sign·iZ)^{⊗n} expanded into Pauli strings by brute force."""
    out: dict[str, complex] = {}
    for choice in itertools.product((p, "Z"), repeat=n):
        nz = choice.count("Z")
        key = "".join(choice)
        out[key] = out.get(key, 0) + (sign * 1j) ** nz
    return out


def mermin_pauli_strings(n: int, p: str = "X", variant: str = "B") -> list[PauliString]:
    """Signed correlator expansion: Z on a subset S, P elsewhere.

    B / M0: |S| even, coefficient i^{|S|}; M1: |S| odd, coefficient i^{|S|−1}.
    """
    p = str(p).upper()
    parity = 1 if variant == "M1" else 0
    out = []
    for mask in range(2**n):
        letters = "".join("Z" if (mask >> (n - 1 - i)) & 1 else p for i in range(n))
        z = letters.count("Z")
        if z % 2 != parity:
            continue
        out.append(PauliString(letters, 1j ** (z - parity)))
    return out


def pauli_sum_expectation(state: DenseState, strings: list[PauliString], pad: int = 0) -> complex:
    return csum(
        pauli_string_expectation(state, PauliString(ps.letters + "I" * pad, ps.coeff))
        for ps in strings
    )


# -- identities --------------------------------------------------------------


def tilde_apply(amp: np.ndarray, p: str = "Z") -> np.ndarray:
    """½((1+P)^{⊗N} + (1−P)^{⊗N}) applied to raw amplitudes."""
    one = np.eye(2)
    m = pauli(p).matrix
    plus = all_sites_apply(amp, SingleQubitOp(one + m))
    minus = all_sites_apply(amp, SingleQubitOp(one - m))
    return (plus + minus) / 2


def conjugation_residuals(n: int, p: str, rng: np.random.Generator) -> dict[str, float]:
    """Matrix elements of both conjugated Mermin operators vs their reduced forms.

    √P_−^{⊗N} B^P √P_−^{⊗N} = ½((1+Z)^{⊗N} + (1−Z)^{⊗N})
    √Z_−^{⊗N} B^P √Z_−^{⊗N} = ½(i^N (1−P)^{⊗N} + (−i)^N (1+P)^{⊗N})
    """
    phi, psi = random_state(n, rng), random_state(n, rng)
    spec = MerminSpec(n, p, "B")

    def sandwich(op: SingleQubitOp) -> complex:
        # ⟨φ| S B S |ψ⟩ with S = op^{⊗N}
        s_psi = apply_all(psi, op)
        b_s_psi = dense_mermin_apply(s_psi.amp, spec)
        return complex(np.vdot(phi.amp, all_sites_apply(b_s_psi, op)))

    lhs_p = sandwich(sqrt_pauli(p, "-"))
    rhs_p = complex(np.vdot(phi.amp, tilde_apply(psi.amp, "Z")))

    lhs_z = sandwich(sqrt_pauli("Z", "-"))
    one, m = np.eye(2), pauli(p).matrix
    minus_p = all_sites_apply(psi.amp, SingleQubitOp(one - m))
    plus_p = all_sites_apply(psi.amp, SingleQubitOp(one + m))
    rhs_z = complex(np.vdot(phi.amp, (1j**n * minus_p + (-1j) ** n * plus_p) / 2))

    return {"sqrt_p": abs(lhs_p - rhs_p), "sqrt_z": abs(lhs_z - rhs_z)}


def ghz_odd_cross_term(spec: HypergraphSpec, cap: int | None = None) -> complex:
    """⟨GHZ| B̃ |φ_odd⟩ after the √P_+ transform."""
    stab = classify_stabilizer(spec)
    if stab.pauli is None:
        raise UnsupportedFamily(f"{spec.as_dict()!r} has no Pauli stabilizer")
    transformed = apply_tensor_power(build_symmetric(spec), sqrt_pauli(stab.pauli, "+"))
    dec = ghz_odd_decompose(transformed)
    n = spec.n_qubits
    ghz = symmetric_to_dense(ghz_symmetric(n), cap)
    odd = dec.odd_amp[weights(n)]
    return complex(np.vdot(ghz.amp, tilde_apply(odd, "Z")))



# -- quantum values ----------------------------------------------------------


def mermin_quantum_value(
    spec: HypergraphSpec, p: str = "X", strict: bool = False, tol: float = 1e-8
) -> BellReport:
    s = build_symmetric(spec)
    n = spec.n_qubits
    p = str(p).upper()
    expectation = mermin_expectation(s, MerminSpec(n, p, "B"))

    stab = classify_stabilizer(spec)
    hypothesis = "failed"
    closed = None
    if stab.pauli == p:
        try:
            dec = ghz_odd_decompose(apply_tensor_power(s, sqrt_pauli(p, "+")))
            if dec.ghz_basis == "Z":
                hypothesis = "holds"
                closed = 2.0 ** (n - 2)
        except NotGhzOddForm:
            pass
    elif p == "Y" and stab is StabilizerClass.PLUS_X:
        r = _odd_family_r(spec)
        if r is not None:
            hypothesis = "odd_family"
            closed = 2.0 ** (n - 2) + mermin_odd_correction(r, n)

    report = _report(expectation, n, "contraction", hypothesis=hypothesis)
    if closed is None:
        if strict:
            raise HypothesisFailed(
                f"GHZ + odd hypothesis fails for {spec.as_dict()!r} with P={p}", report
            )
        return report
    residual = abs(report.quantum_value - closed)
    report = _report(
        expectation, n, "contraction", hypothesis=hypothesis, closed_form=closed, residual=residual
    )
    if residual > tol * max(1.0, closed):
        raise CrossCheckFailed(
            f"quantum value {report.quantum_value!r} != closed form {closed!r}",
            {"contraction": report.quantum_value, "closed_form": closed},
        )
    return report


def _odd_family_r(spec: HypergraphSpec) -> int | None:
    if spec.k is None or len(spec.k) != 1:
        return None
    r = (spec.k[0] - 1).bit_length()
    if r >= 3 and spec.k[0] == 2 ** (r - 1) + 1 and spec.n_qubits % 2**r == 2 ** (r - 1):
        return r
    return None


def mermin_odd_correction(r: int, n: int) -> float:
    if r < 3:
        raise ValueError(f"need r >= 3, got {r!r}")
    period = 2**r
    if n % period != period // 2:
        raise ValueError(f"N={n} not ≡ {period // 2} mod {period}")
    total = csum(
        1j**l
        * (math.cos(l * math.pi / period) + math.sin(l * math.pi / period)) ** n
        / math.cos(2 * l * math.pi / period)
        for l in range(1, period, 2)
    )
    return -(4 / 4**r) * abs(total) ** 2


# -- robustness under particle loss -------------------------------------------


@dataclass(frozen=True)
class RobustnessRow:
    row: str
    variant: str
    value: float


def robustness_candidates(n: int, k: int) -> list[RobustnessRow]:
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= lost < N, got lost={k!r}, N={n!r}")
    scale = math.sqrt(2) ** (n - 2 * k)
    rows: list[RobustnessRow] = []
    if n % 4 == 2:
        rows.append(
            RobustnessRow("row1", "M0", scale) if k % 2 else RobustnessRow("row1_degenerate", "M0", 0.5)
        )
    if n % 4 == 0:
        rows.append(
            RobustnessRow("row2", "M1", scale) if k % 2 == 0 else RobustnessRow("row2_degenerate", "M1", 0.0)
        )
    if (n - k) % 4 == 2:
        rows.append(RobustnessRow("row3", "M1", abs(math.sin(math.pi * k / 4)) * scale))
    if (n - k) % 4 == 0:
        rows.append(RobustnessRow("row4", "M1", abs(math.cos(math.pi * k / 4)) * scale))
    return rows


def robustness_value(
    n: int, lost: int, variant: str = "auto", tol: float = 1e-9
) -> BellReport:
    if variant not in ("auto", "M0", "M1"):
        raise ValueError(f"variant must be auto, M0 or M1, got {variant!r}")
    rows = robustness_candidates(n, lost)
    if not rows:
        raise UnsupportedCase(f"no robustness row for N={n}, lost={lost}")
    s = build_symmetric(HypergraphSpec.complete(n, 3))
    if variant != "auto":
        rows = [r for r in rows if r.variant == variant]
        if not rows:
            # no row for this operator: contraction only, unlabeled
            expectation = mermin_expectation(s, MerminSpec(n, "X", variant, lost))
            return _report(expectation, n - lost, "contraction")
    # first row in table order wins ties
    chosen = max(rows, key=lambda r: (r.value, -rows.index(r)))
    expectation = mermin_expectation(s, MerminSpec(n, "X", chosen.variant, lost))
    report = _report(
        expectation,
        n - lost,
        "contraction",
        closed_form=chosen.value,
        residual=abs(abs(expectation.real) - chosen.value),
        row=chosen.row,
    )
    if report.residual > tol * max(1.0, chosen.value):
        raise CrossCheckFailed(
            f"robustness contraction {report.quantum_value!r} != table {chosen.value!r}",
            {"contraction": report.quantum_value, "closed_form": chosen.value},
        )
    return report


# -- stabilizer families ------------------------------------------------------


@dataclass(frozen=True)
class FamilyDescriptor:
    k: tuple[int, ...]
    m: int
    r: int
    modulus: int
    residue: int
    stabilizer: StabilizerClass

    def members(self, limit: int) -> list[int]:
        lo = max(self.k)
        return [n for n in range(lo, limit + 1) if n % self.modulus == self.residue]


def stabilizer_families(k) -> FamilyDescriptor:
    ks = sorted({int(x) for x in k}, reverse=True)
    with_two = 2 in ks
    odd = [x for x in ks if x != 2]
    m = len(odd)
    expected = [2**i + 1 for i in range(m, 0, -1)]
    if m == 0 or odd != expected or len(ks) != len(list(k)):
        raise ValueError(f"k={tuple(k)!r} is not of the form (2^m+1, …, 5, 3[, 2])")
    r = m
    modulus = 2 ** (r + 1)
    residue = 0 if m % 2 else modulus // 2
    stab = StabilizerClass.PLUS_X if with_two else StabilizerClass.PLUS_Y
    return FamilyDescriptor(tuple(sorted(ks)), m, r, modulus, residue, stab)


def check_family(desc: FamilyDescriptor, limit: int = 16) -> dict[int, bool]:
    return {
        n: classify_stabilizer(HypergraphSpec.complete(n, desc.k)) is desc.stabilizer
        for n in desc.members(limit)
    }


def dense_robustness_expectation(n: int, lost: int, variant: str, cap: int | None = None) -> complex:
    state = build_dense(HypergraphSpec.complete(n, 3), cap)
    return dense_mermin_expectation(state, MerminSpec(n, "X", variant, lost))
