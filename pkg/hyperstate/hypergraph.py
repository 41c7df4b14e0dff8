"""Hypergraph specifications, symmetric construction and Pauli stabilizer classes.

A spec is either
- complete: every hyperedge of each cardinality in k (permutation symmetric), or
- explicit: a list of vertex subsets.

For complete specs the state is Σ_x (−1)^{f(w(x))} |x⟩ / √2^N with
f(w) = Σ_i C(w, k_i) mod 2.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum

import numpy as np

from hyperstate.states import SymmetricState


class StabilizerClass(str, Enum):
    PLUS_X = "+X"
    MINUS_X = "-X"
    PLUS_Y = "+Y"
    NONE = "none"

    @property
    def pauli(self) -> str | None:
        if self is StabilizerClass.NONE:
            return None
        return self.value[1]

    @property
    def sign(self) -> int:
        return -1 if self is StabilizerClass.MINUS_X else 1


@dataclass(frozen=True)
class HypergraphSpec:
    n_qubits: int
    k: tuple[int, ...] | None = None
    edges: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        n = self.n_qubits
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"n_qubits must be >= 1, got {n!r}")
        if (self.k is None) == (self.edges is None):
            raise ValueError("spec needs exactly one of k or edges")
        if self.k is not None:
            ks = tuple(int(x) for x in self.k)
            if not ks:
                raise ValueError("cardinality vector must be nonempty")
            if len(set(ks)) != len(ks):
                raise ValueError(f"cardinalities must be distinct, got {ks!r}")
            for ki in ks:
                if ki < 1:
                    raise ValueError(f"cardinality must be >= 1, got {ki!r}")
                if ki > n:
                    raise ValueError(f"cardinality {ki!r} exceeds n_qubits={n}")
            object.__setattr__(self, "k", tuple(sorted(ks)))
        else:
            object.__setattr__(self, "edges", _normalize_edges(n, self.edges))

    @classmethod
    def complete(cls, n: int, k) -> HypergraphSpec:
        if isinstance(k, int):
            k = (k,)
        return cls(n_qubits=int(n), k=tuple(k))

    @classmethod
    def from_edges(cls, n: int, edges) -> HypergraphSpec:
        return cls(n_qubits=int(n), edges=tuple(tuple(e) for e in edges))

    @property
    def is_symmetric(self) -> bool:
        return self.k is not None

    def as_dict(self) -> dict:
        if self.k is not None:
            return {"n": self.n_qubits, "k": list(self.k)}
        return {"n": self.n_qubits, "edges": [list(e) for e in self.edges or ()]}


def _normalize_edges(n: int, edges) -> tuple[tuple[int, ...], ...]:
    counts: Counter[tuple[int, ...]] = Counter()
    for e in edges or ():
        verts = tuple(int(v) for v in e)
        if not verts:
            raise ValueError("hyperedges must be nonempty")
        if len(set(verts)) != len(verts):
            raise ValueError(f"repeated vertex in hyperedge {verts!r}")
        for v in verts:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v!r} out of range 0..{n - 1}")
        counts[tuple(sorted(verts))] += 1
    # C_e is an involution: duplicates cancel pairwise
    return tuple(sorted((e for e, c in counts.items() if c % 2), key=lambda e: (len(e), e)))


def expand_edges(spec: HypergraphSpec) -> list[tuple[int, ...]]:
    if spec.edges is not None:
        return list(spec.edges)
    out: list[tuple[int, ...]] = []
    for ki in spec.k or ():
        out.extend(itertools.combinations(range(spec.n_qubits), ki))
    return out


def xx_stabilized_example() -> HypergraphSpec:
    """Four-qubit 3-uniform example stabilized by X⊗X⊗1⊗1."""
    return HypergraphSpec.from_edges(4, [(0, 2, 3), (1, 2, 3)])


def weight_sign(k, w: int) -> int:
    if w < 0:
        raise ValueError(f"weight must be >= 0, got {w!r}")
    return sum(math.comb(w, ki) for ki in k if ki <= w) % 2


def _require_k(spec: HypergraphSpec) -> tuple[int, ...]:
    if spec.k is None:
        raise ValueError("operation needs a cardinality-vector spec")
    return spec.k


def build_symmetric(spec: HypergraphSpec) -> SymmetricState:
    k = _require_k(spec)
    n = spec.n_qubits
    signs = np.array([(-1.0) ** weight_sign(k, w) for w in range(n + 1)])
    return SymmetricState(n, signs / math.sqrt(2**n))


def classify_stabilizer(spec: HypergraphSpec) -> StabilizerClass:
    """Palindrome conditions on f, checked with exact integers for all weights."""
    k = _require_k(spec)
    n = spec.n_qubits
    f = [weight_sign(k, w) for w in range(n + 1)]
    if all(f[w] == f[n - w] for w in range(n + 1)):
        return StabilizerClass.PLUS_X
    if all(f[w] == (f[n - w] + 1) % 2 for w in range(n + 1)):
        return StabilizerClass.MINUS_X
    if n % 2 == 0 and all(
        f[w] == (f[n - w] + w + n // 2) % 2 for w in range(n + 1)
    ):
        return StabilizerClass.PLUS_Y
    return StabilizerClass.NONE


def toggle_pairwise_edges(spec: HypergraphSpec) -> HypergraphSpec:
    k = _require_k(spec)
    if spec.n_qubits % 2:
        raise ValueError(f"pairwise toggle needs even N, got {spec.n_qubits!r}")
    ks = set(k)
    ks ^= {2}
    if not ks:
        raise ValueError("toggle would leave an empty cardinality vector")
    return HypergraphSpec.complete(spec.n_qubits, tuple(ks))


def parse_k(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError as e:
        raise ValueError(f"--k must be a comma list of integers, got {raw!r}") from e
