import math

import numpy as np
import pytest


def test_sqrt_pauli_squares_to_pauli():
    from hyperstate.transforms import pauli, sqrt_pauli

    for p in "XYZ":
        for branch in "+-":
            s = sqrt_pauli(p, branch)
            assert s.is_unitary()
            assert abs((s @ s).matrix - pauli(p).matrix).max() < 1e-15


def test_sqrt_pauli_branch_eigenvalues():
    from hyperstate.transforms import sqrt_pauli

    # |−⟩ is the −1 eigenvector of X
    minus = np.array([1, -1]) / math.sqrt(2)
    assert np.allclose(sqrt_pauli("X", "+").matrix @ minus, 1j * minus)
    assert np.allclose(sqrt_pauli("X", "-").matrix @ minus, -1j * minus)


def test_tensor_power_matches_dense():
    from hyperstate.dense import apply_all, build_dense
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric
    from hyperstate.states import symmetric_to_dense
    from hyperstate.transforms import apply_tensor_power, hadamard, real_rotation, sqrt_pauli

    spec = HypergraphSpec.complete(5, (3, 2))
    for op in (sqrt_pauli("Y", "+"), hadamard(), real_rotation(0.4)):
        sym = symmetric_to_dense(apply_tensor_power(build_symmetric(spec), op))
        dense = apply_all(build_dense(spec), op)
        assert abs(sym.amp - dense.amp).max() < 1e-13


def test_contraction_cap():
    from hyperstate.errors import CapExceeded
    from hyperstate.states import ghz_symmetric
    from hyperstate.transforms import apply_tensor_power, hadamard

    with pytest.raises(CapExceeded):
        apply_tensor_power(ghz_symmetric(6), hadamard(), cap=5)


@pytest.mark.parametrize(
    "n,k,paths",
    [
        (6, (3,), ("general", "periodic", "negative_weights")),
        (10, (3,), ("general", "periodic", "negative_weights")),
        (4, (3,), ("general", "periodic")),
        (8, (3,), ("general", "periodic")),
        (4, (3, 2), ("general", "periodic", "negative_weights")),
        (12, (5,), ("general", "periodic", "negative_weights", "fast")),
        (8, (5,), ("general", "periodic", "fast")),
    ],
)
def test_closed_form_paths_match_contraction(n, k, paths):
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric, classify_stabilizer
    from hyperstate.transforms import apply_tensor_power, closed_form_amplitudes, sqrt_pauli

    spec = HypergraphSpec.complete(n, k)
    p = classify_stabilizer(spec).pauli
    out = apply_tensor_power(build_symmetric(spec), sqrt_pauli(p, "+"))
    for path in paths:
        closed = closed_form_amplitudes(n, k, path)
        assert abs(closed - out.amp).max() < 1e-12, path


def test_fast_path_spot_values():
    from hyperstate.transforms import coeff_closed_form

    # weight-1 element after √X_+ on the 12-qubit 5-uniform state
    assert coeff_closed_form(12, (5,), "+X", 1, "fast") == pytest.approx(-464 / 4096, abs=1e-14)
    assert coeff_closed_form(12, (5,), "+X", 2, "fast") == pytest.approx(1 / 64, abs=1e-15)
    assert coeff_closed_form(8, (5,), "+Y", 1, "fast") == pytest.approx(-40 / 256, abs=1e-14)
    assert coeff_closed_form(8, (5,), "+Y", 0, "fast") == pytest.approx(0.5, abs=1e-15)


def test_closed_form_rejects_wrong_stabilizer_and_path():
    from hyperstate.errors import UnsupportedFamily
    from hyperstate.transforms import coeff_closed_form

    with pytest.raises(ValueError):
        coeff_closed_form(6, (3,), "+Y", 0)
    with pytest.raises(ValueError):
        coeff_closed_form(6, (3,), "+X", 0, "nope")
    with pytest.raises(ValueError):
        coeff_closed_form(4, (3,), "+Y", 0, "negative_weights")
    with pytest.raises(UnsupportedFamily):
        coeff_closed_form(6, (3,), "+X", 0, "fast")


def test_ghz_odd_decomposition_signs():
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric
    from hyperstate.transforms import apply_tensor_power, ghz_odd_decompose, sqrt_pauli

    cases = [(6, "X", -1), (10, "X", 1), (4, "Y", -1), (8, "Y", 1)]
    for n, p, sign in cases:
        s = apply_tensor_power(build_symmetric(HypergraphSpec.complete(n, 3)), sqrt_pauli(p, "+"))
        dec = ghz_odd_decompose(s)
        assert dec.ghz_basis == "Z"
        assert dec.ghz_sign == sign, n
        assert dec.residual < 1e-12
        assert len(dec.odd_amp) == n + 1
        assert abs(dec.odd_amp[0::2]).max() == 0


def test_ghz_odd_decomposition_x_basis():
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric
    from hyperstate.transforms import apply_tensor_power, ghz_odd_decompose, sqrt_pauli

    s = apply_tensor_power(build_symmetric(HypergraphSpec.complete(12, 5)), sqrt_pauli("X", "+"))
    dec = ghz_odd_decompose(s)
    assert dec.ghz_basis == "X"
    assert dec.ghz_sign == 1


def test_ghz_odd_decomposition_failures():
    from hyperstate.errors import NotGhzOddForm
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric
    from hyperstate.states import product_symmetric
    from hyperstate.transforms import ghz_odd_decompose

    with pytest.raises(NotGhzOddForm):
        ghz_odd_decompose(build_symmetric(HypergraphSpec.complete(5, 3)))
    with pytest.raises(NotGhzOddForm) as exc:
        ghz_odd_decompose(product_symmetric(6, 0.3))
    assert exc.value.residual > 1e-3


def test_canonical_form_matches_transform():
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric, classify_stabilizer
    from hyperstate.transforms import apply_tensor_power, canonical_form, sqrt_pauli

    for n, k in [(4, (3,)), (6, (3,)), (8, (3,)), (10, (3,)), (4, (2, 3)), (8, (2, 3))]:
        spec = HypergraphSpec.complete(n, k)
        p = classify_stabilizer(spec).pauli
        out = apply_tensor_power(build_symmetric(spec), sqrt_pauli(p, "+"))
        assert abs(canonical_form(spec).amp - out.amp).max() < 1e-12, (n, k)


def test_canonical_form_unsupported():
    from hyperstate.errors import UnsupportedFamily
    from hyperstate.hypergraph import HypergraphSpec
    from hyperstate.transforms import canonical_form

    with pytest.raises(UnsupportedFamily):
        canonical_form(HypergraphSpec.complete(12, 5))


def test_mod_binom_sum_identity():
    from hyperstate.transforms import mod_binom_sum, mod_binom_sum_exact

    assert mod_binom_sum_exact(10, 3, 4) == 240
    for n, q, m in [(10, 3, 4), (12, 0, 8), (17, 5, 8), (9, 2, 3)]:
        assert mod_binom_sum(n, q, m) == pytest.approx(mod_binom_sum_exact(n, q, m), abs=1e-9)
    with pytest.raises(ValueError):
        mod_binom_sum(3, 0, 4)


def test_alternating_cos_sum_identity():
    from hyperstate.transforms import alternating_cos_sum, alternating_cos_sum_direct

    for m, a, b in [(5, 1.0, 8.0), (12, 0.0, 16.0), (7, 3.5, 4.0)]:
        assert alternating_cos_sum(m, a, b) == pytest.approx(
            alternating_cos_sum_direct(m, a, b), abs=1e-9
        )
    with pytest.raises(ValueError):
        alternating_cos_sum(3, 1.0, 0.0)


def test_sign_period():
    from hyperstate.transforms import sign_period

    assert sign_period((3,)) == 4
    assert sign_period((5,)) == 8
    assert sign_period((3, 2)) == 4


def test_mod_binom_sum_sweep():
    from hyperstate.transforms import mod_binom_sum, mod_binom_sum_exact

    for n in range(2, 41):
        for m in (2, 4, 8, 16):
            if m > n:
                continue
            for q in range(m):
                exact = mod_binom_sum_exact(n, q, m)
                assert abs(mod_binom_sum(n, q, m) - exact) <= 1e-6 * max(1, exact)


def test_closed_form_matches_contraction_and_gates_on_all_small_families():
    import itertools

    from hyperstate.dense import apply_all, build_dense
    from hyperstate.hypergraph import (
        HypergraphSpec,
        StabilizerClass,
        build_symmetric,
        classify_stabilizer,
    )
    from hyperstate.states import weights
    from hyperstate.transforms import apply_tensor_power, closed_form_amplitudes, sqrt_pauli

    checked = 0
    for size in range(1, 5):
        for k in itertools.combinations((2, 3, 5, 9), size):
            for n in range(max(3, max(k)), 13):
                spec = HypergraphSpec.complete(n, k)
                stab = classify_stabilizer(spec)
                if stab not in (StabilizerClass.PLUS_X, StabilizerClass.PLUS_Y):
                    continue
                op = sqrt_pauli(stab.pauli, "+")
                closed = closed_form_amplitudes(n, k)
                contracted = apply_tensor_power(build_symmetric(spec), op).amp
                assert abs(closed - contracted).max() < 1e-10, (n, k)
                gates = apply_all(build_dense(spec), op).amp
                assert abs(abs(np.vdot(closed[weights(n)], gates)) - 1) < 1e-10, (n, k)
                checked += 1
    assert checked >= 10


@pytest.mark.parametrize("k,p", [((3, 5, 9), "Y"), ((2, 3, 5, 9), "X")])
def test_nine_five_three_family_is_ghz_plus_odd_at_sixteen(k, p):
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric, classify_stabilizer
    from hyperstate.transforms import apply_tensor_power, ghz_odd_decompose, sqrt_pauli

    spec = HypergraphSpec.complete(16, k)
    assert classify_stabilizer(spec).pauli == p
    dec = ghz_odd_decompose(apply_tensor_power(build_symmetric(spec), sqrt_pauli(p, "+")))
    assert dec.ghz_basis == "Z"
    assert dec.residual < 1e-10
    assert abs(dec.odd_amp[1::2]).max() > 0


@pytest.mark.parametrize("p", ["X", "Y", "Z"])
def test_sqrt_pauli_twice_is_pauli_on_symmetric_states(p):
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric
    from hyperstate.transforms import apply_tensor_power, pauli, sqrt_pauli

    s = build_symmetric(HypergraphSpec.complete(7, (3, 2)))
    half = sqrt_pauli(p, "+")
    twice = apply_tensor_power(apply_tensor_power(s, half), half)
    once = apply_tensor_power(s, pauli(p))
    assert abs(twice.amp - once.amp).max() < 1e-12
