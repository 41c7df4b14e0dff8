import math

import pytest


def test_closed_form_three_uniform():
    from hyperstate.entanglement import BoundsResult, geomeasure_closed

    assert geomeasure_closed(6, (3,)).value == 0.609375
    b = geomeasure_closed(4, (3,))
    assert isinstance(b, BoundsResult)
    assert (b.lower, b.upper) == (0.4375, 0.6875)


def test_closed_form_unsupported_and_mismatch():
    from hyperstate.entanglement import geomeasure_closed
    from hyperstate.errors import UnsupportedFamily

    with pytest.raises(UnsupportedFamily):
        geomeasure_closed(5, (3,))
    with pytest.raises(UnsupportedFamily):
        geomeasure_closed(6, (3, 2))
    with pytest.raises(ValueError):
        geomeasure_closed(6, (3,), "+Y")


@pytest.mark.parametrize("n,k", [(6, (3,)), (10, (3,)), (12, (5,))])
def test_closed_form_matches_numeric(n, k):
    from hyperstate.entanglement import geomeasure_compare

    res = geomeasure_compare(n, k)
    assert res.residual_vs_alternate < 1e-9


@pytest.mark.parametrize("n,k", [(4, (3,)), (8, (3,)), (8, (5,))])
def test_numeric_inside_bounds(n, k):
    from hyperstate.entanglement import BoundsResult, geomeasure_compare

    res = geomeasure_compare(n, k)
    assert isinstance(res, BoundsResult)
    assert res.contains()


def test_h43_symmetric_numeric_value():
    from hyperstate.entanglement import BoundsResult, geomeasure_compare

    res = geomeasure_compare(4, (3,))
    assert isinstance(res, BoundsResult)
    assert res.numeric == pytest.approx(0.5716186271093947, abs=1e-9)
    assert res.strictly_inside()


def test_rotated_h43_is_real_and_even():
    from hyperstate.entanglement import rotated_h43

    s = rotated_h43()
    assert abs(s.amp.imag).max() < 1e-14
    assert abs(s.amp[1::2]).max() < 1e-14
    assert (s.amp.real > -1e-14).all()


def test_symmetric_overlap_with_itself():
    from hyperstate.entanglement import symmetric_overlap
    from hyperstate.states import product_symmetric

    s = product_symmetric(5, 0.3, 0.7)
    assert abs(symmetric_overlap(s, 0.3, 0.7)) == pytest.approx(1.0, abs=1e-14)


def test_symmetric_numeric_needs_three_qubits():
    from hyperstate.entanglement import geomeasure_symmetric_numeric
    from hyperstate.states import ghz_symmetric

    with pytest.raises(ValueError):
        geomeasure_symmetric_numeric(ghz_symmetric(2))
    assert geomeasure_symmetric_numeric(ghz_symmetric(4)).value == pytest.approx(0.5, abs=1e-10)


def test_single_edge_family_decreases():
    from hyperstate.entanglement import single_edge_geomeasure

    values = [single_edge_geomeasure(n).value for n in range(3, 11)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert all(v > 0 for v in values)
    with pytest.raises(ValueError):
        single_edge_geomeasure(2)


def test_single_edge_real_search_matches_complex_search():
    from hyperstate.entanglement import geomeasure_symmetric_numeric, single_edge_geomeasure
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric

    for n in (3, 5):
        real = single_edge_geomeasure(n).value
        full = geomeasure_symmetric_numeric(build_symmetric(HypergraphSpec.complete(n, (n,))))
        assert real == pytest.approx(full.value, abs=1e-9)


def test_conjecture_lambda_reduces_to_five_uniform_closed_form():
    from hyperstate.entanglement import conjecture_lambda, geomeasure_closed

    res = conjecture_lambda(3, 12)
    assert res.label == "CONJECTURE"
    assert res.bound == pytest.approx(geomeasure_closed(12, (5,)).value, abs=1e-12)
    assert conjecture_lambda(4, 24).bound < 0.75
    with pytest.raises(ValueError):
        conjecture_lambda(2, 6)
    with pytest.raises(ValueError):
        conjecture_lambda(3, 8)


def test_cyclic_cos_max_on_lattice():
    from hyperstate.entanglement import cyclic_cos_max_check, cyclic_cos_sum

    assert cyclic_cos_max_check(3, 12, grid=2000)
    assert float(cyclic_cos_sum(2, 2, 0.0)) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        cyclic_cos_max_check(3, 5)


def test_h43_rotation_angle():
    from hyperstate.entanglement import h43_rotation_angle

    assert math.tan(2 * h43_rotation_angle()) == pytest.approx((math.sqrt(5) - 1) / 2)


def test_rotation_preserves_h43_value():
    from hyperstate.entanglement import geomeasure_symmetric_numeric, rotated_h43

    res = geomeasure_symmetric_numeric(rotated_h43(), allow_phase=False)
    assert res.value == pytest.approx((25 - 3 * math.sqrt(5)) / 32, abs=1e-9)


def test_geomeasure_invariant_under_local_unitary():
    from hyperstate.entanglement import geomeasure_symmetric_numeric
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric
    from hyperstate.transforms import apply_tensor_power, hadamard

    s = build_symmetric(HypergraphSpec.complete(6, 3))
    a = geomeasure_symmetric_numeric(s).value
    b = geomeasure_symmetric_numeric(apply_tensor_power(s, hadamard())).value
    assert a == pytest.approx(b, abs=1e-9)


@pytest.mark.parametrize(
    "k,r", [((5,), 3), ((9,), 4), ((17,), 5), ((3,), None), ((7,), None), ((5, 3), None)]
)
def test_conjecture_order(k, r):
    from hyperstate.entanglement import conjecture_order

    assert conjecture_order(k) == r


def test_conjecture_for_family_labels_and_gap():
    from hyperstate.entanglement import conjecture_for_family, conjecture_lambda

    # 9-uniform, N ≡ 0 mod 16 is the Y class: no conjecture
    assert conjecture_for_family(16, (9,)) is None
    assert conjecture_for_family(24, (5,)) is None

    c = conjecture_for_family(24, (9,), numeric=0.7)
    assert c.label == "CONJECTURE"
    assert c.bound == conjecture_lambda(4, 24).bound
    assert c.gap == pytest.approx(0.7 - c.bound)
    d = c.as_dict()
    assert d["label"] == "CONJECTURE"
    assert (d["r"], d["k"]) == (4, 9)
    assert conjecture_for_family(24, (9,)).gap is None


def test_nine_uniform_numeric_below_three_quarters():
    from hyperstate.entanglement import conjecture_for_family, numeric_for_family

    value = numeric_for_family(24, (9,)).value
    c = conjecture_for_family(24, (9,), value)
    assert 0 < value < 0.75
    assert 0 < c.bound < 0.75


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_single_edge_matches_dense_oracle(n):
    from hyperstate.dense import build_dense, product_state_optimize
    from hyperstate.entanglement import single_edge_geomeasure
    from hyperstate.hypergraph import HypergraphSpec

    spec = HypergraphSpec.from_edges(n, [tuple(range(n))])
    oracle = product_state_optimize(build_dense(spec), restarts=32, seed=0)
    assert single_edge_geomeasure(n).value == pytest.approx(oracle.value, abs=1e-8)


@pytest.mark.parametrize("n,k", [(4, (3,)), (5, (3,)), (6, (3, 2)), (6, (4,))])
def test_symmetric_search_reaches_unrestricted_optimum(n, k):
    from hyperstate.dense import build_dense, product_state_optimize
    from hyperstate.entanglement import geomeasure_symmetric_numeric
    from hyperstate.hypergraph import HypergraphSpec, build_symmetric

    spec = HypergraphSpec.complete(n, k)
    sym = geomeasure_symmetric_numeric(build_symmetric(spec)).value
    oracle = product_state_optimize(build_dense(spec), restarts=32, seed=0).value
    assert sym == pytest.approx(oracle, abs=1e-8)
