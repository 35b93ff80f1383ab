"""Distance computations and the CSS parameter derivation."""

import itertools

import numpy as np
import pytest

from constacode import _bits
from constacode.analysis import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    css_params,
    min_distance_exact,
    min_distance_upper_bound,
    min_lee_distance_exact,
    warm_search_kernel,
)
from constacode.codes import (
    BinaryCode,
    build_code,
    generator_matrix_gray,
)
from constacode.errors import NotDualContaining, TooLarge, ZeroCode
from constacode.gf2m import find_tob
from constacode.poly import factor_xn_minus_1, mu_lift, rp_mul, xn_minus_lambda

TOB2 = find_tob(2)


def all_triples(n, m):
    lifts = [mu_lift(p, n, m) for p in factor_xn_minus_1(n, m)]
    for assign in itertools.product(range(3), repeat=len(lifts)):
        parts = [[(1, 0)], [(1, 0)], [(1, 0)]]
        for idx, slot in enumerate(assign):
            parts[slot] = rp_mul(parts[slot], lifts[idx], m)
        yield build_code(parts[0], parts[1], parts[2], n, m)


# ---------------------------------------------------------------------------
# exact Hamming distance

def test_exact_on_repetition_code():
    bc = BinaryCode(np.ones((1, 5), dtype=np.uint8), 5)
    report = min_distance_exact(bc)
    assert report.value == 5 and report.mode == "exact"
    assert report.effort == 1
    assert list(report.witness) == [1] * 5


def test_exact_on_even_weight_code():
    # [4, 3, 2]: all even-weight words
    rows = np.array([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]], dtype=np.uint8)
    report = min_distance_exact(BinaryCode(rows, 4))
    assert report.value == 2
    assert int(report.witness.sum()) == 2
    assert report.effort == 7


def test_exact_on_hamming_7_4():
    rows = np.array([
        [1, 0, 0, 0, 1, 1, 0],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1]], dtype=np.uint8)
    assert min_distance_exact(BinaryCode(rows, 7)).value == 3


def test_exact_guards():
    with pytest.raises(ZeroCode):
        min_distance_exact(BinaryCode(np.zeros((0, 4), dtype=np.uint8), 4))
    bc = BinaryCode(np.eye(11, dtype=np.uint8), 11)
    assert min_distance_exact(bc).value == 1
    with pytest.raises(TooLarge):
        import os
        os.environ["CONSTACODE_MAX_ENUM"] = "1024"
        try:
            min_distance_exact(bc)
        finally:
            del os.environ["CONSTACODE_MAX_ENUM"]


def test_witness_is_a_codeword():
    for code in all_triples(3, 2):
        if code.k1 + code.k2 == 0 and code.f != [(1, 0)]:
            continue  # zero code
        bc = generator_matrix_gray(code, TOB2)
        if bc.dimension == 0:
            continue
        report = min_distance_exact(bc)
        assert bc.contains_bits(report.witness)
        assert int(report.witness.sum()) == report.value
        payload = report.to_json()
        assert (np.asarray(_bits.hex_to_bits(payload["witness_hex"], bc.length))
                == report.witness).all()


# ---------------------------------------------------------------------------
# exact Lee distance over R

def test_lee_distance_agrees_with_gray_image():
    for code in all_triples(3, 2):
        bc = generator_matrix_gray(code, TOB2)
        if bc.dimension == 0:
            continue
        lee = min_lee_distance_exact(code, TOB2)
        ham = min_distance_exact(bc)
        assert lee.value == ham.value
        assert bc.contains_bits(lee.witness)


def test_lee_distance_zero_code():
    zero = build_code(xn_minus_lambda(3), [(1, 0)], [(1, 0)], 3, 2)
    with pytest.raises(ZeroCode):
        min_lee_distance_exact(zero, TOB2)


# ---------------------------------------------------------------------------
# randomized upper bound

def test_upper_bound_never_beats_exact():
    warm_search_kernel()
    for code in itertools.islice(all_triples(5, 2), 9):
        bc = generator_matrix_gray(code, TOB2)
        if bc.dimension == 0:
            continue
        exact = min_distance_exact(bc).value
        found = min_distance_upper_bound(bc, budget=500, seed=1)
        assert found.value >= exact
        assert found.mode == "upper_bound"
        assert bc.contains_bits(found.witness)
        assert int(found.witness.sum()) == found.value


def test_upper_bound_deterministic_and_chunk_invariant():
    code = next(c for c in all_triples(5, 2)
                if generator_matrix_gray(c, TOB2).dimension == 12)
    bc = generator_matrix_gray(code, TOB2)
    a = min_distance_upper_bound(bc, budget=5000, seed=0xAB)
    b = min_distance_upper_bound(bc, budget=5000, seed=0xAB)
    assert a.value == b.value and a.to_json() == b.to_json()
    # a longer run with the same seed can only improve on a shorter one
    short = min_distance_upper_bound(bc, budget=700, seed=0xAB)
    assert a.value <= short.value


def test_upper_bound_effort_accounting():
    code = next(c for c in all_triples(5, 2)
                if generator_matrix_gray(c, TOB2).dimension > 0)
    bc = generator_matrix_gray(code, TOB2)
    k = bc.dimension
    for budget in (1, 300):
        report = min_distance_upper_bound(bc, budget=budget, seed=3)
        assert report.effort == k + k * (k - 1) // 2 + budget * k


def test_upper_bound_zero_code():
    with pytest.raises(ZeroCode):
        min_distance_upper_bound(BinaryCode(np.zeros((0, 8), np.uint8), 8))


# ---------------------------------------------------------------------------
# CSS parameters

def test_css_full_space_single_coordinate():
    full = build_code([(1, 0)], xn_minus_lambda(1), [(1, 0)], 1, 2)
    params = css_params(full, TOB2)
    assert (params.length, params.logical_dim_exponent) == (4, 4)
    assert params.distance.value == 1
    assert params.pretty() == "[[4, 4, 1]]"
    assert params.to_json() == {"n": 4, "k": 4, "d": 1, "d_mode": "exact"}


def test_css_on_dual_containing_n3():
    lifts = [mu_lift(p, 3, 2) for p in factor_xn_minus_1(3, 2)]
    code = build_code([(1, 0)], lifts[0], rp_mul(lifts[1], lifts[2], 2), 3, 2)
    params = css_params(code, TOB2)
    assert params.length == 12
    assert params.logical_dim_exponent == \
        2 * generator_matrix_gray(code, TOB2).dimension - 12
    assert params.distance.mode == "exact"
    assert params.distance.value == min_distance_exact(
        generator_matrix_gray(code, TOB2)).value


def test_css_rejects_non_dual_containing():
    lifts = [mu_lift(p, 3, 2) for p in factor_xn_minus_1(3, 2)]
    code = build_code(lifts[0], lifts[1], lifts[2], 3, 2)
    with pytest.raises(NotDualContaining):
        css_params(code, TOB2)


def test_css_upper_bound_mode_marks_pretty():
    warm_search_kernel()
    full = build_code([(1, 0)], xn_minus_lambda(3), [(1, 0)], 3, 2)
    params = css_params(full, TOB2, distance_mode="upper_bound", budget=50,
                        seed=DEFAULT_SEED)
    assert params.to_json()["d_mode"] == "upper_bound"
    assert params.pretty().endswith("?]]")
    assert params.distance.value >= 1


def test_default_knobs():
    assert DEFAULT_BUDGET == 100_000
    assert DEFAULT_SEED == 0xC0DE
