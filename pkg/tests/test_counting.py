"""Closed-form counts: frozen values, decomposition identity, polynomial twins."""

import pytest

from extraspecial import counting
from extraspecial.errors import ContextError
from extraspecial.groups import ES1, ES2
from extraspecial.modp import is_odd_prime

PRIMES_TO_97 = [q for q in range(3, 98) if is_odd_prime(q)]


def test_sp_order_frozen():
    assert counting.sp_order(0, 3) == 1
    assert counting.sp_order(1, 3) == 24
    assert counting.sp_order(2, 3) == 51840
    assert counting.sp_order(1, 5) == 120
    assert counting.sp_order(3, 3) == 9170703360


def test_im_phi2_order_frozen():
    assert counting.im_phi2_order(1, 3) == 6
    assert counting.im_phi2_order(2, 3) == 1296
    assert counting.im_phi2_order(1, 5) == 20
    with pytest.raises(ContextError):
        counting.im_phi2_order(0, 3)


def test_alpha_beta_gamma_frozen():
    assert [counting.alpha_k(3, 1, k) for k in (0, 1)] == [1, 4]
    assert [counting.beta_k(3, 1, k) for k in (0, 1)] == [1, 1]
    assert [counting.gamma_k(3, 1, k) for k in (0, 1)] == [1, 8]
    assert [counting.alpha_k(3, 2, k) for k in (0, 1, 2)] == [1, 40, 40]
    assert [counting.beta_k(3, 2, k) for k in (0, 1, 2)] == [1, 13, 4]
    assert counting.alpha_k(3, 2, 3) == 0
    assert counting.beta_k(3, 1, -1) == 0


def test_count_x_y_frozen():
    assert counting.count_X(3, 1) == 33
    assert counting.count_Y(3, 1) == 9
    assert counting.count_X(3, 2) == 252801
    assert counting.count_Y(3, 2) == 26001
    assert counting.count_X(5, 1) == 145
    assert counting.count_Y(5, 1) == 25


def test_aut_end_frozen():
    assert counting.aut_order(ES1, 3, 1) == 432
    assert counting.aut_order(ES2, 3, 1) == 54
    assert counting.aut_order(ES2, 3, 2) == 104976
    assert counting.end_order(ES1, 3, 1) == 729
    assert counting.end_order(ES2, 3, 1) == 135
    assert counting.end_order(ES2, 5, 1) == 1125
    assert counting.end_order(ES1, 3, 2) == 28874961
    assert counting.end_order(ES2, 3, 2) == 2211057
    with pytest.raises(ContextError):
        counting.aut_order("es1~", 3, 1)


def test_end_es1_31_is_the_free_count():
    # at (p, 1) the es1 group is relatively free on two generators, so every
    # generator-image pair extends: |End| = |G|^2
    for p in (3, 5, 7):
        assert counting.end_order(ES1, p, 1) == (p ** 3) ** 2


def test_x_plus_invertibles_fill_the_matrix_space():
    # n = 1: singular 2x2 matrices (X) plus GL_2 exhaust all p^4 matrices
    for p in (3, 5, 7, 11):
        gl = (p * p - 1) * (p * p - p)
        assert counting.count_X(p, 1) + gl == p ** 4


def test_decomposition_identity_all_small_parameters():
    for p in PRIMES_TO_97:
        for n in range(1, 7):
            assert counting.end_order(ES1, p, n) == (
                counting.aut_order(ES1, p, n) + p ** (2 * n) * counting.count_X(p, n))
            assert counting.end_order(ES2, p, n) == (
                counting.aut_order(ES2, p, n) + p ** (2 * n) * counting.count_Y(p, n))


def test_gamma_is_surjection_count():
    # gamma_k(p, n, k) = prod_{i<k} (p^{2n} - p^i)
    for p in (3, 5):
        for n in (1, 2):
            for k in range(n + 1):
                expected = 1
                for i in range(k):
                    expected *= p ** (2 * n) - p ** i
                assert counting.gamma_k(p, n, k) == expected


def test_polynomial_twins_evaluate_to_formulas():
    for n in (1, 2, 3):
        for p in (3, 5, 7):
            for k in range(n + 1):
                assert counting.alpha_poly(n, k).eval(p) == counting.alpha_k(p, n, k)
                assert counting.beta_poly(n, k).eval(p) == counting.beta_k(p, n, k)
                assert counting.gamma_poly(n, k).eval(p) == counting.gamma_k(p, n, k)
            assert counting.count_X_poly(n).eval(p) == counting.count_X(p, n)
            assert counting.count_Y_poly(n).eval(p) == counting.count_Y(p, n)
            assert counting.sp_order_poly(n).eval(p) == counting.sp_order(n, p)
            assert counting.im_phi2_order_poly(n).eval(p) == counting.im_phi2_order(n, p)
            for kind in (ES1, ES2):
                assert counting.aut_order_poly(kind, n).eval(p) == counting.aut_order(kind, p, n)
                assert counting.end_order_poly(kind, n).eval(p) == counting.end_order(kind, p, n)


def test_alpha_beta_polynomials_nonnegative():
    for n in (1, 2, 3, 4):
        for k in range(n + 1):
            assert counting.alpha_poly(n, k).is_nonnegative()
            assert counting.beta_poly(n, k).is_nonnegative()


def test_compute_report_roundtrip():
    rep = counting.compute_report("count_X", 3, 1, oracle=True)
    assert rep.formula_value == 33 and rep.oracle_value == 33 and rep.match
    d = rep.to_json_dict()
    assert d["quantity"] == "count_X" and d["formula"] == 33 and d["match"] is True
    rep2 = counting.compute_report("aut_order", 3, 1, group_kind=ES2)
    assert rep2.formula_value == 54 and rep2.oracle_value is None
    with pytest.raises(ContextError):
        counting.formula_value("alpha_k", 3, 1)  # k missing
    with pytest.raises(ContextError):
        counting.formula_value("end_order", 3, 1)  # group kind missing
