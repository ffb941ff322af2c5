"""Polynomial quotients for height-restricted path generating functions.

Claims covered:
    - the p polynomials from the recurrence match the alternating binomial sum
    - quotient normalization: even t-shifts fold into the numerator, the zero
      quotient is canonical, parity-mixed addition is rejected
    - every expanded generating function agrees with transfer-table counts,
      with the right parity support and the right boundary zeros
    - height-exact functions combine over the denominator p_k * p_{k+1}
    - more height means more paths (coefficientwise monotonicity)
"""

import pytest

from supercat import (PathClass, PolyQuotient, PolyX, ballot_between_gf,
                      ballot_end_gf, ballot_exact_gf, count_ballot_dp,
                      count_paths_dp, dyck_gf, p_poly, p_poly_explicit)

P_FIRST = [(1,), (1,), (1, -1), (1, -2), (1, -3, 1), (1, -4, 3), (1, -5, 6, -1)]


def test_p_poly_first_values():
    for n, coeffs in enumerate(P_FIRST):
        assert p_poly(n) == PolyX(coeffs)
    assert p_poly(-1).is_zero


def test_p_poly_eight_from_the_sum():
    assert p_poly_explicit(8) == PolyX((1, -7, 15, -10, 1))
    assert p_poly(8) == p_poly_explicit(8)


def test_p_poly_recurrence_matches_explicit_sum():
    for n in range(-1, 21):
        assert p_poly(n) == p_poly_explicit(n)
    with pytest.raises(ValueError):
        p_poly(-2)
    with pytest.raises(ValueError):
        p_poly_explicit(-3)


def test_polyx_arithmetic():
    a = PolyX((1, 2))
    b = PolyX((0, 0, 3))
    assert a + b == PolyX((1, 2, 3))
    assert a * b == PolyX((0, 0, 3, 6))
    assert (a - a).is_zero and (a - a).degree == -1
    assert b.valuation() == 2
    assert a.mul_x_power(2) == PolyX((0, 0, 1, 2))
    with pytest.raises(TypeError):
        PolyX((1.5,))
    with pytest.raises(ValueError):
        PolyX(()).valuation()


def test_quotient_normalization():
    q = PolyQuotient(PolyX((1,)), PolyX((1, -1)), t_shift=4)
    assert q.t_shift == 0
    assert q.num == PolyX((0, 0, 1))
    zero = PolyQuotient(PolyX(), PolyX((0, 1)), t_shift=3)
    assert zero.is_zero and zero.t_shift == 0
    assert zero.min_t_degree() is None
    with pytest.raises(ValueError):
        PolyQuotient(PolyX((1,)), PolyX((0, 1)))
    with pytest.raises(ZeroDivisionError):
        PolyQuotient(PolyX((1,)), PolyX(()))


def test_quotient_parity_rules():
    even = ballot_end_gf(3, 2)
    odd = ballot_end_gf(3, 1)
    with pytest.raises(ValueError):
        even + odd
    assert (odd * odd).t_shift == 0
    assert (even + PolyQuotient(PolyX())) == even


def test_quotient_equality_by_cross_multiplication():
    a = PolyQuotient(PolyX((1,)), PolyX((1, -1)))
    b = PolyQuotient(PolyX((2,)), PolyX((2, -2)))
    assert a == b
    assert a != PolyQuotient(PolyX((1,)), PolyX((1, -2)))


def test_dyck_gf_small_cases():
    assert dyck_gf(-1).is_zero and dyck_gf(-2).is_zero
    with pytest.raises(ValueError):
        dyck_gf(-3)
    g0 = dyck_gf(0).expand(10)
    assert g0.coeffs[0] == 1 and all(c == 0 for c in g0.coeffs[1:])
    g1 = dyck_gf(1).expand(10)
    assert [g1.x_coefficient(k) for k in range(6)] == [1, 1, 1, 1, 1, 1]
    g2 = dyck_gf(2).expand(16)
    assert [g2.x_coefficient(k) for k in range(9)] == [1, 1, 2, 4, 8, 16, 32, 64, 128]


def test_expand_bookkeeping():
    assert dyck_gf(3).expand(25).order == 25
    assert dyck_gf(-1).expand(12).coeffs == (0,) * 13
    with pytest.raises(ValueError):
        dyck_gf(3).expand(-1)


def test_ballot_end_gf_boundaries():
    for k in range(9):
        assert ballot_end_gf(k, 0) == dyck_gf(k)
        assert ballot_end_gf(k, k + 1).is_zero
        assert ballot_end_gf(k, k + 5).is_zero
    assert ballot_end_gf(1, 2).is_zero
    with pytest.raises(ValueError):
        ballot_end_gf(2, -1)
    with pytest.raises(ValueError):
        ballot_end_gf(-1, 0)


def test_ballot_end_gf_counts_and_parity():
    for k in range(5):
        for j in range(k + 2):
            series = ballot_end_gf(k, j).expand(14)
            for s in range(15):
                expected = count_ballot_dp(
                    PathClass(end_level=j, max_height=k), s)
                assert series.coeffs[s] == expected
                if (s - j) % 2:
                    assert series.coeffs[s] == 0
    # the hand-checked case: height <= 2, end level 2, 4 steps
    assert ballot_end_gf(2, 2).expand(8).coefficient(4) == 2


def test_ballot_between_gf_reduces_and_symmetrizes():
    for k in range(5):
        for j in range(k + 2):
            assert ballot_between_gf(k, 0, j) == ballot_end_gf(k, j)
            for i in range(k + 2):
                assert ballot_between_gf(k, i, j) == ballot_between_gf(k, j, i)
    with pytest.raises(ValueError):
        ballot_between_gf(2, 0, 4)


def test_ballot_between_gf_counts_from_start_level():
    series = ballot_between_gf(3, 1, 2).expand(14)
    assert [series.coeffs[s] for s in range(10)] == [0, 1, 0, 3, 0, 8, 0, 21, 0, 55]
    for s in range(15):
        assert series.coeffs[s] == count_paths_dp(s, 1, 2, 3)


def test_ballot_exact_gf_values():
    h22 = ballot_exact_gf(2, 2).expand(12)
    assert h22.coeffs[2] == 1 and all(h22.coeffs[s] == 0 for s in range(2))
    h10 = ballot_exact_gf(1, 0).expand(12)
    assert [h10.x_coefficient(k) for k in range(7)] == [0, 1, 1, 1, 1, 1, 1]
    with pytest.raises(ValueError):
        ballot_exact_gf(0, 0)


def test_ballot_exact_gf_denominator_and_counts():
    assert ballot_exact_gf(3, 1).den == p_poly(3) * p_poly(4)
    for k in range(1, 5):
        for j in range(k + 2):
            series = ballot_exact_gf(k, j).expand(14)
            for s in range(15):
                expected = count_ballot_dp(
                    PathClass(end_level=j, exact_height=k), s)
                assert series.coeffs[s] == expected


def test_more_height_means_more_paths():
    for k in range(7):
        wider = dyck_gf(k + 1).expand(30)
        narrower = dyck_gf(k).expand(30)
        assert all(c >= 0 for c in (wider - narrower).coeffs)
