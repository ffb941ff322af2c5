"""Truncated t-series arithmetic (x = t^2) and the bivariate layer.

Claims covered:
    - exact arithmetic with explicit truncation-order bookkeeping: results
      carry the minimum operand order, shifts move it, nothing is lost silently
    - inversion, square root, and generalized binomial powers against
      independent oracles (geometric series, integer polynomial expansion,
      composition enumeration)
    - the Catalan series satisfies c = 1 + x c^2 and matches its radical form
    - the substitution identities x = C/(1+C)^2 and sqrt(C) = t(1+C)
    - bivariate multiplication/inversion on total-degree-truncated series
"""

from fractions import Fraction
from math import comb, prod

import pytest

from supercat import (BiTrunc, TruncSeries, binomial_pow, catalan,
                      catalan_series, shifted_catalan_series)


def test_construction_pads_and_truncates():
    s = TruncSeries([1, 2], 4)
    assert s.coeffs == (1, 2, 0, 0, 0)
    assert TruncSeries([1, 2, 3], 1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        TruncSeries([1], -1)


def test_monomials_and_coefficient_access():
    x = TruncSeries.t_power(2, 6)
    assert x.coefficient(2) == 1 and x.coefficient(3) == 0
    assert x.x_coefficient(1) == 1
    with pytest.raises(ValueError):
        x.coefficient(7)


def test_basic_products():
    t = TruncSeries.t_power(1, 8)
    assert t * t == TruncSeries.t_power(2, 8)
    one = TruncSeries.one(8)
    assert (one + t) * (one - t) == one - TruncSeries.t_power(2, 8)


def test_order_bookkeeping():
    a = TruncSeries.one(10)
    b = TruncSeries.one(6)
    assert (a * b).order == 6
    assert (a + b).order == 6
    assert (a - b).order == 6
    assert a.shift(3).order == 13
    assert a.truncate(4).order == 4
    with pytest.raises(ValueError):
        a.truncate(11)


def test_shift_down_requires_zero_low_terms():
    x = TruncSeries.t_power(2, 6)
    assert x.shift(-2) == TruncSeries.one(4)
    with pytest.raises(ValueError):
        TruncSeries.one(6).shift(-1)


def test_invert_geometric():
    one = TruncSeries.one(6)
    t = TruncSeries.t_power(1, 6)
    assert (one - t).invert() == TruncSeries([1] * 7, 6)
    with pytest.raises(ZeroDivisionError):
        t.invert()


def test_catalan_series_functional_equation():
    c = catalan_series(15)
    x = TruncSeries.t_power(2, 30)
    assert x * c * c + TruncSeries.one(30) == c
    assert c * c.invert() == TruncSeries.one(30)


def test_catalan_series_matches_radical_form():
    # c(x) = (1 - (1-4x)^(1/2)) / (2x)
    n = 16
    radical = binomial_pow(Fraction(1, 2), -4, n)
    lhs = (TruncSeries.one(2 * n) - radical).shift(-2) * Fraction(1, 2)
    assert lhs == catalan_series(n - 1)


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def test_invert_one_minus_catalan_against_composition_oracle():
    # [x^n] 1/(1-C) sums prod(C_part) over compositions of n
    oracle = [sum(prod(catalan(part) for part in comp) for comp in _compositions(n))
              for n in range(9)]
    assert oracle == [1, 1, 3, 10, 35, 126, 462, 1716, 6435]
    C = shifted_catalan_series(8)
    inv = (TruncSeries.one(16) - C).invert()
    assert [inv.x_coefficient(n) for n in range(9)] == oracle


def test_binomial_pow_basics():
    assert binomial_pow(1, 1, 5) == TruncSeries.from_x_coeffs([1, 1], 10)
    assert binomial_pow(Fraction(5, 2), -4, 8).coefficient(0) == 1


def test_binomial_pow_square_matches_polynomial_expansion():
    half_power = binomial_pow(Fraction(5, 2), -4, 20)
    squared = half_power * half_power
    plain = TruncSeries.from_x_coeffs(
        [comb(5, k) * (-4) ** k for k in range(6)], 40)
    assert squared == plain


def test_substitution_identities():
    order = 12
    C = shifted_catalan_series(order)
    one = TruncSeries.one(2 * order)
    x = TruncSeries.t_power(2, 2 * order)
    one_plus = one + C
    assert x == C * (one_plus * one_plus).invert()
    # sqrt(C)/t has constant term 1 and equals 1 + C
    assert C.shift(-2).sqrt() == one_plus.truncate(2 * order - 2)


def test_sqrt_requires_unit_constant_term():
    with pytest.raises(ValueError):
        (2 * TruncSeries.one(4)).sqrt()


def test_half_step_parity_of_even_series():
    C = shifted_catalan_series(10)
    assert all(C.coeffs[s] == 0 for s in range(1, C.order + 1, 2))


def test_bi_trunc_geometric_inverse():
    order = 8
    one = BiTrunc.one(order)
    xy = BiTrunc({(1, 1): 1}, order)
    inv = (one - xy).invert()
    expected = BiTrunc({(k, k): 1 for k in range(order // 2 + 1)}, order)
    assert inv == expected
    assert (one - xy) * inv == one


def test_bi_trunc_mul_commutes():
    order = 7
    a = BiTrunc({(0, 0): 2, (1, 2): Fraction(1, 3), (3, 0): -1}, order)
    b = BiTrunc({(0, 0): 1, (2, 1): 5, (0, 4): Fraction(7, 2)}, order)
    assert a * b == b * a


def test_bi_trunc_drops_terms_beyond_total_degree():
    s = BiTrunc({(2, 2): 9, (5, 5): 1}, 4)
    assert s.get(2, 2) == 9
    assert s.get(5, 5) == 0
    with pytest.raises(ZeroDivisionError):
        BiTrunc({(1, 0): 1}, 3).invert()
