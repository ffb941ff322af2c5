"""Truncated power series with exact rational coefficients.

The working variable is t with the convention x = t**2, so the half-integer
x-powers that weight odd-length paths are ordinary monomials here.  A series
of order N is exact modulo t**(N+1) and always stores N+1 coefficients.
Arithmetic never loses precision silently: results carry the minimum operand
order (raised by the amount of any multiplication by a power of t).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .counting import catalan

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


def _frac(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class TruncSeries:
    """Immutable truncated series in t over exact rationals."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [_frac(c) for c in coeffs][:order + 1]
        cs.extend([_ZERO] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls((1,), order)

    @classmethod
    def t_power(cls, s: int, order: int) -> "TruncSeries":
        """The monomial t**s."""
        if s < 0:
            raise ValueError("power must be nonnegative")
        return cls([0] * s + [1], order)

    @classmethod
    def from_x_coeffs(cls, x_coeffs: Iterable[Scalar], order: int) -> "TruncSeries":
        """Series with the k-th given coefficient attached to x**k = t**(2k)."""
        cs = [_ZERO] * (order + 1)
        for k, c in enumerate(x_coeffs):
            if 2 * k > order:
                break
            cs[2 * k] = _frac(c)
        return cls(cs, order)

    def coefficient(self, s: int) -> Fraction:
        """Coefficient of t**s; s must not exceed the truncation order."""
        if not 0 <= s <= self.order:
            raise ValueError(f"t^{s} is beyond truncation order {self.order}")
        return self.coeffs[s]

    def x_coefficient(self, k: int) -> Fraction:
        """Coefficient of x**k = t**(2k)."""
        return self.coefficient(2 * k)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(order + 1)], order)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return TruncSeries([c * f for c in self.coeffs], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [_ZERO] * (order + 1)
        nz = [(j, c) for j, c in enumerate(other.coeffs[:order + 1]) if c]
        for i, a in enumerate(self.coeffs[:order + 1]):
            if not a:
                continue
            for j, b in nz:
                if i + j > order:
                    break
                out[i + j] += a * b
        return TruncSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncSeries":
        if e < 0:
            raise ValueError("negative powers: invert first")
        result = TruncSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a0
        out = [inv0] + [_ZERO] * self.order
        nz = [(i, c) for i, c in enumerate(self.coeffs) if i > 0 and c]
        for k in range(1, self.order + 1):
            acc = _ZERO
            for i, c in nz:
                if i > k:
                    break
                acc += c * out[k - i]
            out[k] = -inv0 * acc
        return TruncSeries(out, self.order)

    def sqrt(self) -> "TruncSeries":
        """Square root of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("sqrt requires constant term 1")
        out = [Fraction(1)] + [_ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc -= out[i] * out[k - i]
            out[k] = acc / 2
        return TruncSeries(out, self.order)

    def shift(self, s: int) -> "TruncSeries":
        """Multiply by t**s.  The order moves with the shift; a negative shift
        requires the dropped low coefficients to vanish."""
        if s >= 0:
            return TruncSeries([_ZERO] * s + list(self.coeffs), self.order + s)
        if any(self.coeffs[:-s]):
            raise ValueError("cannot divide: low-order coefficients are nonzero")
        if self.order + s < 0:
            raise ValueError("shift would empty the series")
        return TruncSeries(self.coeffs[-s:], self.order + s)

    def truncate(self, order: int) -> "TruncSeries":
        """Forget coefficients above `order` (which must not exceed self.order)."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[:order + 1], order)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, TruncSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c][:6]
        body = " + ".join(terms) if terms else "0"
        return f"TruncSeries({body} + O(t^{self.order + 1}))"


def binomial_pow(alpha: Scalar, u: int, x_order: int) -> TruncSeries:
    """(1 + u*x)**alpha through x**x_order, via generalized binomials."""
    if x_order < 0:
        raise ValueError("x_order must be nonnegative")
    a = _frac(alpha)
    xs = [Fraction(1)]
    for k in range(1, x_order + 1):
        xs.append(xs[-1] * (a - k + 1) / k * u)
    return TruncSeries.from_x_coeffs(xs, 2 * x_order)


def catalan_series(x_order: int) -> TruncSeries:
    """The Catalan generating function c(x) = sum C_n x^n through x**x_order."""
    if x_order < 0:
        raise ValueError("x_order must be nonnegative")
    return TruncSeries.from_x_coeffs(
        [catalan(n) for n in range(x_order + 1)], 2 * x_order)


def shifted_catalan_series(x_order: int) -> TruncSeries:
    """c(x) - 1 = x*c(x)**2: the substitution variable of the closed forms."""
    return catalan_series(x_order) - TruncSeries.one(2 * x_order)


class BiTrunc:
    """Bivariate series over exact rationals, truncated by total degree.

    Coefficients are stored sparsely by (x-power, y-power); entries beyond the
    total-degree bound are absent by construction.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, terms, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs: dict[tuple[int, int], Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("powers must be nonnegative")
            if i + j > order:
                continue
            f = _frac(c)
            if f:
                coeffs[(i, j)] = f
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "BiTrunc":
        return cls({}, order)

    @classmethod
    def one(cls, order: int) -> "BiTrunc":
        return cls({(0, 0): 1}, order)

    def get(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), _ZERO)

    def __add__(self, other: "BiTrunc") -> "BiTrunc":
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, _ZERO) + c
        return BiTrunc(out, order)

    def __sub__(self, other: "BiTrunc") -> "BiTrunc":
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, _ZERO) - c
        return BiTrunc(out, order)

    def __mul__(self, other: "BiTrunc") -> "BiTrunc":
        if not isinstance(other, BiTrunc):
            return NotImplemented
        order = min(self.order, other.order)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j <= order:
                    key = (i, j)
                    out[key] = out.get(key, _ZERO) + a * b
        return BiTrunc(out, order)

    def invert(self) -> "BiTrunc":
        """Multiplicative inverse; requires a nonzero constant term."""
        a00 = self.get(0, 0)
        if a00 == 0:
            raise ZeroDivisionError("bivariate series with zero constant term is not invertible")
        inv0 = 1 / a00
        out: dict[tuple[int, int], Fraction] = {(0, 0): inv0}
        rest = [(key, c) for key, c in self.coeffs.items() if key != (0, 0)]
        for d in range(1, self.order + 1):
            for i in range(d + 1):
                j = d - i
                acc = _ZERO
                for (k, l), c in rest:
                    if k <= i and l <= j:
                        b = out.get((i - k, j - l))
                        if b:
                            acc += c * b
                if acc:
                    out[(i, j)] = -inv0 * acc
        return BiTrunc(out, self.order)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BiTrunc)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((frozenset(self.coeffs.items()), self.order))

    def __repr__(self) -> str:
        n = len(self.coeffs)
        return f"BiTrunc({n} terms, total degree <= {self.order})"
