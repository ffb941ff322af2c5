"""Closed forms for height-restricted path generating functions.

Every generating function here is a quotient of integer polynomials in x,
carried together with an explicit power of t for the x**(j/2) weight of paths
ending at odd levels (x = t**2).  The denominators are the Fibonacci-like
polynomials p_n with p_0 = p_1 = 1 and p_n = p_{n-1} - x*p_{n-2}; p_{-1} = 0
so that boundary cases vanish from the same formulas.
"""

from __future__ import annotations

from math import comb

from .series import TruncSeries


class PolyX:
    """Dense integer-coefficient polynomial in x."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError("coefficients must be integers")
        self.coeffs = tuple(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (zero polynomial is invalid)."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no valuation")
        return next(i for i, c in enumerate(self.coeffs) if c)

    def mul_x_power(self, m: int) -> "PolyX":
        if m < 0:
            raise ValueError("power must be nonnegative")
        if self.is_zero:
            return self
        return PolyX((0,) * m + self.coeffs)

    def __add__(self, other: "PolyX") -> "PolyX":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyX([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "PolyX") -> "PolyX":
        return self + (-other)

    def __neg__(self) -> "PolyX":
        return PolyX([-c for c in self.coeffs])

    def __mul__(self, other) -> "PolyX":
        if isinstance(other, int):
            return PolyX([c * other for c in self.coeffs])
        if not isinstance(other, PolyX):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyX()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyX(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyX) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_series(self, t_order: int) -> TruncSeries:
        """The polynomial as a t-series (x**k contributes at t**(2k))."""
        return TruncSeries.from_x_coeffs(self.coeffs, t_order)

    def __repr__(self) -> str:
        return f"PolyX({list(self.coeffs)})"


_ONE = PolyX((1,))
_P_CACHE = [_ONE, _ONE]  # p_0, p_1


def p_poly(n: int) -> PolyX:
    """p_n from the recurrence p_n = p_{n-1} - x*p_{n-2}; p_{-1} = 0."""
    if n < -1:
        raise ValueError("defined for n >= -1")
    if n == -1:
        return PolyX()
    while len(_P_CACHE) <= n:
        k = len(_P_CACHE)
        _P_CACHE.append(_P_CACHE[k - 1] - _P_CACHE[k - 2].mul_x_power(1))
    return _P_CACHE[n]


def p_poly_explicit(n: int) -> PolyX:
    """p_n from the alternating binomial sum over k <= n/2 of (-1)^k C(n-k, k) x^k."""
    if n < -1:
        raise ValueError("defined for n >= -1")
    if n == -1:
        return PolyX()
    return PolyX([(-1) ** k * comb(n - k, k) for k in range(n // 2 + 1)])


class PolyQuotient:
    """t**t_shift * num(x) / den(x), expandable as a t-series.

    The zero quotient is canonically 0/1 with shift 0; otherwise the
    denominator must have a nonzero constant term and even parts of the shift
    fold into the numerator as powers of x, leaving t_shift in {0, 1}.
    """

    __slots__ = ("num", "den", "t_shift")

    def __init__(self, num: PolyX, den: PolyX = _ONE, t_shift: int = 0):
        if t_shift < 0:
            raise ValueError("t_shift must be nonnegative")
        if num.is_zero:
            num, den, t_shift = PolyX(), _ONE, 0
        else:
            if den.is_zero:
                raise ZeroDivisionError("zero denominator")
            if den.coeffs[0] == 0:
                raise ValueError("denominator must have a nonzero constant term")
            num = num.mul_x_power(t_shift // 2)
            t_shift %= 2
        self.num = num
        self.den = den
        self.t_shift = t_shift

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def min_t_degree(self) -> int | None:
        """Lowest t-power with a nonzero coefficient; None for the zero quotient."""
        if self.is_zero:
            return None
        return 2 * self.num.valuation() + self.t_shift

    def __add__(self, other: "PolyQuotient") -> "PolyQuotient":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.t_shift != other.t_shift:
            raise ValueError("cannot add quotients of different t-parity")
        return PolyQuotient(self.num * other.den + other.num * self.den,
                            self.den * other.den, self.t_shift)

    def __sub__(self, other: "PolyQuotient") -> "PolyQuotient":
        return self + (-other)

    def __neg__(self) -> "PolyQuotient":
        return PolyQuotient(-self.num, self.den, self.t_shift)

    def __mul__(self, other) -> "PolyQuotient":
        if isinstance(other, int):
            return PolyQuotient(self.num * other, self.den, self.t_shift)
        if not isinstance(other, PolyQuotient):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyQuotient(PolyX())
        return PolyQuotient(self.num * other.num, self.den * other.den,
                            self.t_shift + other.t_shift)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyQuotient):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return (self.t_shift == other.t_shift
                and self.num * other.den == other.num * self.den)

    def __hash__(self) -> int:
        return hash((self.num, self.den, self.t_shift))

    def expand(self, t_order: int) -> TruncSeries:
        """Series expansion truncated to exactly `t_order`."""
        if t_order < 0:
            raise ValueError("t_order must be nonnegative")
        if self.is_zero:
            return TruncSeries.zero(t_order)
        series = self.num.to_series(t_order) * self.den.to_series(t_order).invert()
        if self.t_shift:
            series = series.shift(self.t_shift).truncate(t_order)
        return series

    def __repr__(self) -> str:
        return (f"PolyQuotient(num={list(self.num.coeffs)}, "
                f"den={list(self.den.coeffs)}, t_shift={self.t_shift})")


_ZERO_Q = PolyQuotient(PolyX())


def dyck_gf(k: int) -> PolyQuotient:
    """Dyck paths of height <= k, weight x per semilength.

    k = -1 and k = -2 denote the empty class (the zero quotient).
    """
    if k < -2:
        raise ValueError("height bound must be >= -2")
    if k < 0:
        return _ZERO_Q
    return PolyQuotient(p_poly(k), p_poly(k + 1))


def ballot_end_gf(k: int, j: int) -> PolyQuotient:
    """Ballot paths of height <= k ending at level j, weight t per step.

    Equals t**j * p_{k-j} / p_{k+1}; vanishes for j > k + 1, and for j = k + 1
    through p_{-1} = 0.
    """
    if k < 0:
        raise ValueError("height bound must be >= 0")
    if j < 0:
        raise ValueError("end level must be >= 0")
    if j > k + 1:
        return _ZERO_Q
    return PolyQuotient(p_poly(k - j), p_poly(k + 1), j)


def ballot_between_gf(k: int, i: int, j: int) -> PolyQuotient:
    """Nonnegative paths from level i to level j of height <= k.

    Equals t**(j-i) * p_i * p_{k-j} / p_{k+1} for i <= j, and is symmetric in
    (i, j).
    """
    if k < 0:
        raise ValueError("height bound must be >= 0")
    if not (0 <= i <= k + 1 and 0 <= j <= k + 1):
        raise ValueError("levels must lie in [0, k + 1]")
    if i > j:
        i, j = j, i
    return PolyQuotient(p_poly(i) * p_poly(k - j), p_poly(k + 1), j - i)


def ballot_exact_gf(k: int, j: int) -> PolyQuotient:
    """Ballot paths of height exactly k ending at level j."""
    if k < 1:
        raise ValueError("exact height must be >= 1")
    if j < 0:
        raise ValueError("end level must be >= 0")
    return ballot_end_gf(k, j) - ballot_end_gf(k - 1, j)
