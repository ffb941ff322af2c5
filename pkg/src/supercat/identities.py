"""Mechanical verification of the super Catalan identity catalogue.

Every check runs in exact arithmetic and produces a VerificationReport: the
identity id, the order it was checked to, pass/fail, and the first mismatching
coefficient on failure.  Series checks compare coefficients of the half-step
variable t (x = t**2); `first_mismatch.power` is the t-exponent there, and an
index (or index tuple) for integer and bivariate checks.  Identities with a
combinatorial meaning are additionally cross-checked against brute-force path
enumeration at small orders, so a defect on either route fails the report.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from time import perf_counter

from .bijection import enumerate_restricted_pairs, forward, inverse
from .counting import (CountTable, catalan, count_E_set, count_ballot_dp,
                       count_pairs_height_diff, super_catalan)
from .height_gf import (PolyQuotient, PolyX, ballot_between_gf, ballot_end_gf,
                        ballot_exact_gf, dyck_gf, p_poly)
from .lattice_paths import PathClass, enumerate_ballot, enumerate_dyck
from .series import BiTrunc, TruncSeries, binomial_pow, shifted_catalan_series

ALL_IDENTITIES = ("e-mo", "e2", "e52", "e8", "firstsum", "g-forms",
                  "lemma-main", "p-bridge", "pairsum", "t3-closed", "t3-main")

DEFAULT_ORDERS = {
    "e-mo": 12,
    "e2": 30,
    "e52": 30,
    "e8": 10,
    "firstsum": 30,
    "g-forms": 30,
    "lemma-main": 8,
    "p-bridge": 30,
    "pairsum": 30,
    "t3-closed": 30,
    "t3-main": 20,
}

# exhaustive enumeration stays feasible only at desk scale
_LEMMA_MAIN_CAP = 10
_ENUM_ORACLE_CAP = 9


@dataclass(frozen=True)
class Mismatch:
    power: int | tuple[int, ...]
    lhs: int | Fraction
    rhs: int | Fraction


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    order: int
    passed: bool
    first_mismatch: Mismatch | None
    elapsed_ms: int
    notes: tuple[str, ...] = ()


def _json_value(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def report_to_dict(report: VerificationReport) -> dict:
    """JSON-ready dict with canonical key order."""
    fm = None
    if report.first_mismatch is not None:
        power = report.first_mismatch.power
        fm = {
            "power": list(power) if isinstance(power, tuple) else power,
            "lhs": _json_value(report.first_mismatch.lhs),
            "rhs": _json_value(report.first_mismatch.rhs),
        }
    return {
        "identity": report.identity,
        "order": report.order,
        "passed": report.passed,
        "first_mismatch": fm,
        "elapsed_ms": report.elapsed_ms,
        "notes": list(report.notes),
    }


def _run(identity: str, order: int, body) -> VerificationReport:
    notes: list[str] = []
    start = perf_counter()
    mismatch = body(notes)
    elapsed_ms = int((perf_counter() - start) * 1000)
    return VerificationReport(identity=identity, order=order,
                              passed=mismatch is None, first_mismatch=mismatch,
                              elapsed_ms=elapsed_ms, notes=tuple(notes))


def _series_mismatch(lhs: TruncSeries, rhs: TruncSeries,
                     through: int | None = None) -> Mismatch | None:
    limit = min(lhs.order, rhs.order)
    if through is not None:
        limit = min(limit, through)
    for s in range(limit + 1):
        if lhs.coeffs[s] != rhs.coeffs[s]:
            return Mismatch(s, lhs.coeffs[s], rhs.coeffs[s])
    return None


def verify_t2_closed_form(n_max: int) -> VerificationReport:
    """T(2,n) = 4*C_n - C_{n+1} for 1 <= n <= n_max."""
    def body(notes):
        for n in range(1, n_max + 1):
            lhs = super_catalan(2, n)
            rhs = 4 * catalan(n) - catalan(n + 1)
            if lhs != rhs:
                return Mismatch(n, lhs, rhs)
        return None
    return _run("e2", n_max, body)


def verify_t3_closed_form(n_max: int) -> VerificationReport:
    """T(3,n) = 16*C_n - 8*C_{n+1} + C_{n+2} for 1 <= n <= n_max."""
    def body(notes):
        for n in range(1, n_max + 1):
            lhs = super_catalan(3, n)
            rhs = 16 * catalan(n) - 8 * catalan(n + 1) + catalan(n + 2)
            if lhs != rhs:
                return Mismatch(n, lhs, rhs)
        return None
    return _run("t3-closed", n_max, body)


def verify_e8(m_max: int, p_max: int) -> VerificationReport:
    """sum_n 2^(p-2n) C(p,2n) T(m,n) = T(m, m+p) for all m <= m_max, p <= p_max.

    The m = 0 row is checked in its doubled form, where the summand T(0,n)
    becomes the middle binomial coefficient and the right side C(2p, p).
    """
    def body(notes):
        notes.append(f"checked 0 <= m <= {m_max}, 0 <= p <= {p_max}")
        notes.append("m=0 row checked as the doubled identity "
                     "(middle binomial coefficients)")
        for m in range(m_max + 1):
            for p in range(p_max + 1):
                if m == 0:
                    lhs = sum(2 ** (p - 2 * n) * comb(p, 2 * n) * comb(2 * n, n)
                              for n in range(p // 2 + 1))
                    rhs = comb(2 * p, p)
                else:
                    lhs = sum(2 ** (p - 2 * n) * comb(p, 2 * n) * super_catalan(m, n)
                              for n in range(p // 2 + 1))
                    rhs = super_catalan(m, m + p)
                if lhs != rhs:
                    return Mismatch((m, p), lhs, rhs)
        return None
    return _run("e8", max(m_max, p_max), body)


def verify_e_mo(degree: int) -> VerificationReport:
    """1 + sum C_m C_n x^m y^n = (1 - sum T(m,n) x^m y^n)^(-1), m,n >= 1,
    compared through the given total degree."""
    if degree < 2:
        raise ValueError("degree must be >= 2")
    def body(notes):
        one = BiTrunc.one(degree)
        lhs = one + BiTrunc(
            {(m, n): catalan(m) * catalan(n)
             for m in range(1, degree) for n in range(1, degree - m + 1)}, degree)
        inner = BiTrunc(
            {(m, n): super_catalan(m, n)
             for m in range(1, degree) for n in range(1, degree - m + 1)}, degree)
        rhs = (one - inner).invert()
        for d in range(degree + 1):
            for i in range(d + 1):
                j = d - i
                if lhs.get(i, j) != rhs.get(i, j):
                    return Mismatch((i, j), lhs.get(i, j), rhs.get(i, j))
        return None
    return _run("e-mo", degree, body)


def verify_firstsum(x_order: int) -> VerificationReport:
    """sum_n (G_n - G_{n-1}) G_{n+1} = 1 + 2C, as t-series through x_order.

    The n-th summand has valuation x^n, so the partial sum over n <= x_order
    determines every coefficient up to the truncation.
    """
    def body(notes):
        t_order = 2 * x_order
        total = TruncSeries.zero(t_order)
        for n in range(x_order + 1):
            term = (dyck_gf(n) - dyck_gf(n - 1)) * dyck_gf(n + 1)
            total = total + term.expand(t_order)
        rhs = TruncSeries.one(t_order) + 2 * shifted_catalan_series(x_order)
        return _series_mismatch(total, rhs)
    return _run("firstsum", x_order, body)


def verify_pairsum(x_order: int) -> VerificationReport:
    """sum_n (G_n - G_{n-1})(G_{n+1} - G_{n-2}) = 1 + 2C - C^2
    = 1 + sum T(2,n) x^n, with pair-enumeration cross-checks at low orders."""
    def body(notes):
        t_order = 2 * x_order
        total = TruncSeries.zero(t_order)
        for n in range(x_order + 1):
            term = (dyck_gf(n) - dyck_gf(n - 1)) * (dyck_gf(n + 1) - dyck_gf(n - 2))
            total = total + term.expand(t_order)
        C = shifted_catalan_series(x_order)
        one = TruncSeries.one(t_order)
        closed = one + 2 * C - C * C
        mismatch = _series_mismatch(total, closed)
        if mismatch:
            notes.append("series sum vs 1 + 2C - C^2")
            return mismatch
        by_table = TruncSeries.from_x_coeffs(
            [1] + [super_catalan(2, n) for n in range(1, x_order + 1)], t_order)
        mismatch = _series_mismatch(total, by_table)
        if mismatch:
            notes.append("series sum vs 1 + sum T(2,n) x^n")
            return mismatch
        n_oracle = min(_ENUM_ORACLE_CAP, x_order)
        for n in range(1, n_oracle + 1):
            counted = count_pairs_height_diff(n, 1)
            if total.coeffs[2 * n] != counted:
                notes.append(f"pair enumeration disagrees at n={n}")
                return Mismatch(2 * n, total.coeffs[2 * n], counted)
        notes.append(f"coefficients x^1..x^{n_oracle} cross-checked "
                     "against pair enumeration")
        return None
    return _run("pairsum", x_order, body)


def verify_e52(x_order: int) -> VerificationReport:
    """-(1-4x)^(5/2)/(2x^4) - 10/x + 15/x^2 - 5/x^3 + 1/(2x^4)
    = sum T(3,n+1) x^n.  Both sides are multiplied by 2x^4 first, which clears
    all negative powers and leaves an equality of genuine series."""
    def body(notes):
        big = x_order + 4
        t_order = 2 * big
        head = TruncSeries.from_x_coeffs([1, -10, 30, -20], t_order)
        lhs = head - binomial_pow(Fraction(5, 2), -4, big)
        rhs = TruncSeries.from_x_coeffs(
            [0, 0, 0, 0] + [2 * super_catalan(3, n + 1) for n in range(x_order + 1)],
            t_order)
        notes.append("compared after clearing denominators (multiplied by 2x^4)")
        return _series_mismatch(lhs, rhs)
    return _run("e52", x_order, body)


def _displayed_t3_tail(t_order: int) -> TruncSeries:
    """1 - 2/(1-x) - 2(1-x)/(1-2x) - (1-2x)/(1-3x+x^2)
    - (1-4x+3x^2)/(1-5x+6x^2-x^3), with the quotients spelled literally."""
    terms = (
        (2, PolyQuotient(PolyX((1,)), PolyX((1, -1)))),
        (2, PolyQuotient(PolyX((1, -1)), PolyX((1, -2)))),
        (1, PolyQuotient(PolyX((1, -2)), PolyX((1, -3, 1)))),
        (1, PolyQuotient(PolyX((1, -4, 3)), PolyX((1, -5, 6, -1)))),
    )
    tail = TruncSeries.one(t_order)
    for mult, quotient in terms:
        tail = tail - mult * quotient.expand(t_order)
    return tail


def _t3_triple_sum(t_order: int) -> TruncSeries:
    """sum over k >= 6 of H_k^(4) H_{k-2}^(3) H_{k-4}^(2) as a t-series.

    The k-th product term has minimal t-degree 6k - 21 (checked against the
    actual numerator valuation every iteration, including the first skipped
    term, so truncating the sum never silently drops a contribution)."""
    total = TruncSeries.zero(t_order)
    k = 6
    while True:
        term = (ballot_exact_gf(k, 4) * ballot_exact_gf(k - 2, 3)
                * ballot_exact_gf(k - 4, 2))
        min_degree = term.min_t_degree()
        assert min_degree == 6 * k - 21, "triple-product valuation drifted"
        if min_degree > t_order:
            return total
        total = total + term.expand(t_order)
        k += 1


def _t3_oracle_coefficient(n: int, cache: dict) -> int:
    """Brute-force count behind the x^n coefficient of the path-sum side:
    triples of exact-height ballot paths (heights k, k-2, k-4 ending at levels
    4, 3, 2; the extra half step makes the total step count 2n - 1) plus
    height-bounded Dyck paths with multiplicities 2, 2, 1, 1."""
    def exact_count(height: int, end: int, steps: int) -> int:
        key = (height, end, steps)
        if key not in cache:
            cache[key] = len(enumerate_ballot(
                PathClass(end_level=end, exact_height=height), steps))
        return cache[key]

    total = 0
    for mult, bound in ((2, 1), (2, 2), (1, 3), (1, 5)):
        total += mult * len(enumerate_ballot(
            PathClass(end_level=0, max_height=bound), 2 * n))
    steps_total = 2 * n - 1
    k = 6
    while 6 * k - 21 <= steps_total:
        for s1 in range(2 * k - 4, steps_total + 1, 2):
            c1 = exact_count(k, 4, s1)
            if not c1:
                continue
            for s2 in range(2 * k - 7, steps_total - s1 + 1, 2):
                s3 = steps_total - s1 - s2
                if s3 < 2 * k - 10:
                    continue
                total += c1 * exact_count(k - 2, 3, s2) * exact_count(k - 4, 2, s3)
        k += 1
    return total


def verify_t3_main(x_order: int, oracle_n_max: int = _ENUM_ORACLE_CAP,
                   include_oracle: bool = True) -> VerificationReport:
    """1 + sum T(3,n+1) x^n = sqrt(x) * sum_{k>=6} H_k^(4) H_{k-2}^(3) H_{k-4}^(2)
    + 2*G_1 + 2*G_2 + G_3 + G_5.

    Also checks the k-sum alone against its displayed closed rational form,
    and (optionally) the low-order coefficients against triple enumeration.
    """
    def body(notes):
        t_order = 2 * x_order
        lhs = TruncSeries.from_x_coeffs(
            [1 + super_catalan(3, 1)]
            + [super_catalan(3, n + 1) for n in range(1, x_order + 1)], t_order)
        triple_sum = _t3_triple_sum(t_order)
        correction = (2 * dyck_gf(1) + 2 * dyck_gf(2) + dyck_gf(3) + dyck_gf(5))
        rhs = triple_sum.shift(1).truncate(t_order) + correction.expand(t_order)

        if rhs.coeffs[0] != 1 + super_catalan(3, 1):
            notes.append("constant-term check failed")
            return Mismatch(0, rhs.coeffs[0], 1 + super_catalan(3, 1))
        mismatch = _series_mismatch(lhs, rhs)
        if mismatch:
            notes.append("main series identity")
            return mismatch

        # sub-identity: the k-sum equals its displayed closed rational form
        # (both sides multiplied by 2x^4 to clear negative powers)
        big = x_order + 4
        t2 = 2 * big
        lhs_sub = (triple_sum.shift(9) * 2).truncate(t2)
        rhs_sub = (TruncSeries.from_x_coeffs([1, -10, 30, -20], t2)
                   - binomial_pow(Fraction(5, 2), -4, big)
                   + 2 * _displayed_t3_tail(t2 - 8).shift(8))
        mismatch = _series_mismatch(lhs_sub, rhs_sub)
        if mismatch:
            notes.append("k-sum vs displayed closed rational expression")
            return mismatch
        notes.append("k-sum checked against its displayed closed rational form")

        if include_oracle:
            n_oracle = min(oracle_n_max, x_order)
            cache: dict = {}
            for n in range(n_oracle + 1):
                counted = _t3_oracle_coefficient(n, cache)
                if rhs.coeffs[2 * n] != counted:
                    notes.append(f"triple enumeration disagrees at n={n}")
                    return Mismatch(2 * n, rhs.coeffs[2 * n], counted)
            notes.append(f"coefficients x^0..x^{n_oracle} cross-checked "
                         "against triple enumeration")
        return None
    return _run("t3-main", x_order, body)


def verify_g_closed_forms(k_max: int, x_order: int) -> VerificationReport:
    """All closed forms for height-bounded path generating functions agree:
    the C-substitution forms, their variants without half-integer powers of C,
    the polynomial quotients, and the transfer-table counts.

    Covers G_k (k from -1), G_k^(j) in three forms (0 <= j <= k+1) and
    G_k^(i,j) in four forms (0 <= i <= j <= k+1), each against the table.
    """
    def body(notes):
        t_order = 2 * x_order
        t_base = t_order + 2
        one = TruncSeries.one(t_base)
        C = shifted_catalan_series(x_order + 1)
        onepC = one + C
        sqrtC = C.shift(-2).sqrt().shift(1)

        max_pow = k_max + 3
        c_pow = [one]
        onepc_pow = [one]
        sqrtc_pow = [TruncSeries.one(sqrtC.order)]
        geom = [one]  # geom[i] = 1 + C + ... + C^i = (1 - C^(i+1)) / (1 - C)
        for _ in range(max_pow):
            c_pow.append(c_pow[-1] * C)
            onepc_pow.append(onepc_pow[-1] * onepC)
            sqrtc_pow.append(sqrtc_pow[-1] * sqrtC)
            geom.append(geom[-1] + c_pow[-1])

        for k in range(-1, k_max + 1):
            inv_den = (one - c_pow[k + 2]).invert()
            from_c = (onepC * (one - c_pow[k + 1]) * inv_den).truncate(t_order)
            from_p = dyck_gf(k).expand(t_order)
            mismatch = _series_mismatch(from_p, from_c)
            if mismatch:
                notes.append(f"G_{k}: polynomial form vs C-form")
                return mismatch
            if k < 0:
                continue

            table = CountTable(t_order, k)
            for j in range(k + 2):
                tail = (one - c_pow[k - j + 1]) * inv_den
                by_p = ballot_end_gf(k, j).expand(t_order)
                by_sqrt = sqrtc_pow[j] * onepC * tail
                by_x = (onepc_pow[j + 1] * tail).shift(j)
                mismatch = (_series_mismatch(by_p, by_sqrt, t_order)
                            or _series_mismatch(by_p, by_x, t_order))
                if mismatch:
                    notes.append(f"G_{k}^({j}): closed forms disagree")
                    return mismatch
                for s in range(t_order + 1):
                    if by_p.coeffs[s] != table.count(s, j):
                        notes.append(f"G_{k}^({j}): series vs path count at t^{s}")
                        return Mismatch(s, by_p.coeffs[s], table.count(s, j))

            for i in range(k + 2):
                table_i = CountTable(t_order, k, start_level=i)
                for j in range(i, k + 2):
                    head = geom[i] * (one - c_pow[k - j + 1]) * inv_den
                    by_p = ballot_between_gf(k, i, j).expand(t_order)
                    main = sqrtc_pow[j - i] * onepC * head
                    var_x = (onepc_pow[j - i + 1] * head).shift(j - i)
                    var_sqrt = (sqrtc_pow[j - i + 1] * head).shift(-1)
                    mismatch = (_series_mismatch(by_p, main, t_order)
                                or _series_mismatch(by_p, var_x, t_order)
                                or _series_mismatch(by_p, var_sqrt, t_order))
                    if mismatch:
                        notes.append(f"G_{k}^({i},{j}): closed forms disagree")
                        return mismatch
                    for s in range(t_order + 1):
                        if by_p.coeffs[s] != table_i.count(s, j):
                            notes.append(f"G_{k}^({i},{j}): series vs path count at t^{s}")
                            return Mismatch(s, by_p.coeffs[s], table_i.count(s, j))
        return None
    return _run("g-forms", x_order, body)


def verify_p_bridge(n_max: int, x_order: int) -> VerificationReport:
    """p_n = (1 - C^{n+1}) / ((1 - C)(1 + C)^n) as t-series for n <= n_max."""
    def body(notes):
        t_order = 2 * x_order
        one = TruncSeries.one(t_order)
        C = shifted_catalan_series(x_order)
        inv_1m = (one - C).invert()
        inv_1p = (one + C).invert()
        c_power = C  # C^(n+1) maintained incrementally
        denominator = inv_1m  # 1 / ((1-C)(1+C)^n)
        for n in range(n_max + 1):
            lhs = p_poly(n).to_series(t_order)
            rhs = (one - c_power) * denominator
            mismatch = _series_mismatch(lhs, rhs)
            if mismatch:
                notes.append(f"first failure at n={n}")
                return mismatch
            c_power = c_power * C
            denominator = denominator * inv_1p
        notes.append(f"checked n = 0..{n_max}")
        return None
    return _run("p-bridge", x_order, body)


def verify_lemma_main_count(n_max: int) -> VerificationReport:
    """|E_n| = C_n and the pair-to-path map is a bijection, exhaustively.

    E_n is the set of pairs (P, Q) of Dyck paths of total semilength n with P
    nonempty and h(P) <= h(Q) + 1.  Checks the count, both roundtrips, and
    image equality with the full set of Dyck paths for 1 <= n <= n_max.
    """
    def body(notes):
        for n in range(1, n_max + 1):
            expected = catalan(n)
            counted = count_E_set(n)
            if counted != expected:
                notes.append(f"|E_{n}| != C_{n}")
                return Mismatch(n, counted, expected)
            pairs = enumerate_restricted_pairs(n)
            if len(pairs) != expected:
                notes.append(f"pair enumeration at n={n} disagrees with count")
                return Mismatch(n, len(pairs), expected)
            dycks = enumerate_dyck(n)
            failures = 0
            images = set()
            for pair in pairs:
                image = forward(pair)
                images.add(image)
                if inverse(image) != pair:
                    failures += 1
            for d in dycks:
                if forward(inverse(d)) != d:
                    failures += 1
            if failures:
                notes.append(f"{failures} roundtrip failures at n={n}")
                return Mismatch(n, failures, 0)
            if len(images) != len(pairs) or images != set(dycks):
                notes.append(f"image of E_{n} is not all of D_{n}")
                return Mismatch(n, len(images), len(dycks))
        notes.append(f"exhaustive roundtrips for n = 1..{n_max}")
        return None
    return _run("lemma-main", n_max, body)


def run_identity(identity: str, order: int | None = None) -> VerificationReport:
    """Run one registered identity check at the given (or default) order.

    Orders for checks that rely on exhaustive enumeration are clamped to keep
    them feasible; a clamp is recorded in the report notes.
    """
    if identity not in ALL_IDENTITIES:
        valid = ", ".join(ALL_IDENTITIES)
        raise ValueError(f"unknown identity {identity!r}; valid ids: {valid}")
    if order is None:
        order = DEFAULT_ORDERS[identity]
    if order < 1:
        raise ValueError("order must be >= 1")

    clamp_note = None
    if identity == "e2":
        report = verify_t2_closed_form(order)
    elif identity == "t3-closed":
        report = verify_t3_closed_form(order)
    elif identity == "e8":
        report = verify_e8(order, order)
    elif identity == "e-mo":
        effective = max(order, 2)
        if effective != order:
            clamp_note = "total degree raised to 2 (minimum meaningful degree)"
        report = verify_e_mo(effective)
    elif identity == "firstsum":
        report = verify_firstsum(order)
    elif identity == "pairsum":
        report = verify_pairsum(order)
    elif identity == "e52":
        report = verify_e52(order)
    elif identity == "t3-main":
        report = verify_t3_main(order)
    elif identity == "g-forms":
        report = verify_g_closed_forms(8, order)
    elif identity == "p-bridge":
        # the registered check covers the polynomial indices n <= 12
        report = verify_p_bridge(min(order, 12), order)
    else:  # lemma-main
        effective = min(order, _LEMMA_MAIN_CAP)
        if effective != order:
            clamp_note = (f"n_max clamped to {effective}: "
                          "exhaustive enumeration bound")
        report = verify_lemma_main_count(effective)

    if clamp_note:
        report = replace(report, notes=report.notes + (clamp_note,))
    return report
