"""Exact integer counting: Catalan and super Catalan numbers, transfer-table
path counts, and brute-force pair-set counts used as oracles."""

from __future__ import annotations

from math import comb, factorial

from .lattice_paths import Path, PathClass, enumerate_dyck


def catalan(n: int) -> int:
    """(2n)!/(n!(n+1)!), the number of Dyck paths of semilength n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def super_catalan(m: int, n: int) -> int:
    """(2m)!(2n)! / (2 m! n! (m+n)!), an integer for every (m, n) != (0, 0)."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m == 0 and n == 0:
        raise ValueError("value at (0, 0) is 1/2, not an integer")
    num = factorial(2 * m) * factorial(2 * n)
    den = 2 * factorial(m) * factorial(n) * factorial(m + n)
    assert num % den == 0
    return num // den


class CountTable:
    """Step-by-step counts of nonnegative paths under a height cap.

    rows[s][j] is the number of paths with s steps from `start_level` to level
    j that never leave [0, max_height] (no cap when max_height is None).
    """

    def __init__(self, steps: int, max_height: int | None = None, start_level: int = 0):
        if steps < 0:
            raise ValueError("steps must be nonnegative")
        if start_level < 0:
            raise ValueError("start_level must be nonnegative")
        cap = max_height if max_height is not None else start_level + steps
        width = cap + 1 if cap >= 0 else 0
        row = [0] * width
        if start_level < width:
            row[start_level] = 1
        rows = [row]
        for _ in range(steps):
            prev = rows[-1]
            row = [0] * width
            for j in range(width):
                total = prev[j - 1] if j >= 1 else 0
                if j + 1 < width:
                    total += prev[j + 1]
                row[j] = total
            rows.append(row)
        self.max_height = max_height
        self.start_level = start_level
        self.rows = rows

    def count(self, step: int, level: int) -> int:
        if not 0 <= step < len(self.rows):
            raise ValueError(f"step {step} outside table")
        row = self.rows[step]
        return row[level] if 0 <= level < len(row) else 0


def _capped_count(bound: int | None, end_level: int, steps: int) -> int:
    if bound is not None and bound < 0:
        return 0
    return CountTable(steps, bound).count(steps, end_level)


def count_ballot_dp(path_class: PathClass, steps: int) -> int:
    """|enumerate_ballot(path_class, steps)| without enumerating.

    Exact-height classes are counted as (height <= h) - (height <= h-1).
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if path_class.exact_height is not None:
        h = path_class.exact_height
        return (_capped_count(h, path_class.end_level, steps)
                - _capped_count(h - 1, path_class.end_level, steps))
    return _capped_count(path_class.max_height, path_class.end_level, steps)


def count_paths_dp(steps: int, start_level: int, end_level: int,
                   max_height: int | None = None) -> int:
    """Nonnegative paths from start_level to end_level with a height cap."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if start_level < 0 or end_level < 0:
        raise ValueError("levels must be nonnegative")
    if max_height is not None and max_height < 0:
        return 0
    return CountTable(steps, max_height, start_level).count(steps, end_level)


def _dyck_lists(n: int) -> dict[int, list[Path]]:
    return {a: enumerate_dyck(a) for a in range(n + 1)}


def count_pairs_height_diff(n: int, d: int) -> int:
    """Ordered pairs (P, Q) of Dyck paths of total semilength n with
    |h(P) - h(Q)| <= d, by exhaustive enumeration."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be nonnegative")
    lists = _dyck_lists(n)
    total = 0
    for a in range(n + 1):
        for p in lists[a]:
            hp = p.height
            for q in lists[n - a]:
                if abs(hp - q.height) <= d:
                    total += 1
    return total


def count_E_set(n: int) -> int:
    """Pairs (P, Q) of Dyck paths of total semilength n with P nonempty and
    h(P) <= h(Q) + 1, by exhaustive enumeration."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lists = _dyck_lists(n)
    total = 0
    for a in range(1, n + 1):
        for p in lists[a]:
            hp = p.height
            for q in lists[n - a]:
                if hp <= q.height + 1:
                    total += 1
    return total


def count_F_set(n: int) -> int:
    """Like count_E_set but P may be empty, by exhaustive enumeration."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lists = _dyck_lists(n)
    total = 0
    for a in range(n + 1):
        for p in lists[a]:
            hp = p.height
            for q in lists[n - a]:
                if hp <= q.height + 1:
                    total += 1
    return total
