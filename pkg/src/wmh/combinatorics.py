"""Integer combinatorial kernels: Stirling numbers of the first kind,
Eulerian numbers, elementary symmetric range sums, subset-sum counts and
weighted Lah numbers.

All functions are pure and memoized; results are exact Python ints.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial


@lru_cache(maxsize=None)
def stirling_first(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of [n] with m cycles."""
    if n == 0:
        return 1 if m == 0 else 0
    if m <= 0 or m > n:
        return 0
    return stirling_first(n - 1, m - 1) + (n - 1) * stirling_first(n - 1, m)


@lru_cache(maxsize=None)
def eulerian(n: int, d: int) -> int:
    """Eulerian number: permutations of [n] with exactly d descents."""
    if n == 0:
        return 1 if d == 0 else 0
    if d < 0 or d >= n:
        return 0
    return (d + 1) * eulerian(n - 1, d) + (n - d) * eulerian(n - 1, d - 1)


@lru_cache(maxsize=None)
def elem_sym_range(n: int, a: int, b: int) -> int:
    """Degree-n elementary symmetric sum over the integers in [a, b].

    Sum of products i_1*...*i_n over a <= i_1 < ... < i_n <= b.  The bounds
    may be negative or out of order; an empty selection gives 1 for n = 0 and
    0 for n >= 1.  Computed by the recurrence splitting on whether b is chosen,
    which stays sign-correct for negative ranges.
    """
    if n == 0:
        return 1
    if n < 0 or b < a or n > b - a + 1:
        return 0
    return elem_sym_range(n, a, b - 1) + b * elem_sym_range(n - 1, a, b - 1)


@lru_cache(maxsize=None)
def _rho_table(c: tuple[int, ...]) -> dict:
    """All subset-sum counts for c: maps (size, value) -> count."""
    table = {(0, 0): 1}
    for cj in c:
        new = dict(table)
        for (size, value), cnt in table.items():
            key = (size + 1, value + cj)
            new[key] = new.get(key, 0) + cnt
        table = new
    return table


def rho(c: tuple[int, ...], i: int, v: int) -> int:
    """Number of i-element index subsets of c whose entries sum to v."""
    if i > len(c):
        raise ValueError("subset size exceeds tuple length")
    return _rho_table(tuple(c)).get((i, v), 0)


@lru_cache(maxsize=None)
def weighted_lah(n: int, m: int, ell: int) -> int:
    """Weighted Lah number W(n, m, ell).

    Counts pairs (sigma, w): sigma a permutation of [n] with m cycles and w a
    per-cycle weight with w(c) < len(c), total weight ell.  Recurrence splits
    on the cycle containing n (size j, weight u < j).
    """
    if n == 0:
        return 1 if (m == 0 and ell == 0) else 0
    if m <= 0 or m > n or ell < 0 or ell > n - m:
        return 0
    total = 0
    for j in range(1, n - m + 2):
        arrangements = comb(n - 1, j - 1) * factorial(j - 1)
        inner = sum(weighted_lah(n - j, m - 1, ell - u) for u in range(min(j - 1, ell) + 1))
        total += arrangements * inner
    return total


def weighted_lah_enumerated(n: int, m: int, ell: int) -> int:
    """Oracle for weighted_lah: brute-force over all permutations (n <= 8)."""
    if n > 8:
        raise ValueError("enumeration oracle capped at n = 8")
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        lengths = _cycle_lengths(perm)
        if len(lengths) != m:
            continue
        count = count + _bounded_compositions(lengths, ell)
    return count


def _cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    n = len(perm)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        size = 0
        x = start
        while not seen[x]:
            seen[x] = True
            size += 1
            x = perm[x - 1]
        lengths.append(size)
    return lengths


def _bounded_compositions(lengths: list[int], total: int) -> int:
    """Weight assignments with w_i < lengths[i] summing to total."""
    ways = [1] + [0] * total
    for ln in lengths:
        new = [0] * (total + 1)
        for s, cnt in enumerate(ways):
            if cnt:
                for w in range(min(ln - 1, total - s) + 1):
                    new[s + w] += cnt
        ways = new
    return ways[total]
