"""Closed-form bound families for shatter-constrained set systems.

Includes the doubling sequence 2^i (b-i+1), the best product over
compositions of b, the threshold function that marks where the graph
reduction applies, the classical cumulative-binomial bound, its weighted
generalization, Turan edge counts, and a memoized evaluator for the
exponential-growth recursion on permutation families.

All arithmetic is exact (Python integers), so no overflow handling is
needed at any desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Optional


def upsilon(i: int, b: int) -> int:
    """2^i * (b - i + 1); interpolates from b+1 at i = 0 up to 2^b at i = b-1."""
    if b < 1:
        raise ValueError(f"b = {b} must be at least 1")
    if not 0 <= i <= b - 1:
        raise ValueError(f"i = {i} outside 0..{b - 1}")
    return (1 << i) * (b - i + 1)


@lru_cache(maxsize=None)
def _best_composition_product(i: int, b: int) -> int:
    # max over compositions of b into exactly i parts >= 1 of prod(part + 1)
    if i == 1:
        return b + 1
    return max((p + 1) * _best_composition_product(i - 1, b - p) for p in range(1, b - i + 2))


def lambda_(i: int, b: int) -> int:
    """Maximum of prod(b_j + 1) over compositions b = b_1 + ... + b_i, parts >= 1.

    lambda_(0, b) is fixed at 1.  Parts are constrained to be positive;
    allowing empty parts would collapse every value to the i = b column.
    """
    if b < 0:
        raise ValueError(f"b = {b} must be non-negative")
    if not 0 <= i <= b:
        raise ValueError(f"i = {i} outside 0..{b}")
    if i == 0:
        return 1
    return _best_composition_product(i, b)


def zeta(b: int) -> int:
    """8 + 3*floor((b-3)/2) + [b even]; the largest trace cap handled by the graph reduction."""
    if b < 3:
        raise ValueError(f"b = {b} must be at least 3")
    return 8 + 3 * ((b - 3) // 2) + (1 if b % 2 == 0 else 0)


def sauer_bound(n: int, b: int) -> int:
    """sum_{i < b} C(n, i): the maximal size of a system whose b-traces are never full."""
    if n < 0:
        raise ValueError(f"n = {n} must be non-negative")
    if not 0 <= b <= n + 1:
        raise ValueError(f"b = {b} outside 0..{n + 1}")
    return sum(comb(n, i) for i in range(b))


def theorem1_bound(n: int, b: int, i: int) -> int:
    """sum_{j <= i} (b - j + 1) C(n, j): size bound when f(b) stays below upsilon(i, b)."""
    if n < 1:
        raise ValueError(f"n = {n} must be at least 1")
    if i < 0 or i >= b:
        raise ValueError(f"need b > i >= 0, got b = {b}, i = {i}")
    return sum((b - j + 1) * comb(n, j) for j in range(i + 1))


def balanced_part_sizes(n: int, i: int) -> list[int]:
    """Split n into i near-equal parts, larger parts first."""
    if not 1 <= i <= n:
        raise ValueError(f"i = {i} outside 1..{n}")
    q, r = divmod(n, i)
    return [q + 1] * r + [q] * (i - r)


def turan_edges(i: int, n: int) -> int:
    """Edge count of the complete balanced i-partite graph on n vertices."""
    sizes = balanced_part_sizes(n, i)
    return (n * n - sum(s * s for s in sizes)) // 2


@dataclass(frozen=True)
class BoundsRow:
    """One table row: alternating (upsilon_i(b) - 1, lambda_{i+1}(b)) for i = 0..b-2.

    gap_flags[i] marks the pairs where lambda_{i+1}(b) exceeds upsilon_i(b),
    i.e. where the two bound families leave an unresolved window.
    """

    b: int
    entries: tuple[int, ...]
    gap_flags: tuple[bool, ...]


def table1(b_max: int) -> list[BoundsRow]:
    """Rows b = 2..b_max of the interleaved upsilon/lambda table."""
    if b_max < 2:
        raise ValueError(f"b_max = {b_max} must be at least 2")
    rows = []
    for b in range(2, b_max + 1):
        entries: list[int] = []
        gaps: list[bool] = []
        for i in range(b - 1):
            up = upsilon(i, b)
            lam = lambda_(i + 1, b)
            entries.extend((up - 1, lam))
            gaps.append(lam > up)
        for i in range(1, b):
            if lambda_(i, b) > upsilon(i, b):
                raise AssertionError(f"lambda_{i}({b}) exceeds upsilon_{i}({b})")
        rows.append(BoundsRow(b, tuple(entries), tuple(gaps)))
    return rows


BaseFunction = Callable[[int, int, int], Optional[int]]


def evaluate_T_recursion(n: int, m: int, k: int, base: BaseFunction) -> Optional[int]:
    """Memoized evaluation of T(n, m, k) <= k * max(T(n-m+1, m-1, k-1), T(n-m+1, m, k)).

    ``base`` supplies known values and returns None where it has none.  The
    evaluator returns None ("unknown") whenever any needed leaf is unknown;
    since m >= 2 makes n strictly decrease along both branches, evaluation
    always terminates even for parameterizations whose m and k axes never
    reach the base.
    """
    if n < 1 or m < 2 or k < 1:
        raise ValueError(f"need n >= 1, m >= 2, k >= 1, got ({n}, {m}, {k})")
    memo: dict[tuple[int, int, int], Optional[int]] = {}

    def ev(n_: int, m_: int, k_: int) -> Optional[int]:
        key = (n_, m_, k_)
        if key in memo:
            return memo[key]
        value = base(n_, m_, k_)
        if value is None:
            if m_ < 2 or k_ < 1 or n_ - m_ + 1 < 1:
                value = None
            else:
                shrunk = n_ - m_ + 1
                left = ev(shrunk, m_ - 1, k_ - 1)
                right = ev(shrunk, m_, k_)
                value = None if left is None or right is None else k_ * max(left, right)
        memo[key] = value
        return value

    return ev(n, m, k)
