"""Exact binomial arithmetic, binomial (cascade) representations and the
upper-boundary function used by the Kruskal-Katona bound.

All integers are Python ints, but every public result is checked against a
configurable bit width so that results which would not fit a fixed-width
integer raise :class:`ArithmeticOverflow` instead of silently growing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

DEFAULT_BITS = 64


class ArithmeticOverflow(OverflowError):
    """A result does not fit the configured unsigned integer width."""


def _checked(value: int, bits: int | None) -> int:
    if bits is not None and value.bit_length() > bits:
        raise ArithmeticOverflow(f"{value} does not fit in {bits} bits")
    return value


def binomial(n: int, r: int, bits: int | None = DEFAULT_BITS) -> int:
    """C(n, r) for nonnegative n and r; 0 when r > n.

    Pass ``bits=None`` to disable the width check.
    """
    if n < 0 or r < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({n}, {r})")
    if r > n:
        return 0
    return _checked(math.comb(n, r), bits)


@dataclass(frozen=True)
class BinomialRep:
    """A cascade ``C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)``.

    ``terms`` holds ``(top, level)`` pairs with levels consecutive and
    descending from ``level``.
    """

    level: int
    terms: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if not self.terms:
            raise ValueError("a representation needs at least one term")
        expected = self.level
        prev_top = None
        for top, lev in self.terms:
            if lev != expected:
                raise ValueError(f"levels must descend from {self.level} without gaps")
            if prev_top is not None and top >= prev_top:
                raise ValueError("tops must be strictly decreasing")
            if top < lev or lev < 1:
                raise ValueError("each top must be at least its level and level >= 1")
            prev_top = top
            expected -= 1

    @property
    def value(self) -> int:
        return sum(math.comb(top, lev) for top, lev in self.terms)

    @property
    def last_level(self) -> int:
        return self.terms[-1][1]

    def __str__(self) -> str:
        return "+".join(f"C({top},{lev})" for top, lev in self.terms)


def _largest_top(m: int, level: int) -> int:
    """Largest t with C(t, level) <= m (requires m >= 1)."""
    lo, hi = level, level
    while math.comb(hi, level) <= m:
        lo, hi = hi, 2 * hi + 1
    # C(lo, level) <= m < C(hi, level)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, level) <= m:
            lo = mid
        else:
            hi = mid
    return lo


def ubr(m: int, i: int) -> BinomialRep:
    """Greedy binomial representation of ``m >= 1`` at level ``i >= 1``."""
    if m < 1:
        raise ValueError(f"binomial representation needs m >= 1, got {m}")
    if i < 1:
        raise ValueError(f"level must be >= 1, got {i}")
    terms: List[Tuple[int, int]] = []
    rest, level = m, i
    while rest > 0:
        top = _largest_top(rest, level)
        terms.append((top, level))
        rest -= math.comb(top, level)
        level -= 1
    return BinomialRep(i, tuple(terms))


@lru_cache(maxsize=1 << 16)
def _upper_boundary(m: int, i: int) -> int:
    return sum(math.comb(top, lev + 1) for top, lev in ubr(m, i).terms)


def upper_boundary(m: int, i: int, bits: int | None = DEFAULT_BITS) -> int:
    """The upper ``i``-boundary of ``m``; ``0`` maps to ``0``."""
    if i < 1:
        raise ValueError(f"level must be >= 1, got {i}")
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if m == 0:
        return 0
    return _checked(_upper_boundary(m, i), bits)


def upper_boundary_table(i: int, size: int) -> List[int]:
    """``[upper_boundary(m, i) for m in range(size)]`` without building cascades.

    For ``C(t, i) <= m < C(t+1, i)`` the value is ``C(t, i+1)`` plus the
    ``(i-1)``-boundary of ``m - C(t, i)``, so each row is a concatenation of
    shifted prefixes of the row below.
    """
    if i < 0 or size < 0:
        raise ValueError("need i >= 0 and size >= 0")
    if i == 0 or size <= 1:
        return [0] * size
    top = i
    while math.comb(top + 1, i) < size:
        top += 1
    lower = upper_boundary_table(i - 1, math.comb(top, i - 1))
    row = [0]
    for t in range(i, top + 1):
        base = math.comb(t, i + 1)
        row.extend(base + lower[j] for j in range(math.comb(t, i - 1)))
    return row[:size]


# -- checkers for the arithmetic lemmas -------------------------------------


def check_claim_superadd(m1: int, m2: int, i: int) -> bool:
    """Evaluate ``ub(m1 + m2) >= ub(m1) + ub(m2)`` at level ``i``."""
    if m1 < 0 or m2 < 0 or i < 1:
        raise ValueError("need m1, m2 >= 0 and i >= 1")
    return upper_boundary(m1 + m2, i) >= upper_boundary(m1, i) + upper_boundary(m2, i)


def check_lemma1(m1: int, m2: int, i: int) -> bool:
    """Evaluate ``ub_i(m1 + m2) >= ub_i(m1) + min(ub_{i-1}(m2), m1)``.

    Only ``i >= 2`` is accepted since the level-0 boundary is undefined.
    """
    if i < 2:
        raise ValueError("check_lemma1 requires i >= 2")
    if m1 < 1 or m2 < 1:
        raise ValueError("check_lemma1 requires m1, m2 >= 1")
    lhs = upper_boundary(m1 + m2, i)
    return lhs >= upper_boundary(m1, i) + min(upper_boundary(m2, i - 1), m1)


def check_lemma2(m1: int, m2: int, i: int, N: int) -> bool:
    if m1 < 1 or m2 < 1 or i < 2:
        raise ValueError("check_lemma2 requires m1, m2 >= 1 and i >= 2")
    if m1 + m2 > math.comb(N, i - 1):
        raise ValueError(f"check_lemma2 requires m1 + m2 <= C({N}, {i - 1})")
    lhs = upper_boundary(m1 + m2 + binomial(N, i), i)
    rhs = upper_boundary(m1, i - 1) + upper_boundary(m2, i - 1) + binomial(N, i + 1)
    return lhs >= rhs


def check_lemma3(m: int, m1: int, m2: int, i: int, N: int) -> bool:
    if i < 1:
        raise ValueError("check_lemma3 requires i >= 1")
    cap = binomial(N, i)
    if not all(0 <= x <= cap for x in (m, m1, m2)):
        raise ValueError(f"m, m1, m2 must lie in [0, C({N}, {i})]")
    if m1 + m2 != m + cap:
        raise ValueError(f"need m1 + m2 == m + C({N}, {i})")
    lhs = upper_boundary(m1, i) + upper_boundary(m2, i)
    return lhs <= upper_boundary(m, i) + binomial(N, i + 1)
