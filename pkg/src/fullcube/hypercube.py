"""Full vertices of induced subgraphs of the hypercube Q_k.

A vertex of Q_k is an integer ``v`` in ``[0, 2**k)``; coordinate ``j`` of the
binary string is bit ``j - 1`` of ``v``, so coordinate ``k`` is the most
significant bit and strings render most-significant-first. A vertex set is a
``2**k``-bit mask with bit ``v`` set iff ``v`` belongs to the set.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Iterable, Iterator, List, Tuple

from ._bits import popcount, same_weight_masks
from .binomial import binomial, upper_boundary, upper_boundary_table

MAX_K = 25
DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An exhaustive search would visit more candidates than allowed."""


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"dimension must be in [1, {MAX_K}], got {k}")


def _check_n(k: int, n: int) -> None:
    _check_k(k)
    if not 1 <= n <= 1 << k:
        raise ValueError(f"n must be in [1, 2^{k}] = [1, {1 << k}], got {n}")


@lru_cache(maxsize=None)
def _low_masks(k: int) -> Tuple[int, ...]:
    """For each coordinate, the mask of vertices whose bit on that coordinate is 0."""
    out = []
    size = 1 << k
    for j in range(k):
        step = 1 << j
        pattern, width = (1 << step) - 1, 2 * step
        while width < size:
            pattern |= pattern << width
            width *= 2
        out.append(pattern)
    return tuple(out)


@dataclass(frozen=True)
class VertexSet:
    k: int
    mask: int = 0

    def __post_init__(self) -> None:
        _check_k(self.k)
        if self.mask < 0 or self.mask >> (1 << self.k):
            raise ValueError(f"mask has bits outside V(Q_{self.k})")

    @classmethod
    def full(cls, k: int) -> "VertexSet":
        return cls(k, (1 << (1 << k)) - 1)

    @classmethod
    def from_vertices(cls, k: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < 1 << k:
                raise ValueError(f"vertex {v} not in Q_{k}")
            mask |= 1 << v
        return cls(k, mask)

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "VertexSet":
        strings = list(strings)
        if not strings:
            raise ValueError("cannot infer k from an empty list; use VertexSet(k)")
        k = len(strings[0])
        if any(len(s) != k for s in strings):
            raise ValueError("all strings must have the same length")
        return cls.from_vertices(k, (int(s, 2) for s in strings))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[int]:
        m, v = self.mask, 0
        while m:
            low = m & -m
            v = low.bit_length() - 1
            yield v
            m ^= low

    def __contains__(self, v: int) -> bool:
        return 0 <= v < 1 << self.k and bool(self.mask >> v & 1)

    def strings(self) -> List[str]:
        return [format(v, f"0{self.k}b") for v in self]

    def complement(self) -> "VertexSet":
        return VertexSet(self.k, self.mask ^ ((1 << (1 << self.k)) - 1))


def _neighbor_present(k: int, mask: int, j: int) -> int:
    """Mask of vertices whose neighbor across coordinate ``j + 1`` is in ``mask``."""
    step = 1 << j
    low = _low_masks(k)[j]
    high = low << step
    return ((mask >> step) & low) | ((mask << step) & high)


def full_mask(k: int, mask: int) -> int:
    out = mask
    for j in range(k):
        out &= _neighbor_present(k, mask, j)
        if not out:
            break
    return out


def full_vertices(S: VertexSet) -> VertexSet:
    """Vertices of ``S`` all of whose ``k`` neighbors are in ``S``."""
    return VertexSet(S.k, full_mask(S.k, S.mask))


def induced_edge_count(k: int, mask: int) -> int:
    low = _low_masks(k)
    return sum(popcount(mask & (mask >> (1 << j)) & low[j]) for j in range(k))


def decompose(S: VertexSet) -> Tuple[VertexSet, VertexSet]:
    """Split ``S`` by its top coordinate into two subsets of Q_{k-1}.

    Vertex ``v`` of either half corresponds to ``v`` (bit k clear) or
    ``v + 2**(k-1)`` (bit k set) in Q_k, so copies share an index.
    """
    if S.k < 2:
        raise ValueError("decompose needs k >= 2")
    half = 1 << (S.k - 1)
    return VertexSet(S.k - 1, S.mask & ((1 << half) - 1)), VertexSet(S.k - 1, S.mask >> half)


@dataclass(frozen=True)
class HcrDecomp:
    """``n = C(k,0) + ... + C(k,i) + m`` with ``0 <= m < C(k, i+1)``.

    ``n = 2**k`` is stored as ``(i=k, m=0)``.
    """

    k: int
    i: int
    m: int

    @property
    def n(self) -> int:
        return sum(math.comb(self.k, l) for l in range(self.i + 1)) + self.m


def hcr(n: int, k: int) -> HcrDecomp:
    _check_n(k, n)
    total, i = 1, 0
    while i < k and total + math.comb(k, i + 1) <= n:
        i += 1
        total += math.comb(k, i)
    return HcrDecomp(k, i, n - total)


def phi_formula(k: int, n: int) -> int:
    """Maximum number of full vertices of an ``n``-vertex induced subgraph of Q_k."""
    _check_n(k, n)
    if n == 1 << k:
        return n
    d = hcr(n, k)
    level = k - d.i - 1
    base = sum(binomial(k, l) for l in range(d.i))
    if d.m == 0:
        return base
    assert level >= 1, "positive remainder with level-0 boundary"
    return base + upper_boundary(d.m, level)


@lru_cache(maxsize=None)
def phi_table(k: int) -> Tuple[int, ...]:
    """``phi_formula(k, n)`` for ``n = 0 .. 2**k`` (entry 0 is 0)."""
    _check_k(k)
    out = [0]
    base = 0
    for i in range(k):
        level = k - i - 1
        size = math.comb(k, i + 1)
        ub = upper_boundary_table(level, size)
        out.extend(base + x for x in ub)
        base += math.comb(k, i)
    out.append(1 << k)
    return tuple(out)


@lru_cache(maxsize=None)
def _recurrence_table(k: int) -> Tuple[int, ...]:
    if k == 1:
        return (0, 0, 2)
    prev = _recurrence_table(k - 1)
    half = 1 << (k - 1)
    size = 1 << k
    table = [0] * (size + 1)
    for n in range(1, size + 1):
        best = 0
        # n0 + n1 = n, n0 >= n1, n0 <= 2^(k-1)
        for n1 in range(max(0, n - half), n // 2 + 1):
            f1 = prev[n1]
            val = min(prev[n - n1] + f1, n1 + f1)
            if val > best:
                best = val
        table[n] = best
    table[size] = size
    return tuple(table)


def phi_recurrence(k: int, n: int) -> int:
    """The maximin recurrence over top-coordinate splits, memoized per dimension."""
    _check_n(k, n)
    return _recurrence_table(k)[n]


@lru_cache(maxsize=256)
def _opposite_order(k: int, weight: int) -> Tuple[int, ...]:
    """Weight-``weight`` vertices ordered by the colex order of their zero sets."""
    everything = (1 << k) - 1
    return tuple(everything ^ z for z in same_weight_masks(k - weight, k))


@lru_cache(maxsize=256)
def _weight_at_most(k: int, w: int) -> int:
    mask = 0
    for v in range(1 << k):
        if popcount(v) <= w:
            mask |= 1 << v
    return mask


def extremal_set(k: int, n: int) -> VertexSet:
    """An ``n``-vertex set of Q_k with ``phi_formula(k, n)`` full vertices.

    Takes every string of weight at most ``i`` and the first ``m`` strings of
    weight ``i + 1`` ordered by the colex order of their zero positions.
    """
    _check_n(k, n)
    d = hcr(n, k)
    mask = _weight_at_most(k, d.i)
    if d.m:
        for v in islice(_opposite_order(k, d.i + 1), d.m):
            mask |= 1 << v
    return VertexSet(k, mask)


def _best_with_top(k: int, n: int, top: int) -> int:
    """Max full count over n-subsets whose largest vertex is ``top``."""
    head = 1 << top
    best = 0
    for rest in same_weight_masks(n - 1, top):
        c = popcount(full_mask(k, rest | head))
        if c > best:
            best = c
    return best


def _workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("FULLCUBE_WORKERS", "1"))
    return max(1, workers)


def phi_bruteforce(k: int, n: int, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> int:
    """Exhaustive maximum of the full-vertex count over all n-subsets of Q_k.

    Subsets are partitioned by their largest vertex; with ``workers > 1``
    the parts run in a process pool and are max-reduced.
    """
    _check_n(k, n)
    total = math.comb(1 << k, n)
    if total > budget:
        raise BudgetExceeded(f"C(2^{k}, {n}) = {total} subsets exceeds budget {budget}")
    tops = range(n - 1, 1 << k)
    w = _workers(workers)
    if w == 1:
        return max(_best_with_top(k, n, t) for t in tops)
    with ProcessPoolExecutor(max_workers=w) as pool:
        return max(pool.map(_best_with_top, [k] * len(tops), [n] * len(tops), tops))


# -- edge-maximal induced subgraphs ------------------------------------------


def edge_max_formula(n: int) -> int:
    """Sum of binary digit sums of ``0 .. n-1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(popcount(i) for i in range(n))


@lru_cache(maxsize=8)
def _edge_table(n: int) -> Tuple[int, ...]:
    f = [0] * (n + 1)
    for size in range(2, n + 1):
        f[size] = max(a + f[a] + f[size - a] for a in range(1, size // 2 + 1))
    return tuple(f)


def edge_max_recurrence(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    size = 1 << max(0, (n - 1).bit_length())
    return _edge_table(max(size, 64))[n]


def edge_max_bruteforce(n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Exhaustive maximum induced edge count over ``n``-subsets of Q_{ceil(lg n)+1}."""
    if not 1 <= n <= 64:
        raise ValueError("edge_max_bruteforce supports 1 <= n <= 64")
    k = (n - 1).bit_length() + 1
    total = math.comb(1 << k, n)
    if total > budget:
        raise BudgetExceeded(f"C(2^{k}, {n}) = {total} subsets exceeds budget {budget}")
    return max(induced_edge_count(k, s) for s in same_weight_masks(n, 1 << k))
