"""Covering the edges of Q_k by two induced subgraphs of small maximum order."""
from __future__ import annotations

from dataclasses import dataclass

from ._bits import popcount
from .binomial import binomial
from .hypercube import VertexSet, _check_k, _low_masks, full_mask, phi_table


@dataclass(frozen=True)
class CoverPair:
    k: int
    s1: VertexSet
    s2: VertexSet

    def __post_init__(self) -> None:
        if self.s1.k != self.k or self.s2.k != self.k:
            raise ValueError("both vertex sets must live in Q_k")

    @property
    def max_size(self) -> int:
        return max(len(self.s1), len(self.s2))


def _uncovered_edges(k: int, a: int, b: int) -> list:
    """Per coordinate, the lower endpoints of edges induced by neither ``a`` nor ``b``."""
    out = []
    for j, low in enumerate(_low_masks(k)):
        step = 1 << j
        covered = (a & (a >> step)) | (b & (b >> step))
        out.append(low & ~covered)
    return out


def _covers(k: int, a: int, b: int) -> bool:
    return not any(_uncovered_edges(k, a, b))


def is_edge_cover(p: CoverPair) -> bool:
    """True iff every edge of Q_k lies inside ``p.s1`` or inside ``p.s2``."""
    return _covers(p.k, p.s1.mask, p.s2.mask)


def minmax_cover_formula(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    half = k // 2
    return sum(binomial(k, l) for l in range(half + 1)) + (k % 2) * binomial(k - 1, half)


def minmax_lower_bound(k: int) -> int:
    """``min_n max(n, 2**k - phi_k(n))`` over every ``n`` in ``[1, 2**k]``.

    A vertex that is not full in the first subgraph has an edge outside it,
    so it must belong to the second subgraph.
    """
    _check_k(k)
    table = phi_table(k)
    size = 1 << k
    return min(max(n, size - table[n]) for n in range(1, size + 1))


def extremal_cover(k: int) -> CoverPair:
    """Two balanced weight classes (even ``k``) or the same rule on the low ``k - 1`` bits (odd ``k``).

    ``s1`` holds the low-weight side and ``s2`` the high-weight side.
    """
    _check_k(k)
    if k % 2 == 0:
        half, probe = k // 2, (1 << k) - 1
    else:
        half, probe = (k - 1) // 2, (1 << (k - 1)) - 1
    low = high = 0
    for v in range(1 << k):
        w = popcount(v & probe)
        if w <= half:
            low |= 1 << v
        if w >= popcount(probe) - half:
            high |= 1 << v
    return CoverPair(k, VertexSet(k, low), VertexSet(k, high))


def minmax_cover_bruteforce(k: int) -> int:
    """Minimum of ``max(|s1|, |s2|)`` over all ordered pairs covering E(Q_k); ``k <= 3``."""
    if not 1 <= k <= 3:
        raise ValueError("minmax_cover_bruteforce only supports 1 <= k <= 3")
    space = 1 << (1 << k)
    best = None
    for a in range(space):
        for b in range(space):
            if _covers(k, a, b):
                size = max(popcount(a), popcount(b))
                if best is None or size < best:
                    best = size
    return best


def forced_second_side(S: VertexSet) -> VertexSet:
    """Endpoints of the edges of Q_k not induced by ``S``.

    Any cover whose first part is ``S`` must contain all of these in its
    second part; the set equals the complement of ``full_vertices(S)``.
    """
    k = S.k
    mask = 0
    for j, lower in enumerate(_uncovered_edges(k, S.mask, 0)):
        mask |= lower | (lower << (1 << j))
    return VertexSet(k, mask)


def non_full_vertices(S: VertexSet) -> VertexSet:
    return VertexSet(S.k, full_mask(S.k, S.mask)).complement()
