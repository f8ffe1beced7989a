"""Colex-ordered set families, f-vectors and the Kruskal-Katona criterion.

Elements are the positive integers and ranks are 1-based. A finite set is
stored as a bitmask with bit ``a - 1`` standing for element ``a``; for sets of
equal size the colex order is then plain integer order on the masks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator, Sequence, Tuple

from ._bits import elements_to_mask, mask_to_elements, popcount, same_weight_masks
from .binomial import binomial, upper_boundary

DEFAULT_UNIVERSE = 64


@dataclass(frozen=True)
class FVector:
    """Face counts ``(f_-1, f_0, ..., f_{d-1})``; ``entries[j]`` counts j-element faces."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if not self.entries:
            raise ValueError("an f-vector has at least the entry f_-1")

    @classmethod
    def of(cls, *entries: int) -> "FVector":
        return cls(tuple(entries))

    @property
    def dim(self) -> int:
        return len(self.entries) - 2

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]


@dataclass(frozen=True)
class SetFamily:
    """A finite family of finite subsets of the positive integers."""

    masks: frozenset
    universe: int = DEFAULT_UNIVERSE

    def __post_init__(self) -> None:
        object.__setattr__(self, "masks", frozenset(self.masks))
        for m in self.masks:
            if m < 0 or m.bit_length() > self.universe:
                raise ValueError(f"set {mask_to_elements(m)} exceeds universe [{self.universe}]")

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], universe: int = DEFAULT_UNIVERSE) -> "SetFamily":
        return cls(frozenset(elements_to_mask(s) for s in sets), universe)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, item) -> bool:
        if isinstance(item, int):
            return item in self.masks
        return elements_to_mask(item) in self.masks

    def sorted_masks(self) -> list:
        """Masks by cardinality, colex within a cardinality."""
        return sorted(self.masks, key=lambda m: (popcount(m), m))

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return (mask_to_elements(m) for m in self.sorted_masks())

    def union(self, other: "SetFamily") -> "SetFamily":
        return SetFamily(self.masks | other.masks, max(self.universe, other.universe))

    def cone(self, apex: int) -> "SetFamily":
        """``{S | {apex} : S in self}``; ``apex`` must not occur in any member."""
        bit = 1 << (apex - 1)
        if any(m & bit for m in self.masks):
            raise ValueError(f"apex {apex} already occurs in the family")
        return SetFamily(frozenset(m | bit for m in self.masks), max(self.universe, apex))

    def level(self, size: int) -> "SetFamily":
        return SetFamily(frozenset(m for m in self.masks if popcount(m) == size), self.universe)

    def f_vector(self) -> FVector:
        if not self.masks:
            return FVector((0,))
        top = max(popcount(m) for m in self.masks)
        counts = [0] * (top + 1)
        for m in self.masks:
            counts[popcount(m)] += 1
        return FVector(tuple(counts))


def colex_rank(S: Iterable[int]) -> int:
    """1-based position of ``S`` among the ``|S|``-subsets of the positive integers in colex order."""
    elems = sorted(set(S))
    if not elems:
        raise ValueError("colex_rank needs a nonempty set")
    if elems[0] < 1:
        raise ValueError("elements are 1-based")
    return 1 + sum(math.comb(a - 1, pos) for pos, a in enumerate(elems, start=1))


def colex_unrank(r: int, i: int) -> Tuple[int, ...]:
    """Inverse of :func:`colex_rank` for ``i``-subsets."""
    if r < 1 or i < 1:
        raise ValueError("need r >= 1 and i >= 1")
    rest = r - 1
    out = []
    for level in range(i, 0, -1):
        # largest c with C(c, level) <= rest; C(level-1, level) == 0
        c = level - 1
        while math.comb(c + 1, level) <= rest:
            c += 1
        rest -= math.comb(c, level)
        out.append(c + 1)
    return tuple(reversed(out))


def first_sets(i: int, N: int, universe: int = DEFAULT_UNIVERSE) -> SetFamily:
    """The first ``N`` ``i``-element sets in colex order."""
    if i < 0 or N < 0:
        raise ValueError("need i >= 0 and N >= 0")
    if i == 0 and N > 1:
        raise ValueError("there is only one 0-element set")
    masks = frozenset(islice(same_weight_masks(i), N))
    return SetFamily(masks, universe)


def is_f_vector(f: Sequence[int]) -> bool:
    """Kruskal-Katona test: ``0 < f_j <= ub(f_{j-1}, j)`` for every level."""
    f = tuple(f)
    if not f or f[0] != 1:
        raise ValueError("an f-vector starts with f_-1 = 1")
    if any(x <= 0 for x in f[1:]):
        return False
    # f[p] counts p-element faces, i.e. f_{p-1}
    return all(f[p] <= upper_boundary(f[p - 1], p - 1, bits=None) for p in range(2, len(f)))


def build_complex(f: Sequence[int], universe: int = DEFAULT_UNIVERSE) -> SetFamily:
    """Union of the colex-initial families at every level.

    Invalid vectors are accepted; the result is then simply not closed
    under subsets.
    """
    f = tuple(f)
    if any(x < 0 for x in f):
        raise ValueError("face counts must be nonnegative")
    masks: set = set()
    for size, count in enumerate(f):
        masks.update(first_sets(size, count, universe).masks)
    return SetFamily(frozenset(masks), universe)


def is_complex(fam: SetFamily) -> bool:
    """True iff ``fam`` is closed under taking subsets."""
    members = fam.masks
    for m in members:
        rest = m
        while rest:
            bit = rest & -rest
            if m ^ bit not in members:
                return False
            rest ^= bit
    return True


def apex_union(f1: Sequence[int], f2: Sequence[int], N: int) -> SetFamily:
    """Glue the colex complex of ``f1`` to a cone over the colex complex of ``f2``.

    With ``i = len(f1) - 2`` the inputs must look like
    ``f1 = (C(N,0), ..., C(N,i-1), m1, ub_i(m1))`` and
    ``f2 = (C(N,0), ..., C(N,i-2), m2, min(ub_{i-1}(m2), m1))``. The cone
    apex is the new element ``N + 1``.
    """
    f1, f2 = tuple(f1), tuple(f2)
    i = len(f1) - 2
    if N < 1 or i < 2 or len(f2) != i + 1:
        raise ValueError("apex_union needs N >= 1, len(f1) = i + 2 >= 4 and len(f2) = i + 1")
    m1, m2 = f1[i], f2[i - 1]
    if f1[:i] != tuple(binomial(N, j, bits=None) for j in range(i)):
        raise ValueError("f1 must start with the full (i-1)-skeleton of [N]")
    if f2[: i - 1] != tuple(binomial(N, j, bits=None) for j in range(i - 1)):
        raise ValueError("f2 must start with the full (i-2)-skeleton of [N]")
    if not 0 <= m1 <= binomial(N, i, bits=None) or not 0 <= m2 <= binomial(N, i - 1, bits=None):
        raise ValueError("need 0 <= m1 <= C(N, i) and 0 <= m2 <= C(N, i-1)")
    if f1[i + 1] != upper_boundary(m1, i, bits=None):
        raise ValueError("last entry of f1 must be the upper i-boundary of m1")
    if f2[i] != min(upper_boundary(m2, i - 1, bits=None), m1):
        raise ValueError("last entry of f2 must be min(ub_{i-1}(m2), m1)")
    universe = max(DEFAULT_UNIVERSE, N + 1)
    base = build_complex(f1, universe)
    return base.union(build_complex(f2, universe).cone(N + 1))
