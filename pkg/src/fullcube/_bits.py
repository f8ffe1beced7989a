"""Bitmask helpers shared by the set-family and hypercube code."""
from __future__ import annotations

from typing import Iterator


def popcount(x: int) -> int:
    return x.bit_count()


def next_same_weight(x: int) -> int:
    """Gosper's hack: the next larger integer with the same popcount."""
    low = x & -x
    ripple = x + low
    return ripple | (((x ^ ripple) >> 2) // low)


def same_weight_masks(weight: int, width: int | None = None) -> Iterator[int]:
    """All masks with ``weight`` set bits in ascending order.

    Unbounded when ``width`` is None, otherwise restricted to ``width`` bits.
    """
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    if weight == 0:
        yield 0
        return
    if width is not None and weight > width:
        return
    limit = None if width is None else 1 << width
    x = (1 << weight) - 1
    while limit is None or x < limit:
        yield x
        x = next_same_weight(x)


def mask_to_elements(mask: int) -> tuple[int, ...]:
    """1-based element tuple of a set stored as a bitmask."""
    out = []
    pos = 1
    while mask:
        if mask & 1:
            out.append(pos)
        mask >>= 1
        pos += 1
    return tuple(out)


def elements_to_mask(elements) -> int:
    mask = 0
    for a in elements:
        if a < 1:
            raise ValueError(f"elements are 1-based, got {a}")
        mask |= 1 << (a - 1)
    return mask
