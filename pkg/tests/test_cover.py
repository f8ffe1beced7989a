import random
from itertools import combinations

import pytest

from fullcube.cover import (
    CoverPair,
    extremal_cover,
    forced_second_side,
    is_edge_cover,
    minmax_cover_bruteforce,
    minmax_cover_formula,
    minmax_lower_bound,
    non_full_vertices,
)
from fullcube.hypercube import VertexSet, phi_formula


def naive_cover(k, s1, s2):
    a, b = set(s1), set(s2)
    for v in range(1 << k):
        for j in range(k):
            u = v | (1 << j)
            if u != v and not ({u, v} <= a or {u, v} <= b):
                return False
    return True


def test_is_edge_cover_examples():
    for k in range(1, 6):
        assert is_edge_cover(CoverPair(k, VertexSet.full(k), VertexSet(k)))
    s1 = VertexSet.from_strings(["00", "01", "11"])
    s2 = VertexSet.from_strings(["00", "10", "11"])
    assert is_edge_cover(CoverPair(2, s1, s2))
    s1 = VertexSet.from_strings(["00", "01"])
    s2 = VertexSet.from_strings(["10", "11"])
    assert not is_edge_cover(CoverPair(2, s1, s2))


def test_is_edge_cover_matches_naive():
    rng = random.Random(3)
    for _ in range(500):
        k = rng.randint(1, 6)
        a, b = rng.getrandbits(1 << k), rng.getrandbits(1 << k)
        # bias toward near-covers
        a |= rng.getrandbits(1 << k)
        s1, s2 = VertexSet(k, a), VertexSet(k, b)
        assert is_edge_cover(CoverPair(k, s1, s2)) == naive_cover(k, s1, s2)


def test_formula_values():
    assert [minmax_cover_formula(k) for k in range(1, 6)] == [2, 3, 6, 11, 22]
    from math import comb

    for k in range(1, 40, 2):
        assert minmax_cover_formula(k) == 2 * sum(comb(k - 1, l) for l in range((k - 1) // 2 + 1))


def test_lower_bound_values():
    assert minmax_lower_bound(2) == 3
    assert minmax_lower_bound(4) == 11
    # the bound is evaluated over every n, not only the upper half
    k = 5
    direct = min(max(n, 32 - phi_formula(k, n)) for n in range(1, 33))
    assert minmax_lower_bound(k) == direct


def test_lower_bound_equals_formula_up_to_20():
    for k in range(1, 21):
        assert minmax_lower_bound(k) == minmax_cover_formula(k)


def test_extremal_cover_examples():
    p = extremal_cover(2)
    assert p.s1.strings() == ["00", "01", "10"]
    assert p.s2.strings() == ["01", "10", "11"]
    p = extremal_cover(3)
    assert len(p.s1) == len(p.s2) == 6
    assert all(s[1:].count("1") <= 1 for s in p.s1.strings())


def test_extremal_cover_sweep():
    for k in range(1, 15):
        p = extremal_cover(k)
        assert is_edge_cover(p)
        assert len(p.s1) == len(p.s2) == minmax_cover_formula(k)


def test_bruteforce_values():
    assert [minmax_cover_bruteforce(k) for k in (1, 2, 3)] == [2, 3, 6]
    with pytest.raises(ValueError):
        minmax_cover_bruteforce(4)


def test_bruteforce_k2_against_naive_pairs():
    k = 2
    best = min(
        max(len(a), len(b))
        for ra in range(5)
        for a in combinations(range(4), ra)
        for rb in range(5)
        for b in combinations(range(4), rb)
        if naive_cover(k, a, b)
    )
    assert best == minmax_cover_bruteforce(2)


def test_non_full_vertices_are_forced():
    rng = random.Random(5)
    for _ in range(300):
        k = rng.randint(1, 8)
        S = VertexSet(k, rng.getrandbits(1 << k))
        forced = forced_second_side(S)
        assert forced == non_full_vertices(S)
        # forcing really is necessary: dropping any forced vertex breaks the cover
        T = forced
        assert is_edge_cover(CoverPair(k, S, T))
        for v in list(T)[:3]:
            assert not is_edge_cover(CoverPair(k, S, VertexSet(k, T.mask ^ (1 << v))))
