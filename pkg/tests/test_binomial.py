import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fullcube.binomial import (
    ArithmeticOverflow,
    BinomialRep,
    binomial,
    check_claim_superadd,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    ubr,
    upper_boundary,
    upper_boundary_table,
)


def test_binomial_basics():
    assert binomial(5, 2) == 10
    assert all(binomial(n, 0) == 1 for n in range(20))
    assert binomial(4, 5) == 0
    assert binomial(0, 0) == 1


def test_binomial_width():
    assert binomial(64, 32) == 1832624140942590534
    assert binomial(67, 33) == math.comb(67, 33)
    with pytest.raises(ArithmeticOverflow):
        binomial(68, 34)
    with pytest.raises(ArithmeticOverflow):
        binomial(40, 20, bits=32)
    assert binomial(200, 100, bits=None) == math.comb(200, 100)


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 2)


@pytest.mark.parametrize(
    "m, i, terms",
    [
        (10, 3, ((5, 3),)),
        (11, 3, ((5, 3), (2, 2))),
        (7, 2, ((4, 2), (1, 1))),
        (1, 3, ((3, 3),)),
        (9, 2, ((4, 2), (3, 1))),
    ],
)
def test_ubr_examples(m, i, terms):
    rep = ubr(m, i)
    assert rep.terms == terms
    assert rep.value == m


def test_ubr_rejects_zero():
    with pytest.raises(ValueError):
        ubr(0, 3)
    with pytest.raises(ValueError):
        ubr(3, 0)


def test_rep_invariants_enforced():
    with pytest.raises(ValueError):
        BinomialRep(3, ((5, 3), (5, 2)))
    with pytest.raises(ValueError):
        BinomialRep(3, ((5, 3), (2, 1)))
    with pytest.raises(ValueError):
        BinomialRep(2, ((1, 2),))


def test_ubr_round_trip_sweep():
    for i in range(1, 9):
        for m in range(1, 10**5 + 1):
            rep = ubr(m, i)
            assert rep.value == m
            tops = [t for t, _ in rep.terms]
            assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
            assert rep.terms[-1][0] >= rep.terms[-1][1] >= 1


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**12), st.integers(1, 12))
def test_ubr_round_trip_large(m, i):
    assert ubr(m, i).value == m


def _all_cascades(level, bound, max_top):
    """Every valid cascade at ``level`` with value <= bound, as (value, terms)."""
    out = []

    def rec(lev, top_limit, value, terms):
        if terms:
            out.append((value, tuple(terms)))
        if lev < 1:
            return
        for top in range(lev, top_limit):
            v = value + math.comb(top, lev)
            if v > bound:
                break
            rec(lev - 1, top, v, terms + [(top, lev)])

    rec(level, max_top, 0, [])
    return out


def test_ubr_uniqueness_by_enumeration():
    bound = 2000
    for i in range(1, 6):
        found = {}
        for value, terms in _all_cascades(i, bound, bound + i + 1):
            found.setdefault(value, []).append(terms)
        assert set(found) == set(range(1, bound + 1))
        for m, reps in found.items():
            assert len(reps) == 1, (m, i, reps)
            assert reps[0] == ubr(m, i).terms


def test_upper_boundary_examples():
    assert upper_boundary(11, 3) == 5
    assert upper_boundary(10, 3) == 5
    assert upper_boundary(0, 4) == 0
    assert upper_boundary(9, 2) == 7
    for n in range(1, 15):
        for i in range(1, n + 1):
            assert upper_boundary(math.comb(n, i), i) == math.comb(n, i + 1)


def test_upper_boundary_monotone_and_increment_law():
    for i in range(1, 9):
        prev = upper_boundary(1, i)
        for m in range(1, 10001):
            nxt = upper_boundary(m + 1, i)
            assert nxt >= prev
            top, lev = ubr(m, i).terms[-1]
            assert nxt - prev == (top if lev == 1 else 0), (m, i)
            prev = nxt
    assert upper_boundary(1, 3) >= upper_boundary(0, 3)


def test_strict_observation():
    for n in range(2, 31):
        for i in range(1, n):
            assert upper_boundary(math.comb(n, i) - 1, i, bits=None) == math.comb(n, i + 1) - (n - i)


def test_upper_boundary_table_matches_direct():
    for i in range(0, 8):
        size = 3000
        direct = [0] + [upper_boundary(m, i) for m in range(1, size)] if i else [0] * size
        assert upper_boundary_table(i, size) == direct


def test_claim_superadd():
    assert check_claim_superadd(10, 11, 3)
    assert all(check_claim_superadd(0, m, i) for m in range(50) for i in range(1, 5))


def test_lemma_checkers_examples():
    assert check_lemma1(3, 3, 2)
    assert check_lemma1(1, 1, 2)
    assert check_lemma2(1, 1, 2, 4)
    assert check_lemma2(1, 1, 3, 5)
    assert check_lemma3(0, 3, 3, 2, 4)
    for N in range(1, 8):
        for i in range(1, N + 1):
            cap = math.comb(N, i)
            for m in range(cap + 1):
                # m2 = C(N, i) makes both sides equal
                assert upper_boundary(m, i) + upper_boundary(cap, i) == upper_boundary(m, i) + math.comb(N, i + 1)
                assert check_lemma3(m, m, cap, i, N)


def test_lemma_checkers_reject_bad_input():
    with pytest.raises(ValueError):
        check_lemma1(1, 1, 1)
    with pytest.raises(ValueError):
        check_lemma2(3, 3, 2, 4)  # 6 > C(4,1)
    with pytest.raises(ValueError):
        check_lemma3(0, 3, 2, 2, 4)  # 3 + 2 != 0 + 6
    with pytest.raises(ValueError):
        check_lemma3(0, 7, 0, 2, 4)


def _lemma3_brute_p1(m, m1, m2, N):
    # level 1: x^(1) = C(x, 2)
    return math.comb(m1, 2) + math.comb(m2, 2) <= math.comb(m, 2) + math.comb(N, 2)


def test_lemma3_level_one_matches_squares():
    for N in range(0, 25):
        for m1 in range(N + 1):
            for m2 in range(N - m1, N + 1):
                m = m1 + m2 - N
                assert _lemma3_brute_p1(m, m1, m2, N)
                assert check_lemma3(m, m1, m2, 1, N)
