"""Exit criteria. Every check is exact; each prints one PASS/FAIL line."""
import importlib
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES
from fullcube.cover import (
    extremal_cover,
    is_edge_cover,
    minmax_cover_bruteforce,
    minmax_cover_formula,
    minmax_lower_bound,
)
from fullcube.hypercube import (
    edge_max_bruteforce,
    edge_max_formula,
    edge_max_recurrence,
    extremal_set,
    full_vertices,
    phi_bruteforce,
    phi_formula,
    phi_recurrence,
)
from fullcube.suites import apex_suite, kks_suite, lemma_suite, strict_suite

binomial_mod = importlib.import_module("fullcube.binomial")
hypercube_mod = importlib.import_module("fullcube.hypercube")


def _cold():
    for fn in (
        binomial_mod._upper_boundary,
        hypercube_mod._recurrence_table,
        hypercube_mod.phi_table,
        hypercube_mod._opposite_order,
        hypercube_mod._weight_at_most,
        hypercube_mod._edge_table,
    ):
        fn.cache_clear()


@contextmanager
def criterion(number, title, limit=None):
    _cold()
    state = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - start
        within = limit is None or elapsed < limit
        verdict = "PASS" if state["ok"] and within else "FAIL"
        budget = f" (limit {limit:.0f}s)" if limit else ""
        ACCEPTANCE_LINES.append(f"[{verdict}] {number:>2}. {title}: {state['detail']} in {elapsed:.2f}s{budget}")
        print(ACCEPTANCE_LINES[-1])
    assert within, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"


def test_01_phi_bruteforce_equals_formula():
    with criterion(1, "phi brute force == formula, k<=3", limit=60) as st:
        bad = [(k, n) for k in (1, 2, 3) for n in range(1, (1 << k) + 1) if phi_bruteforce(k, n) != phi_formula(k, n)]
        st["ok"], st["detail"] = not bad, f"14 cases, mismatches {bad}"
    assert not bad


def test_02_formula_equals_recurrence():
    with criterion(2, "phi formula == recurrence, k<=10", limit=60) as st:
        bad = [(k, n) for k in range(1, 11) for n in range(1, (1 << k) + 1) if phi_formula(k, n) != phi_recurrence(k, n)]
        st["ok"], st["detail"] = not bad, f"2046 cases, {len(bad)} mismatches"
    assert not bad


def test_03_construction_attains_formula():
    with criterion(3, "|full(extremal_set)| == phi, k<=12", limit=120) as st:
        bad = []
        for k in range(1, 13):
            for n in range(1, (1 << k) + 1):
                S = extremal_set(k, n)
                if len(S) != n or len(full_vertices(S)) != phi_formula(k, n):
                    bad.append((k, n))
        st["ok"], st["detail"] = not bad, f"8190 cases, {len(bad)} mismatches"
    assert not bad


def test_04_lemma_suite():
    with criterion(4, "superadditivity and lemmas 1-3 sweeps") as st:
        res = lemma_suite(
            superadd_max=500, superadd_levels=6, lemma1_max=300, lemma1_levels=6,
            lemma2_max_n=10, lemma2_levels=5, lemma3_max_n=9, lemma3_levels=4,
        )
        st["ok"], st["detail"] = res.passed, f"{res.checked} cases, {res.failure_count} counterexamples"
    assert res.passed, res.failures


def test_05_kks_equivalence():
    with criterion(5, "Kruskal-Katona equivalence over [5]", limit=60) as st:
        res = kks_suite(5)
        st["ok"] = res.passed and res.extra["families"] == 7580
        st["detail"] = f"{res.extra['families']} complexes, {res.checked} checks, {res.failure_count} failures"
    assert st["ok"], res.failures


def test_06_strict_observation():
    with criterion(6, "ub_i(C(n,i)-1) == C(n,i+1)-(n-i), i<n<=30") as st:
        res = strict_suite(30)
        st["ok"], st["detail"] = res.passed, f"{res.checked} cases, {res.failure_count} failures"
    assert res.passed, res.failures


def test_07_cover_bruteforce():
    with criterion(7, "cover brute force == formula, k<=3", limit=10) as st:
        brute = [minmax_cover_bruteforce(k) for k in (1, 2, 3)]
        formula = [minmax_cover_formula(k) for k in (1, 2, 3)]
        st["ok"] = brute == formula == [2, 3, 6]
        st["detail"] = f"brute {brute}, formula {formula}"
    assert st["ok"]


def test_08_cover_two_sided():
    with criterion(8, "lower bound == formula == construction, k<=14", limit=60) as st:
        bad = []
        for k in range(1, 15):
            p = extremal_cover(k)
            f = minmax_cover_formula(k)
            if not (minmax_lower_bound(k) == f == p.max_size and is_edge_cover(p)):
                bad.append(k)
        st["ok"], st["detail"] = not bad, f"14 dimensions, failing {bad}"
    assert not bad


def test_09_edge_max_agreement():
    prefix = [0, 1, 2, 4, 5, 7, 9, 12, 13, 15, 17, 20]
    with criterion(9, "edge-max recurrence == formula == listed prefix == brute force") as st:
        rec_bad = [n for n in range(1, 4097) if edge_max_recurrence(n) != edge_max_formula(n)]
        pref_ok = [edge_max_formula(n) for n in range(1, 13)] == prefix
        pref_ok = pref_ok and [edge_max_recurrence(n) for n in range(1, 13)] == prefix
        brute_ok = all(edge_max_bruteforce(n) == edge_max_formula(n) for n in range(1, 9))
        st["ok"] = not rec_bad and pref_ok and brute_ok
        st["detail"] = f"recurrence mismatches {len(rec_bad)}, prefix {pref_ok}, brute n<=8 {brute_ok}"
    assert st["ok"]


def test_10_apex_construction():
    with criterion(10, "apex union closed with stated face counts, N<=6", limit=30) as st:
        res = apex_suite(6)
        st["ok"], st["detail"] = res.passed, f"{res.checked} cases, {res.failure_count} failures"
    assert res.passed, res.failures
