"""Exhaustive invariant sweeps, shared by ``fullcube check`` and the test suite.

Each suite returns a :class:`SuiteResult` carrying the number of cases
examined and the first few counterexamples (an empty list means pass).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterator, List

from ._bits import same_weight_masks
from .binomial import (
    binomial,
    check_claim_superadd,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    upper_boundary,
)
from .cover import (
    extremal_cover,
    is_edge_cover,
    minmax_cover_bruteforce,
    minmax_cover_formula,
    minmax_lower_bound,
)
from .hypercube import (
    DEFAULT_BUDGET,
    edge_max_bruteforce,
    edge_max_formula,
    edge_max_recurrence,
    extremal_set,
    full_vertices,
    phi_bruteforce,
    phi_formula,
    phi_recurrence,
)
from .kruskal_katona import SetFamily, apex_union, build_complex, is_complex, is_f_vector

MAX_REPORTED = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    failure_count: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, what: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED:
                self.failures.append(what())

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
            **self.extra,
        }


# -- arithmetic lemmas --------------------------------------------------------


def lemma_suite(
    superadd_max: int = 500,
    superadd_levels: int = 6,
    lemma1_max: int = 300,
    lemma1_levels: int = 6,
    lemma2_max_n: int = 10,
    lemma2_levels: int = 5,
    lemma3_max_n: int = 9,
    lemma3_levels: int = 4,
) -> SuiteResult:
    res = SuiteResult("lemmas")
    for i in range(1, superadd_levels + 1):
        for m1 in range(superadd_max + 1):
            for m2 in range(superadd_max + 1):
                res.record(check_claim_superadd(m1, m2, i), lambda: f"superadd({m1},{m2},{i})")
    for i in range(2, lemma1_levels + 1):
        for m1 in range(1, lemma1_max + 1):
            for m2 in range(1, lemma1_max + 1):
                res.record(check_lemma1(m1, m2, i), lambda: f"lemma1({m1},{m2},{i})")
    for N in range(1, lemma2_max_n + 1):
        for i in range(2, lemma2_levels + 1):
            cap = binomial(N, i - 1)
            for m1 in range(1, cap):
                for m2 in range(1, cap - m1 + 1):
                    res.record(check_lemma2(m1, m2, i, N), lambda: f"lemma2({m1},{m2},{i},{N})")
    for N in range(0, lemma3_max_n + 1):
        for i in range(1, lemma3_levels + 1):
            cap = binomial(N, i)
            for m1 in range(cap + 1):
                for m2 in range(cap - m1, cap + 1):
                    m = m1 + m2 - cap
                    res.record(check_lemma3(m, m1, m2, i, N), lambda: f"lemma3({m},{m1},{m2},{i},{N})")
    return res


def strict_suite(max_n: int = 30) -> SuiteResult:
    """``ub_i(C(n,i) - 1) == C(n,i+1) - (n-i)`` for ``1 <= i < n <= max_n``."""
    res = SuiteResult("strict")
    for n in range(2, max_n + 1):
        for i in range(1, n):
            got = upper_boundary(math.comb(n, i) - 1, i, bits=None)
            want = math.comb(n, i + 1) - (n - i)
            res.record(got == want, lambda: f"n={n} i={i}: {got} != {want}")
    return res


# -- Kruskal-Katona ------------------------------------------------------------


def downsets(universe: int) -> Iterator[frozenset]:
    """Every subset-closed family of subsets of ``[universe]`` that contains the empty set.

    Built level by level: the candidates for size ``s + 1`` are the sets whose
    every ``s``-subset was chosen, and any subset of candidates may be kept.
    """
    def extend(family: frozenset, layer: List[int], size: int) -> Iterator[frozenset]:
        chosen = set(layer)
        cands = []
        if size < universe and layer:
            for x in same_weight_masks(size + 1, universe):
                if all(x ^ (1 << b) in chosen for b in range(universe) if x >> b & 1):
                    cands.append(x)
        if not cands:
            yield family
            return
        for pick in range(1 << len(cands)):
            new = [c for t, c in enumerate(cands) if pick >> t & 1]
            if not new:
                yield family
            else:
                yield from extend(family | frozenset(new), new, size + 1)

    yield from extend(frozenset([0]), [0], 0)


def kks_suite(universe: int = 5) -> SuiteResult:
    """Both directions of the Kruskal-Katona equivalence over ``[universe]``.

    Every downward-closed family has a valid f-vector, and every bounded
    vector is valid exactly when its colex family is closed under subsets.
    """
    res = SuiteResult("kks")
    families = 0
    for fam in downsets(universe):
        families += 1
        sf = SetFamily(fam)
        f = sf.f_vector()
        res.record(is_complex(sf), lambda: f"enumerated family not closed: {list(sf)}")
        res.record(is_f_vector(f.entries), lambda: f"f-vector {f.entries} of a complex rejected")
    for d in range(universe + 1):
        ranges = [range(1, math.comb(universe, j + 1) + 1) for j in range(d)]
        for tail in product(*ranges):
            f = (1,) + tail
            valid = is_f_vector(f)
            closed = is_complex(build_complex(f))
            res.record(valid == closed, lambda: f"{f}: is_f_vector={valid} closed={closed}")
    res.extra["families"] = families
    return res


def boundary_closure_suite(max_n: int = 200, levels: int = 5) -> SuiteResult:
    """Every ``i``-subset of a set among the first ``ub_i(N)`` ``(i+1)``-sets is among the first ``N`` ``i``-sets."""
    res = SuiteResult("boundary-closure")
    for i in range(1, levels + 1):
        lower: set = set()
        gen = same_weight_masks(i)
        upper = same_weight_masks(i + 1)
        seen = 0
        for N in range(1, max_n + 1):
            lower.add(next(gen))
            # the families are nested in N, so only the newly admitted sets need checking
            top = upper_boundary(N, i, bits=None)
            ok = True
            while seen < top:
                y = next(upper)
                seen += 1
                ok = ok and all(y ^ (1 << b) in lower for b in range(y.bit_length()) if y >> b & 1)
            res.record(ok, lambda: f"N={N} i={i}")
    return res


def apex_suite(max_n: int = 6) -> SuiteResult:
    res = SuiteResult("apex")
    for N in range(1, max_n + 1):
        for i in range(2, N + 1):
            head1 = tuple(math.comb(N, j) for j in range(i))
            head2 = tuple(math.comb(N, j) for j in range(i - 1))
            for m1 in range(math.comb(N, i) + 1):
                ub1 = upper_boundary(m1, i, bits=None)
                for m2 in range(math.comb(N, i - 1) + 1):
                    mu = min(upper_boundary(m2, i - 1, bits=None), m1)
                    delta = apex_union(head1 + (m1, ub1), head2 + (m2, mu), N)
                    counts = delta.f_vector().entries + (0, 0)
                    ok = is_complex(delta) and counts[i] == m1 + m2 and counts[i + 1] == ub1 + mu
                    ok = ok and all(counts[j] == math.comb(N + 1, j) for j in range(i))
                    res.record(ok, lambda: f"N={N} i={i} m1={m1} m2={m2}: {counts}")
    return res


# -- hypercube -------------------------------------------------------------------


def phi_oracle_suite(max_k: int = 3, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> SuiteResult:
    """Brute force against the closed form for every ``n`` and every ``k <= max_k``."""
    res = SuiteResult("phi-oracle")
    for k in range(1, max_k + 1):
        for n in range(1, (1 << k) + 1):
            got, want = phi_bruteforce(k, n, budget, workers), phi_formula(k, n)
            res.record(got == want, lambda: f"k={k} n={n}: brute {got} formula {want}")
    return res


def phi_recurrence_suite(max_k: int = 10) -> SuiteResult:
    res = SuiteResult("phi-recurrence")
    for k in range(1, max_k + 1):
        for n in range(1, (1 << k) + 1):
            got, want = phi_recurrence(k, n), phi_formula(k, n)
            res.record(got == want, lambda: f"k={k} n={n}: recurrence {got} formula {want}")
    return res


def construction_suite(max_k: int = 12) -> SuiteResult:
    res = SuiteResult("construction")
    for k in range(1, max_k + 1):
        for n in range(1, (1 << k) + 1):
            S = extremal_set(k, n)
            got, want = len(full_vertices(S)), phi_formula(k, n)
            res.record(len(S) == n and got == want, lambda: f"k={k} n={n}: |S|={len(S)} full={got} phi={want}")
    return res


def cover_oracle_suite(max_k: int = 3) -> SuiteResult:
    res = SuiteResult("cover-oracle")
    for k in range(1, max_k + 1):
        brute, formula = minmax_cover_bruteforce(k), minmax_cover_formula(k)
        bound, pair = minmax_lower_bound(k), extremal_cover(k)
        ok = brute == formula == bound == pair.max_size and is_edge_cover(pair)
        res.record(ok, lambda: f"k={k}: brute {brute} formula {formula} bound {bound} construction {pair.max_size}")
    return res


def cover_bound_suite(max_k: int = 14) -> SuiteResult:
    res = SuiteResult("cover-bound")
    for k in range(1, max_k + 1):
        formula, bound, pair = minmax_cover_formula(k), minmax_lower_bound(k), extremal_cover(k)
        ok = formula == bound == len(pair.s1) == len(pair.s2) and is_edge_cover(pair)
        res.record(ok, lambda: f"k={k}: formula {formula} bound {bound} sizes {len(pair.s1)}/{len(pair.s2)}")
    return res


def edge_max_suite(max_n: int = 4096, brute_max_n: int = 8) -> SuiteResult:
    res = SuiteResult("edge-max")
    for n in range(1, max_n + 1):
        got, want = edge_max_recurrence(n), edge_max_formula(n)
        res.record(got == want, lambda: f"n={n}: recurrence {got} formula {want}")
    for n in range(1, brute_max_n + 1):
        got, want = edge_max_bruteforce(n), edge_max_formula(n)
        res.record(got == want, lambda: f"n={n}: brute {got} formula {want}")
    return res


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "lemmas": lemma_suite,
    "strict": strict_suite,
    "kks": kks_suite,
    "boundary-closure": boundary_closure_suite,
    "apex": apex_suite,
    "phi-oracle": phi_oracle_suite,
    "phi-recurrence": phi_recurrence_suite,
    "construction": construction_suite,
    "cover-oracle": cover_oracle_suite,
    "cover-bound": cover_bound_suite,
    "edge-max": edge_max_suite,
}
