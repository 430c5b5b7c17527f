"""Acceptance checks: every verification the library promises, runnable
as one suite (CLI ``mxt selftest`` or the pytest acceptance module).

All checks are exact: values are compared with zero tolerance under
rational arithmetic.  Randomized checks are seeded and deterministic.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .connectivity import is_2connected
from .constructions import (
    are_isomorphic,
    catalog,
    circuit_hyperplanes,
    has_minor,
    relax_circuit_hyperplane,
)
from .core import Matroid, UniformMatroid, full_mask, mask_of
from .corpus import (
    full_corpus,
    random_hyperplane_point,
    random_integer_weights,
    random_series_parallel_construction,
    random_sum_construction,
)
from .locked import count_locked, enumerate_locked, is_locked, uniformity_report
from .maxweight import brute_force_best, greedy_basis, lp_vertex_best
from .polytope import (
    brute_force_facets,
    facet_system,
    full_rank_system,
    minimize_system,
    separate,
    systems_equal,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


@lru_cache(maxsize=None)
def _corpus(seed: int):
    return tuple(full_corpus(seed))


def _basis_vectors(m: Matroid):
    return [[(b >> e) & 1 for e in range(m.n)] for b in m.bases()]


# ------------------------------------------------------------ criterion 1

def check_uniform_no_locked(seed: int = 0) -> CriterionResult:
    t0 = time.perf_counter()
    failures = []
    total = 0
    for n in range(10):
        for r in range(n + 1):
            total += 1
            if count_locked(UniformMatroid(r, n)) != 0:
                failures.append((r, n))
    dt = time.perf_counter() - t0
    ok = not failures and dt < 10.0
    detail = f"{total} uniform matroids, locked counts all zero"
    if failures:
        detail = f"nonzero locked count at {failures}"
    elif dt >= 10.0:
        detail = f"runtime bound exceeded: {dt:.2f}s"
    return CriterionResult(1, "uniform matroids have no locked subsets",
                           ok, detail, dt)


# ------------------------------------------------------------ criterion 2

def check_facet_description(seed: int = 0) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    for name, m in _corpus(seed):
        theo = facet_system(m)
        hull_sys = brute_force_facets(_basis_vectors(m))
        if not systems_equal(theo, hull_sys):
            problems.append(f"{name}: facet description differs from hull")
            continue
        minimized = minimize_system(m, theo)
        if len(minimized.inequalities) != len(theo.inequalities):
            problems.append(f"{name}: minimization dropped constraints")
        # every facet matches one theorem-side family (the systems are equal);
        # the nontrivial ones are the locked family, re-verified definitionally
        trivial_kinds = {"upper", "parallel", "nonneg", "coparallel"}
        for c in theo.inequalities:
            if c.kind == "locked":
                if not is_locked(m, c.support):
                    problems.append(f"{name}: support {c.support:#x} not locked")
            elif c.kind not in trivial_kinds:
                problems.append(f"{name}: unexpected facet family {c.kind}")
    dt = time.perf_counter() - t0
    ok = not problems and dt < 300.0
    detail = (f"{len(_corpus(seed))} matroids certified"
              if ok else "; ".join(problems[:4]) or f"runtime bound exceeded: {dt:.1f}s")
    return CriterionResult(2, "facet description equals hull and is minimal",
                           ok, detail, dt)


# ------------------------------------------------------------ criterion 3

def _fast_member(m: Matroid, point) -> bool:
    """Membership in the full rank system, via subset-sum DP over masks."""
    den = 1
    for v in point:
        den = den * v.denominator // _gcd(den, v.denominator)
    nums = [int(v * den) for v in point]
    if any(v < 0 for v in nums):
        return False
    table = m.rank_table()
    n = m.n
    sums = [0] * (1 << n)
    for a in range(1, 1 << n):
        low = a & -a
        sums[a] = sums[a ^ low] + nums[low.bit_length() - 1]
        if sums[a] > table[a] * den:
            return False
    return True


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def check_separation_oracle(seed: int = 0, points_per_matroid: int = 1000) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    for name, m in _corpus(seed):
        rng = random.Random((seed, "separation", name).__repr__())
        full_sys = full_rank_system(m)
        # the DP evaluator must agree with the literal system before we rely on it
        for _ in range(10):
            pt = random_hyperplane_point(rng, m)
            if _fast_member(m, pt) != full_sys.satisfied_by(pt):
                problems.append(f"{name}: membership evaluators disagree")
                break
        agree = 0
        for _ in range(points_per_matroid):
            pt = random_hyperplane_point(rng, m)
            member = separate(m, pt) is None
            if member == _fast_member(m, pt):
                agree += 1
            else:
                problems.append(
                    f"{name}: verdict mismatch at {[str(x) for x in pt]}"
                )
                break
        if agree != points_per_matroid and not problems:
            problems.append(f"{name}: only {agree} agreements")
    dt = time.perf_counter() - t0
    ok = not problems
    detail = (f"{points_per_matroid} points x {len(_corpus(seed))} matroids, "
              "100% verdict agreement" if ok
              else "; ".join(problems[:3]))
    return CriterionResult(3, "separation agrees with the exhaustive system",
                           ok, detail, dt)


# ------------------------------------------------------------ criterion 4

def check_maxweight_agreement(seed: int = 0, vectors_per_matroid: int = 500) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    for name, m in _corpus(seed):
        rng = random.Random((seed, "weights", name).__repr__())
        for _ in range(vectors_per_matroid):
            w = random_integer_weights(rng, m.n)
            g = greedy_basis(m, w)
            b = brute_force_best(m, w)
            l = lp_vertex_best(m, w)
            if not (g.value == b.value == l.value):
                problems.append(
                    f"{name}: values differ {g.value}/{b.value}/{l.value} at {w}"
                )
                break
    dt = time.perf_counter() - t0
    ok = not problems
    detail = (f"{vectors_per_matroid} weightings x {len(_corpus(seed))} matroids "
              "agree three ways" if ok else "; ".join(problems[:3]))
    return CriterionResult(4, "greedy, brute force and vertex optimum agree",
                           ok, detail, dt)


# ------------------------------------------------------------ criterion 5

def check_tight_bases_duality(seed: int = 0) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    for name, m in _corpus(seed):
        if m.n > 8:
            continue
        full = full_mask(m.n)
        d = m.dual()
        table = m.rank_table()
        dtable = d.rank_table()
        bases = m.bases()
        dbases = [full ^ b for b in bases]
        for x in range(1 << m.n):
            rx = table[x]
            cx = full ^ x
            rcx = dtable[cx]
            left = {b for b in bases if (b & x).bit_count() == rx}
            right = {full ^ db for db in dbases
                     if (db & cx).bit_count() == rcx}
            if left != right:
                problems.append(f"{name}: tight-base duality fails at {x:#x}")
                break
    dt = time.perf_counter() - t0
    ok = not problems
    detail = ("all subsets of every corpus matroid"
              if ok else "; ".join(problems[:3]))
    return CriterionResult(5, "tight bases complement to dual tight bases",
                           ok, detail, dt)


# ------------------------------------------------------------ criterion 6

def check_locked_closed(seed: int = 0) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    total = 0
    for name, m in _corpus(seed):
        d = m.dual()
        full = full_mask(m.n)
        for cert in enumerate_locked(m).certificates:
            total += 1
            if m.closure(cert.subset) != cert.subset:
                problems.append(f"{name}: locked set not closed")
            if d.closure(full ^ cert.subset) != full ^ cert.subset:
                problems.append(f"{name}: complement not closed in the dual")
    dt = time.perf_counter() - t0
    ok = not problems
    detail = (f"{total} certificates, both closure conditions hold"
              if ok else "; ".join(problems[:3]))
    return CriterionResult(6, "locked subsets are closed on both sides",
                           ok, detail, dt)


# ------------------------------------------------------------ criterion 7

def check_relaxation_chain(seed: int = 0) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    chain = [catalog("MK4")]
    for _ in range(4):
        hs = circuit_hyperplanes(chain[-1])
        if not hs:
            problems.append("chain ran out of circuit-hyperplanes")
            break
        relaxed = [relax_circuit_hyperplane(chain[-1], h) for h in hs]
        for other in relaxed[1:]:
            if are_isomorphic(relaxed[0], other) is None:
                problems.append("relaxation choice changed the isomorphism class")
        chain.append(relaxed[0])
    counts = [len(m.bases()) for m in chain]
    if counts != [16, 17, 18, 19, 20]:
        problems.append(f"basis counts along the chain: {counts}")
    expected = {mask_of(c) for c in combinations(range(6), 3)}
    if len(chain) == 5 and set(chain[-1].bases()) != expected:
        problems.append("endpoint is not the uniform matroid U(3,6)")
    dt = time.perf_counter() - t0
    ok = not problems
    detail = (f"counts {counts}, endpoint exact, choice-independent"
              if ok else "; ".join(problems[:3]))
    return CriterionResult(7, "relaxation chain is exact and choice-free",
                           ok, detail, dt)


# ------------------------------------------------------------ criterion 8

_SP_EXCLUDED = ("MK4", "W3", "P6", "Q6", "U24+2U24")
_SUM_EXCLUDED = ("MK4", "W3", "P6", "Q6")


def check_excluded_minors(seed: int = 0, constructions: int = 100) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    sp_targets = [(t, catalog(t)) for t in _SP_EXCLUDED]
    sum_targets = [(t, catalog(t)) for t in _SUM_EXCLUDED]

    rng = random.Random((seed, "series-parallel").__repr__())
    for i in range(constructions):
        m = random_series_parallel_construction(rng)
        for tname, target in sp_targets:
            if has_minor(m, target):
                problems.append(f"series-parallel build {i} contains {tname}")
    rng = random.Random((seed, "sums").__repr__())
    for i in range(constructions):
        m = random_sum_construction(rng)
        for tname, target in sum_targets:
            if has_minor(m, target):
                problems.append(f"sum build {i} contains {tname}")

    if not has_minor(catalog("W3"), catalog("U(2,4)")):
        problems.append("negative control failed: W3 should contain U(2,4)")
    if has_minor(catalog("MK4"), catalog("U(2,4)")):
        problems.append("negative control failed: MK4 must not contain U(2,4)")
    dt = time.perf_counter() - t0
    ok = not problems
    detail = (f"{constructions} builds per family, no excluded minors, "
              "controls pass" if ok else "; ".join(problems[:3]))
    return CriterionResult(8, "random constructions avoid the excluded minors",
                           ok, detail, dt)


# ------------------------------------------------------------ criterion 9

def _definitionally_uniform(m: Matroid) -> bool:
    r = m.full_rank
    return all(m.rank(mask_of(c)) == r for c in combinations(range(m.n), r))


def check_uniform_recognition(seed: int = 0) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    for n in range(10):
        for r in range(n + 1):
            u = UniformMatroid(r, n)
            got, _path = uniformity_report(u)
            if not got or got != _definitionally_uniform(u):
                problems.append(f"U({r},{n}) misclassified")
    for name, m in _corpus(seed):
        got, _path = uniformity_report(m)
        if got != _definitionally_uniform(m):
            problems.append(f"{name}: recognition disagrees with the definition")
    from .constructions import direct_sum
    counterexample = direct_sum(UniformMatroid(1, 2), UniformMatroid(1, 2))
    got, path = uniformity_report(counterexample)
    if got or path != "definitional":
        problems.append("disconnected counterexample not caught by the fallback")
    dt = time.perf_counter() - t0
    ok = not problems
    detail = ("55 uniforms + corpus + fallback counterexample"
              if ok else "; ".join(problems[:3]))
    return CriterionResult(9, "uniform recognition matches the definition",
                           ok, detail, dt)


# ----------------------------------------------------------- criterion 10

def check_specific_facet_counts(seed: int = 0) -> CriterionResult:
    t0 = time.perf_counter()
    problems = []
    hull_u24 = brute_force_facets(_basis_vectors(catalog("U(2,4)")))
    if len(hull_u24.inequalities) != 8:
        problems.append(f"U(2,4) hull facets: {len(hull_u24.inequalities)} != 8")
    mk4 = catalog("MK4")
    hull_mk4 = brute_force_facets(_basis_vectors(mk4))
    if len(hull_mk4.inequalities) != 16:
        problems.append(f"MK4 hull facets: {len(hull_mk4.inequalities)} != 16")
    kinds = {}
    for c in facet_system(mk4).inequalities:
        kinds[c.kind] = kinds.get(c.kind, 0) + 1
    if kinds != {"upper": 6, "nonneg": 6, "locked": 4}:
        problems.append(f"MK4 kind breakdown: {kinds}")
    dt = time.perf_counter() - t0
    ok = not problems
    detail = ("hull facet counts 8 and 16, breakdown 6+6+4"
              if ok else "; ".join(problems[:3]))
    return CriterionResult(10, "specific facet counts match the hull oracle",
                           ok, detail, dt)


ALL_CRITERIA = (
    check_uniform_no_locked,
    check_facet_description,
    check_separation_oracle,
    check_maxweight_agreement,
    check_tight_bases_duality,
    check_locked_closed,
    check_relaxation_chain,
    check_excluded_minors,
    check_uniform_recognition,
    check_specific_facet_counts,
)


def run_all(seed: int = 0) -> list[CriterionResult]:
    return [check(seed) for check in ALL_CRITERIA]
