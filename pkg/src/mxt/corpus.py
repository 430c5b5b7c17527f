"""Deterministic test corpus: named matroids plus seeded random families.

Everything here is reproducible: random families are driven by
``random.Random(seed)`` and the same seed always yields the same corpus.
The random binary matroids are filtered to the nondegenerate class the
facet machinery targets (2-connected with rank and corank at least 2).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .connectivity import is_2connected
from .constructions import (
    catalog,
    direct_sum,
    parallel_extension,
    series_extension,
    two_sum,
)
from .core import BinaryMatroid, Matroid, UniformMatroid, full_mask


def named_corpus() -> list[tuple[str, Matroid]]:
    """The named 2-connected corpus used throughout verification."""
    names = ["MK4", "W3", "Q6", "P6", "U(3,6)", "U(2,4)", "U(2,5)", "U(3,5)",
             "U24+2U24", "wheel(4)"]
    return [(n, catalog(n)) for n in names]


def random_binary_matroids(seed: int, count: int = 20,
                           max_n: int = 7) -> list[tuple[str, BinaryMatroid]]:
    """Seeded 2-connected simple cosimple binary matroids, 2 <= r <= n - 2.

    Simplicity and cosimplicity keep every parallel and coparallel closure
    trivial, which is the class on which the compact facet description is
    provably irredundant (nontrivial closures can make a handful of bounds
    redundant; see the degenerate-closure tests).
    """
    rng = random.Random(seed)
    out: list[tuple[str, BinaryMatroid]] = []
    attempt = 0
    while len(out) < count:
        attempt += 1
        if attempt > 200000:
            raise RuntimeError("random binary corpus generation stalled")
        n = rng.randint(4, max_n)
        k = rng.randint(2, n - 2)
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(k)]
        m = BinaryMatroid(rows, name=f"rand-bin-{len(out)}-s{seed}")
        r = m.full_rank
        if r < 2 or n - r < 2:
            continue
        pairs = [(1 << e) | (1 << f)
                 for e in range(n) for f in range(e + 1, n)]
        if any(m.rank(p) == 1 for p in pairs):
            continue
        if any(m.corank(p) == 1 for p in pairs):
            continue
        if not is_2connected(m):
            continue
        out.append((m.name, m))
    return out


def full_corpus(seed: int = 0) -> list[tuple[str, Matroid]]:
    """Named corpus plus the 20 seeded random binary matroids."""
    return named_corpus() + random_binary_matroids(seed)


def random_integer_weights(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-9, 9)) for _ in range(n))


def random_hyperplane_point(rng: random.Random, m: Matroid) -> tuple[Fraction, ...]:
    """A rational point on the hyperplane x(E) = r(E).

    Convex combination of a few random bases plus a zero-sum perturbation,
    so both member and non-member cases occur.
    """
    bases = m.bases()
    k = rng.randint(1, min(4, len(bases)))
    picks = [bases[rng.randrange(len(bases))] for _ in range(k)]
    weights = [rng.randint(1, 9) for _ in range(k)]
    total = sum(weights)
    point = [Fraction(0)] * m.n
    for b, w in zip(picks, weights):
        f = Fraction(w, total)
        for e in range(m.n):
            if b >> e & 1:
                point[e] += f
    for _ in range(rng.randint(0, 3)):
        e = rng.randrange(m.n)
        f = rng.randrange(m.n)
        if e == f:
            continue
        delta = Fraction(rng.randint(-2, 2), rng.randint(1, 6))
        point[e] += delta
        point[f] -= delta
    return tuple(point)


def _random_uniform(rng: random.Random, max_n: int,
                    min_n: int = 1) -> UniformMatroid:
    n = rng.randint(min_n, max_n)
    return UniformMatroid(rng.randint(0, n), n)


def _non_coloop_elements(m: Matroid) -> list[int]:
    co = m.coloops()
    return [e for e in range(m.n) if not (co >> e & 1)]

def _non_loop_elements(m: Matroid) -> list[int]:
    lo = m.loops()
    return [e for e in range(m.n) if not (lo >> e & 1)]


def random_series_parallel_construction(rng: random.Random,
                                        max_elements: int = 10) -> Matroid:
    """Random sequence of series/parallel extensions and direct sums,
    starting from uniform matroids."""
    m: Matroid = _random_uniform(rng, 4)
    for _ in range(rng.randint(0, 8)):
        if m.n >= max_elements:
            break
        op = rng.choice(("series", "parallel", "dsum"))
        if op == "series":
            cands = _non_coloop_elements(m)
            if cands:
                m = series_extension(m, rng.choice(cands))
        elif op == "parallel":
            cands = _non_loop_elements(m)
            if cands:
                m = parallel_extension(m, rng.choice(cands))
        else:
            extra = _random_uniform(rng, min(4, max_elements - m.n))
            if m.n + extra.n <= max_elements:
                m = direct_sum(m, extra)
    return m


def random_sum_construction(rng: random.Random,
                            max_elements: int = 10) -> Matroid:
    """Random sequence of 1-sums and 2-sums of uniform matroids."""
    m: Matroid = _random_uniform(rng, 6, min_n=1)
    for _ in range(rng.randint(0, 4)):
        if m.n >= max_elements:
            break
        use_two_sum = rng.random() < 0.6 and m.n >= 3
        if use_two_sum:
            # 2-sum needs proper basepoints on both sides
            cands = [e for e in _non_loop_elements(m)
                     if e in set(_non_coloop_elements(m))]
            extra_n = rng.randint(3, max(3, min(5, max_elements - m.n + 1)))
            if not cands or m.n + extra_n - 2 > max_elements:
                continue
            extra = UniformMatroid(rng.randint(1, extra_n - 1), extra_n)
            m = two_sum(m, rng.choice(cands), extra, rng.randrange(extra.n))
        else:
            extra = _random_uniform(rng, min(4, max_elements - m.n))
            if m.n + extra.n <= max_elements:
                m = direct_sum(m, extra)
    return m
