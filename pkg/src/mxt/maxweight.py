"""Maximum-weight basis solving with independent cross-checks.

The production path is the greedy algorithm: sort elements by weight
descending (ties by ascending index), keep an element iff it extends an
independent set.  Two independent oracles certify it: exhaustive search
over all bases, and linear optimization over the vertices of the facet
description of the bases polytope.

Weights are exact rationals; "0.25" parses to 1/4, never to a float, so
exact ties are detected rather than approximated.  Negative weights are
allowed and a full basis is still returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import Matroid, iter_bits
from .errors import DimensionMismatchError
from .polytope import bases_polytope_vertices

WeightVector = tuple[Fraction, ...]


def parse_weights(items: Sequence, n: int) -> WeightVector:
    """Exact weights from strings or numbers; "3/2", "-2", "0.25" all work."""
    if len(items) != n:
        raise DimensionMismatchError(f"expected {n} weights, got {len(items)}")
    return tuple(Fraction(str(v)) for v in items)


@dataclass(frozen=True)
class SolveResult:
    basis: int
    value: Fraction
    method: str


def _value(weights: Sequence[Fraction], basis: int) -> Fraction:
    return sum((Fraction(weights[e]) for e in iter_bits(basis)), Fraction(0))


def _check_weights(m: Matroid, weights: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if len(weights) != m.n:
        raise DimensionMismatchError(
            f"weight vector has {len(weights)} entries, ground set has {m.n}"
        )
    return tuple(Fraction(w) for w in weights)


def greedy_basis(m: Matroid, weights: Sequence[Fraction]) -> SolveResult:
    """Optimal basis by the greedy algorithm.

    Tie-breaking is part of the contract: elements are considered by weight
    descending, then by ascending index.
    """
    w = _check_weights(m, weights)
    order = sorted(range(m.n), key=lambda e: (-w[e], e))
    chosen = 0
    r = 0
    target = m.full_rank
    for e in order:
        if r == target:
            break
        if m.rank(chosen | (1 << e)) > r:
            chosen |= 1 << e
            r += 1
    return SolveResult(chosen, _value(w, chosen), "greedy")


def brute_force_best(m: Matroid, weights: Sequence[Fraction],
                     cap: Optional[int] = None) -> SolveResult:
    """Exhaustive maximum over all bases; ties go to the canonically first."""
    w = _check_weights(m, weights)
    best = None
    best_val = None
    for b in m.bases(cap):
        v = _value(w, b)
        if best_val is None or v > best_val:
            best, best_val = b, v
    return SolveResult(best, best_val, "brute")


def lp_vertex_best(m: Matroid, weights: Sequence[Fraction],
                   cap: Optional[int] = None) -> SolveResult:
    """Maximum of the weight functional over the vertices of the facet
    description; the optimum vertex is always a basis incidence vector."""
    w = _check_weights(m, weights)
    best_vertex = None
    best_val = None
    for vert in bases_polytope_vertices(m, cap):
        v = sum(a * b for a, b in zip(w, vert))
        if best_val is None or v > best_val:
            best_vertex, best_val = vert, v
    assert best_vertex is not None and all(x in (0, 1) for x in best_vertex), \
        "optimum vertex is not a 0/1 point"
    basis = sum(1 << e for e, x in enumerate(best_vertex) if x == 1)
    return SolveResult(basis, best_val, "lp-vertex")


def certify_optimal(m: Matroid, weights: Sequence[Fraction], basis: int,
                    cap: Optional[int] = None) -> bool:
    """Three-way check: the basis value matches both independent optima."""
    w = _check_weights(m, weights)
    v = _value(w, basis)
    return (v == brute_force_best(m, w, cap).value
            and v == lp_vertex_best(m, w, cap).value)
