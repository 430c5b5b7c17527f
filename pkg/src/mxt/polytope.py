"""Constraint systems for the bases polytope, separation, and exact
polyhedral verification.

The minimal description of the bases polytope of a 2-connected, loopless,
coloop-free matroid consists of the cardinality equality x(E) = r(E), one
upper bound x(P) <= 1 per parallel closure, one lower bound
x(S) >= |S| - 1 per coparallel closure, and one bound x(L) <= r(L) per
locked subset.  Closures equal to the whole ground set degenerate: a
parallel closure P = E adds nothing beyond the equality and is skipped,
while a coparallel closure S = E decomposes into the per-element bounds
x(e) >= 0 (those are the actual facets in that case; see the r = n - 1
uniform matroids).

Everything is exact rational arithmetic (fractions.Fraction); no floating
point is used anywhere in this module.

Two independent verification routes are provided and kept separate on
purpose: :func:`enumerate_vertices` brute-forces basic feasible solutions of
a constraint system, while :func:`brute_force_facets` computes the hull of a
point set through the double description engine in :mod:`mxt.hull`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from . import hull
from .connectivity import _separation_within, is_2connected
from .core import Matroid, elements_of, full_mask, iter_bits
from .errors import (
    CapExceededError,
    ColoopPresentError,
    DimensionMismatchError,
    GroundSetSizeError,
    InvalidConstraintError,
    LoopPresentError,
    NotTwoConnectedError,
    UnboundedSystemError,
)
from .locked import enumerate_locked

DEFAULT_POLY_CAP = 12

RationalPoint = tuple[Fraction, ...]


@dataclass(frozen=True)
class LinearConstraint:
    """One inequality or equality over the ground set.

    ``support`` records the subset the constraint came from (its mask) when
    there is one; paper-style constraints have 0/1 coefficients on exactly
    that support.
    """

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    sense: str  # "<=", ">=" or "="
    kind: str
    support: int

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum(c * x for c, x in zip(self.coeffs, point))

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        v = self.evaluate(point)
        if self.sense == "<=":
            return v <= self.rhs
        if self.sense == ">=":
            return v >= self.rhs
        return v == self.rhs

    def tight_at(self, point: Sequence[Fraction]) -> bool:
        return self.evaluate(point) == self.rhs


@dataclass(frozen=True)
class ConstraintSystem:
    """An H-description: equality rows plus inequality rows in R^n."""

    n: int
    equalities: tuple[LinearConstraint, ...]
    inequalities: tuple[LinearConstraint, ...]

    def all_constraints(self) -> tuple[LinearConstraint, ...]:
        return self.equalities + self.inequalities

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        return all(c.satisfied_by(point) for c in self.all_constraints())


def subset_constraint(n: int, support: int, rhs, sense: str,
                      kind: str) -> LinearConstraint:
    """0/1-coefficient constraint x(support) <sense> rhs."""
    coeffs = tuple(Fraction(1 if support >> e & 1 else 0) for e in range(n))
    return LinearConstraint(coeffs, Fraction(rhs), sense, kind, support)


# --------------------------------------------------------- canonical forms

def _leq_row(c: LinearConstraint) -> tuple[tuple[Fraction, ...], Fraction]:
    if c.sense == ">=":
        return tuple(-v for v in c.coeffs), -c.rhs
    return c.coeffs, c.rhs


def _equality_rref(equalities: Sequence[LinearConstraint], n: int):
    """RREF of the augmented equality rows, pivoting on coefficient columns."""
    rows = [list(c.coeffs) + [c.rhs] for c in equalities]
    red, pivots = hull.rref(rows) if rows else ([], [])
    red = [r for r in red if any(v != 0 for v in r[:n])]
    pivots = pivots[: len(red)]
    return red, pivots


def _reduce_mod_equalities(coeffs, rhs, red, pivots):
    coeffs = list(coeffs)
    rhs = Fraction(rhs)
    for row, pc in zip(red, pivots):
        f = coeffs[pc]
        if f != 0:
            coeffs = [a - f * b for a, b in zip(coeffs, row[:-1])]
            rhs -= f * row[-1]
    return coeffs, rhs


def normalized_key(sys: ConstraintSystem):
    """Canonical comparable form of a system.

    Equalities become their primitive RREF rows; inequalities are oriented
    as <=, reduced modulo the equalities (so representations that differ by
    multiples of the affine hull collapse), scaled to primitive integers and
    deduplicated.  Two systems with equal keys describe the same polyhedron
    boundary structure constraint-by-constraint.
    """
    red, pivots = _equality_rref(sys.equalities, sys.n)
    eq_rows = set()
    for row in red:
        prim = hull.primitive(row)
        lead = next((v for v in prim[:-1] if v != 0), 1)
        if lead < 0:
            prim = tuple(-v for v in prim)
        eq_rows.add(prim)
    ineq_rows = set()
    for c in sys.inequalities:
        coeffs, rhs = _leq_row(c)
        coeffs, rhs = _reduce_mod_equalities(coeffs, rhs, red, pivots)
        ineq_rows.add(hull.primitive(list(coeffs) + [rhs]))
    return frozenset(eq_rows), frozenset(ineq_rows)


def systems_equal(a: ConstraintSystem, b: ConstraintSystem) -> bool:
    """Same ambient dimension and same canonical constraint sets."""
    return a.n == b.n and normalized_key(a) == normalized_key(b)


def _beautify_facet(coeffs, rhs, red, pivots, n: int):
    """Pick a canonical pretty representative of a facet inequality.

    A facet row is only determined modulo the affine-hull equalities.  With
    a single equality the whole line of representatives is scanned at the
    shifts that zero some coefficient, preferring small support, then pure
    0/1 coefficients, then nonnegative coefficients.  With zero or several
    equalities the reduced form is kept as is.
    """
    coeffs, rhs = _reduce_mod_equalities(coeffs, rhs, red, pivots)
    if len(red) != 1:
        return hull.primitive(list(coeffs) + [rhs])
    g, gr = red[0][:-1], red[0][-1]
    shifts = {Fraction(0)}
    for j in range(n):
        if g[j] != 0:
            shifts.add(Fraction(-coeffs[j]) / g[j])
    best = None
    for t in sorted(shifts):
        cand = [a + t * b for a, b in zip(coeffs, g)] + [rhs + t * gr]
        prim = hull.primitive(cand)
        body = prim[:-1]
        support = sum(1 for v in body if v != 0)
        zero_one = 0 if set(body) <= {0, 1} else 1
        nonneg = 0 if min(body) >= 0 else 1
        score = (support, zero_one, nonneg, prim)
        if best is None or score < best[0]:
            best = (score, prim)
    return best[1]


# ----------------------------------------------------- closure partitions

def parallel_closures(m: Matroid) -> list[int]:
    """Partition of E into maximal classes of pairwise parallel elements."""
    if m.loops():
        raise LoopPresentError("parallel closures need a loopless matroid")
    return _pair_classes(m, lambda e, f: m.rank((1 << e) | (1 << f)) == 1)


def coparallel_closures(m: Matroid) -> list[int]:
    """Series classes: parallel closures of the dual."""
    if m.coloops():
        raise ColoopPresentError("coparallel closures need a coloop-free matroid")
    return _pair_classes(m, lambda e, f: m.corank((1 << e) | (1 << f)) == 1)


def _pair_classes(m: Matroid, related) -> list[int]:
    parent = list(range(m.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in range(m.n):
        for f in range(e + 1, m.n):
            if related(e, f):
                ra, rb = find(e), find(f)
                if ra != rb:
                    parent[ra] = rb
    groups: dict[int, int] = {}
    for e in range(m.n):
        r = find(e)
        groups[r] = groups.get(r, 0) | (1 << e)
    return sorted(groups.values(), key=lambda g: g & -g)


# ------------------------------------------------------- the three systems

def facet_system(m: Matroid, cap: Optional[int] = None) -> ConstraintSystem:
    """Compact description of the bases polytope of ``m``.

    Preconditions: 2-connected, loopless, coloop-free, |E| >= 2.  Constraint
    order is the separation order: the cardinality equality, then parallel
    bounds, coparallel bounds and locked bounds, each group canonical.

    The system always has the polytope as its solution set.  It is the
    irredundant facet list whenever every parallel and coparallel closure is
    a singleton; a nontrivial closure interacting with a locked subset can
    leave an element bound implied by the rest (run ``minimize_system`` or
    compare with ``brute_force_facets`` to expose such cases).
    """
    cached = m._memo.get("facet_system")
    if cached is not None:
        return cached
    n = m.n
    if n < 2:
        raise GroundSetSizeError("the facet description needs |E| >= 2")
    if m.loops():
        raise LoopPresentError("the facet description needs a loopless matroid")
    if m.coloops():
        raise ColoopPresentError("the facet description needs a coloop-free matroid")
    if not is_2connected(m, cap):
        raise NotTwoConnectedError("the facet description needs a 2-connected matroid")

    full = full_mask(n)
    eq = subset_constraint(n, full, m.full_rank, "=", "cardinality")
    ineqs: list[LinearConstraint] = []
    for p in parallel_closures(m):
        if p == full:
            continue
        kind = "upper" if p.bit_count() == 1 else "parallel"
        ineqs.append(subset_constraint(n, p, 1, "<=", kind))
    for s in coparallel_closures(m):
        if s == full:
            ineqs.extend(subset_constraint(n, 1 << e, 0, ">=", "nonneg")
                         for e in range(n))
            continue
        if s.bit_count() == 1:
            ineqs.append(subset_constraint(n, s, 0, ">=", "nonneg"))
        else:
            ineqs.append(subset_constraint(n, s, s.bit_count() - 1, ">=",
                                           "coparallel"))
    for cert in enumerate_locked(m, cap).certificates:
        ineqs.append(subset_constraint(n, cert.subset, cert.rank, "<=", "locked"))

    # A parallel bound and a coparallel bound can state the same halfspace
    # when the classes are complementary (x(P) <= 1 is x(E-P) >= r-1 on the
    # cardinality hyperplane); keep one representative per halfspace so the
    # description really is minimal.
    red, pivots = _equality_rref((eq,), n)
    seen: set = set()
    unique: list[LinearConstraint] = []
    for c in ineqs:
        coeffs, rhs = _leq_row(c)
        coeffs, rhs = _reduce_mod_equalities(coeffs, rhs, red, pivots)
        key = hull.primitive(list(coeffs) + [rhs])
        if key in seen:
            continue
        seen.add(key)
        unique.append(c)

    sys = ConstraintSystem(n, (eq,), tuple(unique))
    m._memo["facet_system"] = sys
    return sys


def full_rank_system(m: Matroid, cap: Optional[int] = None) -> ConstraintSystem:
    """The exhaustive description of the independence polytope:
    x(e) >= 0 for every element and x(A) <= r(A) for every nonempty subset.

    2^n constraints; this is the reference oracle the compact systems are
    verified against.
    """
    limit = DEFAULT_POLY_CAP if cap is None else cap
    if m.n > limit:
        raise CapExceededError(f"the full rank system needs |E| <= {limit}")
    n = m.n
    ineqs = [subset_constraint(n, 1 << e, 0, ">=", "nonneg") for e in range(n)]
    for a in range(1, 1 << n):
        ineqs.append(subset_constraint(n, a, m.rank(a), "<=", "rank"))
    return ConstraintSystem(n, (), tuple(ineqs))


def independence_facet_system(m: Matroid, cap: Optional[int] = None) -> ConstraintSystem:
    """Irredundant description of the independence polytope: nonnegativity
    plus x(A) <= r(A) for the closed and 2-connected subsets A only."""
    limit = DEFAULT_POLY_CAP if cap is None else cap
    if m.n > limit:
        raise CapExceededError(f"facet filtering needs |E| <= {limit}")
    n = m.n
    ineqs = [subset_constraint(n, 1 << e, 0, ">=", "nonneg") for e in range(n)]
    for a in range(1, 1 << n):
        if not m.is_closed(a):
            continue
        if _separation_within(m.rank, a) is not None:
            continue
        kind = "upper" if a.bit_count() == 1 else "rank"
        ineqs.append(subset_constraint(n, a, m.rank(a), "<=", kind))
    return ConstraintSystem(n, (), tuple(ineqs))


# ------------------------------------------------------------- separation

def separate(m: Matroid, point: Sequence[Fraction],
             cap: Optional[int] = None) -> Optional[LinearConstraint]:
    """First constraint of the facet description violated by ``point``,
    or None when the point lies in the bases polytope.

    Checks the cardinality equality first, then parallel, coparallel and
    locked bounds in canonical order; one evaluation per constraint, so the
    work is |E| + number of closures + number of locked subsets + 1
    evaluations in the worst case.
    """
    sys = facet_system(m, cap)
    if len(point) != sys.n:
        raise DimensionMismatchError(
            f"point has {len(point)} coordinates, ground set has {sys.n}"
        )
    pt = tuple(Fraction(x) for x in point)
    for c in sys.all_constraints():
        if not c.satisfied_by(pt):
            return c
    return None


# ------------------------------------------------------ vertex enumeration

_vertex_cache: dict[ConstraintSystem, tuple[RationalPoint, ...]] = {}


def enumerate_vertices(sys: ConstraintSystem,
                       cap: Optional[int] = None) -> list[RationalPoint]:
    """All vertices (basic feasible solutions) of a bounded system.

    Every full-rank subset of n constraints treated as tight yields a
    candidate, candidates are solved exactly, filtered for feasibility and
    deduplicated; the scan over tight sets shares elimination work through
    a DFS over constraint prefixes.  Raises UnboundedSystemError when the
    recession cone of the constraints contains a direction.
    """
    cached = _vertex_cache.get(sys)
    if cached is not None:
        return list(cached)
    limit = DEFAULT_POLY_CAP if cap is None else cap
    n = sys.n
    if n > limit:
        raise CapExceededError(f"vertex enumeration needs n <= {limit}, got {n}")
    if n == 0:
        return []

    ineq_normals = []
    for c in sys.inequalities:
        coeffs, _ = _leq_row(c)
        ineq_normals.append(hull.primitive(coeffs))
    eq_normals = [hull.primitive(c.coeffs) for c in sys.equalities]
    if hull.recession_ray_exists(ineq_normals, eq_normals):
        raise UnboundedSystemError("system has an unbounded direction")

    def int_row(c: LinearConstraint):
        return hull.primitive(list(c.coeffs) + [c.rhs])

    # seed the echelon with the equalities (they are tight at every vertex)
    echelon: list[tuple[int, tuple[int, ...]]] = []  # (pivot col, row)

    def reduced(row):
        row = list(row)
        for pc, prow in echelon:
            if row[pc] != 0:
                f, g = row[pc], prow[pc]
                row = [a * g - b * f for a, b in zip(row, prow)]
        if all(v == 0 for v in row[:n]):
            return None
        row = hull.primitive(row)
        pc = next(c for c in range(n) if row[c] != 0)
        return pc, row

    for c in sys.equalities:
        hit = reduced(int_row(c))
        if hit is None:
            # dependent equality; an inconsistent one makes the system empty
            row = list(int_row(c))
            for pc, prow in echelon:
                if row[pc] != 0:
                    f, g = row[pc], prow[pc]
                    row = [a * g - b * f for a, b in zip(row, prow)]
            if row[n] != 0:
                return []
            continue
        echelon.append(hit)

    ineq_rows = [int_row(c) for c in sys.inequalities]
    candidates: set[tuple[tuple[int, ...], int]] = set()

    def solve_current():
        # rows were each reduced by all earlier pivots, so solve in reverse
        sol = [Fraction(0)] * n
        for pc, row in reversed(echelon):
            acc = Fraction(row[n])
            for c2 in range(n):
                if c2 != pc and row[c2] != 0:
                    acc -= row[c2] * sol[c2]
            sol[pc] = acc / row[pc]
        den = 1
        for v in sol:
            den = lcm(den, v.denominator)
        candidates.add((tuple(int(v * den) for v in sol), den))

    def dfs(start: int):
        if len(echelon) == n:
            solve_current()
            return
        need = n - len(echelon)
        for j in range(start, len(ineq_rows) - need + 1):
            hit = reduced(ineq_rows[j])
            if hit is None:
                continue
            echelon.append(hit)
            dfs(j + 1)
            echelon.pop()

    dfs(0)

    feas_rows = []
    for c in sys.inequalities:
        coeffs, rhs = _leq_row(c)
        feas_rows.append((hull.primitive(list(coeffs) + [rhs]), "<="))
    for c in sys.equalities:
        feas_rows.append((hull.primitive(list(c.coeffs) + [c.rhs]), "="))

    verts = []
    for nums, den in candidates:
        ok = True
        for row, sense in feas_rows:
            lhs = sum(a * b for a, b in zip(row[:n], nums))
            rhs = row[n] * den
            if sense == "<=" and lhs > rhs:
                ok = False
                break
            if sense == "=" and lhs != rhs:
                ok = False
                break
        if ok:
            verts.append(tuple(Fraction(v, den) for v in nums))
    verts.sort()
    _vertex_cache[sys] = tuple(verts)
    return verts


def bases_polytope_vertices(m: Matroid, cap: Optional[int] = None) -> list[RationalPoint]:
    """Vertices of the facet description of ``m`` (cached per matroid)."""
    cached = m._memo.get("bp_vertices")
    if cached is None:
        cached = enumerate_vertices(facet_system(m), cap)
        m._memo["bp_vertices"] = cached
    return list(cached)


# ----------------------------------------------------------- hull oracle

def brute_force_facets(points: Sequence[Sequence],
                       cap: Optional[int] = None) -> ConstraintSystem:
    """Independent H-representation oracle for the convex hull of points.

    Returns the affine-hull equalities plus the unique irredundant facet
    inequalities, each scaled to primitive integers and, modulo the affine
    hull, shifted to the canonical pretty representative (small support
    first, 0/1 coefficients preferred).  Exact arithmetic throughout.
    """
    limit = DEFAULT_POLY_CAP if cap is None else cap
    if not points:
        raise ValueError("need at least one point")
    n = len(points[0])
    if n > limit:
        raise CapExceededError(f"hull computation needs dimension <= {limit}")
    if len(points) > (1 << limit):
        raise CapExceededError("too many points for the polyhedral cap")

    equalities, facets = hull.hull_h_representation(points)
    eq_cons = []
    for coeffs, rhs in equalities:
        support = sum(1 << e for e, v in enumerate(coeffs) if v != 0)
        eq_cons.append(LinearConstraint(
            tuple(Fraction(v) for v in coeffs), Fraction(rhs), "=", "affine", support))

    eq_rows = [list(map(Fraction, coeffs)) + [Fraction(rhs)]
               for coeffs, rhs in equalities]
    red, pivots = hull.rref(eq_rows) if eq_rows else ([], [])
    red = [r for r in red if any(v != 0 for v in r[:n])]
    pivots = pivots[: len(red)]

    ineq_cons = []
    for coeffs, rhs in facets:
        pretty = _beautify_facet(list(map(Fraction, coeffs)), Fraction(rhs),
                                 red, pivots, n)
        body, prhs = pretty[:-1], pretty[-1]
        support = sum(1 << e for e, v in enumerate(body) if v != 0)
        ineq_cons.append(LinearConstraint(
            tuple(Fraction(v) for v in body), Fraction(prhs), "<=", "hull", support))
    ineq_cons.sort(key=lambda c: (c.coeffs, c.rhs))
    return ConstraintSystem(n, tuple(eq_cons), tuple(ineq_cons))


# ------------------------------------------------------------ facet tests

def _basis_vectors(m: Matroid, cap: Optional[int]) -> list[tuple[int, ...]]:
    return [tuple((b >> e) & 1 for e in range(m.n)) for b in m.bases(cap)]


def polytope_dimension(m: Matroid, cap: Optional[int] = None) -> int:
    """Affine dimension of the bases polytope, computed from the data."""
    vecs = _basis_vectors(m, cap)
    p0 = vecs[0]
    return hull.int_rank([[a - b for a, b in zip(v, p0)] for v in vecs[1:]])


def is_facet(m: Matroid, c: LinearConstraint, cap: Optional[int] = None) -> bool:
    """Is the constraint facet-defining for the bases polytope?

    The constraint must be valid (no basis may violate it).  It is a facet
    iff the bases tight for it span an affine space of dimension one less
    than the polytope itself.
    """
    vecs = _basis_vectors(m, cap)
    tight = []
    for v in vecs:
        if not c.satisfied_by([Fraction(x) for x in v]):
            raise InvalidConstraintError(
                "constraint is violated by a basis; not valid for the polytope"
            )
        if c.tight_at([Fraction(x) for x in v]):
            tight.append(v)
    dim_p = polytope_dimension(m, cap)
    if not tight:
        return False
    p0 = tight[0]
    dim_tight = hull.int_rank([[a - b for a, b in zip(v, p0)] for v in tight[1:]])
    return dim_tight == dim_p - 1


def minimize_system(m: Matroid, sys: ConstraintSystem,
                    cap: Optional[int] = None) -> ConstraintSystem:
    """Drop non-facet inequalities and keep one representative per facet.

    Inequalities are grouped by their tight-basis sets; a group survives iff
    that tight set spans a facet, and only the first constraint of each
    surviving group (in the system's order) is kept.  Equalities are
    deduplicated.  Raises InvalidConstraintError if anything is violated by
    some basis.
    """
    vecs = _basis_vectors(m, cap)
    pts = [tuple(Fraction(x) for x in v) for v in vecs]
    dim_p = polytope_dimension(m, cap)

    eqs: list[LinearConstraint] = []
    seen_eq = set()
    for c in sys.equalities:
        if any(not c.satisfied_by(p) for p in pts):
            raise InvalidConstraintError("equality violated by a basis")
        key = hull.primitive(list(c.coeffs) + [c.rhs])
        if key not in seen_eq:
            seen_eq.add(key)
            eqs.append(c)

    kept: list[LinearConstraint] = []
    seen_tight: set[frozenset[int]] = set()
    for c in sys.inequalities:
        tight = []
        for v, p in zip(vecs, pts):
            if not c.satisfied_by(p):
                raise InvalidConstraintError(
                    "inequality violated by a basis; not valid for the polytope"
                )
            if c.tight_at(p):
                tight.append(v)
        key = frozenset(sum(x << e for e, x in enumerate(v)) for v in tight)
        if key in seen_tight:
            continue
        if not tight:
            continue
        p0 = tight[0]
        dim_tight = hull.int_rank([[a - b for a, b in zip(v, p0)]
                                   for v in tight[1:]])
        if dim_tight != dim_p - 1:
            continue
        seen_tight.add(key)
        kept.append(c)
    return ConstraintSystem(sys.n, tuple(eqs), tuple(kept))
