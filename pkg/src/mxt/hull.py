"""Exact rational polyhedral geometry: affine hulls, cone rays, hull facets.

Everything here is integer / Fraction arithmetic; there is no floating point
anywhere because facet identity is a discrete question.

The workhorse is :func:`cone_rays`, a double description pass over a pointed
cone with the combinatorial adjacency test.  Facet enumeration of a point
set reduces to it through the classical route: project onto an affine basis
so the hull is full-dimensional, translate the centroid to the origin, and
enumerate the vertices of the polar by homogenizing it to a pointed cone.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

IntVec = tuple[int, ...]


def primitive(vec: Sequence) -> IntVec:
    """Scale a rational vector to coprime integers, preserving direction."""
    fracs = [Fraction(v) for v in vec]
    den = 1
    for f in fracs:
        den = lcm(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def int_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix, by elimination over Fractions."""
    work = [[Fraction(v) for v in row] for row in rows]
    if not work:
        return 0
    cols = len(work[0])
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][c] != 0:
                f = work[i][c] / prow[c]
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns, over Fractions."""
    work = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    if not work:
        return work, pivots
    cols = len(work[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        work[r] = [v / work[r][c] for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def nullspace(rows: Sequence[Sequence], cols: int) -> list[list[Fraction]]:
    """Basis of {v : rows @ v = 0} as Fraction vectors."""
    red, pivots = rref(rows)
    pivot_of_col = {c: i for i, c in enumerate(pivots)}
    free = [c for c in range(cols) if c not in pivot_of_col]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for c, i in pivot_of_col.items():
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    work = [row[:] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next(i for i in range(c, n) if work[i][c] != 0)
        work[c], work[piv] = work[piv], work[c]
        work[c] = [v / work[c][c] for v in work[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return [row[n:] for row in work]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def cone_rays(rows: Sequence[IntVec]) -> list[IntVec]:
    """Extreme rays of the pointed cone {z : row . z >= 0 for every row}.

    The rows must span the ambient space (otherwise the cone contains a line
    and has no extreme-ray description); raises ValueError if they do not.
    Double description: start from an invertible subsystem, then cut with
    the remaining constraints, generating new rays from adjacent
    plus/minus pairs.  Adjacency is the standard combinatorial test on
    tight-constraint sets, kept as bit masks.
    """
    rows = [tuple(r) for r in rows]
    dim = len(rows[0])

    # initial invertible subsystem, in input order
    ech: list[tuple[int, list[Fraction]]] = []
    init_idx: list[int] = []
    for i, row in enumerate(rows):
        vec = [Fraction(v) for v in row]
        for pc, prow in ech:
            if vec[pc] != 0:
                f = vec[pc] / prow[pc]
                vec = [a - f * b for a, b in zip(vec, prow)]
        pc = next((c for c in range(dim) if vec[c] != 0), None)
        if pc is None:
            continue
        ech.append((pc, vec))
        init_idx.append(i)
        if len(init_idx) == dim:
            break
    if len(init_idx) < dim:
        raise ValueError("constraint rows do not span the space (cone not pointed)")

    inv = _invert([[Fraction(rows[i][j]) for j in range(dim)] for i in init_idx])
    all_init = (1 << dim) - 1
    rays: list[IntVec] = []
    tight: list[int] = []
    for c in range(dim):
        rays.append(primitive([inv[r][c] for r in range(dim)]))
        tight.append(all_init ^ (1 << c))

    slot = dim
    rest = [i for i in range(len(rows)) if i not in set(init_idx)]
    for i in rest:
        row = rows[i]
        vals = [_dot(row, r) for r in rays]
        plus = [j for j, v in enumerate(vals) if v > 0]
        minus = [j for j, v in enumerate(vals) if v < 0]
        if not minus:
            for j, v in enumerate(vals):
                if v == 0:
                    tight[j] |= 1 << slot
            slot += 1
            continue
        new_rays: list[IntVec] = []
        new_tight: list[int] = []
        for j, v in enumerate(vals):
            if v > 0:
                new_rays.append(rays[j])
                new_tight.append(tight[j])
            elif v == 0:
                new_rays.append(rays[j])
                new_tight.append(tight[j] | (1 << slot))
        for p in plus:
            for mneg in minus:
                common = tight[p] & tight[mneg]
                adjacent = True
                for q in range(len(rays)):
                    if q != p and q != mneg and tight[q] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [vals[p] * rm - vals[mneg] * rp
                         for rp, rm in zip(rays[p], rays[mneg])]
                new_rays.append(primitive(combo))
                new_tight.append(common | (1 << slot))
        rays, tight = new_rays, new_tight
        slot += 1
    return rays


def hull_h_representation(
    points: Sequence[Sequence],
) -> tuple[list[tuple[IntVec, int]], list[tuple[IntVec, int]]]:
    """Exact H-representation of the convex hull of rational points.

    Returns (equalities, facets): the affine-hull equalities and the unique
    irredundant facet inequalities, both as primitive integer rows
    (coeffs, rhs) with facets oriented as coeffs . x <= rhs.  Input points
    need not be vertices; duplicates and interior points are harmless.
    """
    pts = [tuple(Fraction(v) for v in p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    n = len(pts[0])
    uniq = sorted(set(pts))
    p0 = uniq[0]

    diffs = [[a - b for a, b in zip(p, p0)] for p in uniq[1:]]
    _, pivots = rref(diffs) if diffs else ([], [])
    d = len(pivots)

    equalities: list[tuple[IntVec, int]] = []
    for v in nullspace(diffs, n) if diffs else [
        [Fraction(int(i == j)) for j in range(n)] for i in range(n)
    ]:
        rhs = sum(a * b for a, b in zip(v, p0))
        row = primitive(list(v) + [rhs])
        coeffs, r = row[:-1], row[-1]
        lead = next((c for c in coeffs if c != 0), 1)
        if lead < 0:
            coeffs, r = tuple(-c for c in coeffs), -r
        equalities.append((coeffs, r))
    equalities.sort()

    if d == 0:
        return equalities, []

    proj = [tuple(p[c] for c in pivots) for p in uniq]
    k = len(proj)
    centroid = tuple(sum(p[j] for p in proj) / k for j in range(d))

    cone_rows = []
    for q in set(proj):
        shifted = [q[j] - centroid[j] for j in range(d)]
        cone_rows.append(primitive([1] + [-s for s in shifted]))
    rays = cone_rays(cone_rows)

    facets: list[tuple[IntVec, int]] = []
    for ray in rays:
        t = ray[0]
        if t <= 0:
            raise AssertionError("polar of a bounded hull produced a ray at infinity")
        y = [Fraction(c, t) for c in ray[1:]]
        coeffs = [Fraction(0)] * n
        for j, col in enumerate(pivots):
            coeffs[col] = y[j]
        rhs = 1 + sum(a * b for a, b in zip(y, centroid))
        row = primitive(coeffs + [rhs])
        facets.append((row[:-1], row[-1]))
    facets.sort()
    return equalities, facets


def recession_ray_exists(ineq_rows: Sequence[IntVec],
                         eq_rows: Sequence[IntVec]) -> bool:
    """Does {d : ineq . d <= 0, eq . d = 0} contain a nonzero direction?

    This is exactly unboundedness of a nonempty polyhedron with those
    constraint normals.
    """
    stacked = [list(r) for r in ineq_rows] + [list(r) for r in eq_rows]
    if not stacked:
        return True
    dim = len(stacked[0])
    if dim == 0:
        return False
    if nullspace(stacked, dim):
        return True  # lineality direction
    cone = [tuple(-v for v in r) for r in ineq_rows]
    cone += [tuple(r) for r in eq_rows]
    cone += [tuple(-v for v in r) for r in eq_rows]
    return bool(cone_rays(cone))
