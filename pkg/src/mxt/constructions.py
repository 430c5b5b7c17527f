"""Matroid builders, the named catalog, isomorphism and minor testing.

The catalog's rank-3 six-element matroids (the whirl, Q6, P6) are built by
relaxing circuit-hyperplanes of the K4 cycle matroid one at a time rather
than from hard-coded basis lists; the chain is self-checking because
relaxing all four triangles must land exactly on U(3,6).

The 2-sum follows the standard circuit construction: circuits avoiding the
basepoints survive on each side, and circuits through both basepoints glue
into cross circuits.  The result is materialized as a
:class:`~mxt.core.CircuitsMatroid` and sanity-checked by the rank identity
r = r_a + r_b - 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import (
    BasisMatroid,
    CircuitsMatroid,
    DirectSumMatroid,
    DualMatroid,
    GraphicMatroid,
    Matroid,
    ParallelExtensionMatroid,
    UniformMatroid,
    elements_of,
    full_mask,
    iter_bits,
    mask_of,
)
from .errors import (
    BasepointError,
    CapExceededError,
    ColoopBasepointError,
    LoopBasepointError,
    NotCircuitHyperplaneError,
    UnknownCatalogNameError,
    ValidationError,
)

DEFAULT_ISO_CAP = 10

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def direct_sum(*parts: Matroid, name: Optional[str] = None,
               cap: Optional[int] = None) -> DirectSumMatroid:
    """Direct sum; parts occupy consecutive index ranges left to right."""
    return DirectSumMatroid(list(parts), name=name,
                            cap=cap if cap is not None else 20)


def two_sum(a: Matroid, pa: int, b: Matroid, pb: int,
            name: Optional[str] = None, cap: Optional[int] = None) -> CircuitsMatroid:
    """2-sum of ``a`` and ``b`` glued along basepoints ``pa`` and ``pb``.

    Elements are re-indexed with a's elements (minus pa) first.  Basepoints
    must be neither loops nor coloops and both sides need at least three
    elements.
    """
    for m, p, side in ((a, pa, "left"), (b, pb, "right")):
        if m.n < 3:
            raise BasepointError(f"{side} side of a 2-sum needs >= 3 elements")
        if p < 0 or p >= m.n:
            raise BasepointError(f"{side} basepoint {p} outside 0..{m.n - 1}")
        bit = 1 << p
        if m.rank(bit) == 0:
            raise LoopBasepointError(f"{side} basepoint {p} is a loop")
        if m.rank(full_mask(m.n) ^ bit) < m.full_rank:
            raise ColoopBasepointError(f"{side} basepoint {p} is a coloop")

    amap = {e: i for i, e in enumerate(x for x in range(a.n) if x != pa)}
    bmap = {e: len(amap) + i for i, e in enumerate(x for x in range(b.n) if x != pb)}
    n = len(amap) + len(bmap)

    def relabel(c: int, table: dict[int, int]) -> int:
        return mask_of(table[e] for e in iter_bits(c))

    pa_bit, pb_bit = 1 << pa, 1 << pb
    circuits: list[int] = []
    a_through, b_through = [], []
    for c in a.circuits(cap):
        if c & pa_bit:
            a_through.append(relabel(c ^ pa_bit, amap))
        else:
            circuits.append(relabel(c, amap))
    for c in b.circuits(cap):
        if c & pb_bit:
            b_through.append(relabel(c ^ pb_bit, bmap))
        else:
            circuits.append(relabel(c, bmap))
    circuits.extend(ca | cb for ca in a_through for cb in b_through)

    result = CircuitsMatroid(n, circuits, name=name,
                             cap=cap if cap is not None else 20)
    assert result.full_rank == a.full_rank + b.full_rank - 1
    result._memo["two_sum_info"] = (a, pa, b, pb)
    return result


def parallel_extension(m: Matroid, e: int,
                       name: Optional[str] = None) -> Matroid:
    """Add a new element (index n) parallel to ``e``; ``e`` must not be a loop."""
    if e < 0 or e >= m.n:
        raise BasepointError(f"element {e} outside 0..{m.n - 1}")
    if m.rank(1 << e) == 0:
        raise LoopBasepointError(f"cannot extend in parallel at loop {e}")
    return ParallelExtensionMatroid(m, e, name=name)


def series_extension(m: Matroid, e: int,
                     name: Optional[str] = None) -> Matroid:
    """Add a new element (index n) in series with ``e``; ``e`` must not be a coloop.

    Implemented as the dual of a parallel extension of the dual.
    """
    if e < 0 or e >= m.n:
        raise BasepointError(f"element {e} outside 0..{m.n - 1}")
    if m.rank(full_mask(m.n) ^ (1 << e)) < m.full_rank:
        raise ColoopBasepointError(f"cannot extend in series at coloop {e}")
    return DualMatroid(ParallelExtensionMatroid(DualMatroid(m), e), name=name)


def relax_circuit_hyperplane(m: Matroid, h: int,
                             name: Optional[str] = None,
                             cap: Optional[int] = None) -> BasisMatroid:
    """Turn a circuit-hyperplane ``h`` into a basis; all old bases survive."""
    size = h.bit_count()
    rh = m.rank(h)
    if not (rh == size - 1 == m.full_rank - 1 and m.is_closed(h)
            and all(m.rank(h ^ (1 << e)) == size - 1 for e in iter_bits(h))):
        raise NotCircuitHyperplaneError(
            f"{elements_of(h)} is not both a circuit and a hyperplane"
        )
    return BasisMatroid(m.n, m.bases(cap) + [h], name=name)


def circuit_hyperplanes(m: Matroid, cap: Optional[int] = None) -> list[int]:
    """All sets that are simultaneously circuits and hyperplanes, ascending."""
    r = m.full_rank
    return [c for c in m.circuits(cap)
            if m.rank(c) == r - 1 and m.is_closed(c)]


_UNIFORM_RE = re.compile(r"^U\((\d+),(\d+)\)$")
_WHEEL_RE = re.compile(r"^wheel\((\d+)\)$")

_relax_chain_cache: list[Matroid] = []


def _relaxation_chain() -> list[Matroid]:
    """MK4 and its successive relaxations W3, Q6, P6, ending at U(3,6).

    Relaxes the canonically smallest circuit-hyperplane at each step and
    checks the endpoint is exactly the uniform matroid, which pins the whole
    chain.
    """
    if _relax_chain_cache:
        return _relax_chain_cache
    names = ["MK4", "W3", "Q6", "P6"]
    chain: list[Matroid] = [GraphicMatroid(K4_EDGES, name="MK4")]
    for name in names[1:] + ["U(3,6)-relaxed"]:
        prev = chain[-1]
        hs = circuit_hyperplanes(prev)
        chain.append(relax_circuit_hyperplane(prev, hs[0], name=name))
    endpoint = set(chain[-1].bases())
    expected = {mask_of(c) for c in combinations(range(6), 3)}
    if endpoint != expected:
        raise ValidationError("relaxation chain did not terminate at U(3,6)")
    _relax_chain_cache.extend(chain)
    return _relax_chain_cache


def catalog(cat_name: str, cap: Optional[int] = None) -> Matroid:
    """Named matroids: U(r,n), MK4, W3, Q6, P6, U24+2U24, wheel(k)."""
    mu = _UNIFORM_RE.match(cat_name)
    if mu:
        r, n = int(mu.group(1)), int(mu.group(2))
        if r > n:
            raise UnknownCatalogNameError(f"U({r},{n}) needs r <= n")
        return UniformMatroid(r, n)
    mw = _WHEEL_RE.match(cat_name)
    if mw:
        k = int(mw.group(1))
        if k < 3:
            raise UnknownCatalogNameError("wheel(k) needs k >= 3")
        spokes = [(0, i) for i in range(1, k + 1)]
        rim = [(i, i % k + 1) for i in range(1, k + 1)]
        return GraphicMatroid(spokes + rim, name=cat_name, cap=cap if cap else 20)
    if cat_name in ("MK4", "W3", "Q6", "P6"):
        chain = _relaxation_chain()
        return chain[("MK4", "W3", "Q6", "P6").index(cat_name)]
    if cat_name == "U24+2U24":
        return two_sum(UniformMatroid(2, 4), 0, UniformMatroid(2, 4), 0,
                       name=cat_name)
    raise UnknownCatalogNameError(f"unknown catalog name {cat_name!r}")


CATALOG_NAMES = ("MK4", "W3", "Q6", "P6", "U24+2U24")


# ------------------------------------------------------------ isomorphism

@dataclass(frozen=True)
class IsoWitness:
    """A rank-preserving bijection; mapping[i] is the image of element i."""

    mapping: tuple[int, ...]


def are_isomorphic(a: Matroid, b: Matroid,
                   cap: Optional[int] = None) -> Optional[IsoWitness]:
    """Search for a basis-set preserving bijection, or None.

    Prunes by element count, rank, basis count, per-element basis degrees
    and pair degrees before backtracking over degree-compatible images.
    """
    limit = DEFAULT_ISO_CAP if cap is None else cap
    if a.n > limit or b.n > limit:
        raise CapExceededError(f"isomorphism search needs |E| <= {limit}")
    if a.n != b.n or a.full_rank != b.full_rank:
        return None
    ba, bb = a.bases(), b.bases()
    if len(ba) != len(bb):
        return None
    n = a.n
    mapping = _basis_family_isomorphism(n, ba, bb)
    if mapping is None:
        return None
    return IsoWitness(tuple(mapping))


def _degree_profiles(n: int, bases: list[int]):
    deg = [0] * n
    pair = [[0] * n for _ in range(n)]
    for bmask in bases:
        elems = elements_of(bmask)
        for i in elems:
            deg[i] += 1
        for i, j in combinations(elems, 2):
            pair[i][j] += 1
            pair[j][i] += 1
    return deg, pair


def _basis_family_isomorphism(n: int, ba: list[int], bb: list[int]):
    """Backtracking bijection sending the first basis family onto the second."""
    da, pa = _degree_profiles(n, ba)
    db, pb = _degree_profiles(n, bb)
    if sorted(da) != sorted(db):
        return None
    target = set(bb)
    order = sorted(range(n), key=lambda e: (da[e], e))
    image = [-1] * n
    used = [False] * n

    def place(pos: int) -> bool:
        if pos == n:
            return {mask_of(image[e] for e in iter_bits(bm)) for bm in ba} == target
        e = order[pos]
        for f in range(n):
            if used[f] or da[e] != db[f]:
                continue
            if any(pa[e][order[q]] != pb[f][image[order[q]]]
                   for q in range(pos)):
                continue
            image[e] = f
            used[f] = True
            if place(pos + 1):
                return True
            image[e] = -1
            used[f] = False
        return False

    return image if place(0) else None


# ------------------------------------------------------------ minor tests

def has_minor(m: Matroid, target: Matroid, cap: Optional[int] = None) -> bool:
    """True iff deleting/contracting disjoint sets of ``m`` can produce
    a matroid isomorphic to ``target``.

    Exhaustive over contraction sets (restricted to independent ones, which
    loses no minors) with rank and basis-count pruning; repeated basis
    families are isomorphism-tested only once.
    """
    limit = 20 if cap is None else cap
    if m.n > limit:
        raise CapExceededError(f"minor search needs |E| <= {limit}, got {m.n}")
    nt, rt = target.n, target.full_rank
    if m.n < nt or m.full_rank < rt:
        return False
    table = m.rank_table(limit)
    tb = target.bases()
    t_count = len(tb)
    t_deg = sorted(_degree_profiles(nt, tb)[0])
    full = full_mask(m.n)
    seen: set[frozenset[int]] = set()
    removed = m.n - nt

    for csize in range(0, removed + 1):
        for ccombo in combinations(range(m.n), csize):
            cmask = mask_of(ccombo)
            if table[cmask] != csize:  # only independent contractions needed
                continue
            rest = elements_of(full ^ cmask)
            for dcombo in combinations(rest, removed - csize):
                dmask = mask_of(dcombo)
                if table[full ^ dmask] - csize != rt:
                    continue
                keep = elements_of(full ^ cmask ^ dmask)
                minor_bases = []
                for combo in combinations(keep, rt):
                    sub = mask_of(combo)
                    if table[sub | cmask] - csize == rt:
                        minor_bases.append(
                            mask_of(keep.index(e) for e in combo))
                if len(minor_bases) != t_count:
                    continue
                fam = frozenset(minor_bases)
                if fam in seen:
                    continue
                seen.add(fam)
                if sorted(_degree_profiles(nt, minor_bases)[0]) != t_deg:
                    continue
                if _basis_family_isomorphism(nt, minor_bases, tb) is not None:
                    return True
    return False
