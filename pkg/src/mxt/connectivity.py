"""2-connectivity (nonseparability) tests and 2-connected components.

A matroid is separable when the ground set splits into nonempty parts A, B
with r(A) + r(B) = r(E); it is 2-connected when no such split exists.  By
convention single-element matroids are 2-connected and the empty matroid is
not (these conventions make singleton bound constraints come out as facets
downstream).

Separation searches scan bipartitions in canonical order (masks containing
the smallest element, ascending), so results are deterministic.  Cost is
2^(|E|-1) rank queries, which is the accepted price for exactness at desk
scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import Matroid, elements_of, full_mask, iter_bits, submasks
from .errors import CapExceededError, EmptyGroundSetError, EmptySubsetError

DEFAULT_CAP = 20


@dataclass(frozen=True)
class Separation:
    """A 1-separation: nonempty disjoint parts covering E with additive rank."""

    part_a: int
    part_b: int

    def as_elements(self) -> tuple[list[int], list[int]]:
        return elements_of(self.part_a), elements_of(self.part_b)


def _check_cap(n: int, cap: Optional[int]) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if n > limit:
        raise CapExceededError(f"connectivity scan needs |E| <= {limit}, got {n}")


def _separation_within(rank: Callable[[int], int], ground: int) -> Optional[tuple[int, int]]:
    """First rank-additive bipartition of ``ground`` under ``rank``, or None.

    Scans parts containing the lowest element of ``ground`` in ascending mask
    order, so every unordered bipartition is visited exactly once.
    """
    if ground.bit_count() <= 1:
        return None
    anchor = ground & -ground
    rest = ground ^ anchor
    rg = rank(ground)
    for sub in submasks(rest):
        if sub == rest:
            break
        a = anchor | sub
        b = ground ^ a
        if rank(a) + rank(b) == rg:
            return a, b
    return None


def find_separation(m: Matroid, cap: Optional[int] = None) -> Optional[Separation]:
    """First 1-separation of ``m`` in canonical order, or None if 2-connected."""
    if m.n == 0:
        raise EmptyGroundSetError("separation is undefined on the empty matroid")
    _check_cap(m.n, cap)
    hit = _separation_within(m.rank, full_mask(m.n))
    return Separation(*hit) if hit else None


def is_2connected(m: Matroid, cap: Optional[int] = None) -> bool:
    """True iff ``m`` has no 1-separation (empty: False, singleton: True)."""
    if m.n == 0:
        return False
    return find_separation(m, cap) is None


def is_2connected_subset(m: Matroid, x: int, cap: Optional[int] = None) -> bool:
    """2-connectivity of the restriction of ``m`` to ``x``."""
    if x == 0:
        raise EmptySubsetError("2-connectivity of the empty subset is undefined")
    _check_cap(m.n, cap)
    if x & ~full_mask(m.n) or x < 0:
        m.rank(x)  # raises InvalidSubsetError
    return _separation_within(m.rank, x) is None


def components(m: Matroid, cap: Optional[int] = None) -> list[int]:
    """The 2-connected components of ``m`` as masks, ordered by least element.

    Components are the classes of "lies in a common circuit"; elements in no
    circuit (coloops) and loops are singleton components.  The matroid is the
    direct sum of its restrictions to the parts, and this is the finest such
    partition.
    """
    _check_cap(m.n, cap)
    parent = list(range(m.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c in m.circuits(cap):
        bits = list(iter_bits(c))
        for e in bits[1:]:
            ra, rb = find(bits[0]), find(e)
            if ra != rb:
                parent[ra] = rb

    groups: dict[int, int] = {}
    for e in range(m.n):
        root = find(e)
        groups[root] = groups.get(root, 0) | (1 << e)
    return sorted(groups.values(), key=lambda g: g & -g)
