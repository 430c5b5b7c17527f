"""Locked-subset recognition and enumeration, plus uniform-matroid testing.

A subset L of a 2-connected matroid M is locked when the restriction M|L is
2-connected, the restriction of the dual to the complement M*|(E-L) is
2-connected, and min(r(L), r*(E-L)) >= 2.  Locked subsets carry the
nontrivial facets of the bases polytope, which is why everything downstream
cares about them.

For a separable matroid the locked subsets are, by definition here, the
union of the locked subsets of its 2-connected components; certificates are
therefore component-relative: ``corank_complement`` and the connectivity
clauses are evaluated inside the component containing the subset, not on the
whole ground set.

Enumeration scans subsets in increasing size then mask order, testing the
two rank clauses first (cheap) and the two connectivity clauses after.  This
is exponential and capped; no output-polynomial algorithm is attempted.

The k-locked oracle uses the concrete threshold  count <= |E| ** (k+1):
asymptotic "polynomially many of degree k" is meaningless for one finite
matroid, and the counting bound above is the convention this library fixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .connectivity import (
    _separation_within,
    components,
    is_2connected,
)
from .core import Matroid, full_mask, mask_of
from .errors import CapExceededError, NotTwoConnectedError

DEFAULT_CAP = 20


@dataclass(frozen=True)
class LockedCertificate:
    """A locked subset with the numbers that witness the definition.

    ``rank`` is r(L); ``corank_complement`` is the dual rank of the
    complement of L inside its 2-connected component; ``component`` indexes
    into ``connectivity.components`` of the matroid the certificate was
    produced for.
    """

    subset: int
    rank: int
    corank_complement: int
    component: int


@dataclass(frozen=True)
class LockedReport:
    count: int
    certificates: tuple[LockedCertificate, ...]
    truncated: bool


def _check_cap(n: int, cap: Optional[int]) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if n > limit:
        raise CapExceededError(f"locked enumeration needs |E| <= {limit}, got {n}")


def _locked_in_component(m: Matroid, part: int, l: int) -> Optional[tuple[int, int]]:
    """(r(L), r*(part-L)) if ``l`` is locked inside the component ``part``.

    Rank bookkeeping stays in the parent matroid: the restriction of m to
    the component has the same rank function on subsets of the component,
    and the dual rank within the component is |Y| - r(part) + r(part - Y).
    """
    comp = part ^ l
    if l == 0 or comp == 0:
        return None
    r_l = m.rank(l)
    if r_l < 2:
        return None
    r_part = m.rank(part)

    def corank_in_part(y: int) -> int:
        return y.bit_count() - r_part + m.rank(part ^ y)

    cr_comp = corank_in_part(comp)
    if cr_comp < 2:
        return None
    if _separation_within(m.rank, l) is not None:
        return None
    if _separation_within(corank_in_part, comp) is not None:
        return None
    # locked subsets are closed on both sides; cheap consistency check
    rest = part ^ l
    assert all(m.rank(l | (1 << e)) > r_l for e in _bits(rest)), \
        "locked subset is not closed"
    assert all(corank_in_part(comp | (1 << e)) > cr_comp for e in _bits(l)), \
        "complement of locked subset is not closed in the dual"
    return r_l, cr_comp


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_locked(m: Matroid, l: int, cap: Optional[int] = None) -> bool:
    """Definition test for one subset; requires ``m`` itself 2-connected."""
    _check_cap(m.n, cap)
    if not is_2connected(m, cap):
        raise NotTwoConnectedError(
            "locked subsets are defined on 2-connected matroids; "
            "decompose into components first"
        )
    m.rank(l)  # validates the mask
    return _locked_in_component(m, full_mask(m.n), l) is not None


def enumerate_locked(m: Matroid, cap: Optional[int] = None,
                     limit: Optional[int] = None) -> LockedReport:
    """All locked subsets of ``m``, componentwise, in (size, mask) order.

    With ``limit`` set, enumeration stops as soon as more than ``limit``
    certificates exist and the report comes back truncated.
    """
    _check_cap(m.n, cap)
    key = ("locked", limit)
    cached = m._memo.get(key)
    if cached is not None:
        return cached
    full = m._memo.get(("locked", None))
    if full is not None:
        # derive a truncated view instead of re-scanning
        if limit is None or full.count <= limit:
            report = full
        else:
            report = LockedReport(limit + 1, full.certificates[: limit + 1], True)
        m._memo[key] = report
        return report

    certs: list[LockedCertificate] = []
    truncated = False
    parts = components(m, cap)
    for idx, part in enumerate(parts):
        size = part.bit_count()
        elems = list(_bits(part))
        for k in range(1, size):
            for combo in combinations(elems, k):
                l = mask_of(combo)
                hit = _locked_in_component(m, part, l)
                if hit is None:
                    continue
                certs.append(LockedCertificate(l, hit[0], hit[1], idx))
                if limit is not None and len(certs) > limit:
                    truncated = True
                    break
            if truncated:
                break
        if truncated:
            break
    certs.sort(key=lambda c: (c.subset.bit_count(), c.subset))
    report = LockedReport(len(certs), tuple(certs), truncated)
    m._memo[key] = report
    return report


def count_locked(m: Matroid, cap: Optional[int] = None) -> int:
    """Number of locked subsets of ``m``."""
    return enumerate_locked(m, cap).count


def k_locked_oracle(m: Matroid, k: int,
                    cap: Optional[int] = None) -> tuple[bool, LockedReport]:
    """Does ``m`` have at most |E|**(k+1) locked subsets?

    Returns (answer, report); the report lists all locked subsets when the
    answer is yes and is truncated otherwise.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    threshold = m.n ** (k + 1)
    report = enumerate_locked(m, cap, limit=threshold)
    return not report.truncated, report


def is_uniform(m: Matroid, cap: Optional[int] = None) -> bool:
    """True iff every subset of size r(E) is a basis.

    2-connected matroids are answered through the locked-subset count;
    separable ones fall back to the definitional scan, which the locked
    count cannot decide (a direct sum of uniforms also has none).

    The locked count alone is not enough even when 2-connected: a parallel
    pair costs nothing in locked subsets (its rank is 1, below the minimum
    the definition demands) yet already rules uniformity out unless the
    whole matroid has rank 1, and dually for coparallel pairs.  Those
    degenerate classes are screened first; after the scre, zero locked
    subsets is equivalent to uniformity.
    """
    return _uniformity(m, cap)[0]


def uniformity_report(m: Matroid, cap: Optional[int] = None) -> tuple[bool, str]:
    """(is_uniform, path) where path is "locked-oracle" or "definitional"."""
    return _uniformity(m, cap)


def _uniformity(m: Matroid, cap: Optional[int]) -> tuple[bool, str]:
    _check_cap(m.n, cap)
    if m.n >= 2 and is_2connected(m, cap):
        r = m.full_rank
        if r == 1 or m.n - r == 1:
            # 2-connected with rank or corank 1: every element pairwise
            # parallel (or coparallel), which is uniform by itself
            return True, "locked-oracle"
        pairs = [(1 << e) | (1 << f)
                 for e in range(m.n) for f in range(e + 1, m.n)]
        if any(m.rank(p) == 1 for p in pairs):
            return False, "locked-oracle"
        if any(m.corank(p) == 1 for p in pairs):
            return False, "locked-oracle"
        return count_locked(m, cap) == 0, "locked-oracle"
    if m.n >= 2 and not is_2connected(m, cap):
        r = m.full_rank
        ok = all(m.rank(mask_of(c)) == r
                 for c in combinations(range(m.n), r))
        return ok, "definitional"
    return True, "definitional"  # zero or one element: always uniform
