"""Matroid representations with exact rank oracles.

Elements of a matroid on n elements are the integers 0..n-1 and subsets are
plain ints used as bit masks (bit e set means element e is in the subset).
All rank arithmetic is exact; every representation memoizes rank queries so
repeated subset scans stay cheap.

Enumerative methods (bases, circuits, rank tables) are exponential by design
and guarded by a hard cap on the ground-set size: they fail fast with
:class:`~mxt.errors.CapExceededError` instead of running unbounded.

Returned subset lists are in canonical order, which is ascending integer
value of the mask unless documented otherwise.

Matroid objects are immutable after construction.  All methods are pure
functions of their inputs; internal caches are append-only dicts, so sharing
instances across threads is safe under CPython.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    CapExceededError,
    InvalidSubsetError,
    OverlappingSetsError,
    ValidationError,
)

SubsetMask = int

DEFAULT_GROUND_CAP = 20
DEFAULT_ENUM_CAP = 20


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int]) -> int:
    """Bit mask of an iterable of element indices."""
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    """Sorted element indices of a bit mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int):
    """Yield the element indices of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int):
    """Yield all submasks of ``mask`` in ascending integer order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def _check_enum_cap(n: int, cap: Optional[int], what: str) -> None:
    limit = DEFAULT_ENUM_CAP if cap is None else cap
    if n > limit:
        raise CapExceededError(
            f"{what} needs |E| <= {limit}, got {n} (raise the cap explicitly "
            "if you accept the exponential cost)"
        )


class Matroid:
    """A ground set 0..n-1 together with an exact rank oracle.

    Subclasses implement ``_rank_impl``; everything else (duality, closure,
    basis/circuit enumeration, minors) is derived here from rank alone.
    """

    def __init__(self, n: int, name: Optional[str] = None,
                 cap: int = DEFAULT_GROUND_CAP):
        if n < 0 or n > cap:
            raise CapExceededError(f"ground set size {n} outside 0..{cap}")
        self.n = n
        self.name = name
        self._rank_cache: dict[int, int] = {}
        self._full = full_mask(n)
        # scratch space for other modules to memoize derived data
        self._memo: dict = {}

    # ------------------------------------------------------------- rank

    def _rank_impl(self, x: int) -> int:
        raise NotImplementedError

    def rank(self, x: int) -> int:
        """Rank of the subset ``x``: size of a maximal independent subset."""
        if x < 0 or x & ~self._full:
            raise InvalidSubsetError(
                f"subset {bin(x)} has elements outside 0..{self.n - 1}"
            )
        r = self._rank_cache.get(x)
        if r is None:
            r = self._rank_impl(x)
            self._rank_cache[x] = r
        return r

    @property
    def full_rank(self) -> int:
        return self.rank(self._full)

    def corank(self, x: int) -> int:
        """Dual rank of ``x``: |x| - r(E) + r(E minus x)."""
        if x < 0 or x & ~self._full:
            raise InvalidSubsetError(
                f"subset {bin(x)} has elements outside 0..{self.n - 1}"
            )
        return x.bit_count() - self.full_rank + self.rank(self._full ^ x)

    def independent(self, x: int) -> bool:
        return self.rank(x) == x.bit_count()

    def rank_table(self, cap: Optional[int] = None) -> list[int]:
        """Ranks of all 2^n subsets, indexed by mask.  Cached."""
        table = self._memo.get("rank_table")
        if table is None:
            _check_enum_cap(self.n, cap, "rank table")
            table = [self.rank(m) for m in range(1 << self.n)]
            self._memo["rank_table"] = table
        return table

    # ------------------------------------------------- duality, closure

    def dual(self) -> "Matroid":
        return DualMatroid(self)

    def closure(self, x: int) -> int:
        """Smallest closed set containing ``x``."""
        rx = self.rank(x)
        out = x
        rest = self._full ^ x
        for e in iter_bits(rest):
            if self.rank(x | (1 << e)) == rx:
                out |= 1 << e
        return out

    def is_closed(self, x: int) -> bool:
        return self.closure(x) == x

    def loops(self) -> int:
        """Mask of rank-0 elements."""
        m = 0
        for e in range(self.n):
            if self.rank(1 << e) == 0:
                m |= 1 << e
        return m

    def coloops(self) -> int:
        """Mask of elements contained in every basis."""
        m = 0
        r = self.full_rank
        for e in range(self.n):
            if self.rank(self._full ^ (1 << e)) < r:
                m |= 1 << e
        return m

    # ------------------------------------------------------ enumeration

    def bases(self, cap: Optional[int] = None) -> list[int]:
        """All bases as masks, ascending."""
        cached = self._memo.get("bases")
        if cached is None:
            _check_enum_cap(self.n, cap, "basis enumeration")
            cached = sorted(self._bases_impl())
            self._memo["bases"] = cached
        return cached

    def _bases_impl(self) -> list[int]:
        r = self.full_rank
        out = []
        for combo in combinations(range(self.n), r):
            m = mask_of(combo)
            if self.rank(m) == r:
                out.append(m)
        return out

    def bases_tight(self, x: int, cap: Optional[int] = None) -> list[int]:
        """Bases B with |B & x| = rank(x), ascending."""
        rx = self.rank(x)
        return [b for b in self.bases(cap) if (b & x).bit_count() == rx]

    def circuits(self, cap: Optional[int] = None) -> list[int]:
        """All minimal dependent sets as masks, ascending by (size, mask)."""
        cached = self._memo.get("circuits")
        if cached is None:
            _check_enum_cap(self.n, cap, "circuit enumeration")
            found: list[int] = []
            for k in range(1, self.n + 1):
                for combo in combinations(range(self.n), k):
                    m = mask_of(combo)
                    if any(c & m == c for c in found):
                        continue
                    if self.rank(m) == k:
                        continue
                    if all(self.rank(m ^ (1 << e)) == k - 1
                           for e in iter_bits(m)):
                        found.append(m)
            cached = sorted(found, key=lambda c: (c.bit_count(), c))
            self._memo["circuits"] = cached
        return cached

    # ------------------------------------------------------------ minors

    def minor(self, delete: int, contract: int) -> "MinorMatroid":
        """Matroid on E minus (delete | contract); rank r(X|contract)-r(contract)."""
        if delete & contract:
            raise OverlappingSetsError(
                f"delete and contract overlap on {elements_of(delete & contract)}"
            )
        return MinorMatroid(self, delete, contract)

    def restrict(self, x: int) -> "MinorMatroid":
        """Restriction to ``x``, re-indexed; kept elements in ``parent_elements``."""
        if x < 0 or x & ~self._full:
            raise InvalidSubsetError("restriction outside the ground set")
        return MinorMatroid(self, self._full ^ x, 0)

    # --------------------------------------------------------------- misc

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<{type(self).__name__}{tag} n={self.n}>"


class UniformMatroid(Matroid):
    """U(r, n): every subset of at most r elements is independent."""

    def __init__(self, r: int, n: int, name: Optional[str] = None,
                 cap: int = DEFAULT_GROUND_CAP):
        if not 0 <= r <= n:
            raise ValidationError(f"uniform matroid needs 0 <= r <= n, got ({r}, {n})")
        super().__init__(n, name or f"U({r},{n})", cap)
        self.r = r

    def _rank_impl(self, x: int) -> int:
        return min(x.bit_count(), self.r)


class GraphicMatroid(Matroid):
    """Cycle matroid of an undirected multigraph given as an edge list.

    Elements are edge positions in the given list; loops and parallel edges
    are allowed.  Rank of a subset is computed by union-find (number of
    vertices merged when adding its edges).
    """

    def __init__(self, edges: Sequence[tuple], name: Optional[str] = None,
                 cap: int = DEFAULT_GROUND_CAP):
        super().__init__(len(edges), name, cap)
        self.edges = [tuple(e) for e in edges]
        for i, e in enumerate(self.edges):
            if len(e) != 2:
                raise ValidationError(f"edge {i} is not a pair: {e!r}")
        verts = sorted({v for e in self.edges for v in e}, key=repr)
        index = {v: i for i, v in enumerate(verts)}
        self._n_verts = len(verts)
        self._pairs = [(index[u], index[v]) for u, v in self.edges]

    def _rank_impl(self, x: int) -> int:
        parent = list(range(self._n_verts))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for e in iter_bits(x):
            u, v = self._pairs[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r


class BinaryMatroid(Matroid):
    """Column matroid of a 0/1 matrix over GF(2).

    ``rows`` is a list of matrix rows; column j corresponds to element j.
    Rank of a subset is the GF(2) rank of the selected columns, computed by
    elimination on rows packed into ints.
    """

    def __init__(self, rows: Sequence[Sequence[int]], name: Optional[str] = None,
                 cap: int = DEFAULT_GROUND_CAP):
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValidationError("matrix rows have unequal lengths")
        else:
            width = 0
        super().__init__(width, name, cap)
        self._rows = []
        for r in rows:
            packed = 0
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise ValidationError(f"matrix entries must be 0/1, got {v!r}")
                packed |= v << j
            self._rows.append(packed)

    def _rank_impl(self, x: int) -> int:
        pivots: dict[int, int] = {}
        r = 0
        for row in self._rows:
            v = row & x
            while v:
                h = v.bit_length() - 1
                p = pivots.get(h)
                if p is None:
                    pivots[h] = v
                    r += 1
                    break
                v ^= p
        return r


class BasisMatroid(Matroid):
    """Matroid given by its explicit list of bases.

    The basis-exchange axiom is checked at construction when the ground set
    is within the cap (pass ``validate=False`` to skip); ``validated`` records
    whether the check ran.
    """

    def __init__(self, n: int, bases: Iterable[int], name: Optional[str] = None,
                 validate: Optional[bool] = None, cap: int = DEFAULT_GROUND_CAP):
        super().__init__(n, name, cap)
        bs = sorted(set(bases))
        if not bs:
            raise ValidationError("a matroid needs at least one basis")
        for b in bs:
            if b < 0 or b & ~self._full:
                raise InvalidSubsetError(f"basis {bin(b)} outside ground set")
        size = bs[0].bit_count()
        if any(b.bit_count() != size for b in bs):
            raise ValidationError("bases have unequal cardinalities")
        self._basis_list = bs
        self._basis_set = set(bs)
        if validate is None:
            validate = n <= DEFAULT_ENUM_CAP
        self.validated = bool(validate)
        if validate:
            self._check_exchange()

    def _check_exchange(self) -> None:
        for b1 in self._basis_list:
            for b2 in self._basis_list:
                if b1 == b2:
                    continue
                gain = b2 & ~b1
                for x in iter_bits(b1 & ~b2):
                    base = b1 ^ (1 << x)
                    if not any(base | (1 << y) in self._basis_set
                               for y in iter_bits(gain)):
                        raise ValidationError(
                            f"basis exchange fails from {elements_of(b1)} "
                            f"to {elements_of(b2)} removing {x}"
                        )

    def _rank_impl(self, x: int) -> int:
        return max((b & x).bit_count() for b in self._basis_list)

    def _bases_impl(self) -> list[int]:
        return list(self._basis_list)


class CircuitsMatroid(Matroid):
    """Matroid given by its list of circuits (trusted to satisfy the axioms).

    Rank is computed greedily: scan the subset and keep elements while no
    circuit becomes contained, which is exact when the family really is the
    circuit family of a matroid.
    """

    def __init__(self, n: int, circuits: Iterable[int],
                 name: Optional[str] = None, cap: int = DEFAULT_GROUND_CAP):
        super().__init__(n, name, cap)
        cs = sorted(set(circuits), key=lambda c: (c.bit_count(), c))
        for c in cs:
            if c < 0 or c & ~self._full:
                raise InvalidSubsetError(f"circuit {bin(c)} outside ground set")
            if c == 0:
                raise ValidationError("the empty set cannot be a circuit")
        self._circuit_list = cs

    def _contains_circuit(self, x: int) -> bool:
        return any(c & x == c for c in self._circuit_list)

    def _rank_impl(self, x: int) -> int:
        cur = 0
        r = 0
        for e in iter_bits(x):
            nxt = cur | (1 << e)
            if not self._contains_circuit(nxt):
                cur = nxt
                r += 1
        return r

    def circuits(self, cap: Optional[int] = None) -> list[int]:
        return list(self._circuit_list)


class DualMatroid(Matroid):
    """Dual of another matroid: bases are the complements of its bases."""

    def __init__(self, inner: Matroid, name: Optional[str] = None):
        super().__init__(inner.n, name or (f"{inner.name}*" if inner.name else None))
        self.inner = inner

    def _rank_impl(self, x: int) -> int:
        return x.bit_count() - self.inner.full_rank + self.inner.rank(self._full ^ x)

    def dual(self) -> Matroid:
        return self.inner

    def _bases_impl(self) -> list[int]:
        return [self._full ^ b for b in self.inner.bases()]


class DirectSumMatroid(Matroid):
    """Direct sum: parts laid out left to right on disjoint index ranges."""

    def __init__(self, parts: Sequence[Matroid], name: Optional[str] = None,
                 cap: int = DEFAULT_GROUND_CAP):
        total = sum(p.n for p in parts)
        super().__init__(total, name, cap)
        self.parts = list(parts)
        self.offsets = []
        off = 0
        for p in self.parts:
            self.offsets.append(off)
            off += p.n

    def _rank_impl(self, x: int) -> int:
        r = 0
        for p, off in zip(self.parts, self.offsets):
            r += p.rank((x >> off) & full_mask(p.n))
        return r

    def _bases_impl(self) -> list[int]:
        out = [0]
        for p, off in zip(self.parts, self.offsets):
            out = [b | (pb << off) for b in out for pb in p.bases()]
        return out


class ParallelExtensionMatroid(Matroid):
    """Adds one new element (index n of the parent) parallel to ``e``."""

    def __init__(self, inner: Matroid, e: int, name: Optional[str] = None,
                 cap: int = DEFAULT_GROUND_CAP):
        if e < 0 or e >= inner.n:
            raise InvalidSubsetError(f"element {e} outside 0..{inner.n - 1}")
        super().__init__(inner.n + 1, name, cap)
        self.inner = inner
        self.e = e
        self._new_bit = 1 << inner.n

    def _rank_impl(self, x: int) -> int:
        if x & self._new_bit:
            x = (x ^ self._new_bit) | (1 << self.e)
        return self.inner.rank(x)


class MinorMatroid(Matroid):
    """Minor of a parent matroid, re-indexed to 0..n'-1.

    ``parent_elements[i]`` is the parent element that became local index i
    (ascending order), which is the index map for restrictions.
    """

    def __init__(self, parent: Matroid, delete: int, contract: int,
                 name: Optional[str] = None):
        bad = (delete | contract) & ~parent._full
        if bad or delete < 0 or contract < 0:
            raise InvalidSubsetError("delete/contract outside the ground set")
        kept = elements_of(parent._full ^ (delete | contract))
        super().__init__(len(kept), name)
        self.parent = parent
        self.deleted = delete
        self.contracted = contract
        self.parent_elements = tuple(kept)
        self._r_contract = parent.rank(contract)

    def _lift(self, x: int) -> int:
        m = 0
        for i in iter_bits(x):
            m |= 1 << self.parent_elements[i]
        return m

    def _rank_impl(self, x: int) -> int:
        return self.parent.rank(self._lift(x) | self.contracted) - self._r_contract
