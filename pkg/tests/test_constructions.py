"""Builders, the catalog, isomorphism and minor testing."""

from itertools import combinations

import pytest

from mxt import (
    GraphicMatroid,
    UniformMatroid,
    are_isomorphic,
    catalog,
    circuit_hyperplanes,
    count_locked,
    direct_sum,
    full_mask,
    has_minor,
    mask_of,
    parallel_extension,
    relax_circuit_hyperplane,
    series_extension,
    two_sum,
)
from mxt.errors import (
    BasepointError,
    ColoopBasepointError,
    LoopBasepointError,
    NotCircuitHyperplaneError,
    UnknownCatalogNameError,
)

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_direct_sum_basics():
    m = direct_sum(UniformMatroid(1, 1), UniformMatroid(1, 1))
    assert (m.n, m.full_rank, len(m.bases())) == (2, 2, 1)


def test_direct_sum_bases_are_products():
    a, b = UniformMatroid(1, 2), UniformMatroid(1, 2)
    m = direct_sum(a, b)
    expected = sorted(ba | (bb << 2) for ba in a.bases() for bb in b.bases())
    assert m.bases() == expected


def test_direct_sum_locked_counts_add():
    mk4 = GraphicMatroid(K4_EDGES)
    assert count_locked(direct_sum(mk4, mk4)) == 2 * count_locked(mk4)
    assert count_locked(direct_sum(mk4, UniformMatroid(2, 4))) == count_locked(mk4)


def test_two_sum_shape():
    m = two_sum(UniformMatroid(2, 4), 0, UniformMatroid(2, 4), 0)
    assert (m.n, m.full_rank) == (6, 3)
    assert len(m.bases()) == 18
    assert m.loops() == 0 and m.coloops() == 0


def test_two_sum_rank_axioms():
    m = two_sum(UniformMatroid(2, 4), 1, UniformMatroid(2, 3), 2)
    for x in range(1 << m.n):
        assert 0 <= m.rank(x) <= x.bit_count()
        for y in range(1 << m.n):
            assert m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y)


def test_two_sum_rejects_degenerate_basepoints():
    with pytest.raises(BasepointError):
        two_sum(UniformMatroid(1, 2), 0, UniformMatroid(2, 4), 0)  # too small
    with pytest.raises(LoopBasepointError):
        two_sum(UniformMatroid(0, 3), 0, UniformMatroid(2, 4), 0)
    with pytest.raises(ColoopBasepointError):
        two_sum(UniformMatroid(3, 3), 0, UniformMatroid(2, 4), 0)


def test_parallel_extension_of_rank_one_line():
    m = parallel_extension(UniformMatroid(1, 2), 0)
    expect = UniformMatroid(1, 3)
    assert sorted(m.bases()) == sorted(expect.bases())
    assert m.full_rank == 1
    assert mask_of([0, 2]) in m.circuits()  # new pair is a circuit


def test_parallel_extension_rejects_loops():
    with pytest.raises(LoopBasepointError):
        parallel_extension(UniformMatroid(0, 1), 0)


def test_series_extension_is_dual_construction():
    m = series_extension(UniformMatroid(1, 2), 0)
    expect = UniformMatroid(2, 3)
    assert sorted(m.bases()) == sorted(expect.bases())
    assert m.full_rank == 2
    # new pair is a cocircuit: a circuit of the dual
    assert mask_of([0, 2]) in m.dual().circuits()


def test_series_extension_raises_rank_by_one():
    mk4 = GraphicMatroid(K4_EDGES)
    m = series_extension(mk4, 0)
    assert m.full_rank == mk4.full_rank + 1


def test_series_extension_rejects_coloops():
    with pytest.raises(ColoopBasepointError):
        series_extension(UniformMatroid(2, 2), 0)


def test_relaxation_adds_exactly_one_basis():
    mk4 = GraphicMatroid(K4_EDGES)
    t = mask_of([0, 1, 3])
    relaxed = relax_circuit_hyperplane(mk4, t)
    assert len(relaxed.bases()) == len(mk4.bases()) + 1
    assert t in relaxed.bases()


def test_relaxation_rejects_non_circuit_hyperplanes():
    mk4 = GraphicMatroid(K4_EDGES)
    with pytest.raises(NotCircuitHyperplaneError):
        relax_circuit_hyperplane(mk4, mask_of([0, 1, 2]))  # independent star
    with pytest.raises(NotCircuitHyperplaneError):
        relax_circuit_hyperplane(mk4, mask_of([0, 2, 3, 5]))  # spanning 4-cycle
    with pytest.raises(NotCircuitHyperplaneError):
        relax_circuit_hyperplane(UniformMatroid(2, 4), mask_of([0, 1, 2]))


def test_relaxation_chain_counts():
    counts = [len(catalog(name).bases()) for name in ("MK4", "W3", "Q6", "P6")]
    assert counts == [16, 17, 18, 19]
    assert len(catalog("U(3,6)").bases()) == 20


def test_circuit_hyperplanes_of_k4_are_the_triangles():
    mk4 = GraphicMatroid(K4_EDGES)
    assert circuit_hyperplanes(mk4) == sorted(
        mask_of(t) for t in ([0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]))


def test_catalog_shapes():
    cases = {
        "MK4": (6, 3, 16),
        "W3": (6, 3, 17),
        "Q6": (6, 3, 18),
        "P6": (6, 3, 19),
        "U(3,6)": (6, 3, 20),
        "U24+2U24": (6, 3, 18),
        "wheel(4)": (8, 4, 45),
        "U(2,4)": (4, 2, 6),
    }
    for name, (n, r, nb) in cases.items():
        m = catalog(name)
        assert (m.n, m.full_rank, len(m.bases())) == (n, r, nb), name


def test_catalog_unknown_name():
    with pytest.raises(UnknownCatalogNameError):
        catalog("M(K5)")
    with pytest.raises(UnknownCatalogNameError):
        catalog("wheel(2)")


def test_isomorphism_self_dual_cases():
    u24 = UniformMatroid(2, 4)
    assert are_isomorphic(u24, u24.dual()) is not None
    mk4 = GraphicMatroid(K4_EDGES)
    w = are_isomorphic(mk4, mk4.dual())
    assert w is not None


def test_isomorphism_witness_preserves_rank_everywhere():
    mk4 = GraphicMatroid(K4_EDGES)
    d = mk4.dual()
    w = are_isomorphic(mk4, d)
    for x in range(1 << 6):
        image = mask_of(w.mapping[e] for e in range(6) if x >> e & 1)
        assert mk4.rank(x) == d.rank(image)


def test_non_isomorphic_pairs():
    assert are_isomorphic(catalog("P6"), catalog("Q6")) is None
    assert are_isomorphic(catalog("Q6"), catalog("U24+2U24")) is None
    assert are_isomorphic(UniformMatroid(2, 4), UniformMatroid(2, 5)) is None


def test_minor_controls():
    mk4 = GraphicMatroid(K4_EDGES)
    assert has_minor(mk4, mk4)
    assert not has_minor(mk4, UniformMatroid(2, 4))
    assert has_minor(catalog("W3"), UniformMatroid(2, 4))
    assert has_minor(catalog("U24+2U24"), UniformMatroid(2, 4))


def test_minor_of_smaller_target_in_uniform():
    assert has_minor(UniformMatroid(3, 6), UniformMatroid(2, 4))
    assert has_minor(UniformMatroid(2, 5), UniformMatroid(2, 4))
    assert not has_minor(UniformMatroid(1, 4), UniformMatroid(2, 4))


def test_every_catalog_matroid_is_its_own_minor():
    for name in ("MK4", "W3", "Q6", "P6", "U24+2U24"):
        m = catalog(name)
        assert has_minor(m, m)


def _smallest_k(m):
    lk = count_locked(m)
    k = 0
    while lk > m.n ** (k + 1):
        k += 1
    return k


def test_extensions_preserve_locked_count_threshold():
    # no closed-form count is asserted, only that the polynomial threshold
    # the source matroid meets still holds after the operation
    for name in ("MK4", "W3", "U24+2U24"):
        m = catalog(name)
        k = max(1, _smallest_k(m))
        for e in (0, m.n - 1):
            for ext in (parallel_extension(m, e), series_extension(m, e)):
                assert count_locked(ext) <= ext.n ** (k + 1), (name, e)


def test_two_sum_preserves_locked_count_threshold():
    pairs = [("MK4", "U(2,4)"), ("W3", "U(2,5)"), ("MK4", "MK4")]
    for left_name, right_name in pairs:
        a, b = catalog(left_name), catalog(right_name)
        k = max(1, _smallest_k(a), _smallest_k(b))
        glued = two_sum(a, 0, b, 0)
        assert count_locked(glued) <= glued.n ** (k + 1), (left_name, right_name)
