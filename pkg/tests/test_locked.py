"""Locked subsets: recognition, enumeration, the counting oracle and
uniform-matroid recognition."""

import pytest

from mxt import (
    GraphicMatroid,
    UniformMatroid,
    catalog,
    count_locked,
    direct_sum,
    enumerate_locked,
    full_mask,
    is_locked,
    is_uniform,
    k_locked_oracle,
    mask_of,
    uniformity_report,
)
from mxt.errors import NotTwoConnectedError

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
K4_TRIANGLES = [mask_of(t) for t in ([0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5])]


@pytest.fixture(scope="module")
def mk4():
    return GraphicMatroid(K4_EDGES)


def test_triangles_are_locked(mk4):
    for t in K4_TRIANGLES:
        assert is_locked(mk4, t)


def test_whole_ground_set_is_never_locked(mk4):
    assert not is_locked(mk4, full_mask(6))
    assert not is_locked(mk4, 0)


def test_uniform_matroids_have_no_locked_subsets():
    u = UniformMatroid(2, 4)
    for x in range(1, 1 << 4):
        assert not is_locked(u, x)


def test_is_locked_requires_2connected():
    m = direct_sum(UniformMatroid(1, 2), UniformMatroid(1, 2))
    with pytest.raises(NotTwoConnectedError):
        is_locked(m, mask_of([0, 1]))


def test_enumerate_locked_mk4(mk4):
    report = enumerate_locked(mk4)
    assert not report.truncated
    assert report.count == 4
    assert [c.subset for c in report.certificates] == sorted(K4_TRIANGLES)
    for c in report.certificates:
        assert (c.rank, c.corank_complement, c.component) == (2, 2, 0)


def test_enumeration_matches_clause_filter(mk4):
    from mxt.locked import _locked_in_component

    brute = [x for x in range(1 << 6)
             if _locked_in_component(mk4, full_mask(6), x) is not None]
    assert sorted(brute) == sorted(c.subset for c in enumerate_locked(mk4).certificates)


def test_direct_sum_of_k4s(mk4):
    m = direct_sum(mk4, mk4)
    report = enumerate_locked(m)
    assert report.count == 8
    assert sum(1 for c in report.certificates if c.component == 0) == 4
    assert sum(1 for c in report.certificates if c.component == 1) == 4


@pytest.mark.parametrize("name,count", [
    ("MK4", 4), ("W3", 3), ("Q6", 2), ("P6", 1), ("U(3,6)", 0),
    ("U24+2U24", 2), ("wheel(4)", 9),
])
def test_locked_counts_for_catalog(name, count):
    assert count_locked(catalog(name)) == count


def test_two_sum_locked_sets_are_the_glued_sides():
    m = catalog("U24+2U24")
    assert [c.subset for c in enumerate_locked(m).certificates] == [
        mask_of([0, 1, 2]), mask_of([3, 4, 5])
    ]


def test_locked_self_duality():
    for m in (GraphicMatroid(K4_EDGES), catalog("W3"), catalog("U24+2U24")):
        d = m.dual()
        full = full_mask(m.n)
        locked_primal = {c.subset for c in enumerate_locked(m).certificates}
        locked_dual = {c.subset for c in enumerate_locked(d).certificates}
        assert locked_primal == {full ^ l for l in locked_dual}


def test_certificates_are_closed_both_sides(mk4):
    d = mk4.dual()
    full = full_mask(6)
    for c in enumerate_locked(mk4).certificates:
        assert mk4.closure(c.subset) == c.subset
        assert d.closure(full ^ c.subset) == full ^ c.subset


def test_k_locked_oracle_small_cases(mk4):
    answer, report = k_locked_oracle(UniformMatroid(2, 4), 0)
    assert answer and report.count == 0

    answer, report = k_locked_oracle(mk4, 0)
    assert answer  # 4 <= 6
    assert report.count == 4 and not report.truncated

    answer, report = k_locked_oracle(mk4, 1)
    assert answer and report.count == 4


def test_k_locked_oracle_truncates():
    w4 = catalog("wheel(4)")  # 9 locked subsets on 8 elements
    answer, report = k_locked_oracle(w4, 0)
    assert not answer
    assert report.truncated
    assert report.count == 9  # stopped right after crossing the threshold

    answer, report = k_locked_oracle(w4, 1)
    assert answer and report.count == 9 and not report.truncated


def test_k_locked_answer_is_monotone_in_k():
    for m in (catalog("wheel(4)"), catalog("MK4"), UniformMatroid(2, 5)):
        answers = [k_locked_oracle(m, k)[0] for k in range(3)]
        assert answers == sorted(answers)


def test_is_uniform_paths():
    assert is_uniform(UniformMatroid(3, 6))
    assert not is_uniform(catalog("MK4"))
    got, path = uniformity_report(catalog("MK4"))
    assert (got, path) == (False, "locked-oracle")

    m = direct_sum(UniformMatroid(1, 2), UniformMatroid(1, 2))
    got, path = uniformity_report(m)
    assert (got, path) == (False, "definitional")
    assert count_locked(m) == 0  # which is why the fallback is needed

    got, path = uniformity_report(UniformMatroid(0, 0))
    assert got


def test_uniform_grid():
    for n in range(7):
        for r in range(n + 1):
            assert is_uniform(UniformMatroid(r, n))


def test_near_uniform_matroid_with_parallel_pair():
    # Rank 2 on four elements with exactly one dependent pair: 2-connected
    # with zero locked subsets, yet not uniform.  The parallel pair has rank
    # 1 and so never qualifies as locked; recognition must screen it rather
    # than trust the locked count alone.
    from mxt import BinaryMatroid

    m = BinaryMatroid([[0, 1, 1, 0], [1, 0, 1, 1]])  # columns 0 and 3 equal
    from mxt.connectivity import is_2connected

    assert is_2connected(m)
    assert count_locked(m) == 0
    got, path = uniformity_report(m)
    assert (got, path) == (False, "locked-oracle")
    # and dually: one coparallel pair, again zero locked subsets
    d = m.dual()
    assert count_locked(d) == 0
    assert uniformity_report(d) == (False, "locked-oracle")


def test_zero_locked_after_screening_means_uniform_on_corpus():
    from itertools import combinations

    from mxt.connectivity import is_2connected
    from mxt.corpus import full_corpus
    from mxt.core import mask_of as mk

    for name, m in full_corpus(0):
        if m.n < 2 or not is_2connected(m):
            continue
        pairs = [(1 << e) | (1 << f)
                 for e in range(m.n) for f in range(e + 1, m.n)]
        if any(m.rank(p) == 1 for p in pairs):
            continue
        if any(m.corank(p) == 1 for p in pairs):
            continue
        r = m.full_rank
        definitional = all(m.rank(mk(c)) == r
                           for c in combinations(range(m.n), r))
        assert (count_locked(m) == 0) == definitional, name
