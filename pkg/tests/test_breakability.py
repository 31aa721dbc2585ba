from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from golod import corpus
from golod.breakability import (HypothesisNotMet, coefficient_schedule, edge_product_criterion,
                                pair_breakable, unhit_is_genuine, vertex_breakable,
                                vertex_breakable_any)
from golod.fieldhom import FieldChains
from golod.homology import GF, QQ, ZZ, Zmod
from golod.linalg import AbelianGroup

from conftest import complexes

A, D_LOWER = 1, 7  # vertices A and d of the Moore complex


def test_sphere_is_breakable():
    res = vertex_breakable(corpus.boundary_simplex(3), 2, ZZ)
    assert res.breakable
    assert res.cokernel == AbelianGroup(1)


def test_moore_breaks_over_z4_only():
    M = corpus.moore_M()
    res = vertex_breakable(M, 2, Zmod(4))
    assert res.breakable
    assert res.cokernel == AbelianGroup(0, (2,))
    assert unhit_is_genuine(M, 2, res)
    assert not vertex_breakable(M, 2, GF(3)).breakable
    assert not vertex_breakable(M, 2, GF(2)).breakable
    assert not vertex_breakable(M, 2, ZZ).breakable


def test_moore_schedule():
    M = corpus.moore_M()
    assert [str(c) for c in coefficient_schedule(M, 2)] == ["Z", "Z/2", "Z/4", "Z/8"]
    res = vertex_breakable_any(M, 2)
    assert res.breakable and res.witness_coefficient == Zmod(4)
    assert [(str(c), b) for c, b in res.tried] == [("Z", False), ("Z/2", False), ("Z/4", True)]


def test_wedge_of_spheres_not_breakable():
    W = corpus.wedge(corpus.boundary_simplex(3), corpus.boundary_simplex(3))
    assert coefficient_schedule(W, 2) == [ZZ]
    assert not vertex_breakable_any(W, 2).breakable


def test_rp2_breakable():
    res = vertex_breakable_any(corpus.k2_rp2(), 2)
    assert res.breakable
    assert res.witness_coefficient in (ZZ, Zmod(2))


def test_pair_breakable_examples():
    assert pair_breakable(corpus.moore_M(), A, D_LOWER, 2, Zmod(4))
    assert pair_breakable(corpus.boundary_simplex(3), 1, 2, 2, ZZ)
    S = corpus.simplex(2)
    assert not any(pair_breakable(S, v, w, 2, ZZ) for v, w in combinations(S.vertices, 2))
    with pytest.raises(ValueError):
        pair_breakable(S, 1, 1, 2, ZZ)


def test_edge_product_examples():
    ep = edge_product_criterion(corpus.moore_M(), A, D_LOWER, 2, Zmod(4))
    assert (ep.is_edge, ep.product_trivial) == (False, False)
    ep = edge_product_criterion(corpus.boundary_simplex(3), 1, 2, 2, ZZ)
    assert (ep.is_edge, ep.product_trivial) == (True, True)
    with pytest.raises(HypothesisNotMet):
        edge_product_criterion(corpus.simplex(2), 1, 2, 2, ZZ)


def test_too_few_vertices():
    with pytest.raises(ValueError):
        vertex_breakable(corpus.points(1), 0, ZZ)


@given(complexes(), st.sampled_from([(12, (4, 3)), (6, (2, 3)), (36, (4, 9))]))
def test_breakability_splits_over_crt(K, split):
    if K.m < 2:
        return
    n, parts = split
    for d in (1, 2):
        whole = vertex_breakable(K, d, Zmod(n)).breakable
        assert whole == any(vertex_breakable(K, d, Zmod(q)).breakable for q in parts)


@given(complexes(), st.sampled_from([0, 2, 3]))
def test_field_shortcut_matches_exact(K, p):
    if K.m < 2:
        return
    fc = FieldChains(K, p)
    k = QQ if p == 0 else GF(p)
    for d in (1, 2):
        assert fc.breakable(frozenset(K.vertices), d) == vertex_breakable(K, d, k).breakable


@given(complexes(max_m=6))
def test_schedule_cap_is_enough(K):
    """One more power of each prime never finds anything new."""
    if K.m < 2:
        return
    sched = coefficient_schedule(K, 2)
    found = vertex_breakable_any(K, 2, sched).breakable
    for c in sched:
        if c.kind == "Zn":
            beyond = Zmod(c.n * min(q for q in range(2, c.n + 1) if c.n % q == 0))
            if vertex_breakable(K, 2, beyond).breakable:
                assert found


@given(complexes(max_m=6), st.sampled_from([ZZ, Zmod(2), Zmod(4), GF(3)]))
def test_edge_product_equivalence(K, coeff):
    if K.m < 3:
        return
    for v, w in combinations(K.vertices, 2):
        if pair_breakable(K, v, w, 2, coeff):
            ep = edge_product_criterion(K, v, w, 2, coeff)
            assert ep.is_edge == ep.product_trivial


@given(complexes(max_m=6), st.sampled_from([ZZ, Zmod(4), GF(2)]))
def test_unhit_cycles_are_genuine(K, coeff):
    if K.m < 2:
        return
    res = vertex_breakable(K, 2, coeff)
    if res.breakable:
        assert unhit_is_genuine(K, 2, res)
