from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fusionring.acceptance import compare_star_with_fusion
from fusionring.alcove import enumerate_alcove
from fusionring.charring import CharElement, chi
from fusionring.comb import (AlcoveVector, CombError, cyclic_runs, eps_to_omega, hop_A, nc_elementary_A,
                             nc_elementary_C, nc_schur_A, nc_schur_C, omega_to_eps, sl_reduce,
                             transpose_partition)
from fusionring.fusion import fuse, quotient_from_char
from fusionring.oracles import pieri_rule_A


def vec(a, d):
    return AlcoveVector(a, d)


# -- type A -------------------------------------------------------------------------

def test_hop_examples(alcove_of):
    a = alcove_of("gl", 2, 5)
    assert dict(hop_A(0, (1, 1), a)) == {(2, 1): 1}
    assert dict(hop_A(1, (1, 1), a)) == {}
    assert dict(hop_A(0, (3, 0), a)) == {}
    with pytest.raises(CombError):
        hop_A(2, (1, 1), a)


def test_hop_requires_gl(alcove_of):
    with pytest.raises(CombError):
        hop_A(0, (1,), alcove_of("A", 1, 5))


@pytest.mark.parametrize("subset,n,runs", [((0, 1, 3), 5, [[0, 1], [3]]), ((0, 4), 5, [[4, 0]]),
                                           ((1, 2, 3), 4, [[1, 2, 3]]), ((), 3, [])])
def test_cyclic_runs(subset, n, runs):
    assert cyclic_runs(subset, n) == runs


def test_cyclic_runs_full_cycle():
    with pytest.raises(CombError):
        cyclic_runs(range(3), 3)


def test_elementary_examples(alcove_of):
    a = alcove_of("gl", 3, 5)
    assert dict(nc_elementary_A(1, (1, 0, 0), a)) == {(2, 0, 0): 1, (1, 1, 0): 1}
    assert dict(nc_elementary_A(3, (2, 1, 0), a)) == {(3, 2, 1): 1}
    assert dict(nc_elementary_A(0, (2, 1, 0), a)) == {(2, 1, 0): 1}
    assert dict(nc_elementary_A(4, (2, 1, 0), a)) == {}
    assert dict(nc_elementary_A(2, AlcoveVector(a), a)) == {}


PIERI = [(n, ell) for n in (2, 3, 4) for ell in range(n + 1, 10)
         if (ell if ell % 2 else ell // 2) >= n]


@pytest.mark.parametrize("n,ell", PIERI)
def test_pieri_oracle(n, ell, alcove_of):
    a = alcove_of("gl", n, ell)
    for lam in enumerate_alcove(a, sl=True):
        for j in range(1, n + 1):
            assert dict(nc_elementary_A(j, lam, a)) == pieri_rule_A(j, lam, a), (lam, j)


@pytest.mark.parametrize("n,ell", [(2, 5), (3, 6), (3, 7), (4, 8)])
def test_elementary_commute_A(n, ell, alcove_of):
    a = alcove_of("gl", n, ell)
    for lam in enumerate_alcove(a, sl=True):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                ij = nc_elementary_A(i, nc_elementary_A(j, lam, a), a)
                ji = nc_elementary_A(j, nc_elementary_A(i, lam, a), a)
                assert dict(ij) == dict(ji)


def test_transpose_partition():
    assert transpose_partition([2, 0, 1]) == [3, 1, 1]
    assert transpose_partition([0, 0]) == []


def test_schur_examples(alcove_of):
    a = alcove_of("gl", 2, 5)
    assert dict(nc_schur_A((1, 0), (1, 0), a)) == {(2, 0): 1, (1, 1): 1}
    g = alcove_of("gl", 3, 7)
    for mu in enumerate_alcove(g, sl=True):
        assert dict(nc_schur_A((1, 0, 0), mu, g)) == dict(nc_elementary_A(1, mu, g))
        assert dict(nc_schur_A((1, 1, 0), mu, g)) == dict(nc_elementary_A(2, mu, g))


def test_schur_rejects_outside(alcove_of):
    with pytest.raises(CombError):
        nc_schur_A((5, 0), (0, 0), alcove_of("gl", 2, 5))


def test_sl3_star_commutative(alcove_of):
    a = alcove_of("gl", 3, 7)
    B = enumerate_alcove(a, sl=True)
    for lam in B:
        for mu in B:
            assert dict(sl_reduce(nc_schur_A(lam, mu, a))) == dict(sl_reduce(nc_schur_A(mu, lam, a)))


def test_sl_reduce_examples(alcove_of):
    a = alcove_of("gl", 3, 5)
    assert dict(sl_reduce(vec(a, {(2, 1, 1): 1}))) == {(1, 0, 0): 1}
    assert dict(sl_reduce(vec(a, {(2, 1, 0): 3}))) == {(2, 1, 0): 3}


@given(st.data())
def test_sl_reduce_homomorphism(data):
    from fusionring import build_root_system, make_alcove
    a = make_alcove(build_root_system("gl", 3), 7)
    B = enumerate_alcove(a, sl=True)
    lam, mu = data.draw(st.sampled_from(B)), data.draw(st.sampled_from(B))
    s, t = data.draw(st.integers(-3, 3)), data.draw(st.integers(-3, 3))
    lam2 = tuple(x + s for x in lam)
    mu2 = tuple(x + t for x in mu)
    assert dict(sl_reduce(nc_schur_A(lam2, mu2, a))) == dict(sl_reduce(nc_schur_A(lam, mu, a)))


@given(st.lists(st.integers(0, 5), min_size=3, max_size=3))
def test_eps_omega_round_trip(m):
    assert eps_to_omega(omega_to_eps(m)) == tuple(m)


@pytest.mark.parametrize("inst", [("gl", 2, 5), ("gl", 2, 7), ("gl", 3, 6), ("gl", 3, 7)])
def test_star_equals_fusion_A(inst, alcove_of):
    assert compare_star_with_fusion(alcove_of(*inst)) is None


# -- type C -------------------------------------------------------------------------

def test_elementary_C_at_zero(alcove_of):
    a = alcove_of("C", 2, 12)
    assert dict(nc_elementary_C(1, (0, 0), a)) == {(1, 0): 1}
    assert dict(nc_elementary_C(1, AlcoveVector(a), a)) == {}
    assert dict(nc_elementary_C(5, (0, 0), a)) == {}


def exterior_power(R, i):
    """Character of the i-th exterior power of the natural module."""
    out = CharElement(R)
    for j in range(i % 2, i + 1, 2):
        if j <= R.rank:
            out = out + chi(R, tuple(int(t == j - 1) for t in range(R.rank)))
    return out


@pytest.mark.parametrize("inst", [("C", 2, 12), ("C", 2, 11), ("C", 3, 14)])
def test_elementary_C_is_exterior_power(inst, alcove_of):
    a = alcove_of(*inst)
    R = a.system
    for i in range(1, R.rank + 1):
        wedge = exterior_power(R, i)
        for mu in enumerate_alcove(a):
            assert dict(nc_elementary_C(i, mu, a)) == dict(quotient_from_char(wedge * chi(R, mu), a))


@pytest.mark.parametrize("inst", [("C", 2, 11), ("C", 2, 12), ("C", 3, 13)])
def test_elementary_commute_C(inst, alcove_of):
    a = alcove_of(*inst)
    n = a.system.rank
    for lam in enumerate_alcove(a):
        for i in range(1, 2 * n + 1):
            for j in range(i + 1, 2 * n + 1):
                assert dict(nc_elementary_C(i, nc_elementary_C(j, lam, a), a)) == \
                    dict(nc_elementary_C(j, nc_elementary_C(i, lam, a), a))


def test_schur_C_fundamental(alcove_of):
    a = alcove_of("C", 2, 12)
    for mu in enumerate_alcove(a):
        assert dict(nc_schur_C((1, 0), mu, a)) == dict(nc_elementary_C(1, mu, a))
        e2 = nc_elementary_C(2, mu, a) - nc_elementary_C(0, mu, a)
        assert dict(nc_schur_C((0, 1), mu, a)) == dict(e2)
        assert dict(nc_schur_C((0, 1), mu, a)) == dict(fuse((0, 1), mu, a))


@pytest.mark.parametrize("inst", [("C", 2, 9), ("C", 2, 12), ("C", 2, 14)])
def test_star_equals_fusion_C(inst, alcove_of):
    assert compare_star_with_fusion(alcove_of(*inst)) is None


def test_schur_C_requires_type(alcove_of):
    with pytest.raises(CombError):
        nc_schur_C((1, 0), (0, 0), alcove_of("B", 2, 11))
