from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fusionring.rootsys import (RootSystemError, Signed, build_root_system, format_weight,
                                parse_weight, straighten_dominant)

SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("G2", 2)]


def n_positive(t, n):
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1), "G2": 6}[t]


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_positive_root_count(t, n):
    R = build_root_system(t, n)
    assert len(R.positive_roots) == n_positive(t, n)
    assert len(R.positive_coroots) == len(R.positive_roots)


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_fundamental_pairing_is_kronecker(t, n):
    R = build_root_system(t, n)
    for i in range(n):
        w = tuple(int(i == j) for j in range(n))
        for j, c in enumerate(R.simple_coroots):
            assert R.pairing(w, c) == int(i == j)
        assert R.pairing(R.rho, R.simple_coroots[i]) == 1


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_short_roots_have_length_two(t, n):
    R = build_root_system(t, n)
    lengths = {R.inner(a, a) for a in R.positive_roots}
    assert min(lengths) == 2


@pytest.mark.parametrize("t,n", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 6), ("G2", 3)])
def test_unsupported_pairs(t, n):
    with pytest.raises(RootSystemError):
        build_root_system(t, n)


def test_c2_beta0():
    R = build_root_system("C", 2)
    beta0 = R.from_eps([2, 0])
    assert beta0 in R.positive_roots
    assert R.pairing(R.rho, R.coroot_of(beta0)) == 2
    assert R.pairing((1, 1), R.coroot_of(beta0)) == 2


def test_g2_root_data():
    R = build_root_system("G2")
    assert len(R.positive_roots) == 6
    a0 = (1, 0)   # 2 alpha_1 + alpha_2
    b0 = (0, 1)   # 3 alpha_1 + 2 alpha_2
    assert R.root_coords(a0) == (2, 1)
    assert R.root_coords(b0) == (3, 2)
    assert R.coroot_simple_coords(R.coroot_of(a0)) == (2, 3)
    assert R.coroot_simple_coords(R.coroot_of(b0)) == (1, 2)
    assert R.pairing((1, 0), R.coroot_of(a0)) == 2
    assert R.pairing(R.rho, R.coroot_of(b0)) == 3
    assert R.pairing(R.rho, R.coroot_of(a0)) == 5


def test_a1_single_root():
    R = build_root_system("A", 1)
    (alpha,) = R.positive_roots
    assert R.pairing((1,), R.coroot_of(alpha)) == 1


@pytest.mark.parametrize("mu,expected", [((3,), Signed(1, (3,))), ((-1,), None), ((-3,), Signed(-1, (1,)))])
def test_straighten_sl2(mu, expected):
    assert straighten_dominant(build_root_system("A", 1), mu) == expected


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_weyl_group_size(t, n):
    R = build_root_system(t, n)
    assert len(R.weyl_group_matrices) == R.weyl_order
    assert sum(s for _, s in R.weyl_group_matrices) == 0


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_orbit_stabilizer(t, n):
    R = build_root_system(t, n)
    lam = tuple(1 if i == 0 else 0 for i in range(n))
    orb = R.orbit(lam)
    stab = sum(1 for M, _ in R.weyl_group_matrices
               if tuple(sum(a * b for a, b in zip(row, lam)) for row in M) == lam)
    assert len(orb) * stab == R.weyl_order
    assert all(R.dominant_representative(w) == lam for w in orb)


def weights(n, lo=-8, hi=8):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(tuple)


@pytest.mark.parametrize("t,n", SYSTEMS)
@given(data=st.data())
def test_straighten_dot_invariance(t, n, data):
    R = build_root_system(t, n)
    mu = data.draw(weights(n))
    i = data.draw(st.integers(0, n - 1))
    a, b = R.straighten(mu), R.straighten(R.dot_reflect(mu, i))
    if a is None:
        assert b is None
    else:
        assert b == Signed(-a.sign, a.weight)
        assert R.is_dominant(a.weight)


@pytest.mark.parametrize("t,n", SYSTEMS)
@given(data=st.data())
def test_straighten_idempotent_on_dominant(t, n, data):
    R = build_root_system(t, n)
    lam = data.draw(weights(n, 0, 6))
    assert R.straighten(lam) == Signed(1, lam)


@pytest.mark.parametrize("t,n", [("A", 2), ("A", 3), ("C", 2), ("C", 3)])
@given(data=st.data())
def test_eps_round_trip_all_weights(t, n, data):
    R = build_root_system(t, n)
    lam = data.draw(weights(n))
    assert R.from_eps(R.to_eps(lam)) == lam


@pytest.mark.parametrize("t,n", [("B", 2), ("B", 3), ("D", 4)])
@given(data=st.data())
def test_eps_round_trip_b_d(t, n, data):
    R = build_root_system(t, n)
    lam = data.draw(weights(n))
    eps = R.to_eps(lam)
    assert all(isinstance(x, (int, Fraction)) for x in eps)
    assert R.from_eps(eps) == lam


def test_parse_and_format():
    R = build_root_system("C", 2)
    assert parse_weight(R, "2,0") == (2, 0)
    assert parse_weight(R, "eps:1,0") == (1, 0)
    assert format_weight((2, 0, 1)) == "2,0,1"
    G = build_root_system("gl", 3)
    assert parse_weight(G, "eps:3,1,0") == (3, 1, 0)
    with pytest.raises((RootSystemError, ValueError)):
        parse_weight(R, "1,2,3")


def test_gl_rho():
    G = build_root_system("gl", 3)
    assert G.rho == (2, 1, 0)
    assert G.semisimple_rank == 2
