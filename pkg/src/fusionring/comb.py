"""Combinatorial fusion rings built from hopping operators.

Type A works over gl_n in epsilon-coordinates: a weight is a non-increasing
integer row vector and the alcove is ``l_1 - l_n <= k``.  Type C works in
fundamental-weight coordinates and pushes shifted weights through the signed
alcove projection.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

from .alcove import Alcove, project
from .lincomb import LinComb


class CombError(ValueError):
    """Bad operator index or wrong root-system type."""


class AlcoveVector(LinComb):
    """Integer combination of alcove weights in a combinatorial fusion ring."""

    def __init__(self, alcove: Alcove = None, terms=None):
        super().__init__()
        self.alcove = alcove
        if terms:
            for k, v in dict(terms).items():
                self.add(tuple(k), v)

    def _meta(self):
        return {"alcove": self.alcove}


def _as_vector(alcove: Alcove, v) -> AlcoveVector:
    if isinstance(v, AlcoveVector):
        return v
    return AlcoveVector(alcove, {tuple(v): 1})


def _apply(op: Callable[[tuple], AlcoveVector], v: AlcoveVector) -> AlcoveVector:
    out = AlcoveVector(v.alcove)
    for lam, c in v.items():
        for nu, d in op(lam).items():
            out.add(nu, c * d)
    return out


def _require(alcove: Alcove, type_: str) -> None:
    if alcove.system.type != type_:
        raise CombError(f"expected a {type_} alcove, got {alcove.system.name}")


# -- type A ----------------------------------------------------------------------

def hop_A(i: int, lam, alcove: Alcove) -> AlcoveVector:
    """a_i: add a box to row i+1 if the result stays in the alcove, else 0."""
    _require(alcove, "gl")
    n = alcove.system.dim
    if not 0 <= i < n:
        raise CombError(f"hopping index {i} out of range 0..{n - 1}")
    nu = list(lam)
    nu[i] += 1
    nu = tuple(nu)
    if alcove.contains(nu):
        return AlcoveVector(alcove, {nu: 1})
    return AlcoveVector(alcove)


def cyclic_runs(subset: Sequence[int], n: int) -> list[list[int]]:
    """Split a proper subset of Z_n into maximal cyclically consecutive runs.

    Each run is listed from its first element s to its last element t, so that
    s + 1, ..., t follow s cyclically.
    """
    S = set(subset)
    if len(S) >= n:
        raise CombError("the full cycle has no run decomposition")
    runs = []
    for s in sorted(S):
        if (s - 1) % n in S:
            continue
        run = [s]
        while (run[-1] + 1) % n in S:
            run.append((run[-1] + 1) % n)
        runs.append(run)
    return runs


def _ordered_product(subset, lam: tuple, alcove: Alcove) -> AlcoveVector:
    v = AlcoveVector(alcove, {lam: 1})
    for run in cyclic_runs(subset, alcove.system.dim):
        for i in run:
            v = _apply(lambda w, i=i: hop_A(i, w, alcove), v)
            if not v:
                return v
    return v


def _shift(v: AlcoveVector, s: int) -> AlcoveVector:
    out = AlcoveVector(v.alcove)
    for lam, c in v.items():
        out.add(tuple(x + s for x in lam), c)
    return out


def nc_elementary_A(j: int, v, alcove: Alcove) -> AlcoveVector:
    """e_j = sum over j-subsets I of Z_n of the ordered hopping product a_I.

    e_0 is the identity, e_n the determinant shift by (1, ..., 1), and e_j = 0
    outside 0..n.
    """
    _require(alcove, "gl")
    v = _as_vector(alcove, v)
    n = alcove.system.dim
    if j < 0 or j > n:
        return AlcoveVector(alcove)
    if j == 0:
        return v.copy()
    if j == n:
        return _shift(v, 1)

    return _apply(lambda lam: AlcoveVector(alcove, _e_A_basis(alcove, j, lam)), v)


@lru_cache(maxsize=100_000)
def _e_A_basis(alcove: Alcove, j: int, lam: tuple) -> tuple:
    out = AlcoveVector(alcove)
    for I in combinations(range(alcove.system.dim), j):
        out += _ordered_product(I, lam, alcove)
    return tuple(out.items())


def transpose_partition(m: Sequence[int]) -> list[int]:
    """The partition with m[i-1] rows of length i, parts in decreasing order."""
    out = []
    for i in range(len(m), 0, -1):
        out.extend([i] * m[i - 1])
    return out


def _perm_det(rows: int, entry, v: AlcoveVector) -> AlcoveVector:
    """Leibniz expansion of det(entry(i, j)) for commuting operators, applied to v.

    ``entry(i, j)`` returns a list of (coefficient, operator) pairs; the
    operator of row 0 is applied first, which is harmless since entries commute.
    """
    out = AlcoveVector(v.alcove)

    def rec(i, used, sign, vec):
        if not vec:
            return
        if i == rows:
            for k, c in vec.items():
                out.add(k, sign * c)
            return
        for j in range(rows):
            if j in used:
                continue
            terms = entry(i, j)
            if not terms:
                continue
            # inversions created by placing column j after those already used
            flips = sum(1 for u in used if u > j)
            s = sign if flips % 2 == 0 else -sign
            for coeff, op in terms:
                rec(i + 1, used | {j}, s * coeff, op(vec))

    rec(0, frozenset(), 1, v)
    return out


def nc_schur_A(lam, mu, alcove: Alcove) -> AlcoveVector:
    """lam * mu in the combinatorial ring: det(e_{lam^t_i - i + j}) applied to mu,
    then shifted by lam_n."""
    _require(alcove, "gl")
    lam = tuple(lam)
    for w in (lam, tuple(mu)):
        if not alcove.contains(w):
            raise CombError(f"{w} is not in the alcove of {alcove}")
    n = len(lam)
    m = [lam[i] - lam[i + 1] for i in range(n - 1)]
    lt = transpose_partition(m)
    size = len(lt)

    def entry(i, j):
        idx = lt[i] - (i + 1) + (j + 1)
        if idx < 0 or idx > n:
            return []
        return [(1, lambda vec, idx=idx: nc_elementary_A(idx, vec, alcove))]

    v = _perm_det(size, entry, _as_vector(alcove, mu))
    return _shift(v, lam[-1])


def sl_reduce(v: AlcoveVector) -> AlcoveVector:
    """Replace each gl_n weight by its representative with last coordinate 0."""
    out = AlcoveVector(v.alcove)
    for lam, c in v.items():
        s = lam[-1]
        out.add(tuple(x - s for x in lam), c)
    return out


def eps_to_omega(lam: Sequence[int]) -> tuple:
    """gl_n epsilon-coordinates to sl_n fundamental-weight coordinates."""
    return tuple(lam[i] - lam[i + 1] for i in range(len(lam) - 1))


def omega_to_eps(m: Sequence[int]) -> tuple:
    """sl_n fundamental-weight coordinates to the l_n = 0 transversal."""
    return tuple(sum(m[i:]) for i in range(len(m))) + (0,)


# -- type C ----------------------------------------------------------------------

def _eps_shifts(alcove: Alcove) -> list[tuple]:
    """omega-coordinates of eps_1..eps_n, -eps_1..-eps_n."""
    R = alcove.system
    n = R.rank
    units = [R.from_eps([int(i == j) for j in range(n)]) for i in range(n)]
    return units + [tuple(-x for x in u) for u in units]


def nc_elementary_C(i: int, v, alcove: Alcove) -> AlcoveVector:
    """e_i = sum over i-subsets J of {1..2n} of pi(lam + eps_J); zero outside 0..2n."""
    _require(alcove, "C")
    v = _as_vector(alcove, v)
    n = alcove.system.rank
    if i < 0 or i > 2 * n:
        return AlcoveVector(alcove)
    if i == 0:
        return v.copy()
    return _apply(lambda lam: AlcoveVector(alcove, _e_C_basis(alcove, i, lam)), v)


@lru_cache(maxsize=256)
def _subset_sums(alcove: Alcove, i: int) -> tuple:
    """The multiset {eps_J : |J| = i} as (shift, multiplicity) pairs."""
    n = alcove.system.rank
    shifts = _eps_shifts(alcove)
    sums = LinComb()
    for J in combinations(range(2 * n), i):
        sums.add(tuple(sum(shifts[j][c] for j in J) for c in range(n)), 1)
    return tuple(sums.items())


@lru_cache(maxsize=100_000)
def _e_C_basis(alcove: Alcove, i: int, lam: tuple) -> tuple:
    out = AlcoveVector(alcove)
    for s, mult in _subset_sums(alcove, i):
        p = project(tuple(a + b for a, b in zip(lam, s)), alcove)
        if p is not None:
            out.add(p.weight, p.sign * mult)
    return tuple(out.items())


def nc_schur_C(lam, mu, alcove: Alcove) -> AlcoveVector:
    """lam * mu for type C: det(e_{lam^t_i - i + j} - e_{lam^t_i - i - j}) applied to mu.

    Indices are 1-based; lam^t has m_i rows of length i.
    """
    _require(alcove, "C")
    lam = tuple(lam)
    for w in (lam, tuple(mu)):
        if not alcove.contains(w):
            raise CombError(f"{w} is not in the alcove of {alcove}")
    n = alcove.system.rank
    lt = transpose_partition(lam)
    size = len(lt)

    def e(idx):
        return lambda vec: nc_elementary_C(idx, vec, alcove)

    def entry(i, j):
        a = lt[i] - (i + 1) + (j + 1)
        b = lt[i] - (i + 1) - (j + 1)
        out = []
        if 0 <= a <= 2 * n:
            out.append((1, e(a)))
        if 0 <= b <= 2 * n:
            out.append((-1, e(b)))
        return out

    return _perm_det(size, entry, _as_vector(alcove, mu))


def star_table(alcove: Alcove) -> dict:
    """The full combinatorial product table {(lam, mu): lam * mu} over the alcove basis.

    For gl_n the basis is the l_n = 0 transversal and products are reduced back
    onto it.
    """
    from .alcove import enumerate_alcove

    t = alcove.system.type
    if t == "gl":
        B = enumerate_alcove(alcove, sl=True)
        return {(a, b): sl_reduce(nc_schur_A(a, b, alcove)) for a in B for b in B}
    if t == "C":
        B = enumerate_alcove(alcove)
        return {(a, b): nc_schur_C(a, b, alcove) for a in B for b in B}
    raise CombError(f"no combinatorial model for {alcove.system.name}")
