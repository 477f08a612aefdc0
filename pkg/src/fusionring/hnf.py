"""Exact integer lattices: echelon bases, Hermite normal form, integer solving.

Vectors are sparse ``dict``s from arbitrary hashable keys to ints.  A total
order on keys (``order`` below) decides which key leads a vector; the lattice
keeps one basis vector per leading key, which makes membership a triangular
back-substitution.
"""
from __future__ import annotations

from typing import Callable, Hashable, Iterable, Optional, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _axpy(y: dict, a: int, x: dict) -> None:
    """y += a*x in place, dropping zeros."""
    if not a:
        return
    for k, v in x.items():
        w = y.get(k, 0) + a * v
        if w:
            y[k] = w
        else:
            y.pop(k, None)


def _comb(a: int, u: dict, b: int, v: dict) -> dict:
    out = {k: a * x for k, x in u.items()} if a else {}
    _axpy(out, b, v)
    return {k: x for k, x in out.items() if x}


class LatticeOverflow(RuntimeError):
    """The configured size cap was exceeded."""


class IntegerLattice:
    """Z-span of integer vectors held in echelon form.

    Parameters
    ----------
    order : callable, optional
        Sort key on vector keys; the leading entry of a vector is its largest
        key under this order.  Defaults to the keys themselves.
    track : bool
        Record, for every basis vector, its expression in the inserted
        generators so that :meth:`express` can return a certificate.
    cap : int, optional
        Maximum number of generators accepted.
    """

    def __init__(self, order: Optional[Callable] = None, track: bool = False, cap: Optional[int] = None):
        self._order = order or (lambda k: k)
        self._rank: dict = {}
        self.track = track
        self.cap = cap
        self.basis: dict = {}      # lead key -> vector
        self.combos: dict = {}     # lead key -> {generator label: coeff}
        self.generators = 0
        self.keys: set = set()

    def _key(self, k):
        r = self._rank.get(k)
        if r is None:
            r = self._rank[k] = self._order(k)
        return r

    def lead(self, vec: dict):
        return max(vec, key=self._key)

    def __len__(self):
        return len(self.basis)

    def add(self, vec: dict, label: Hashable = None) -> bool:
        """Insert a generator; returns True if the rank grew."""
        self.generators += 1
        if self.cap is not None and self.generators > self.cap:
            raise LatticeOverflow(f"lattice generator cap {self.cap} exceeded")
        v = {k: x for k, x in vec.items() if x}
        self.keys.update(v)
        c = {label: 1} if self.track else None
        while v:
            p = self.lead(v)
            u = self.basis.get(p)
            if u is None:
                if v[p] < 0:
                    v = {k: -x for k, x in v.items()}
                    if c is not None:
                        c = {k: -x for k, x in c.items()}
                self.basis[p] = v
                if c is not None:
                    self.combos[p] = c
                return True
            a, b = u[p], v[p]
            if b % a == 0:
                q = b // a
                _axpy(v, -q, u)
                if c is not None:
                    _axpy(c, -q, self.combos[p])
                continue
            g, x, y = xgcd(a, b)
            new_u = _comb(x, u, y, v)
            new_v = _comb(a // g, v, -(b // g), u)
            if c is not None:
                cu = self.combos[p]
                self.combos[p] = _comb(x, cu, y, c)
                c = _comb(a // g, c, -(b // g), cu)
            self.basis[p] = new_u
            v = new_v
        return False

    def reduce(self, vec: dict) -> tuple[dict, dict]:
        """Greedy back-substitution; returns (residual, coefficients used)."""
        v = {k: x for k, x in vec.items() if x}
        used: dict = {}
        while v:
            p = self.lead(v)
            u = self.basis.get(p)
            if u is None:
                break
            q, r = divmod(v[p], u[p])
            if r:
                break
            _axpy(v, -q, u)
            used[p] = used.get(p, 0) + q
        return v, used

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def residue(self, vec: dict) -> tuple:
        """Canonical representative of ``vec`` modulo the lattice, as sorted items.

        Each pivot coordinate is reduced into ``[0, pivot)``, so two vectors are
        congruent exactly when their residues agree.
        """
        v = {k: x for k, x in vec.items() if x}
        for p in sorted(self.basis, key=self._key, reverse=True):
            x = v.get(p)
            if x:
                u = self.basis[p]
                q = x // u[p]
                if q:
                    _axpy(v, -q, u)
        return tuple(sorted(v.items()))

    def express(self, vec: dict) -> Optional[dict]:
        """Coefficients on the inserted generators summing to ``vec``, or None."""
        if not self.track:
            raise ValueError("lattice was built without tracking")
        residual, used = self.reduce(vec)
        if residual:
            return None
        out: dict = {}
        for p, q in used.items():
            _axpy(out, q, self.combos[p])
        return out


# -- dense helpers -------------------------------------------------------------

def _columns(A: Sequence[Sequence[int]]) -> list[dict]:
    rows = len(A)
    cols = len(A[0]) if rows else 0
    return [{i: A[i][j] for i in range(rows) if A[i][j]} for j in range(cols)]


def hermite_normal_form(A: Sequence[Sequence[int]]) -> list[list[int]]:
    """Column-style Hermite normal form of an integer matrix.

    Returns the matrix H whose nonzero columns form the reduced echelon basis
    of the column lattice of A: pivots positive and descending down the rows
    (the first pivot sits in the topmost row), entries to the right of a pivot
    in its row are reduced into ``[0, pivot)``.
    """
    m = len(A)
    lat = IntegerLattice(order=lambda i: -i)
    for col in _columns(A):
        lat.add(col)
    pivots = sorted(lat.basis)          # topmost row first
    cols = [dict(lat.basis[p]) for p in pivots]
    for j, p in enumerate(pivots):
        for i in range(j):
            # reduce column i at row p by column j
            q = cols[i].get(p, 0) // cols[j][p]
            if q:
                _axpy(cols[i], -q, cols[j])
    return [[c.get(i, 0) for c in cols] for i in range(m)]


def solve(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[int]]:
    """An integer x with A x = b, or None if b is outside the column lattice."""
    lat = IntegerLattice(order=lambda i: -i, track=True)
    for j, col in enumerate(_columns(A)):
        lat.add(col, label=j)
    coeffs = lat.express({i: v for i, v in enumerate(b) if v})
    if coeffs is None:
        return None
    ncols = len(A[0]) if A else 0
    return [coeffs.get(j, 0) for j in range(ncols)]


def lattice_from(vectors: Iterable[Sequence[int]]) -> IntegerLattice:
    """Lattice spanned by dense integer vectors (keys are coordinate indices)."""
    lat = IntegerLattice(order=lambda i: -i)
    for v in vectors:
        lat.add({i: x for i, x in enumerate(v) if x})
    return lat
