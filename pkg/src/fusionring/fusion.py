"""The fusion ring: products of alcove weights, structure constants, and oracles."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .alcove import Alcove, enumerate_alcove, project
from .charring import CharElement, weight_multiplicities, weyl_dimension
from .hnf import IntegerLattice
from .lincomb import LinComb
from .rootsys import dot

DEFAULT_TABLE_CAP = 10 ** 7


class AlcoveDomainError(ValueError):
    """A weight argument lies outside the fundamental alcove."""


class TableCapExceeded(RuntimeError):
    """|alcove|^3 exceeds the configured cap."""


class FusionElement(LinComb):
    """Integer combination of alcove basis elements [lambda]."""

    def __init__(self, alcove: Alcove = None, terms=None):
        super().__init__()
        self.alcove = alcove
        if terms:
            for k, v in dict(terms).items():
                self.add(tuple(k), v)

    def _meta(self):
        return {"alcove": self.alcove}

    def __mul__(self, other):
        if isinstance(other, FusionElement):
            out = FusionElement(self.alcove)
            for lam, x in self.items():
                for mu, y in other.items():
                    for nu, c in fuse(lam, mu, self.alcove).items():
                        out.add(nu, x * y * c)
            return out
        return self.scale(other)

    __rmul__ = __mul__


def basis(alcove: Alcove) -> list[tuple]:
    """Alcove basis; for gl_n the l_n = 0 transversal."""
    return enumerate_alcove(alcove, sl=alcove.system.type == "gl")


def _check(alcove: Alcove, *weights) -> None:
    for w in weights:
        if not alcove.contains(w):
            raise AlcoveDomainError(f"{tuple(w)} is not in the fundamental alcove of {alcove}")


def fuse(lam, mu, alcove: Alcove) -> FusionElement:
    """[lam] * [mu]: push the weights of L(lam), shifted by mu, through the projection."""
    lam, mu = tuple(lam), tuple(mu)
    _check(alcove, lam, mu)
    return FusionElement(alcove, _fuse_cached(alcove, lam, mu))


@lru_cache(maxsize=200_000)
def _fuse_cached(alcove: Alcove, lam: tuple, mu: tuple) -> tuple:
    R = alcove.system
    if weyl_dimension(R, lam) > weyl_dimension(R, mu):
        lam, mu = mu, lam
    out = LinComb()
    for eta, m in weight_multiplicities(R, lam).items():
        p = project(tuple(a + b for a, b in zip(mu, eta)), alcove)
        if p is not None:
            out.add(p.weight, p.sign * m)
    return tuple(sorted(out.items()))


def structure_constant(lam, mu, nu, alcove: Alcove) -> int:
    """N_{lam, mu}^{nu}, the coefficient of [nu] in [lam] * [mu]."""
    _check(alcove, nu)
    return fuse(lam, mu, alcove).get(tuple(nu), 0)


# -- the independent route -------------------------------------------------------

@lru_cache(maxsize=64)
def translation_lattice(alcove: Alcove) -> IntegerLattice:
    """L * Z(W theta): the translation part of the affine Weyl group W_ell."""
    R = alcove.system
    lat = IntegerLattice(order=lambda i: -i)
    for v in R.orbit(alcove.theta):
        lat.add({i: alcove.wall * x for i, x in enumerate(v) if x})
    return lat


def _residue(lat: IntegerLattice, x) -> tuple:
    return lat.residue({i: v for i, v in enumerate(x) if v})


def fuse_alt_row(lam, mu, alcove: Alcove) -> dict:
    """All coefficients of [lam] * [mu] computed by summing over the group W_ell.

    For each weight eta of L(lam) and each w in W the element w(mu + eta + rho)
    is compared with nu + rho modulo the translation lattice; a match means
    nu = x . (mu + eta) for an element x of W_ell with sign sgn(w).  This never
    uses the alcove walk.
    """
    lam, mu = tuple(lam), tuple(mu)
    R = alcove.system
    for w in (lam, mu):
        if not alcove.in_closure(w):
            raise AlcoveDomainError(f"{w} is not in the closed alcove of {alcove}")
    lat = translation_lattice(alcove)
    rho = R.rho
    mats = R.weyl_group_matrices
    acc: dict = {}
    for eta, m in weight_multiplicities(R, lam).items():
        x = tuple(a + b + r for a, b, r in zip(mu, eta, rho))
        for M, s in mats:
            y = tuple(dot(row, x) for row in M)
            key = _residue(lat, y)
            acc[key] = acc.get(key, 0) + s * m
    out = {}
    for nu in basis(alcove):
        key = _residue(lat, tuple(a + r for a, r in zip(nu, rho)))
        c = acc.get(key, 0)
        if c:
            out[nu] = c
    return out


def fuse_alt(lam, mu, nu, alcove: Alcove) -> int:
    """Structure constant by the alternating sum over W_ell (oracle route)."""
    _check(alcove, nu)
    nu = tuple(nu)
    if alcove.system.type == "gl":
        # the transversal only covers l_n = 0; compare against the full row
        return _gl_alt(lam, mu, nu, alcove)
    return fuse_alt_row(lam, mu, alcove).get(nu, 0)


def _gl_alt(lam, mu, nu, alcove):
    lam, mu = tuple(lam), tuple(mu)
    R = alcove.system
    lat = translation_lattice(alcove)
    rho = R.rho
    target = _residue(lat, tuple(a + r for a, r in zip(nu, rho)))
    total = 0
    for eta, m in weight_multiplicities(R, lam).items():
        x = tuple(a + b + r for a, b, r in zip(mu, eta, rho))
        for M, s in R.weyl_group_matrices:
            if _residue(lat, tuple(dot(row, x) for row in M)) == target:
                total += s * m
    return total


# -- quotient map and tables -------------------------------------------------------

def quotient_from_char(a: CharElement, alcove: Alcove) -> FusionElement:
    """Image of a character under Z[X]^W -> fusion ring, chi(lam) -> pi(lam)."""
    out = FusionElement(alcove)
    for lam, c in a.items():
        p = project(lam, alcove)
        if p is not None:
            out.add(p.weight, p.sign * c)
    return out


def _sl_reduce_weight(w):
    s = w[-1]
    return tuple(v - s for v in w)


def iter_fusion_table(alcove: Alcove) -> Iterator[tuple[tuple, tuple, FusionElement]]:
    """Stream (lam, mu, [lam]*[mu]) over all ordered basis pairs.

    For gl_n the products of transversal weights are reduced back onto the
    transversal by subtracting multiples of the determinant weight.
    """
    B = basis(alcove)
    gl = alcove.system.type == "gl"
    for lam in B:
        for mu in B:
            prod = fuse(lam, mu, alcove)
            if gl:
                red = FusionElement(alcove)
                for nu, c in prod.items():
                    red.add(_sl_reduce_weight(nu), c)
                prod = red
            yield lam, mu, prod


def fusion_table(alcove: Alcove, cap: Optional[int] = DEFAULT_TABLE_CAP) -> dict:
    """Sparse table {(lam, mu): [lam]*[mu]} over the alcove basis."""
    n = len(basis(alcove))
    if cap is not None and n ** 3 > cap:
        raise TableCapExceeded(f"|alcove|^3 = {n ** 3} exceeds the cap {cap}; stream with iter_fusion_table")
    return {(lam, mu): prod for lam, mu, prod in iter_fusion_table(alcove)}


def table_records(items) -> Iterator[dict]:
    """JSON-ready records {"lambda", "mu", "terms"} from (lam, mu, product) triples."""
    for lam, mu, prod in items:
        yield {
            "lambda": list(lam),
            "mu": list(mu),
            "terms": [{"nu": list(nu), "coeff": c} for nu, c in sorted(prod.items())],
        }


def tsv_lines(items, alcove: Alcove) -> Iterator[str]:
    """One ``lam mu nu N`` line per triple, zeros included."""
    B = basis(alcove)
    fmt = lambda w: ",".join(map(str, w))
    for lam, mu, prod in items:
        for nu in B:
            yield f"{fmt(lam)}\t{fmt(mu)}\t{fmt(nu)}\t{prod.get(nu, 0)}"


def clear_cache() -> None:
    _fuse_cached.cache_clear()
    translation_lattice.cache_clear()
