"""Weight multiplicities and arithmetic in the character ring Z[X]^W."""
from __future__ import annotations

import logging
import os
import threading
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm
from pathlib import Path
from typing import Iterable, Optional

from .lincomb import LinComb
from .rootsys import RootSystem, dot

log = logging.getLogger(__name__)

CACHE_ENV = "FUSIONRING_CACHE_DIR"
CACHE_VERSION = "v1"


class UnsupportedTilting(ValueError):
    """The tilting character is not of second-alcove form."""


class CharElement(LinComb):
    """Integer combination of Weyl characters chi(lambda), lambda dominant."""

    def __init__(self, system: RootSystem = None, terms=None):
        super().__init__()
        self.system = system
        if terms:
            for k, v in dict(terms).items():
                self.add(tuple(k), v)

    def _meta(self):
        return {"system": self.system}

    def __mul__(self, other):
        if isinstance(other, CharElement):
            return char_product(self, other)
        return self.scale(other)

    __rmul__ = __mul__


def chi(system: RootSystem, weight: Iterable[int]) -> CharElement:
    """chi(weight) for an arbitrary integral weight, straightened to the basis."""
    out = CharElement(system)
    s = system.straighten(tuple(weight))
    if s is not None:
        out.add(s.weight, s.sign)
    return out


class WeightMultiset:
    """Weights of the irreducible module of highest weight ``highest``.

    Multiplicities are stored on dominant representatives only and expanded
    to full Weyl orbits on demand.
    """

    def __init__(self, system: RootSystem, highest: tuple, dominant: dict):
        self.system = system
        self.highest = highest
        self.dominant = dominant
        self._all = None

    def __getitem__(self, weight) -> int:
        return self.dominant.get(self.system.dominant_representative(weight), 0)

    def __contains__(self, weight) -> bool:
        return self[weight] > 0

    def items(self) -> list[tuple[tuple, int]]:
        """All (weight, multiplicity) pairs, every Weyl orbit expanded."""
        if self._all is None:
            out = []
            for mu, m in sorted(self.dominant.items()):
                out.extend((nu, m) for nu in self.system.orbit(mu))
            self._all = out
        return self._all

    def total(self) -> int:
        return sum(m for _, m in self.items())

    def __len__(self):
        return len(self.items())

    def as_dict(self) -> dict:
        return dict(self.items())


# -- Freudenthal -------------------------------------------------------------

_MEMO: dict = {}
_MEMO_LOCK = threading.Lock()


def _scaled_gram(system: RootSystem):
    g = system.gram
    den = reduce(lcm, (Fraction(x).denominator for row in g for x in row), 1)
    return [[int(x * den) for x in row] for row in g]


def dominant_weights_below(system: RootSystem, highest: tuple) -> list[tuple]:
    """Dominant weights mu <= highest, ordered by increasing depth below it."""
    seen = {highest}
    layer = [highest]
    out = [highest]
    while layer:
        nxt = []
        for mu in layer:
            for a in system.positive_roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if nu not in seen and system.is_dominant(nu):
                    seen.add(nu)
                    nxt.append(nu)
        out.extend(nxt)
        layer = nxt
    out.sort(key=lambda mu: (system.height(tuple(h - m for h, m in zip(highest, mu))), mu))
    return out


def _freudenthal(system: RootSystem, highest: tuple) -> dict:
    G = _scaled_gram(system)
    n = system.dim

    def ip(u, v):
        return sum(u[i] * G[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j])

    rho = system.rho
    top = tuple(a + b for a, b in zip(highest, rho))
    top_norm = ip(top, top)
    mult = {}
    dom_cache = {}

    def m_of(x):
        d = dom_cache.get(x)
        if d is None:
            d = system.dominant_representative(x)
            dom_cache[x] = d
        return mult.get(d, 0)

    roots = system.positive_roots
    for mu in dominant_weights_below(system, highest):
        if mu == highest:
            mult[mu] = 1
            continue
        num = 0
        for a in roots:
            j = 1
            while True:
                x = tuple(u + j * v for u, v in zip(mu, a))
                m = m_of(x)
                if not m:
                    break
                num += m * ip(x, a)
                j += 1
        shifted = tuple(a + b for a, b in zip(mu, rho))
        den = top_norm - ip(shifted, shifted)
        value = Fraction(2 * num, den)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu} in L({highest})")
        if value:
            mult[mu] = int(value)
    return mult


def weight_multiplicities(system: RootSystem, highest) -> WeightMultiset:
    """Weight multiplicities of the irreducible module L(highest) (Freudenthal)."""
    highest = tuple(highest)
    if not system.is_dominant(highest):
        raise ValueError(f"{highest} is not dominant for {system.name}")
    key = (system, highest)
    ws = _MEMO.get(key)
    if ws is not None:
        return ws
    dom = _disk_cache_lookup(system, highest)
    if dom is None:
        dom = _freudenthal(system, highest)
        _disk_cache_store(system, highest, dom)
    ws = WeightMultiset(system, highest, dom)
    with _MEMO_LOCK:
        _MEMO.setdefault(key, ws)
    return _MEMO[key]


def weyl_dimension(system: RootSystem, highest) -> int:
    """Weyl's product formula."""
    x = tuple(a + b for a, b in zip(highest, system.rho))
    num = den = 1
    for c in system.positive_coroots:
        num *= dot(x, c)
        den *= dot(system.rho, c)
    q = Fraction(num, den)
    assert q.denominator == 1
    return int(q)


# -- products ----------------------------------------------------------------

@lru_cache(maxsize=100_000)
def _basis_product(system: RootSystem, lam: tuple, mu: tuple) -> tuple:
    # iterate over the weights of the smaller factor
    if weyl_dimension(system, lam) > weyl_dimension(system, mu):
        lam, mu = mu, lam
    out = LinComb()
    straighten = system.straighten
    for eta, m in weight_multiplicities(system, lam).items():
        s = straighten(tuple(a + b for a, b in zip(mu, eta)))
        if s is not None:
            out.add(s.weight, s.sign * m)
    return tuple(sorted(out.items()))


def char_product(a: CharElement, b: CharElement) -> CharElement:
    """Product in Z[X]^W, by Brauer-Klimyk on basis elements."""
    system = a.system or b.system
    out = CharElement(system)
    for lam, x in a.items():
        for mu, y in b.items():
            for nu, c in _basis_product(system, lam, mu):
                out.add(nu, x * y * c)
    return out


def char_dimension(a: CharElement) -> int:
    return sum(c * weyl_dimension(a.system, lam) for lam, c in a.items())


def tilting_char_second_alcove(mu, alcove) -> CharElement:
    """Character of the tilting module T(mu) for mu in the second alcove.

    For mu on the upper wall of the fundamental alcove T(mu) = Delta(mu);
    beyond it, T(mu) has Weyl factors Delta(mu) and Delta(s0 . mu), where s0
    is the reflection in the affine wall.
    """
    system = alcove.system
    mu = tuple(mu)
    if not system.is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")
    if alcove.contains(mu):
        raise ValueError(f"{mu} lies in the fundamental alcove")
    x = tuple(a + b for a, b in zip(mu, system.rho))
    level = dot(x, alcove.theta_coroot)
    out = chi(system, mu)
    if level == alcove.wall:
        return out
    y = tuple(u - (level - alcove.wall) * v for u, v in zip(x, alcove.theta))
    if any(dot(y, c) < 0 for c in system.simple_coroots):
        raise UnsupportedTilting(f"T({mu}) lies beyond the second alcove of {alcove}")
    return out + chi(system, tuple(u - r for u, r in zip(y, system.rho)))


# -- disk cache --------------------------------------------------------------

_CACHE_DIR: Optional[Path] = None
_DISK_LOCK = threading.Lock()


def set_cache_dir(path) -> None:
    """Override the multiplicity cache directory (``None`` reverts to the env var)."""
    global _CACHE_DIR
    _CACHE_DIR = Path(path) if path else None


def cache_dir() -> Optional[Path]:
    if _CACHE_DIR is not None:
        return _CACHE_DIR
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def cache_path(system: RootSystem) -> Optional[Path]:
    d = cache_dir()
    if d is None:
        return None
    return d / f"mult-{system.type}-{system.rank}.txt"


def cache_header(system: RootSystem) -> str:
    return f"fusionring-mult {CACHE_VERSION} {system.type} {system.rank}"


def _fmt(w):
    return ",".join(map(str, w))


def read_cache_file(system: RootSystem, path: Path) -> Optional[dict]:
    """Parse a cache file; ``None`` if the header or any line is malformed."""
    try:
        lines = path.read_text().splitlines()
    except OSError:
        return None
    if not lines or lines[0].strip() != cache_header(system):
        return None
    table: dict = {}
    try:
        for line in lines[1:]:
            if not line.strip():
                continue
            lam, mu, m = line.split()
            lam = tuple(int(v) for v in lam.split(","))
            mu = tuple(int(v) for v in mu.split(","))
            if len(lam) != system.dim or len(mu) != system.dim:
                return None
            table.setdefault(lam, {})[mu] = int(m)
    except ValueError:
        return None
    return table


def _disk_cache_lookup(system, highest):
    path = cache_path(system)
    if path is None or not path.exists():
        return None
    table = read_cache_file(system, path)
    if table is None:
        log.warning("ignoring corrupt multiplicity cache %s", path)
        return None
    entry = table.get(highest)
    if entry is None or entry.get(highest) != 1:
        return None
    return entry


def _disk_cache_store(system, highest, dom):
    path = cache_path(system)
    if path is None:
        return
    with _DISK_LOCK:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fresh = not path.exists() or read_cache_file(system, path) is None
            mode = "w" if fresh else "a"
            with path.open(mode) as fh:
                if fresh:
                    fh.write(cache_header(system) + "\n")
                for mu, m in sorted(dom.items()):
                    fh.write(f"{_fmt(highest)} {_fmt(mu)} {m}\n")
        except OSError as exc:
            log.warning("could not write multiplicity cache %s: %s", path, exc)


def clear_memory_caches() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()
    _basis_product.cache_clear()
