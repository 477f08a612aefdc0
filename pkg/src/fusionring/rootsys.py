"""Root data for the classical types, G2 and gl_n, plus the finite dot action.

Weights are plain tuples of integers.  For the semisimple types (A, B, C, D,
G2) the coordinates are the coefficients in the basis of fundamental weights,
so ``(2, 0, 1)`` means ``2*w1 + w3``.  For ``gl`` the coordinates are the
epsilon-coordinates ``(l1, ..., ln)``.  Coroots are stored as tuples in the
dual coordinates, so that the pairing <weight, coroot> is a dot product.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import NamedTuple, Optional, Sequence

Weight = tuple

SUPPORTED = ("A", "B", "C", "D", "G2", "gl")


class RootSystemError(ValueError):
    """Unsupported type/rank pair or malformed weight."""


class Signed(NamedTuple):
    """A weight together with a sign; ``None`` stands for zero."""

    sign: int
    weight: Weight


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _cartan(type_: str, n: int) -> list[list[int]]:
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2
    if type_ == "G2":
        return [[2, -1], [-3, 2]]
    if type_ == "D":
        for i in range(n - 2):
            if i + 1 <= n - 2:
                A[i][i + 1] = A[i + 1][i] = -1
        A[n - 3][n - 1] = A[n - 1][n - 3] = -1
        A[n - 2][n - 3] = A[n - 3][n - 2] = -1
        return A
    for i in range(n - 1):
        A[i][i + 1] = A[i + 1][i] = -1
    if type_ == "B":
        A[n - 2][n - 1] = -2
    elif type_ == "C":
        A[n - 1][n - 2] = -2
    return A


def _symmetrizers(type_: str, n: int) -> list[int]:
    if type_ == "B":
        return [2] * (n - 1) + [1]
    if type_ == "C":
        return [1] * (n - 1) + [2]
    if type_ == "G2":
        return [1, 3]
    return [1] * n


def _inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _weyl_order(type_: str, n: int) -> int:
    if type_ in ("A", "gl"):
        return factorial(n + 1 if type_ == "A" else n)
    if type_ in ("B", "C"):
        return 2 ** n * factorial(n)
    if type_ == "D":
        return 2 ** (n - 1) * factorial(n)
    return 12


class RootSystem:
    """Immutable root datum.

    Use :func:`build_root_system` rather than instantiating directly.
    """

    def __init__(self, type_: str, rank: int):
        self.type = type_
        self.rank = rank
        if type_ == "gl":
            self._init_gl(rank)
        else:
            self._init_semisimple(type_, rank)
        self.positive_roots = tuple(r for r, _ in self._pos)
        self.positive_coroots = tuple(c for _, c in self._pos)
        self.weyl_order = _weyl_order(type_, rank)

    # -- construction ---------------------------------------------------
    def _init_semisimple(self, type_, n):
        A = _cartan(type_, n)
        d = _symmetrizers(type_, n)
        self.cartan = tuple(tuple(r) for r in A)
        self.symmetrizers = tuple(d)
        self.dim = n
        self.simple_roots = tuple(tuple(r) for r in A)
        self.simple_coroots = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.rho = (1,) * n
        self.fundamental_weights = self.simple_coroots
        Ainv = _inverse([[Fraction(x) for x in r] for r in A])
        self._to_root = Ainv
        # (w_i, w_j) = (A^-1)_{ji} d_i
        self.gram = tuple(tuple(Ainv[j][i] * d[i] for j in range(n)) for i in range(n))

        # positive roots in simple-root coordinates, by height
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = list(simple)
        seen = set(roots)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                bw = self._from_root(beta)
                for i in range(n):
                    # alpha_i-string through beta: p - q = <beta, alpha_i^vee>
                    p = 0
                    probe = list(beta)
                    while True:
                        probe[i] -= 1
                        if tuple(probe) in seen:
                            p += 1
                        else:
                            break
                    q = p - bw[i]
                    if q > 0:
                        gamma = list(beta)
                        gamma[i] += 1
                        gamma = tuple(gamma)
                        if gamma not in seen:
                            seen.add(gamma)
                            roots.append(gamma)
                            nxt.append(gamma)
            layer = nxt
        pos = []
        for c in roots:
            norm = sum(c[i] * c[j] * A[i][j] * d[j] for i in range(n) for j in range(n))
            d_beta = norm // 2
            coroot = tuple(c[i] * d[i] // d_beta for i in range(n))
            pos.append((self._from_root(c), coroot, c))
        pos.sort(key=lambda t: (sum(t[2]), t[2]))
        self._pos = [(r, c) for r, c, _ in pos]
        self._root_coords_list = [c for _, _, c in pos]

    def _init_gl(self, n):
        if n < 1:
            raise RootSystemError("gl_n needs n >= 1")
        self.dim = n
        A = _cartan("A", n - 1) if n > 1 else []
        self.cartan = tuple(tuple(r) for r in A)
        self.symmetrizers = (1,) * (n - 1)

        def eps(i, j):
            v = [0] * n
            v[i] += 1
            v[j] -= 1
            return tuple(v)

        self.simple_roots = tuple(eps(i, i + 1) for i in range(n - 1))
        self.simple_coroots = self.simple_roots
        self.rho = tuple(n - 1 - i for i in range(n))
        self.fundamental_weights = tuple(tuple(int(j <= i) for j in range(n)) for i in range(n))
        self.gram = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        pos = [(eps(i, j), eps(i, j), j - i, i) for i in range(n) for j in range(i + 1, n)]
        pos.sort(key=lambda t: (t[2], t[3]))
        self._pos = [(r, c) for r, c, _, _ in pos]

    def _from_root(self, c):
        """Simple-root coordinates -> weight coordinates."""
        if self.type == "gl":
            n = self.dim
            return tuple((c[i] if i < n - 1 else 0) - (c[i - 1] if i > 0 else 0) for i in range(n))
        n = self.rank
        return tuple(sum(c[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    # -- basic data -----------------------------------------------------
    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def name(self) -> str:
        return f"gl_{self.rank}" if self.type == "gl" else f"{self.type}{self.rank}" if self.type != "G2" else "G2"

    def __repr__(self):
        return f"RootSystem({self.type!r}, {self.rank})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.type, self.rank) == (other.type, other.rank)

    def __hash__(self):
        return hash((self.type, self.rank))

    def __reduce__(self):
        return (build_root_system, (self.type, self.rank))

    def root_coords(self, x: Sequence[int]) -> tuple:
        """Coefficients of ``x`` (a weight in the root span) in the simple roots."""
        if self.type == "gl":
            out, s = [], 0
            for v in x[:-1]:
                s += v
                out.append(Fraction(s))
            return tuple(out)
        n = self.rank
        return tuple(sum(Fraction(x[i]) * self._to_root[i][j] for i in range(n)) for j in range(n))

    def height(self, x: Sequence[int]) -> Fraction:
        return sum(self.root_coords(x))

    def coroot_simple_coords(self, coroot: Sequence[int]) -> tuple:
        """Coefficients of a coroot in the simple coroots."""
        if self.type == "gl":
            return self.root_coords(coroot)
        return tuple(coroot)

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(self.dim) for j in range(self.dim) if u[i] and v[j])

    def pairing(self, weight: Sequence[int], coroot: Sequence[int]) -> int:
        """<weight, coroot>; both must come from this root system."""
        if len(weight) != self.dim or len(coroot) != self.dim:
            raise RootSystemError(
                f"weight/coroot of length {len(weight)}/{len(coroot)} do not belong to {self.name}")
        return dot(weight, coroot)

    def coroot_of(self, root: Sequence[int]) -> tuple:
        i = self.positive_roots.index(tuple(root))
        return self.positive_coroots[i]

    def is_short(self, root) -> bool:
        return self.inner(root, root) == 2

    @cached_property
    def highest_root(self) -> tuple:
        """beta_0, the highest (long) root."""
        return max(self.positive_roots, key=self.height)

    @cached_property
    def highest_short_root(self) -> tuple:
        """alpha_0, the highest short root."""
        return max((r for r in self.positive_roots if self.is_short(r)), key=self.height)

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(dot(weight, c) >= 0 for c in self.simple_coroots)

    def zero(self) -> tuple:
        return (0,) * self.dim

    # -- epsilon view ---------------------------------------------------
    def to_eps(self, weight: Sequence[int]) -> tuple:
        """Epsilon-coordinates (rationals) of a weight; not defined for G2."""
        t, n = self.type, self.rank
        if t == "gl":
            return tuple(Fraction(v) for v in weight)
        if t == "G2":
            raise RootSystemError("no epsilon-coordinates for G2")
        m = [Fraction(v) for v in weight]
        if t == "A":
            return tuple(sum(m[i:], Fraction(0)) for i in range(n)) + (Fraction(0),)
        if t == "C":
            return tuple(sum(m[i:], Fraction(0)) for i in range(n))
        if t == "B":
            half = m[n - 1] / 2
            return tuple(sum(m[i:n - 1], Fraction(0)) + half for i in range(n))
        # D
        a, b = m[n - 2], m[n - 1]
        out = [sum(m[i:n - 2], Fraction(0)) + (a + b) / 2 for i in range(n - 1)]
        out.append((b - a) / 2)
        return tuple(out)

    def from_eps(self, eps: Sequence) -> tuple:
        """Inverse of :meth:`to_eps`; raises if the result is not integral."""
        t, n = self.type, self.rank
        e = [Fraction(v) for v in eps]
        if t == "gl":
            out = e
        elif t == "A":
            if len(e) != n + 1:
                raise RootSystemError(f"sl_{n + 1} expects {n + 1} eps-coordinates")
            out = [e[i] - e[i + 1] for i in range(n)]
        elif t == "C":
            out = [e[i] - e[i + 1] for i in range(n - 1)] + [e[n - 1]]
        elif t == "B":
            out = [e[i] - e[i + 1] for i in range(n - 1)] + [2 * e[n - 1]]
        elif t == "D":
            out = [e[i] - e[i + 1] for i in range(n - 1)] + [e[n - 2] + e[n - 1]]
        else:
            raise RootSystemError("no epsilon-coordinates for G2")
        if len(out) != self.dim or any(v.denominator != 1 for v in out):
            raise RootSystemError(f"eps-coordinates {tuple(eps)} are not an integral weight of {self.name}")
        return tuple(int(v) for v in out)

    # -- Weyl group -----------------------------------------------------
    def reflect(self, x: Sequence[int], i: int) -> tuple:
        """Linear simple reflection s_i."""
        c = dot(x, self.simple_coroots[i])
        if not c:
            return tuple(x)
        a = self.simple_roots[i]
        return tuple(u - c * v for u, v in zip(x, a))

    def dominant_representative(self, x: Sequence[int]) -> tuple:
        """Dominant element of the linear W-orbit of ``x``."""
        x = tuple(x)
        while True:
            for i, c in enumerate(self.simple_coroots):
                if dot(x, c) < 0:
                    x = self.reflect(x, i)
                    break
            else:
                return x

    def orbit(self, weight: Sequence[int]) -> list[tuple]:
        """Linear W-orbit of ``weight``."""
        start = tuple(weight)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for i in range(self.semisimple_rank):
                y = self.reflect(x, i)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return sorted(seen)

    @cached_property
    def weyl_group_matrices(self) -> tuple:
        """All elements of W as (matrix, sign); matrices act on column weight vectors."""
        n = self.dim
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        # a point with trivial stabiliser identifies group elements
        probe = tuple(self.rho[i] * 1 + 0 for i in range(n))

        def apply(M, x):
            return tuple(dot(row, x) for row in M)

        gens = []
        for i in range(self.semisimple_rank):
            cols = [self.reflect(tuple(int(r == c) for r in range(n)), i) for c in range(n)]
            gens.append(tuple(tuple(cols[c][r] for c in range(n)) for r in range(n)))
        elems = {apply(ident, probe): (ident, 1)}
        frontier = [(ident, 1)]
        while frontier:
            nxt = []
            for M, s in frontier:
                for G in gens:
                    P = tuple(tuple(dot(G[r], [M[k][c] for k in range(n)]) for c in range(n)) for r in range(n))
                    key = apply(P, probe)
                    if key not in elems:
                        elems[key] = (P, -s)
                        nxt.append((P, -s))
            frontier = nxt
        if len(elems) != self.weyl_order:
            raise AssertionError(f"enumerated {len(elems)} Weyl group elements, expected {self.weyl_order}")
        return tuple(elems.values())

    # -- dot action -----------------------------------------------------
    def dot_reflect(self, weight: Sequence[int], i: int) -> tuple:
        """s_i . weight = s_i(weight + rho) - rho."""
        c = dot(weight, self.simple_coroots[i]) + 1
        a = self.simple_roots[i]
        return tuple(u - c * v for u, v in zip(weight, a))

    def straighten(self, weight: Sequence[int]) -> Optional[Signed]:
        """Signed dominant representative of the dot-orbit of ``weight``.

        Returns ``None`` when ``weight + rho`` lies on a reflecting hyperplane,
        otherwise ``Signed(sign, w . weight)`` with ``w . weight`` dominant and
        ``sign = (-1)^l(w)``.
        """
        x = [u + r for u, r in zip(weight, self.rho)]
        sign = 1
        heights = [abs(dot(x, c)) for c in self.positive_coroots]
        guard = self.weyl_order * (max(heights, default=0) + 1)
        steps = 0
        coroots, roots = self.simple_coroots, self.simple_roots
        while True:
            for i, c in enumerate(coroots):
                p = dot(x, c)
                if p < 0:
                    a = roots[i]
                    x = [u - p * v for u, v in zip(x, a)]
                    sign = -sign
                    steps += 1
                    break
                if p == 0:
                    return None
            else:
                return Signed(sign, tuple(u - r for u, r in zip(x, self.rho)))
            if steps > guard:
                raise RuntimeError(f"straightening of {tuple(weight)} exceeded {guard} reflections")


_CACHE: dict = {}


def build_root_system(type_: str, rank: int = None) -> RootSystem:
    """Return the (cached) root system of the given type.

    ``("A", n)`` is sl_{n+1}, ``("gl", n)`` is gl_n acting on Z^n, and G2 has
    rank 2 (the rank argument may be omitted).
    """
    t = type_.upper() if type_.lower() != "gl" else "gl"
    if t == "G2":
        if rank not in (None, 2):
            raise RootSystemError("G2 has rank 2")
        rank = 2
    if rank is None:
        raise RootSystemError(f"type {type_} needs a rank")
    ok = {"A": 1, "B": 2, "C": 2, "D": 4, "G2": 2, "gl": 1}
    if t not in ok or rank < ok[t]:
        raise RootSystemError(f"unsupported type/rank pair ({type_}, {rank})")
    key = (t, rank)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(t, rank)
    return _CACHE[key]


def straighten_dominant(system: RootSystem, weight: Sequence[int]) -> Optional[Signed]:
    return system.straighten(weight)


def parse_weight(system: RootSystem, text: str) -> tuple:
    """Parse ``"2,0,1"`` (fundamental-weight coordinates) or ``"eps:3,1,0"``."""
    text = text.strip()
    if text.startswith("eps:"):
        parts = [Fraction(p) for p in text[4:].split(",") if p.strip()]
        return system.from_eps(parts)
    try:
        coords = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise RootSystemError(f"cannot parse weight {text!r}") from None
    if len(coords) != system.dim:
        raise RootSystemError(f"weight {text!r} has {len(coords)} coordinates, {system.name} needs {system.dim}")
    return coords


def format_weight(weight: Sequence[int]) -> str:
    return ",".join(str(v) for v in weight)
