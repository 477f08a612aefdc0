"""The fundamental alcove at a root of unity and the signed projection onto it."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .rootsys import RootSystem, Signed, dot


class AlcoveError(ValueError):
    """Empty alcove or contradictory regime."""


@dataclass(frozen=True)
class Alcove:
    """Alcove data for a root system and the order ``ell`` of q.

    The open alcove is ``{lam dominant : <lam + rho, theta_coroot> < wall}``,
    equivalently ``<lam, theta_coroot> <= level``.
    """

    system: RootSystem
    ell: int
    regime: str
    theta: tuple
    theta_coroot: tuple
    wall: int
    level: int

    @property
    def k(self) -> int:
        return self.level

    @property
    def theta_is_long(self) -> bool:
        return self.theta == self.system.highest_root and not (
            self.system.highest_root == self.system.highest_short_root)

    def __str__(self):
        return f"{self.system.name}, ell={self.ell} ({self.regime}, k={self.level})"

    def contains(self, weight) -> bool:
        """Membership in the open fundamental alcove."""
        return self.system.is_dominant(weight) and dot(weight, self.theta_coroot) <= self.level

    def in_closure(self, weight) -> bool:
        """Dominant and on or below the affine wall."""
        return self.system.is_dominant(weight) and dot(weight, self.theta_coroot) <= self.level + 1

    def on_upper_wall(self, weight) -> bool:
        return self.system.is_dominant(weight) and dot(weight, self.theta_coroot) == self.level + 1

    def affine_reflect(self, weight) -> tuple:
        """Dot action of the reflection in the affine wall."""
        x = tuple(a + b for a, b in zip(weight, self.system.rho))
        c = dot(x, self.theta_coroot) - self.wall
        return tuple(u - c * v - r for u, v, r in zip(x, self.theta, self.system.rho))

    def wall_reflections(self) -> list:
        """Dot actions of the n simple reflections followed by the affine one."""
        R = self.system
        out = [lambda w, i=i: R.dot_reflect(w, i) for i in range(R.semisimple_rank)]
        out.append(self.affine_reflect)
        return out

    def project(self, weight) -> Optional[Signed]:
        return project(weight, self)

    def enumerate(self, sl: bool = False) -> list[tuple]:
        return enumerate_alcove(self, sl=sl)


def _level_data(system: RootSystem, ell: int):
    """(regime, theta, wall) for every type and regime."""
    t = system.type
    odd = ell % 2 == 1
    if t == "G2":
        if ell % 3 == 0:
            if not odd and ell % 6:
                raise AlcoveError("G2 with even ell divisible by 3 needs 6 | ell")
            return ("3|ell, odd" if odd else "3|ell, even"), system.highest_root, (ell // 3 if odd else ell // 6)
        return ("odd" if odd else "even"), system.highest_short_root, (ell if odd else ell // 2)
    if odd:
        return "odd", system.highest_short_root, ell
    return "even", system.highest_root, ell // 2


def make_alcove(system: RootSystem, ell: int) -> Alcove:
    """Alcove data for q of order ``ell``."""
    if ell < 1:
        raise AlcoveError("ell must be positive")
    regime, theta, wall = _level_data(system, ell)
    theta_coroot = system.coroot_of(theta)
    level = wall - dot(system.rho, theta_coroot) - 1
    if level < 0:
        raise AlcoveError(f"the fundamental alcove of {system.name} at ell={ell} is empty")
    return Alcove(system, ell, regime, theta, theta_coroot, wall, level)


def project(weight, alcove: Alcove) -> Optional[Signed]:
    """Signed projection onto the fundamental alcove under the dot action of W_ell.

    Returns ``None`` when ``weight + rho`` lies on a wall of W_ell, otherwise the
    alcove representative with sign ``(-1)^(number of reflections)``.
    """
    R = alcove.system
    rho = R.rho
    x = [a + b for a, b in zip(weight, rho)]
    coroots, roots = R.simple_coroots, R.simple_roots
    tc, th, L = alcove.theta_coroot, alcove.theta, alcove.wall
    span = max((abs(dot(x, c)) for c in R.positive_coroots), default=0)
    guard = 4 * R.weyl_order * (1 + span // L + 1)
    sign = 1
    steps = 0
    while True:
        for i, c in enumerate(coroots):
            p = dot(x, c)
            if p < 0:
                a = roots[i]
                x = [u - p * v for u, v in zip(x, a)]
                break
        else:
            p = dot(x, tc) - L
            if p > 0:
                x = [u - p * v for u, v in zip(x, th)]
            else:
                if p == 0 or any(dot(x, c) == 0 for c in coroots):
                    return None
                return Signed(sign, tuple(u - r for u, r in zip(x, rho)))
        sign = -sign
        steps += 1
        if steps > guard:
            raise RuntimeError(f"alcove walk for {tuple(weight)} exceeded {guard} reflections; this is a bug")


def enumerate_alcove(alcove: Alcove, sl: bool = False) -> list[tuple]:
    """Weights of the open alcove, sorted lexicographically.

    For gl_n the alcove is infinite; pass ``sl=True`` to get the transversal of
    weights with last coordinate 0.
    """
    R = alcove.system
    if R.type == "gl":
        if not sl:
            raise AlcoveError("the gl_n alcove is infinite; pass sl=True for the l_n = 0 transversal")
        n, k = R.dim, alcove.level
        if n == 1:
            return [(0,)]
        out = []

        def rec(prefix, bound):
            if len(prefix) == n - 1:
                out.append(tuple(prefix) + (0,))
                return
            for v in range(bound + 1):
                rec(prefix + [v], v)

        # l_1 - l_n <= k with l_n = 0
        for first in range(k + 1):
            rec([first], first)
        return sorted(set(out))
    c = alcove.theta_coroot
    k = alcove.level
    out = []

    def rec(prefix, budget):
        i = len(prefix)
        if i == R.dim:
            out.append(tuple(prefix))
            return
        for v in range(budget // c[i] + 1):
            rec(prefix + [v], budget - v * c[i])

    rec([], k)
    return sorted(out)


def brute_force_alcove(alcove: Alcove) -> list[tuple]:
    """Box search over the defining inequalities; test oracle for enumerate_alcove."""
    R = alcove.system
    k = alcove.level
    pts = [w for w in product(range(k + 1), repeat=R.dim)
           if R.is_dominant(w) and dot(w, alcove.theta_coroot) <= k]
    return sorted(pts)
