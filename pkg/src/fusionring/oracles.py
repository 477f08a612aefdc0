"""Slow, independent reference computations used to cross-check the fast paths."""
from __future__ import annotations

from itertools import combinations

from .alcove import Alcove
from .rootsys import RootSystem, dot


def _divide_one_minus(f: dict, alpha: tuple) -> dict:
    """g with g * (1 - e^{-alpha}) = f, assuming exact divisibility.

    Along each alpha-string g(x) = f(x) + g(x + alpha), accumulated from the
    top of the string down to its lowest support point.
    """
    i = next(j for j, a in enumerate(alpha) if a)
    strings: dict = {}
    for x, c in f.items():
        t = x[i] // alpha[i]
        base = tuple(u - t * a for u, a in zip(x, alpha))
        strings.setdefault(base, {})[t] = c
    g = {}
    for base, pts in strings.items():
        run = 0
        for t in range(max(pts), min(pts) - 1, -1):
            run += pts.get(t, 0)
            if run:
                g[tuple(u + t * a for u, a in zip(base, alpha))] = run
        if run:
            raise ArithmeticError("alternating sum is not divisible by the Weyl denominator")
    return g


def weyl_character(system: RootSystem, highest) -> dict:
    """All weight multiplicities of L(highest) from the Weyl character formula.

    The alternating sum over W of e^{w(lam + rho) - rho} is divided exactly by
    each factor (1 - e^{-alpha}) of the Weyl denominator in turn.
    """
    x = tuple(a + r for a, r in zip(highest, system.rho))
    f: dict = {}
    for M, s in system.weyl_group_matrices:
        y = tuple(dot(row, x) - r for row, r in zip(M, system.rho))
        f[y] = f.get(y, 0) + s
    f = {k: v for k, v in f.items() if v}
    for alpha in system.positive_roots:
        f = _divide_one_minus(f, alpha)
    return f


def sl2_fusion_rule(a: int, b: int, c: int, k: int) -> int:
    """Closed-form sl_2 level-k fusion coefficient."""
    return int(abs(a - b) <= c <= min(a + b, 2 * k - a - b) and (a + b + c) % 2 == 0)


def sl2_fusion_bruteforce(a: int, b: int, k: int) -> dict:
    """sl_2 fusion [a][b] by folding b + eta + 1 into (-(k+2), k+2] by hand.

    Uses only the explicit reflection x -> -x and translation by 2(k+2), never
    the general alcove machinery.
    """
    L = k + 2
    out: dict = {}
    for eta in range(-a, a + 1, 2):
        x = (b + eta + 1) % (2 * L)
        if x > L:
            x -= 2 * L
        if x in (0, L):
            continue
        sign, y = (1, x) if x > 0 else (-1, -x)
        out[y - 1] = out.get(y - 1, 0) + sign
    return {c: v for c, v in out.items() if v}


def pieri_rule_A(j: int, lam, alcove: Alcove) -> dict:
    """Sum of lam + eps_S over j-subsets S of rows that stay in the gl_n alcove."""
    n = alcove.system.dim
    out: dict = {}
    for S in combinations(range(n), j):
        nu = list(lam)
        for i in S:
            nu[i] += 1
        nu = tuple(nu)
        if alcove.contains(nu):
            out[nu] = out.get(nu, 0) + 1
    return out
