"""The acceptance suite: each criterion is a function returning a CriterionResult.

Shared by the ``selftest`` subcommand and the test suite.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional

from .alcove import Alcove, make_alcove, project
from .charring import weight_multiplicities, weyl_dimension
from .comb import eps_to_omega, nc_elementary_C, star_table
from .fusion import basis, fuse, fuse_alt_row, fusion_table
from .ideals import (Status, g2_recursion_check, preset_generators, presentations_equivalent,
                     verify_preset)
from .oracles import sl2_fusion_bruteforce, sl2_fusion_rule, weyl_character
from .rootsys import build_root_system

DEFAULT_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float = 0.0
    limit: Optional[float] = None
    details: list = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        lim = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{mark}] {self.number:2d}. {self.title}: {self.seconds:.2f}s{lim}"

    def as_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "limit_seconds": self.limit, "details": self.details}


def alcove_of(type_: str, rank: int, ell: int) -> Alcove:
    return make_alcove(build_root_system(type_, rank), ell)


def _timed(number, title, limit, body: Callable[[list], bool]) -> CriterionResult:
    details: list = []
    t0 = time.perf_counter()
    ok = body(details)
    dt = time.perf_counter() - t0
    if limit is not None and dt > limit:
        details.append(f"time {dt:.1f}s exceeds {limit}s")
        ok = False
    return CriterionResult(number, title, bool(ok), dt, limit, details)


# -- 1 ---------------------------------------------------------------------------------

def criterion_1(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        a = alcove_of("A", 1, 5)
        k = a.level
        ok = True
        for x, y in product(range(k + 1), repeat=2):
            brute = sl2_fusion_bruteforce(x, y, k)
            prod = fuse((x,), (y,), a)
            for z in range(k + 1):
                want = sl2_fusion_rule(x, y, z, k)
                if brute.get(z, 0) != want or prod.get((z,), 0) != want:
                    details.append(f"N({x},{y},{z}): rule {want}, brute {brute.get(z, 0)}, fuse {prod.get((z,), 0)}")
                    ok = False
        return ok
    return _timed(1, "sl2 level-3 fusion tensor equals the closed-form rule", 1.0, body)


# -- 2 ---------------------------------------------------------------------------------

ORACLE_INSTANCES = [("A", 1, 5), ("A", 1, 7), ("A", 2, 7), ("C", 2, 11), ("C", 2, 12), ("G2", 2, 21)]


def criterion_2(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        ok = True
        for inst in ORACLE_INSTANCES[:3] if quick else ORACLE_INSTANCES:
            a = alcove_of(*inst)
            B = basis(a)
            bad = 0
            for lam, mu in product(B, B):
                if fuse_alt_row(lam, mu, a) != dict(fuse(lam, mu, a)):
                    bad += 1
            details.append(f"{a}: {len(B) ** 3} triples, {bad} disagreeing pairs")
            ok &= bad == 0
        return ok
    return _timed(2, "fusion product equals the alternating W_ell sum", 30.0, body)


# -- 3, 4 ------------------------------------------------------------------------------

TYPE_A_INSTANCES = [(2, 5), (3, 7), (3, 8), (4, 9)]
TYPE_C_INSTANCES = [(2, 11), (2, 12), (3, 14)]


def compare_star_with_fusion(alcove: Alcove) -> Optional[str]:
    """None if the combinatorial table equals the fusion table, else the first discrepancy."""
    R = alcove.system
    star = star_table(alcove)
    if R.type == "gl":
        target = alcove_of("A", R.dim - 1, alcove.ell) if R.dim > 1 else None
        for (lam, mu), v in sorted(star.items()):
            got = {eps_to_omega(w): c for w, c in v.items()}
            want = dict(fuse(eps_to_omega(lam), eps_to_omega(mu), target)) if target else {(): 1}
            if got != want:
                return f"{lam} * {mu}: combinatorial {got}, fusion {want}"
        return None
    table = fusion_table(alcove)
    for key in sorted(star):
        if dict(star[key]) != dict(table[key]):
            return f"{key[0]} * {key[1]}: combinatorial {dict(star[key])}, fusion {dict(table[key])}"
    return None


def criterion_3(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        ok = True
        for n, ell in TYPE_A_INSTANCES[:3] if quick else TYPE_A_INSTANCES:
            a = alcove_of("gl", n, ell)
            diff = compare_star_with_fusion(a)
            details.append(f"gl_{n}/sl_{n}, ell={ell}: " + ("equal" if diff is None else diff))
            ok &= diff is None
        return ok
    return _timed(3, "type A combinatorial ring equals the fusion ring", 60.0, body)


def criterion_4(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        ok = True
        for n, ell in TYPE_C_INSTANCES[1:2] if quick else TYPE_C_INSTANCES:
            a = alcove_of("C", n, ell)
            diff = compare_star_with_fusion(a)
            details.append(f"{a}: " + ("equal" if diff is None else diff))
            ok &= diff is None
        return ok
    return _timed(4, "type C combinatorial ring equals the fusion ring", 120.0, body)


# -- 5 ---------------------------------------------------------------------------------

def criterion_5(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        ok = True
        for n, ell in TYPE_C_INSTANCES[1:2] if quick else TYPE_C_INSTANCES:
            a = alcove_of("C", n, ell)
            bad = 0
            for lam in basis(a):
                for i, j in product(range(1, n + 1), repeat=2):
                    if i >= j:
                        continue
                    ij = nc_elementary_C(i, nc_elementary_C(j, lam, a), a)
                    ji = nc_elementary_C(j, nc_elementary_C(i, lam, a), a)
                    bad += dict(ij) != dict(ji)
            details.append(f"{a}: {bad} non-commuting cases")
            ok &= bad == 0
        return ok
    return _timed(5, "type C elementary operators commute", None, body)


# -- 6 ---------------------------------------------------------------------------------

RING_INSTANCES = [("A", 1, 5), ("A", 1, 7), ("A", 2, 7), ("A", 2, 8), ("A", 3, 9),
                  ("C", 2, 11), ("C", 2, 12), ("C", 3, 14), ("G2", 2, 21)]


def ring_axioms(alcove: Alcove, rng: random.Random, samples: int = 500) -> list[str]:
    """Violations of commutativity, associativity, unit and positivity."""
    B = basis(alcove)
    T = fusion_table(alcove)
    zero = alcove.system.zero()
    out = []
    for (lam, mu), v in T.items():
        if dict(v) != dict(T[(mu, lam)]):
            out.append(f"not commutative at {lam}, {mu}")
        if any(c < 0 for c in v.values()):
            out.append(f"negative structure constant in {lam} * {mu}")
        if lam == zero and dict(v) != {mu: 1}:
            out.append(f"[0] is not a unit on {mu}")

    def times(x: dict, nu) -> dict:
        acc: dict = {}
        for s, c in x.items():
            for t, d in T[(s, nu)].items():
                acc[t] = acc.get(t, 0) + c * d
        return {t: c for t, c in acc.items() if c}

    triples = (product(B, B, B) if len(B) <= 12 else
               ((rng.choice(B), rng.choice(B), rng.choice(B)) for _ in range(samples)))
    for lam, mu, nu in triples:
        left = times(dict(T[(lam, mu)]), nu)
        right = times(dict(T[(mu, nu)]), lam)
        if left != right:
            out.append(f"not associative at {lam}, {mu}, {nu}")
    return out


def criterion_6(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        rng = random.Random(seed)
        ok = True
        for inst in RING_INSTANCES[:4] if quick else RING_INSTANCES:
            a = alcove_of(*inst)
            bad = ring_axioms(a, rng)
            details.append(f"{a}: {len(bad)} violations" + (f", first: {bad[0]}" if bad else ""))
            ok &= not bad
        return ok
    return _timed(6, "fusion rings are commutative, associative, unital and positive", None, body)


# -- 7 ---------------------------------------------------------------------------------

PRESENTATION_INSTANCES = [
    ("A", 2, 5, "A-I"), ("A", 2, 5, "A-J"), ("A", 2, 6, "A-I"), ("A", 2, 6, "A-J"),
    ("A", 3, 7, "A-I"), ("A", 3, 7, "A-J"),
    ("C", 2, 12, "C-even"), ("C", 3, 14, "C-even"), ("C", 2, 11, "C-odd"),
    ("D", 4, 13, "D"), ("D", 4, 14, "D"),
    ("B", 2, 11, "B-odd"), ("B", 3, 13, "B-odd"),
    ("G2", 2, 15, "G2-case1"), ("G2", 2, 24, "G2-case2"), ("G2", 2, 11, "G2-case3"), ("G2", 2, 7, "G2-case4"),
    ("G2", 2, 21, "G2-case1"),
]


def criterion_7(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        ok = True
        unsupported = []
        for t, n, ell, label in PRESENTATION_INSTANCES[:6] if quick else PRESENTATION_INSTANCES:
            a = alcove_of(t, n, ell)
            v = verify_preset(label, a)
            details.append(f"{label} on {a}: {v.status.value}" + (f" ({v.reason})" if v.reason else ""))
            if v.status is Status.UNSUPPORTED:
                unsupported.append(f"{label} on {a}")
            ok &= v.status is Status.VERIFIED
        if not quick:
            for n, ell in [(2, 11)]:
                a = alcove_of("B", n, ell)
                v = presentations_equivalent(preset_generators("B-odd", a), preset_generators("B-odd-reduced", a))
                details.append(f"B-odd raw vs reduced on {a}: {v.status.value}")
                ok &= v.status is Status.VERIFIED
        details.append("unsupported cases: " + (", ".join(unsupported) if unsupported else "none"))
        return ok
    return _timed(7, "preset generators present the fusion ideal", 600.0, body)


# -- 8 ---------------------------------------------------------------------------------

def criterion_8(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        ok = True
        for ell in (21, 24):
            a = alcove_of("G2", 2, ell)
            v = g2_recursion_check(a)
            details.append(f"{a}: {v.status.value}")
            ok &= v.status is Status.VERIFIED
        return ok
    return _timed(8, "G2 product recursions hold exactly", None, body)


# -- 9 ---------------------------------------------------------------------------------

MULT_SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("G2", 2), ("D", 4)]


def weights_up_to_dimension(system, limit: int) -> list[tuple]:
    """All dominant weights with Weyl dimension <= limit (dimension grows in every coordinate)."""
    zero = system.zero()
    seen = {zero}
    stack = [zero]
    while stack:
        lam = stack.pop()
        for i in range(system.dim):
            nu = tuple(v + (j == i) for j, v in enumerate(lam))
            if nu not in seen and weyl_dimension(system, nu) <= limit:
                seen.add(nu)
                stack.append(nu)
    return sorted(seen)


def criterion_9(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        ok = True
        limit = 60 if quick else 300
        for t, n in MULT_SYSTEMS:
            R = build_root_system(t, n)
            weights = weights_up_to_dimension(R, limit)
            bad = [lam for lam in weights if weight_multiplicities(R, lam).as_dict() != weyl_character(R, lam)]
            details.append(f"{R.name}: {len(weights)} highest weights, {len(bad)} mismatches")
            ok &= not bad
        return ok
    return _timed(9, "Freudenthal multiplicities equal the Weyl character formula", None, body)


# -- 10 --------------------------------------------------------------------------------

PATH_INSTANCES = [("A", 1, 5), ("A", 2, 7), ("A", 3, 9), ("B", 2, 11), ("B", 3, 14), ("C", 2, 11),
                  ("C", 2, 12), ("C", 3, 14), ("D", 4, 13), ("G2", 2, 21), ("G2", 2, 13), ("gl", 3, 7)]


def path_independence(alcove: Alcove, rng: random.Random, trials: int = 1000) -> list[str]:
    """Random weights, pre-reflected by random wall reflections, project to the same point."""
    R = alcove.system
    walls = alcove.wall_reflections()
    span = 3 * (alcove.level + 2)
    out = []
    for _ in range(trials):
        lam = tuple(rng.randint(-span, span) for _ in range(R.dim))
        base = project(lam, alcove)
        x, sign = lam, 1
        for _ in range(rng.randint(1, 8)):
            x = rng.choice(walls)(x)
            sign = -sign
        got = project(x, alcove)
        if base is None:
            if got is not None:
                out.append(f"{lam} is singular but its image {x} is not")
        elif got is None or got.weight != base.weight or got.sign != sign * base.sign:
            out.append(f"{lam} -> {base}, reflected {x} -> {got}")
    return out


def criterion_10(seed: int = DEFAULT_SEED, quick: bool = False) -> CriterionResult:
    def body(details):
        ok = True
        rng = random.Random(seed)
        for inst in PATH_INSTANCES:
            a = alcove_of(*inst)
            bad = path_independence(a, rng, 200 if quick else 1000)
            details.append(f"{a}: {len(bad)} failures" + (f", first: {bad[0]}" if bad else ""))
            ok &= not bad
        return ok
    return _timed(10, "the alcove projection is path independent", None, body)


CRITERIA = {i: f for i, f in enumerate(
    [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
     criterion_6, criterion_7, criterion_8, criterion_9, criterion_10], start=1)}


def run_all(seed: int = DEFAULT_SEED, quick: bool = False, only=None) -> list[CriterionResult]:
    keys = sorted(CRITERIA) if not only else sorted(only)
    return [CRITERIA[i](seed=seed, quick=quick) for i in keys]
