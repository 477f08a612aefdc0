"""Generators of the fusion ideal and exact checks of ideal presentations.

The fusion ideal is the kernel of ``chi(lam) -> pi(lam)`` from the character
ring onto the fusion ring.  A candidate generator set is checked in two ways:
every generator must map to zero, and generator sets are compared by
truncated ideal membership, solved exactly over the integers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .alcove import Alcove
from .charring import CharElement, UnsupportedTilting, char_product, chi, tilting_char_second_alcove
from .fusion import quotient_from_char
from .hnf import IntegerLattice, LatticeOverflow
from .rootsys import dot

DEFAULT_COLUMN_CAP = 50_000


class Status(str, enum.Enum):
    VERIFIED = "VERIFIED"
    REFUTED = "REFUTED"
    INCONCLUSIVE = "INCONCLUSIVE"
    UNSUPPORTED = "UNSUPPORTED"


# REFUTED dominates UNSUPPORTED dominates INCONCLUSIVE dominates VERIFIED
_SEVERITY = {Status.VERIFIED: 0, Status.INCONCLUSIVE: 1, Status.UNSUPPORTED: 2, Status.REFUTED: 3}


@dataclass
class Verification:
    """Outcome of a check, with JSON-ready witnesses."""

    status: Status
    witnesses: list = field(default_factory=list)
    bound: Optional[int] = None
    matrix_shape: Optional[list] = None
    reason: str = ""

    def __bool__(self):
        return self.status is Status.VERIFIED

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witnesses": self.witnesses,
            "bound": self.bound,
            "matrix_shape": self.matrix_shape,
            "reason": self.reason,
        }


def combine(results: Sequence[Verification]) -> Verification:
    """The worst status wins; witnesses are concatenated."""
    if not results:
        return Verification(Status.VERIFIED)
    worst = max(results, key=lambda r: _SEVERITY[r.status])
    witnesses = [w for r in results for w in r.witnesses]
    bounds = [r.bound for r in results if r.bound is not None]
    shapes = [r.matrix_shape for r in results if r.matrix_shape]
    shape = [max(s[0] for s in shapes), max(s[1] for s in shapes)] if shapes else None
    reasons = list(dict.fromkeys(r.reason for r in results if r.reason and r.status is worst.status))
    return Verification(worst.status, witnesses, max(bounds) if bounds else None, shape, "; ".join(reasons))


@dataclass
class GeneratorSet:
    """A labelled list of character-ring elements generating an ideal."""

    label: str
    alcove: Alcove
    generators: list
    notes: str = ""
    unsupported: str = ""

    def __len__(self):
        return len(self.generators)

    def as_records(self) -> list:
        return [[{"weight": list(w), "coeff": c} for w, c in sorted(g.items())] for g in self.generators]


# -- minimal excluded weights --------------------------------------------------------

def _dominant_box(alcove: Alcove, top: int) -> list[tuple]:
    """Dominant weights with <lam, theta_coroot> <= top."""
    c = alcove.theta_coroot
    out = []

    def rec(prefix, budget):
        i = len(prefix)
        if i == len(c):
            out.append(tuple(prefix))
            return
        for v in range(budget // c[i] + 1):
            rec(prefix + [v], budget - v * c[i])

    rec([], top)
    return out


def _check_finite(alcove: Alcove) -> None:
    if alcove.system.type == "gl":
        raise ValueError("ideal presentations are computed for sl_n (type A), not gl_n")


def is_minimal_excluded(lam, alcove: Alcove) -> bool:
    """lam is outside the alcove and every lam - omega_i that is dominant lies inside."""
    R = alcove.system
    if not R.is_dominant(lam) or alcove.contains(lam):
        return False
    for i in range(R.dim):
        if lam[i] > 0:
            nu = tuple(v - (j == i) for j, v in enumerate(lam))
            if not alcove.contains(nu):
                return False
    return True


def minimal_excluded(alcove: Alcove) -> list[tuple]:
    """Dominant weights outside the alcove that are minimal for the order
    lam <=' mu iff mu - lam is a nonnegative combination of fundamental weights."""
    _check_finite(alcove)
    top = alcove.level + max(alcove.theta_coroot)
    return sorted(w for w in _dominant_box(alcove, top) if is_minimal_excluded(w, alcove))


def tilting_class(mu, alcove: Alcove) -> CharElement:
    """[T(mu)] for mu outside the alcove; raises UnsupportedTilting past the second alcove."""
    return tilting_char_second_alcove(mu, alcove)


def canonical_generators(alcove: Alcove) -> GeneratorSet:
    """Tilting classes of the minimal excluded weights."""
    gens, bad = [], []
    for mu in minimal_excluded(alcove):
        try:
            gens.append(tilting_class(mu, alcove))
        except UnsupportedTilting:
            bad.append(mu)
    unsupported = f"tilting characters beyond the second alcove: {bad}" if bad else ""
    return GeneratorSet("minimal", alcove, gens, "tilting classes of the minimal excluded weights", unsupported)


# -- presets --------------------------------------------------------------------------

PRESET_LABELS = (
    "A-I", "A-J", "C-even", "C-odd", "D", "B-odd", "B-odd-reduced",
    "B-even-0mod4", "B-even-2mod4", "G2-case1", "G2-case2", "G2-case3", "G2-case4",
)


class PresetError(ValueError):
    """The preset does not match the root system or the regime of ell."""


def _omega(R, i: int, scale: int = 1) -> tuple:
    return tuple(scale * int(j == i - 1) for j in range(R.dim))


def _add(*ws) -> tuple:
    return tuple(sum(v) for v in zip(*ws))


def _eps_sum(R, lam, idx):
    """Sum of chosen epsilon-coordinates (a Fraction for spinor weights)."""
    e = R.to_eps(lam)
    return sum(e[i] for i in idx)


def _with_eps(alcove, condition) -> list[tuple]:
    top = alcove.level + 3 * max(alcove.theta_coroot)
    return sorted(w for w in _dominant_box(alcove, top) if condition(w))


def g2_case(alcove: Alcove) -> int:
    """Which of the four G2 presentation cases applies."""
    k = alcove.level
    if alcove.ell % 3 == 0:
        return 1 if k % 2 else 2
    if k % 3 == 2:
        return 3
    if k % 3 == 1:
        return 4
    raise PresetError(f"k = {k} is divisible by 3 although 3 does not divide ell")


def default_preset(alcove: Alcove) -> str:
    """The preset label matching the type and regime of ``alcove``."""
    R, ell = alcove.system, alcove.ell
    t = R.type
    if t == "A":
        return "A-J"
    if t == "C":
        return "C-even" if ell % 2 == 0 else "C-odd"
    if t == "D":
        return "D"
    if t == "B":
        if ell % 2:
            return "B-odd"
        return "B-even-0mod4" if ell % 4 == 0 else "B-even-2mod4"
    if t == "G2":
        return f"G2-case{g2_case(alcove)}"
    raise PresetError(f"no preset for {R.name}")


def preset_generators(label: str, alcove: Alcove) -> GeneratorSet:
    """The preset generator lists, by label.

    Tilting-class generators are expanded by the two-term second-alcove
    formula; a generator beyond the second alcove marks the set unsupported.
    """
    _check_finite(alcove)
    R, ell, k = alcove.system, alcove.ell, alcove.level
    t, n = R.type, R.rank
    if label == "G2":
        label = default_preset(alcove)
    if label not in PRESET_LABELS:
        raise PresetError(f"unknown preset {label!r}; choose from {', '.join(PRESET_LABELS)}")
    want = {"A": "A", "C": "C", "D": "D", "B": "B", "G2": "G2"}[label.split("-")[0]]
    if t != want:
        raise PresetError(f"preset {label} is for type {want}, not {R.name}")

    gens: list = []
    bad: list = []
    note = ""

    def tilt(mu):
        try:
            gens.append(tilting_class(mu, alcove))
        except UnsupportedTilting:
            bad.append(mu)

    if label == "A-I":
        size = n + 1
        gens = [chi(R, _omega(R, 1, s)) for s in range(k + 1, k + size)]
        note = "chi(s w1), k+1 <= s < k+n"
    elif label == "A-J":
        gens = [chi(R, _add(_omega(R, 1, k), _omega(R, i))) for i in range(1, n + 1)]
        note = "chi(k w1 + w_i), 1 <= i <= n-1"
    elif label == "C-even":
        if ell % 2:
            raise PresetError("C-even needs ell even")
        gens = [chi(R, _add(_omega(R, 1, k), _omega(R, i))) for i in range(1, n + 1)]
        note = "chi(k w1 + w_i), 1 <= i <= n"
    elif label == "C-odd":
        if ell % 2 == 0:
            raise PresetError("C-odd needs ell odd")
        gens = [chi(R, w) for w in _with_eps(alcove, lambda w: _eps_sum(R, w, (0, 1)) == k + 1)]
        note = "chi(lam), lam_1 + lam_2 = k+1"
    elif label == "D":
        gens = [chi(R, w) for w in _with_eps(alcove, lambda w: _eps_sum(R, w, (0, 1)) == k + 1)]
        note = "chi(lam), lam_1 + lam_2 = k+1"
        if ell % 4 == 0:
            for w in _with_eps(alcove, lambda w: all(w[i] == 0 for i in (0, n - 2, n - 1))
                               and 2 * sum(w[1:n - 2]) == k + 2):
                tilt(w)
            note += "; [T(lam)], lam = sum_{2<=i<=n-2} m_i w_i with 2 sum m_i = k+2"
    elif label in ("B-odd", "B-odd-reduced"):
        if ell % 2 == 0:
            raise PresetError(f"{label} needs ell odd")
        if label == "B-odd":
            gens = [chi(R, w) for w in _with_eps(alcove, lambda w: 2 * _eps_sum(R, w, (0,)) == k + 1)]
            note = "chi(lam), 2 lam_1 = k+1"
        else:
            h = (k - 1) // 2
            gens = [chi(R, _add(_omega(R, 1, h), _omega(R, i))) for i in range(1, n)]
            gens.append(chi(R, _add(_omega(R, 1, h), _omega(R, n, 2))))
            note = "chi((k-1)/2 w1 + w_i), i <= n-1, and chi((k-1)/2 w1 + 2 w_n)"
    elif label in ("B-even-0mod4", "B-even-2mod4"):
        if ell % 4 != (0 if label == "B-even-0mod4" else 2):
            raise PresetError(f"{label} does not match ell = {ell}")
        gens = [chi(R, w) for w in _with_eps(alcove, lambda w: _eps_sum(R, w, (0, 1)) == k + 1)]
        note = "chi(lam), lam_1 + lam_2 = k+1"
        if label == "B-even-2mod4":
            for w in _with_eps(alcove, lambda w: _eps_sum(R, w, (0, 1)) == k + 2):
                tilt(w)
            note += "; [T(mu)], mu_1 + mu_2 = k+2"
    else:
        case = int(label[-1])
        actual = g2_case(alcove)
        if case != actual:
            raise PresetError(f"{label} does not match ell = {ell} (case {actual})")

        def c(a, b):
            return chi(R, (a, b))

        if case == 1:
            h = (k + 1) // 2
            gens = [c(0, h), c(2, h - 1), c(4, h - 2)]
            note = "chi(0,(k+1)/2), chi(2,(k-1)/2), chi(4,(k-3)/2)"
        elif case == 2:
            h = k // 2
            gens = [c(0, h + 1) + c(0, h), c(1, h), c(3, h - 1)]
            note = "chi(0,k/2+1)+chi(0,k/2), chi(1,k/2), chi(3,k/2-1)"
        else:
            lam_set = [(a, b) for a in range(k + 2) for b in range(k + 2) if 2 * a + 3 * b == k + 1]
            mu_set = [(a, b) for a in range(1, k + 3) for b in range(k + 3) if 2 * a + 3 * b == k + 2]
            gens = [c(*w) for w in lam_set] + [c(a, b) + c(a - 1, b) for a, b in mu_set]
            note = "chi(lam), lam in Lambda; chi(mu)+chi(mu-w1), mu in Lambda'"
            if case == 4:
                gens.insert(0, c(0, (k + 2) // 3))
                note = "chi(0,(k+2)/3); " + note
    gens = [g for g in gens if g]
    unsupported = f"tilting characters beyond the second alcove: {bad}" if bad else ""
    return GeneratorSet(label, alcove, gens, note, unsupported)


# -- checks ---------------------------------------------------------------------------

def _record(g: CharElement) -> list:
    return [{"weight": list(w), "coeff": c} for w, c in sorted(g.items())]


def image_zero_check(G: GeneratorSet) -> Verification:
    """VERIFIED iff every generator maps to zero in the fusion ring."""
    for g in G.generators:
        img = quotient_from_char(g, G.alcove)
        if img:
            return Verification(Status.REFUTED, [{"generator": _record(g), "image": _record(img)}],
                                reason="generator with nonzero image in the fusion ring")
    if G.unsupported:
        return Verification(Status.UNSUPPORTED, reason=G.unsupported)
    return Verification(Status.VERIFIED)


def default_bound(alcove: Alcove) -> int:
    return 3 * alcove.level + dot(alcove.system.rho, alcove.theta_coroot)


class _Span:
    """Truncated ideal {sum c * chi(mu) * g : <mu, theta_coroot> <= b}, grown shell by shell."""

    def __init__(self, G: GeneratorSet, cap: int):
        self.G = G
        self.alcove = G.alcove
        R = self.alcove.system
        self.lattice = IntegerLattice(order=lambda w: (R.height(w), w), track=True, cap=cap)
        self.bound = -1
        self.columns = 0

    def grow(self, bound: int) -> None:
        R, c = self.alcove.system, self.alcove.theta_coroot
        for b in range(self.bound + 1, bound + 1):
            shell = [w for w in _dominant_box(self.alcove, b) if dot(w, c) == b]
            for mu in shell:
                m = chi(R, mu)
                for gi, g in enumerate(self.G.generators):
                    self.lattice.add(char_product(m, g), label=(gi, mu))
                    self.columns += 1
            self.bound = b

    def shape(self) -> list:
        return [len(self.lattice.keys), self.columns]


def _shortcut(target: CharElement, G: GeneratorSet) -> Optional[int]:
    t = dict(target)
    for gi, g in enumerate(G.generators):
        if dict(g) == t:
            return gi
        if dict(g.scale(-1)) == t:
            return -gi - 1
    return None


def ideal_contains(target: CharElement, G: GeneratorSet, bound: Optional[int] = None,
                   cap: int = DEFAULT_COLUMN_CAP, _span: Optional[_Span] = None) -> Verification:
    """Is ``target`` in the ideal generated by G, using multipliers chi(mu) of degree <= bound?

    The multiplier window is deepened from degree 0 upward and stops at the
    first degree where an exact integer certificate exists.
    """
    if bound is None:
        bound = default_bound(G.alcove)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if G.unsupported:
        return Verification(Status.UNSUPPORTED, bound=bound, reason=G.unsupported)
    if not target:
        return Verification(Status.VERIFIED, bound=0, matrix_shape=[0, 0])
    hit = _shortcut(target, G)
    if hit is not None:
        gi, sign = (hit, 1) if hit >= 0 else (-hit - 1, -1)
        zero = list(G.alcove.system.zero())
        return Verification(Status.VERIFIED, [{"target": _record(target), "certificate": [
            {"generator": gi, "multiplier": zero, "coeff": sign}]}], 0, [len(target), 1])
    span = _span or _Span(G, cap)
    try:
        for b in range(0, bound + 1):
            span.grow(b)
            cert = span.lattice.express(dict(target))
            if cert is not None:
                rows = [{"generator": gi, "multiplier": list(mu), "coeff": c}
                        for (gi, mu), c in sorted(cert.items())]
                return Verification(Status.VERIFIED, [{"target": _record(target), "certificate": rows}],
                                    b, span.shape())
    except LatticeOverflow as exc:
        return Verification(Status.INCONCLUSIVE, [{"target": _record(target)}], span.bound,
                            span.shape(), reason=str(exc))
    return Verification(Status.INCONCLUSIVE, [{"target": _record(target)}], bound, span.shape(),
                        reason=f"no certificate with multipliers of degree <= {bound}")


def verify_certificate(target: CharElement, G: GeneratorSet, certificate: list) -> bool:
    """Recompute sum coeff * chi(multiplier) * generator and compare with target."""
    R = G.alcove.system
    total = CharElement(R)
    for row in certificate:
        total = total + char_product(chi(R, row["multiplier"]), G.generators[row["generator"]]).scale(row["coeff"])
    return total == target


def contains_all(targets: Sequence[CharElement], G: GeneratorSet, bound: Optional[int] = None,
                 cap: int = DEFAULT_COLUMN_CAP) -> Verification:
    """ideal_contains for several targets sharing one growing span."""
    if G.unsupported:
        return Verification(Status.UNSUPPORTED, bound=bound, reason=G.unsupported)
    span = _Span(G, cap)
    return combine([ideal_contains(t, G, bound, cap, _span=span) for t in targets])


def presentations_equivalent(G: GeneratorSet, H: GeneratorSet, bound: Optional[int] = None,
                             cap: int = DEFAULT_COLUMN_CAP) -> Verification:
    """Both inclusions of the truncated ideals generated by G and H."""
    for S in (G, H):
        if S.unsupported:
            return Verification(Status.UNSUPPORTED, bound=bound, reason=f"{S.label}: {S.unsupported}")
    return combine([contains_all(H.generators, G, bound, cap), contains_all(G.generators, H, bound, cap)])


def verify_preset(label: str, alcove: Alcove, bound: Optional[int] = None,
                  cap: int = DEFAULT_COLUMN_CAP) -> Verification:
    """image_zero_check of the preset plus equivalence with the minimal-excluded generators."""
    G = preset_generators(label, alcove)
    first = image_zero_check(G)
    if first.status is not Status.VERIFIED:
        return first
    return presentations_equivalent(G, canonical_generators(alcove), bound, cap)


# -- G2 recursions --------------------------------------------------------------------

def _g2_families(alcove: Alcove):
    R = alcove.system
    k = alcove.level
    zero = CharElement(R)

    def c(a, b):
        return chi(R, (a, b))

    if k % 2:
        h = (k + 1) // 2
        g = lambda j: zero if j < 0 else c(2 * j, h - j)
        t = lambda i: zero if i < 0 else c(2 * i + 1, h - i) + c(2 * i + 1, h - i - 1)
        s = lambda i: zero if i < 0 else c(2 * i, h + 1 - i) + c(2 * i, h - 1 - i)
    else:
        h = k // 2
        g = lambda j: zero if j <= 0 else c(2 * j - 1, h - j + 1)
        t = lambda j: zero if j < 0 else c(2 * j, h - j + 1) + c(2 * j, h - j)
        s = lambda j: zero if j <= 0 else c(2 * j - 1, h - j + 2) + c(2 * j - 1, h - j)
    return g, t, s


def g2_identities(alcove: Alcove) -> list[tuple[str, int, CharElement, CharElement]]:
    """(name, r, lhs, rhs) for every recursion identity in range."""
    R = alcove.system
    k = alcove.level
    L1, L2 = chi(R, (1, 0)), chi(R, (0, 1))
    g, t, s = _g2_families(alcove)
    out = []
    if k % 2:
        for r in range(0, k + 1):
            out.append(("Aodd", r, g(r) * L1,
                        t(0) + g(1) if r == 0 else g(r - 1) + t(r - 1) + g(r) + t(r) + g(r + 1)))
            out.append(("Bodd", r, g(r) * L2,
                        s(0) + g(0) + g(1) + t(1) if r == 0 else
                        t(r - 2) + g(r - 1) + t(r - 1) + s(r) + g(r).scale(2) + t(r) + g(r + 1) + t(r + 1)))
            out.append(("Codd", r, t(r) * L1,
                        t(r - 1) + s(r) + g(r).scale(2) + t(r) + s(r + 1) + g(r + 1).scale(2) + t(r + 1)))
    else:
        for r in range(0, k // 2 + 2):
            if r >= 1:
                out.append(("A", r, g(r) * L1, g(r - 1) + t(r - 1) + g(r) + t(r) + g(r + 1)))
                out.append(("B", r, g(r) * L2,
                            s(1) + g(1).scale(2) + t(1) + g(2) + t(2) if r == 1 else
                            t(r - 2) + g(r - 1) + t(r - 1) + g(r).scale(2) + s(r) + t(r) + g(r + 1) + t(r + 1)))
            out.append(("C", r, t(r) * L1,
                        s(1) + g(1).scale(2) + t(1) if r == 0 else
                        t(r - 1) + s(r) + g(r).scale(2) + t(r) + s(r + 1) + g(r + 1).scale(2) + t(r + 1)))
    return out


def g2_recursion_check(alcove: Alcove) -> Verification:
    """Check the G2 product recursions exactly in the character ring (3 | ell only)."""
    if alcove.system.type != "G2" or alcove.ell % 3:
        return Verification(Status.UNSUPPORTED, reason="the recursions concern G2 with 3 | ell")
    for name, r, lhs, rhs in g2_identities(alcove):
        if lhs != rhs:
            return Verification(Status.REFUTED, [{"identity": name, "r": r, "lhs": _record(lhs),
                                                  "rhs": _record(rhs)}])
    return Verification(Status.VERIFIED, bound=alcove.level)
