from __future__ import annotations

import pytest

from fusionring.charring import CharElement, chi
from fusionring.ideals import (GeneratorSet, PRESET_LABELS, PresetError, Status, canonical_generators,
                               default_bound, default_preset, g2_case, g2_identities, g2_recursion_check,
                               ideal_contains, image_zero_check, is_minimal_excluded, minimal_excluded,
                               preset_generators, presentations_equivalent, verify_certificate, verify_preset)


def c(R, *ws):
    out = CharElement(R)
    for w in ws:
        out = out + chi(R, w)
    return out


def test_minimal_excluded_examples(alcove_of):
    assert minimal_excluded(alcove_of("A", 2, 5)) == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert minimal_excluded(alcove_of("C", 2, 12)) == [(m, 4 - m) for m in range(5)]
    assert minimal_excluded(alcove_of("G2", 2, 21)) == [(0, 2), (2, 1), (4, 0)]


@pytest.mark.parametrize("inst", [("A", 3, 7), ("B", 3, 13), ("C", 3, 14), ("D", 4, 14), ("G2", 2, 11),
                                  ("G2", 2, 16), ("B", 2, 12)])
def test_minimal_excluded_are_minimal(inst, alcove_of):
    a = alcove_of(*inst)
    mins = minimal_excluded(a)
    assert mins and all(is_minimal_excluded(w, a) for w in mins)
    # every dominant weight outside the alcove dominates some minimal one
    from fusionring.ideals import _dominant_box
    for w in _dominant_box(a, a.level + 6):
        if not a.contains(w):
            assert any(all(x >= y for x, y in zip(w, m)) for m in mins), w


def test_g2_minimal_excluded_outside_three(alcove_of):
    # 3 does not divide ell: 2a+3b = k+1, or 2a+3b = k+2
    for ell in (11, 13, 17, 19, 20, 22):
        a = alcove_of("G2", 2, ell)
        k = a.level
        for (x, y) in minimal_excluded(a):
            assert 2 * x + 3 * y in (k + 1, k + 2)


def test_preset_examples(alcove_of):
    a = alcove_of("A", 2, 5)
    R = a.system
    assert preset_generators("A-J", a).generators == [chi(R, (3, 0)), chi(R, (2, 1))]
    b = alcove_of("C", 2, 12)
    assert preset_generators("C-even", b).generators == [chi(b.system, (4, 0)), chi(b.system, (3, 1))]
    g = alcove_of("G2", 2, 21)
    assert sorted(map(dict, preset_generators("G2", g).generators), key=sorted) == \
        sorted(({(0, 2): 1}, {(2, 1): 1}, {(4, 0): 1}), key=sorted)


def test_g2_even_preset_has_tilting_generator(alcove_of):
    a = alcove_of("G2", 2, 48)      # 6 | ell, ell' = 16, k = 4
    G = preset_generators("G2", a)
    k = a.level
    assert G.label == "G2-case2"
    assert c(a.system, (0, k // 2 + 1), (0, k // 2)) in G.generators


def test_g2_case4_uses_third(alcove_of):
    a = alcove_of("G2", 2, 13)      # k = 7, 7 = 1 mod 3
    assert g2_case(a) == 4
    assert chi(a.system, (0, (a.level + 2) // 3)) in preset_generators("G2", a).generators


@pytest.mark.parametrize("ell,case", [(15, 1), (21, 1), (24, 2), (48, 2), (11, 3), (16, 3), (7, 4), (13, 4)])
def test_g2_case_selection(ell, case, alcove_of):
    assert g2_case(alcove_of("G2", 2, ell)) == case


@pytest.mark.parametrize("label,inst", [("C-even", ("C", 2, 11)), ("C-odd", ("C", 2, 12)), ("D", ("B", 3, 13)),
                                        ("B-odd", ("B", 2, 12)), ("G2-case1", ("G2", 2, 11)),
                                        ("nonsense", ("A", 2, 5))])
def test_preset_regime_mismatch(label, inst, alcove_of):
    with pytest.raises(PresetError):
        preset_generators(label, alcove_of(*inst))


def test_image_zero_check(alcove_of):
    a = alcove_of("A", 1, 5)
    bad = GeneratorSet("x", a, [chi(a.system, (3,))])
    r = image_zero_check(bad)
    assert r.status is Status.REFUTED and r.witnesses[0]["image"] == [{"weight": [3], "coeff": 1}]
    assert image_zero_check(GeneratorSet("empty", a, [])).status is Status.VERIFIED


PRESETS = [
    ("A-I", ("A", 2, 5)), ("A-J", ("A", 2, 5)), ("A-I", ("A", 2, 6)), ("A-J", ("A", 3, 7)),
    ("C-even", ("C", 2, 12)), ("C-odd", ("C", 2, 11)), ("D", ("D", 4, 14)), ("B-odd", ("B", 2, 11)),
    ("B-odd-reduced", ("B", 2, 11)), ("B-even-0mod4", ("B", 2, 12)), ("G2", ("G2", 2, 21)),
    ("G2", ("G2", 2, 24)), ("G2", ("G2", 2, 11)), ("G2", ("G2", 2, 7)),
]


@pytest.mark.parametrize("label,inst", PRESETS)
def test_presets_vanish(label, inst, alcove_of):
    assert image_zero_check(preset_generators(label, alcove_of(*inst))).status is Status.VERIFIED


@pytest.mark.parametrize("label,inst", PRESETS)
def test_presets_present_the_ideal(label, inst, alcove_of):
    r = verify_preset(label, alcove_of(*inst))
    assert r.status is Status.VERIFIED, r.reason


def test_membership_certificates(alcove_of):
    a = alcove_of("A", 2, 5)
    G = preset_generators("A-J", a)
    target = chi(a.system, (0, 3))
    r = ideal_contains(target, G)
    assert r.status is Status.VERIFIED
    assert verify_certificate(target, G, r.witnesses[0]["certificate"])
    # a member of the ideal by construction
    t2 = chi(a.system, (1, 1)) * G.generators[0] - chi(a.system, (1, 0)) * G.generators[1]
    r2 = ideal_contains(t2, G)
    assert r2.status is Status.VERIFIED and verify_certificate(t2, G, r2.witnesses[0]["certificate"])


def test_membership_trivial_and_inconclusive(alcove_of):
    a = alcove_of("C", 2, 12)
    G = preset_generators("C-even", a)
    r = ideal_contains(G.generators[1], G)
    assert r.status is Status.VERIFIED and r.bound == 0
    assert r.witnesses[0]["certificate"] == [{"generator": 1, "multiplier": [0, 0], "coeff": 1}]
    # chi(omega_1) survives in the fusion ring, so no certificate can exist
    out = ideal_contains(chi(a.system, (1, 0)), G, bound=2)
    assert out.status is Status.INCONCLUSIVE and out.bound == 2


def test_c_even_contains_all_level_plus_one(alcove_of):
    a = alcove_of("C", 2, 12)
    G = preset_generators("C-even", a)
    # first epsilon-coordinate m_1 + m_2 equal to k + 1
    for m2 in range(0, 5):
        assert ideal_contains(chi(a.system, (4 - m2, m2)), G).status is Status.VERIFIED


def test_column_cap_reports_inconclusive(alcove_of):
    a = alcove_of("A", 2, 5)
    G = preset_generators("A-J", a)
    r = ideal_contains(chi(a.system, (0, 3)), G, cap=1)
    assert r.status is Status.INCONCLUSIVE and r.reason


def test_equivalence_reflexive(alcove_of):
    a = alcove_of("A", 2, 6)
    G = preset_generators("A-I", a)
    assert presentations_equivalent(G, G).status is Status.VERIFIED
    H = preset_generators("A-J", a)
    assert presentations_equivalent(G, H).status is Status.VERIFIED


def test_unsupported_tilting_case(alcove_of):
    a = alcove_of("B", 2, 14)
    G = preset_generators("B-even-2mod4", a)
    assert G.unsupported
    assert verify_preset("B-even-2mod4", a).status is Status.UNSUPPORTED
    # the offending preset weight (6,0) is not minimal; the canonical set stays expandable
    assert not canonical_generators(a).unsupported
    assert (6, 0) not in minimal_excluded(a)


def test_default_bound(alcove_of):
    a = alcove_of("G2", 2, 21)
    assert default_bound(a) == 3 * 3 + 3
    assert default_preset(a) == "G2-case1"


# -- G2 recursions --------------------------------------------------------------------

@pytest.mark.parametrize("ell", [15, 21, 27, 33, 24, 36, 48, 60])
def test_g2_recursions(ell, alcove_of):
    assert g2_recursion_check(alcove_of("G2", 2, ell)).status is Status.VERIFIED


def test_g2_recursion_identities_listed(alcove_of):
    ids = g2_identities(alcove_of("G2", 2, 21))
    assert {(n, r) for n, r, _, _ in ids} >= {("Aodd", 0), ("Codd", 1), ("Bodd", 3)}
    name, r, lhs, rhs = next(x for x in ids if x[:2] == ("Aodd", 0))
    R = alcove_of("G2", 2, 21).system
    # g_0 L_1 = t_0 + g_1 at k = 3
    assert lhs == rhs == c(R, (1, 2), (1, 1), (2, 1))


def test_g2_printed_s_expansion_fails(alcove_of):
    # the expansion chi(2j, h-j+1) + chi(2j, h-j-1) printed next to s_j breaks identity (B)
    a = alcove_of("G2", 2, 48)
    R, h = a.system, a.level // 2
    L2 = chi(R, (0, 1))
    g = lambda j: CharElement(R) if j <= 0 else chi(R, (2 * j - 1, h - j + 1))
    t = lambda j: CharElement(R) if j < 0 else c(R, (2 * j, h - j + 1), (2 * j, h - j))
    s_printed = lambda j: CharElement(R) if j <= 0 else c(R, (2 * j, h - j + 1), (2 * j, h - j - 1))
    rhs = s_printed(1) + g(1).scale(2) + t(1) + g(2) + t(2)
    assert g(1) * L2 != rhs


def test_g2_check_other_regimes(alcove_of):
    assert g2_recursion_check(alcove_of("G2", 2, 11)).status is Status.UNSUPPORTED
    assert g2_recursion_check(alcove_of("C", 2, 12)).status is Status.UNSUPPORTED


def test_labels_complete():
    assert set(PRESET_LABELS) >= {"A-I", "A-J", "C-even", "C-odd", "D", "B-odd", "B-even-0mod4", "B-even-2mod4",
                                  "G2-case1", "G2-case2", "G2-case3", "G2-case4"}
