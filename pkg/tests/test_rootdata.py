import itertools

import pytest

from parahoric import (
    DynkinSpec,
    IllegalRank,
    NotDominant,
    RootDatum,
    build_root_datum,
    classify_root_datum,
    parse_dynkin_spec,
)
from parahoric.rootdata import weight_key, parse_weight_key

from _oracles import roots_by_weyl_images, weyl_group_matrices

CLASSICAL_COUNTS = {
    "A1": 2,
    "A2": 6,
    "A3": 12,
    "A4": 20,
    "B2": 8,
    "B3": 18,
    "B4": 32,
    "C2": 8,
    "C3": 18,
    "C4": 32,
    "D3": 12,
    "D4": 24,
    "G2": 12,
    "F4": 48,
    "E6": 72,
}


def test_parse_grammar():
    assert str(parse_dynkin_spec("a2")) == "A2"
    assert str(parse_dynkin_spec("A1xA1+T1")) == "A1xA1+T1"
    assert str(parse_dynkin_spec("c3")) == "C3"
    spec = parse_dynkin_spec("A1+T2")
    assert spec.components == (("A", 1),) and spec.extra_torus_rank == 2
    assert parse_dynkin_spec("T3").rank == 3


def test_parse_rejects_bad_specs():
    for bad in ["", "H3", "A0", "D1", "E5", "F3", "G4", "A1+X2", "A", "A1x"]:
        with pytest.raises(IllegalRank):
            parse_dynkin_spec(bad)


def test_root_counts_match_classical():
    for name, count in CLASSICAL_COUNTS.items():
        rd = build_root_datum(name)
        assert len(rd.roots) == count, name
        assert len(rd.positive_roots) * 2 == count, name


def test_roots_agree_with_weyl_image_oracle():
    for name in ["A1", "A2", "B2", "C2", "G2", "A3", "A1xA1"]:
        rd = build_root_datum(name)
        oracle = roots_by_weyl_images(rd)
        assert {r.coords for r in rd.roots} == oracle, name


def test_root_set_closed_under_negation_and_reflection(a2, g2):
    for rd in (a2, g2):
        coords = {r.coords for r in rd.roots}
        for r in rd.roots:
            assert tuple(-c for c in r.coords) in coords
            for s in rd.simple_roots:
                assert rd.reflect(s, r.coords) in coords


def test_pairing_normalization(a2, c2, g2):
    for rd in (a2, c2, g2):
        for r in rd.roots:
            assert RootDatum.pair(r.coords, r.coroot) == 2


def test_sign_coherence_of_simple_coeffs(c2, g2):
    for rd in (c2, g2):
        for r in rd.roots:
            assert all(c >= 0 for c in r.simple_coeffs) or all(
                c <= 0 for c in r.simple_coeffs
            )


def test_deterministic_root_order(a2):
    rebuilt = build_root_datum("A2")
    assert [r.coords for r in rebuilt.roots] == [r.coords for r in a2.roots]
    keys = [(r.component, r.height, r.simple_coeffs) for r in a2.roots]
    assert keys == sorted(keys)


def test_highest_root(a1, a2, c2):
    assert a1.highest_root(0).simple_coeffs == (1,)
    assert a2.highest_root(0).simple_coeffs == (1, 1)
    hr = c2.highest_root(0)
    assert hr.simple_coeffs == (2, 1)
    # long root: its coroot has smaller coefficients than a short root's
    assert hr.coroot_coeffs == (1, 1)


def test_pair_examples(a2):
    a1v = a2.simple_roots[0].coroot
    theta_v = a2.highest_root(0).coroot
    assert RootDatum.pair((1, 0), a1v) == 1
    assert RootDatum.pair((3, 1), theta_v) == 4
    assert RootDatum.pair(a2.rho, theta_v) == 2


def test_reflect_examples(a2):
    s1 = a2.simple_roots[0]
    assert a2.reflect(s1, s1.coords) == tuple(-c for c in s1.coords)
    assert a2.reflect(s1, (1, 0)) == (-1, 1)
    assert a2.reflect(s1, (0, 5)) == (0, 5)  # orthogonal weight is fixed


def test_reflect_is_involution(g2, c2):
    import random

    rng = random.Random(1)
    for rd in (g2, c2):
        for _ in range(50):
            lam = tuple(rng.randint(-4, 4) for _ in range(rd.n))
            root = rng.choice(rd.roots)
            assert rd.reflect(root, rd.reflect(root, lam)) == lam


def test_weyl_orbit_examples(a2):
    assert a2.weyl_orbit((0, 0)) == ((0, 0),)
    assert len(a2.weyl_orbit((1, 0))) == 3
    assert len(a2.weyl_orbit((1, 1))) == 6


def test_orbit_size_divides_group_order():
    for name in ["A2", "B2", "G2", "A1xA1"]:
        rd = build_root_datum(name)
        order = len(weyl_group_matrices(rd))
        for lam in itertools.product(range(-1, 3), repeat=rd.n):
            assert order % rd.orbit_size(lam) == 0


def test_dominant_conjugate(a2):
    assert a2.dominant_conjugate((2, 1)) == (2, 1)
    assert a2.dominant_conjugate((-1, 1)) == (1, 0)
    assert a2.dominant_conjugate((-1, -1)) == (1, 1)


def test_dominant_conjugate_is_orbit_invariant(g2):
    lam = (1, 2)
    rep = g2.dominant_conjugate(lam)
    for w in g2.weyl_orbit(lam):
        assert g2.dominant_conjugate(w) == rep
    assert g2.dominant_conjugate(rep) == rep


def test_weyl_dim_examples(a2, c2):
    assert a2.weyl_dim((0, 0)) == 1
    assert a2.weyl_dim((5, 0)) == 21
    assert a2.weyl_dim((3, 1)) == 24
    assert a2.weyl_dim((2, 0)) == 6
    assert c2.weyl_dim((0, 1)) == 5
    with pytest.raises(NotDominant):
        a2.weyl_dim((-1, 0))


def test_weyl_dim_closed_form_a2(a2):
    for a in range(5):
        for b in range(5):
            assert a2.weyl_dim((a, b)) == (a + 1) * (b + 1) * (a + b + 2) // 2


def test_dominance_order(a2):
    assert a2.dominance_leq((0, 0), (1, 1))
    assert a2.dominance_leq((2, 0), (3, 1))  # difference (1,1) = alpha1 + alpha2
    assert not a2.dominance_leq((0, 0), (1, 0))  # not in the root lattice
    assert not a2.dominance_leq((1, 1), (0, 0))


def test_torus_factors():
    rd = build_root_datum("A1+T1")
    assert rd.n == 2
    assert len(rd.roots) == 2
    assert rd.roots[0].coords in {(2, 0), (-2, 0)}
    assert rd.is_dominant((0, -5))
    assert rd.weyl_dim((1, 7)) == 2


def test_classify_roundtrip():
    for name in ["A1", "A2", "A4", "C2", "B3", "C3", "D4", "F4", "G2", "E6", "A1xA1+T1", "D3"]:
        rd = build_root_datum(name)
        spec = classify_root_datum(rd)
        if name == "D3":
            assert spec == DynkinSpec((("A", 3),))
        else:
            assert spec == rd.spec, name


def test_weight_key_roundtrip():
    for w in [(1, 0), (-3, 2, 0), (0,)]:
        assert parse_weight_key(weight_key(w)) == w
