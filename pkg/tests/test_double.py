from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dabruhat import (
    AffineRoot,
    AffineWeight,
    DomainError,
    DoubleAffineRoot,
    ExtendedElement,
    LevelZeroError,
    NotRegularError,
    OutsideTitsConeError,
    SemigroupElement,
    aff_length,
    affine_from_word,
    affine_identity,
    apply_reflection_left,
    build_root_system,
    daff_act_on_root,
    daff_is_positive,
    daff_length,
    daff_length_split,
    daff_reflect_root,
    daff_reflection,
    decompose,
    identity_element,
    in_tits_cone,
    length,
    make_element,
    translation,
)
from dabruhat.affine import affine_root_as_weight, weight_root_pairing
from dabruhat.oracle import word_ball
from dabruhat.sampling import random_affine, random_dominant, random_element, random_positive_root, random_root


def test_positivity_examples():
    assert daff_is_positive(DoubleAffineRoot((1, 0), 0, 0))
    assert daff_is_positive(DoubleAffineRoot((1, 0), -2, 1))
    assert not daff_is_positive(DoubleAffineRoot((-1, 0), 0, 0))


def test_positivity_trichotomy(a2):
    for nu in a2.roots:
        for r in range(-4, 5):
            for j in range(-4, 5):
                a = DoubleAffineRoot(nu, r, j)
                assert daff_is_positive(a) != daff_is_positive(-a)


def test_reflection_examples(a2):
    s = daff_reflection(a2, DoubleAffineRoot((1, 0), 0, 0))
    assert s.zeta == AffineWeight((0, 0), 0, 0) and s.wt == affine_from_word(a2, [1])
    s = daff_reflection(a2, DoubleAffineRoot((1, 0), -2, 1))
    # X^{-(alpha_1 - 2 delta)} Y^{2 alpha_1} s_1
    assert s.zeta == AffineWeight((-2, 1), 2, 0)
    assert s.wt == translation(a2, (2, 0)) * affine_from_word(a2, [1])
    assert s * s == ExtendedElement(AffineWeight((0, 0), 0, 0), affine_identity(a2))


def test_reflections_are_involutions(a2):
    rng = random.Random(3)
    one = identity_element(a2)
    for _ in range(100):
        a = random_root(a2, rng, 6, 6)
        s = daff_reflection(a2, a)
        assert s * s == one
        assert s.level == 0
        assert daff_act_on_root(s, a) == -a


def test_reflection_in_semigroup_iff_j_zero(a2):
    for j in range(-2, 3):
        s = daff_reflection(a2, DoubleAffineRoot((1, 1), 1, j))
        assert in_tits_cone(s.zeta) == (j == 0)


def test_inverse_action_of_golden_x(golden_a2):
    x, alpha = golden_a2
    xinv = x.inverse()
    for r in range(-4, 5):
        for j in range(-4, 5):
            assert xinv.act(DoubleAffineRoot((1, 0), r, j)) == DoubleAffineRoot((1, 0), r - 1, j + r + 1)
    assert not daff_is_positive(xinv.act(alpha))


def test_reflect_root_examples(a2, golden_a2):
    _, alpha = golden_a2
    assert daff_reflect_root(a2, alpha, alpha) == -alpha
    beta = DoubleAffineRoot((1, 1), -3, 1)
    assert -daff_reflect_root(a2, alpha, beta) == DoubleAffineRoot((0, -1), 1, 0)


def test_reflect_root_orthogonal_d4():
    s = build_root_system("D", 4)
    a = DoubleAffineRoot((1, 0, 0, 0), 2, 1)
    b = DoubleAffineRoot((0, 0, 1, 0), -1, 3)
    assert s.pairing(a.nu, b.nu) == 0
    assert daff_reflect_root(s, a, b) == b


def test_reflect_root_matches_action(a2):
    rng = random.Random(5)
    for _ in range(500):
        a, b = random_root(a2, rng), random_root(a2, rng)
        assert daff_reflect_root(a2, a, b) == daff_act_on_root(daff_reflection(a2, a), b)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_action_is_invertible(seed):
    s = build_root_system("A", 2)
    rng = random.Random(seed)
    x = random_element(s, rng)
    a = random_root(s, rng)
    b = x.act(a)
    assert s.is_root(b.nu)
    assert x.inverse().act(b) == a


def test_tits_cone(a2):
    assert in_tits_cone(AffineWeight((0, 0), -7, 0))
    assert not in_tits_cone(AffineWeight((1, 0), 0, 0))
    assert not in_tits_cone(AffineWeight((0, 0), 0, -1))
    with pytest.raises(OutsideTitsConeError):
        make_element(a2, (1, 0), 0, -1)


def test_golden_lengths(a1, golden_a2):
    x, alpha = golden_a2
    assert length(x) == 12
    assert length(apply_reflection_left(alpha, x)) == 9
    assert length(make_element(a1, (14,), -23, 8)) == 8
    assert length(make_element(a1, (-6,), -3, 8, lam=(1,), word=[1])) == 7


@pytest.mark.parametrize("key", [("A", 1), ("A", 2)])
def test_length_of_group_part(key):
    s = build_root_system(*key)
    zero = AffineWeight((0,) * s.rank, 0, 0)
    for w, d in word_ball(s, 5).items():
        assert length(SemigroupElement(zero, w)) == d == aff_length(w)


def test_breakdown(golden_a2):
    x, _ = golden_a2
    b = daff_length(x)
    assert b.total == b.big + b.small == 12


def test_big_length_invariance(a2):
    rng = random.Random(13)
    for _ in range(10):
        zeta = random_dominant(a2, rng, 0, 3)
        bigs = {
            daff_length(SemigroupElement(random_affine(a2, rng, 4).act_weight(zeta), random_affine(a2, rng, 4))).big
            for _ in range(15)
        }
        assert len(bigs) == 1


def test_split_examples(a1):
    zeta = AffineWeight((4,), 1, 8)
    e = affine_identity(a1)
    assert daff_length_split(a1, zeta, e, e) == daff_length(SemigroupElement(zeta, e)).big
    v = affine_from_word(a1, [1, 0])
    wt = translation(a1, (1,)) * affine_from_word(a1, [1])
    assert daff_length_split(a1, zeta, v, wt) == 7
    with pytest.raises(NotRegularError):
        daff_length_split(a1, AffineWeight((0,), 0, 2), e, e)


@pytest.mark.parametrize("key", [("A", 1), ("A", 2)])
def test_split_agrees_with_definition(key):
    s = build_root_system(*key)
    rng = random.Random(17)
    for _ in range(100):
        zeta = random_dominant(s, rng, 1, 4)
        v, wt = random_affine(s, rng, 4), random_affine(s, rng, 4)
        assert daff_length_split(s, zeta, v, wt) == length(SemigroupElement(v.act_weight(zeta), wt))


def test_decompose_examples(a1, golden_a2):
    x, _ = golden_a2
    d = decompose(x)
    assert d.zeta_plus == AffineWeight((0, 0), 2, 1)
    assert d.v == affine_from_word(x.system, [0])
    assert d.wt == translation(x.system, (0, 1))
    assert not d.regular
    d = decompose(make_element(a1, (14,), -23, 8))
    assert d.zeta_plus == AffineWeight((4,), 1, 8)
    assert d.v == affine_from_word(a1, [0, 1, 0])
    assert d.wt.is_identity() and d.regular


def test_level_zero_rejected(a2):
    x = make_element(a2, m=3)
    assert length(x) == 2 * a2.coxeter_number * 3
    with pytest.raises(LevelZeroError):
        decompose(x)
    with pytest.raises(LevelZeroError):
        apply_reflection_left(DoubleAffineRoot((1, 0), 0, 0), x)


def test_apply_reflection_rejects_negative_root(golden_a2):
    x, alpha = golden_a2
    with pytest.raises(DomainError):
        apply_reflection_left(-alpha, x)


def test_apply_reflection_examples(a1, a2):
    zeta = AffineWeight((2, 3), 0, 7)
    x = SemigroupElement(zeta, affine_identity(a2))
    y = apply_reflection_left(DoubleAffineRoot((1, 0), 0, 0), x)
    s1 = affine_from_word(a2, [1])
    assert y == SemigroupElement(s1.act_weight(zeta), s1)
    z1 = AffineWeight((4,), 1, 8)
    x1 = SemigroupElement(affine_from_word(a1, [0, 1, 0]).act_weight(z1), affine_identity(a1))
    y1 = apply_reflection_left(DoubleAffineRoot((-1,), 1, 0), x1)
    assert y1 == SemigroupElement(affine_from_word(a1, [1, 0]).act_weight(z1), translation(a1, (1,)) * affine_from_word(a1, [1]))


def test_apply_reflection_matches_product(a2):
    rng = random.Random(19)
    for _ in range(50):
        x = random_element(a2, rng)
        a = random_positive_root(a2, rng)
        assert apply_reflection_left(a, x) == daff_reflection(a2, a) * x


def _profile(s, zeta, v, a):
    n = weight_root_pairing(zeta, a)
    f = [length(SemigroupElement(v.act_weight(zeta.plus(affine_root_as_weight(s, a, -j))), affine_identity(s)))
         for j in range(n + 1)]
    return n, f


@pytest.mark.parametrize("key", [("A", 1), ("A", 2)])
def test_f_convex_and_symmetric(key):
    s = build_root_system(*key)
    rng = random.Random(23)
    done = 0
    while done < 25:
        zeta = random_dominant(s, rng, 1, 4)
        v = random_affine(s, rng, 4)
        a = AffineRoot(rng.choice(s.roots), rng.randint(0, 3))
        if not a.is_positive():
            continue
        n, f = _profile(s, zeta, v, a)
        assert all(f[j - 1] + f[j + 1] >= 2 * f[j] for j in range(1, n))
        assert all(f[j] == f[n - j] for j in range(n + 1))
        done += 1
