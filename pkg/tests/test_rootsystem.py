from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dabruhat import DomainError, build_root_system, finite_act, pairing_root_root, pairing_weight_root

# (type, rank) -> (number of positive roots, Coxeter number); standard tables.
TABLE = {
    ("A", 1): (1, 2),
    ("A", 2): (3, 3),
    ("A", 4): (10, 5),
    ("D", 4): (12, 6),
    ("D", 5): (20, 8),
    ("E", 6): (36, 12),
    ("E", 7): (63, 18),
    ("E", 8): (120, 30),
}


@pytest.mark.parametrize("key", sorted(TABLE))
def test_counts_and_coxeter_number(key):
    s = build_root_system(*key)
    npos, h = TABLE[key]
    assert len(s.positive_roots) == npos == s.rank * h // 2
    assert s.coxeter_number == h == sum(s.theta) + 1


@pytest.mark.parametrize("key", sorted(TABLE))
def test_derived_data(key):
    s = build_root_system(*key)
    a = s.cartan
    n = s.rank
    assert all(a[i][i] == 2 for i in range(n))
    assert all(a[i][j] == a[j][i] in (0, -1) for i in range(n) for j in range(n) if i != j)
    assert s.two_rho_fin == tuple(map(sum, zip(*s.positive_roots)))
    assert all(s.pairing(v, v) == 2 for v in s.roots)
    assert [v for v in s.positive_roots if sum(v) == sum(s.theta)] == [s.theta]


def test_a2_roots(a2):
    assert set(a2.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert a2.theta == (1, 1)


@pytest.mark.parametrize("bad", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 3), ("Q", 2)])
def test_invalid_types_rejected(bad):
    with pytest.raises(DomainError):
        build_root_system(*bad)


def test_pairing_examples(a2):
    assert pairing_root_root(a2, (1, 0), (1, 0)) == 2
    assert pairing_root_root(a2, (1, 0), (0, 1)) == -1
    assert pairing_root_root(a2, (0, 1), (1, 1)) == 1
    assert pairing_weight_root(a2, (1, 0), (1, 0)) == 1
    assert pairing_weight_root(a2, (1, 1), (1, 1)) == 2
    assert pairing_weight_root(a2, (0, 0), (0, 1)) == 0


def test_pairing_rejects_non_roots(a2):
    with pytest.raises(DomainError):
        pairing_root_root(a2, (1, -1), (1, 0))
    with pytest.raises(DomainError):
        pairing_root_root(a2, (1, 0, 0), (1, 0))


@pytest.mark.parametrize("key", [("A", 2), ("A", 3), ("D", 4)])
def test_pairing_table_exhaustive(key):
    s = build_root_system(*key)
    for u, v in itertools.product(s.roots, repeat=2):
        k = s.pairing(u, v)
        assert k == s.pairing(v, u)
        assert abs(k) <= 2
        assert (k == 2) == (u == v)
        assert (k == -2) == (u == tuple(-c for c in v))


def test_finite_act_examples(a2):
    s1 = a2.simple_reflection(1)
    assert finite_act(s1, (1, 0)) == (-1, 0)
    assert finite_act(s1, (0, 1)) == (1, 1)
    assert finite_act(a2.identity, (3, -2), "weight") == (3, -2)


def _all_elements(s):
    seen = {s.identity}
    frontier = [s.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, s.rank + 1):
                u = w * s.simple_reflection(i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def test_weyl_group_orders():
    # |W(A2)| = 6, |W(A3)| = 24, |W(D4)| = 192
    for key, order in [(("A", 2), 6), (("A", 3), 24), (("D", 4), 192)]:
        assert len(_all_elements(build_root_system(*key))) == order


@pytest.mark.parametrize("key", [("A", 3), ("D", 4)])
def test_words_map_roots_to_roots(key):
    s = build_root_system(*key)
    for word in itertools.product(range(1, s.rank + 1), repeat=3):
        w = s.from_word(word)
        assert sorted(w.act_root(v) for v in s.roots) == sorted(s.roots)


def test_pairing_invariance_a2(a2):
    for w in _all_elements(a2):
        for u, v in itertools.product(a2.roots, repeat=2):
            assert a2.pairing(w.act_root(u), w.act_root(v)) == a2.pairing(u, v)
        for mu in [(1, 0), (0, 1), (2, -3)]:
            for v in a2.roots:
                assert dot_weight(w.act_weight(mu), w.act_root(v)) == dot_weight(mu, v)


def dot_weight(mu, v):
    return sum(a * b for a, b in zip(mu, v))


@settings(max_examples=60, deadline=None)
@given(word=st.lists(st.integers(1, 4), max_size=8))
def test_length_equals_positive_roots_sent_negative(word):
    s = build_root_system("D", 4)
    w = s.from_word(word)
    neg = sum(1 for v in s.positive_roots if not s.is_positive(w.act_root(v)))
    assert w.length() == neg == len(w.reduced_word())
    assert s.from_word(w.reduced_word()) == w
    assert w * w.inverse() == s.identity


def test_weight_root_conversion(a2):
    assert a2.root_to_weight((1, 0)) == (2, -1)
    assert a2.weight_to_root((2, -1)) == (1, 0)
    assert a2.weight_to_root((1, 0)) is None
