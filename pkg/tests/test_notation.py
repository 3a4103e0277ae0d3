from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dabruhat import (
    AffineWeight,
    DomainError,
    OutsideTitsConeError,
    ParseError,
    build_root_system,
    format_element,
    format_root,
    identity_element,
    make_element,
    parse_element,
    parse_finite_root,
    parse_root,
)
from dabruhat.notation import infer_rank
from dabruhat.sampling import random_element, random_root


def test_golden_element(a2, golden_a2):
    x, _ = golden_a2
    assert parse_element("X[1,1;1;1] Y[0,1]", a2) == x
    assert format_element(x) == "X[1,1;1;1] Y[0,1]"


def test_identity(a2):
    assert parse_element("X[0;0;0]", a2) == identity_element(a2)
    assert format_element(identity_element(a2)) == "X[0,0;0;0]"


def test_negative_level_rejected(a2):
    with pytest.raises(OutsideTitsConeError):
        parse_element("X[1,0;0;-1]", a2)


def test_level_zero_nonimaginary_rejected(a2):
    with pytest.raises(OutsideTitsConeError):
        parse_element("X[1,0;0;0]", a2)


def test_whitespace_insensitive(a2):
    assert parse_element("  X [ 1 , 1 ; 1 ; 1 ]  Y[0, 1]  ", a2) == parse_element("X[1,1;1;1]Y[0,1]", a2)


def test_word_and_weight_prefix(a2):
    x = parse_element("X[w:1,0;2;3] s1s2", a2)
    assert x.zeta == AffineWeight((1, 0), 2, 3)
    assert x.wt.w == a2.from_word([1, 2])
    assert format_element(x) == "X[w:1,0;2;3] s1s2"


def test_non_reduced_word_normalized(a2):
    x = parse_element("X[0;0;1] s1s1s2", a2)
    assert format_element(x) == "X[0,0;0;1] s2"


@pytest.mark.parametrize(
    "text,pos",
    [
        ("Y[1,1]", 0),
        ("X[1,1;1]", 7),
        ("X[1,1;1;1", 9),
        ("X[1,1;1;1] s3", 12),
        ("X[1,1;1;1] t", 11),
        ("X[1;1;1]", 3),
    ],
)
def test_parse_errors_report_position(a2, text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text, a2)
    assert info.value.position == pos


def test_roots(a2):
    assert parse_root("1,0;-2;1", a2) == (tuple([1, 0]), -2, 1)
    assert parse_finite_root("1,1", a2) == (1, 1)
    with pytest.raises(DomainError):
        parse_root("1,-1;0;0", a2)
    with pytest.raises(DomainError):
        parse_finite_root("2,0", a2)
    with pytest.raises(ParseError):
        parse_root("1,0;0", a2)


def test_infer_rank():
    assert infer_rank("X[1,1;1;1] Y[0,1]") == 2
    assert infer_rank("X[0;0;1]") is None
    assert infer_rank("X[w:1,0,0;0;1]") == 3
    assert infer_rank("1,0,0,0;1;2") == 4


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6), key=st.sampled_from([("A", 1), ("A", 2), ("A", 3), ("D", 4)]))
def test_round_trip(seed, key):
    s = build_root_system(*key)
    rng = random.Random(seed)
    x = random_element(s, rng)
    text = format_element(x)
    assert parse_element(text, s) == x
    assert format_element(parse_element(text, s)) == text
    a = random_root(s, rng)
    assert parse_root(format_root(a), s) == a


def test_non_integral_weight_uses_prefix(a2):
    x = make_element(a2, mu_weight=(1, 0), l=1)
    assert format_element(x).startswith("X[w:1,0;")
