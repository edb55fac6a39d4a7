"""Kernel arithmetic in the Jucys-Murphy standard basis."""

import json
import random

import pytest
from hypothesis import given, strategies as st

from hecketrace.cli import parse_element
from hecketrace.coeffring import UsageError
from hecketrace.heckealg import (
    Element, GenWord, Letter, basis, check_relations, element_from_json, format_element, jm, lk,
    monomial, mul, normalize_word, one, parse_letters, reduce_power, right_mul_J, right_mul_s, tk,
)
from hecketrace.symgroup import simple


def W(m, n, text):
    return normalize_word(GenWord(m, n, parse_letters(text)))


def E(text, m=2, n=2):
    return parse_element(text, m, n)


def test_right_multiplication_spot_values():
    s1 = simple(1, 2)
    assert right_mul_s(monomial(2, 2, (1, 0)), 1) == monomial(2, 2, (1, 0), s1)
    assert right_mul_s(monomial(2, 2, (0, 0), s1), 1) == one(2, 2)
    assert right_mul_s(monomial(2, 2, (0, 1), s1), 1) == monomial(2, 2, (0, 1))
    assert right_mul_J(monomial(2, 2, (0, 0), s1), 1) == monomial(2, 2, (0, 1), s1) - one(2, 2)
    assert right_mul_J(one(2, 2), 1) == monomial(2, 2, (1, 0))
    assert right_mul_J(monomial(2, 2, (1, 0)), 1) == E("(u1 + u2)*J1 - u1*u2")


def test_reduce_power():
    assert reduce_power(1, 2, 1) == parse_element("(u1 + u2)*J1 - u1*u2", 2, 1)
    # J_2^2 from squaring J_2 = s1 t s1 + s1 word by word
    oracle = W(2, 2, "s1 t s1 s1 t s1") + W(2, 2, "s1 t s1 s1") + W(2, 2, "s1 s1 t s1") + W(2, 2, "s1 s1")
    assert reduce_power(2, 2, 2) == oracle
    assert format_element(oracle) == "(-u1*u2) + (-u1 - u2)*s1 + (u1 + u2)*J2 + J2*s1 + J1*s1"


@pytest.mark.parametrize("m,n,k", [(2, 2, 1), (2, 2, 2), (3, 3, 3), (3, 3, 2)])
def test_iterated_J_matches_reduce_power(m, n, k):
    x = one(m, n)
    for _ in range(m):
        x = right_mul_J(x, k)
    assert x == reduce_power(k, m, n)


def test_words():
    assert W(2, 2, "s1 s1") == one(2, 2)
    assert W(2, 2, "s1 t s1") == E("J2 - s1")
    j2 = E("s1*t*s1 + s1")
    t = E("t")
    assert (mul(t, j2) - mul(j2, t)).is_zero()
    assert E("s1*s1 - 1").is_zero()


def test_named_elements():
    assert mul(one(2, 3), jm(2, 3, 2)) == jm(2, 3, 2)
    assert mul(jm(2, 3, 1), jm(2, 3, 2)) == mul(jm(2, 3, 2), jm(2, 3, 1))
    assert lk(2, 2, 2) == monomial(2, 2, (0, 0), simple(1, 2))
    assert tk(2, 2, 2) == E("J2 - s1")
    assert tk(2, 2, 2) == W(2, 2, "s1 t s1")
    assert jm(3, 3, 3) == tk(3, 3, 3) + lk(3, 3, 3)


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_relations(m, n):
    rep = check_relations(m, n)
    assert rep.passed, rep.dumps()


def test_braid_and_cyclotomic():
    assert (E("s1*s2*s1 - s2*s1*s2", 2, 3)).is_zero()
    assert E("(t - u1)*(t - u2)").is_zero()
    assert parse_element("(t - u1)*(t - u2)*(t - u3)", 3, 1).is_zero()


def test_basis_size():
    for m, n, d in [(2, 3, 48), (3, 2, 18), (1, 3, 6), (2, 1, 2)]:
        assert len(basis(m, n)) == d


def test_m1_degenerates_to_symmetric_group():
    assert parse_element("t", 1, 2) == parse_element("u1", 1, 2)


def test_associativity_random_triples():
    rng = random.Random(7)
    B = basis(2, 3)
    for _ in range(50):
        a, b, c = (monomial(2, 3, *rng.choice(B)) for _ in range(3))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))


@st.composite
def elements(draw, m=2, n=3):
    B = basis(m, n)
    x = Element(m, n, {})
    for _ in range(draw(st.integers(0, 3))):
        e, w = B[draw(st.integers(0, len(B) - 1))]
        x = x + monomial(m, n, e, w, coeff=draw(st.integers(-3, 3)))
    return x


@given(elements(), elements(), elements())
def test_associativity_and_distributivity(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@given(elements(m=3, n=2))
def test_print_parse_round_trip(x):
    assert parse_element(format_element(x), 3, 2) == x


@given(elements())
def test_json_round_trip(x):
    assert element_from_json(json.loads(json.dumps(x.to_json()))) == x


def test_embed_restrict():
    x = E("J1*J2*s1 + z")
    assert x.embed(3).restrict(2) == x
    assert x.embed(3).top_strand() <= 2


def test_out_of_range_letters():
    with pytest.raises(UsageError):
        GenWord(2, 2, (Letter("s", 2),))
    with pytest.raises(UsageError):
        GenWord(2, 2, (Letter("J", 3),))
