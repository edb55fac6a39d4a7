"""Polynomial ring: spot values, ring laws, substitution and the text round trip."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hecketrace.coeffring import (
    ParseError, UsageError, VarTable, elem_sym, poly_canon, poly_parse, poly_substitute,
)

VT = VarTable(2)


def P(text):
    return poly_parse(text, VT)


@st.composite
def polys(draw, vt=VT):
    terms = draw(st.lists(
        st.tuples(st.tuples(*[st.integers(0, 3)] * len(vt.names)),
                  st.fractions(min_value=-5, max_value=5, max_denominator=4)),
        max_size=5))
    out = vt.zero()
    for exp, c in terms:
        mono = vt.const(c)
        for name, e in zip(vt.names, exp):
            for _ in range(e):
                mono = mono * vt.var(name)
        out = out + mono
    return out


def test_spot_products():
    assert (P("u1 + z") * P("u1 - z")) == P("u1^2 - z^2")
    assert (P("u1 + u2") * P("u1*u2")) == P("u1^2*u2 + u1*u2^2")
    p = P("3*u1 - 1/2*y1")
    assert (p * VT.zero()).is_zero()
    assert p * VT.one() == p


def test_elem_sym():
    assert elem_sym(1, 2) == P("u1 + u2")
    assert elem_sym(2, 2) == P("u1*u2")
    assert elem_sym(0, 3) == VarTable(3).one()


def test_substitute():
    assert poly_substitute(P("u1*z + y1"), {"z": 0}) == P("y1")
    assert poly_substitute(P("y1"), {"y1": 1}) == VT.one()
    assert poly_substitute(P("z^2 + z"), {"z": -1}).is_zero()
    assert P("u1*z").substitute({"z": P("u2 + 1")}) == P("u1*u2 + u1")


def test_canon_format():
    p = VT.const(2) * VT.u(1) * VT.u(1) * VT.z() - VT.const(Fraction(1, 3)) * VT.y(1)
    assert poly_canon(p) == "2*u1^2*z - 1/3*y1"
    assert poly_parse("0", VT).is_zero()
    assert poly_canon(VT.zero()) == "0"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as e:
        P("u1 + * z")
    assert (e.value.line, e.value.col) == (1, 6)
    with pytest.raises(ParseError):
        P("w7")


def test_divexact():
    a, b = P("u1 + z"), P("u1 - y1")
    assert (a * b).divexact(b) == a


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(polys())
def test_text_round_trip(p):
    assert poly_parse(poly_canon(p), VT) == p


@given(polys(), polys(), st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_substitution_is_a_homomorphism(a, b, v):
    s = {"z": v, "u1": 2}
    assert (a * b).substitute(s) == a.substitute(s) * b.substitute(s)
    assert (a + b).substitute(s) == a.substitute(s) + b.substitute(s)


def test_unknown_variable_rejected():
    with pytest.raises((UsageError, KeyError, ValueError)):
        VT.index("y5")
