"""
Exact polynomials over the rationals in the variables u1..um, z, y1..y(m-1).

Every scalar the algebra produces (structure constants, trace values) lives
in this ring.  Coefficients are Python ints when integral and
`fractions.Fraction` otherwise, so the common integer case stays fast.

>>> vt = VarTable(2)
>>> u1, z = vt.var("u1"), vt.var("z")
>>> print((u1 + z) * (u1 - z))
u1^2 - z^2
>>> print(poly_parse("2*u1^2*z - 1/3*y1", vt))
2*u1^2*z - 1/3*y1
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

__all__ = [
    "Rational", "VarTable", "Polynomial", "UsageError", "ParseError",
    "elem_sym", "poly_substitute", "poly_canon", "poly_parse", "to_rational",
]

Rational = Union[int, Fraction]


class UsageError(ValueError):
    """Raised on contract violations (mismatched ambients, bad indices)."""


class ParseError(ValueError):
    """Malformed text; `pos` is the 0-based offset of the offending token."""

    def __init__(self, msg: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.col = line, col
        super().__init__(f"{msg} at line {line}, column {col}")


def to_rational(value) -> Rational:
    """Normalize an int/Fraction/str to the canonical coefficient type."""
    if isinstance(value, bool):
        raise UsageError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


@dataclass(frozen=True)
class VarTable:
    """The ordered variable list [u1..um, z, y1..y(m-1)]; 2m variables."""
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise UsageError(f"m must be positive, got {self.m}")

    @property
    def names(self) -> tuple[str, ...]:
        return _names(self.m)

    @property
    def nvars(self) -> int:
        return 2 * self.m

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError(f"unknown variable {name!r} for m={self.m}") from None

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): 1})

    def u(self, i: int) -> "Polynomial":
        return self.var(f"u{i}")

    def z(self) -> "Polynomial":
        return self.var("z")

    def y(self, k: int) -> "Polynomial":
        return self.var(f"y{k}")

    def const(self, c) -> "Polynomial":
        return Polynomial.constant(self, c)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial.constant(self, 1)


@lru_cache(maxsize=None)
def _names(m: int) -> tuple[str, ...]:
    return (tuple(f"u{i}" for i in range(1, m + 1)) + ("z",)
            + tuple(f"y{k}" for k in range(1, m)))


class Polynomial:
    """
    Immutable sparse polynomial: a map exponent-vector -> nonzero coefficient.

    Equality is structural; the zero polynomial has no terms.
    """

    __slots__ = ("vt", "_terms", "_hash")

    def __init__(self, vt: VarTable, terms: Mapping[tuple, Rational] | None = None):
        self.vt = vt
        clean = {}
        if terms:
            n = vt.nvars
            for e, c in terms.items():
                if len(e) != n:
                    raise UsageError(f"exponent vector {e} has wrong length for m={vt.m}")
                if c:
                    clean[e] = to_rational(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vt: VarTable, terms: dict) -> "Polynomial":
        # terms already clean: no zeros, right lengths, normalized coefficients
        p = object.__new__(cls)
        p.vt = vt
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, vt: VarTable, c) -> "Polynomial":
        c = to_rational(c)
        if not c:
            return cls._raw(vt, {})
        return cls._raw(vt, {(0,) * vt.nvars: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        t = self._terms
        return not t or (len(t) == 1 and not any(next(iter(t))))

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise UsageError(f"{self} is not a constant")
        return next(iter(self._terms.values()), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def _check(self, other: "Polynomial"):
        if self.vt != other.vt:
            raise UsageError(f"variable tables differ: m={self.vt.m} vs m={other.vt.m}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self.vt, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return Polynomial._raw(self.vt, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vt, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial._raw(self.vt, {})
        if len(b) == 1 and not any(next(iter(b))):
            c = next(iter(b.values()))
            if c == 1:
                return self
            return Polynomial._raw(self.vt, {e: _norm(x * c) for e, x in a.items()})
        if len(a) == 1 and not any(next(iter(a))):
            return other * self
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.vt, {e: _norm(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise UsageError("exponent must be a nonnegative integer")
        out = Polynomial.constant(self.vt, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vt == other.vt and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == Polynomial.constant(self.vt, other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vt.m, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[tuple, Rational]]:
        """Terms in graded-lexicographic order, largest first."""
        return sorted(self._terms.items(), key=lambda ec: _grlex_key(ec[0]))

    def leading_term(self) -> tuple[tuple, Rational]:
        if not self._terms:
            raise UsageError("zero polynomial has no leading term")
        return min(self._terms.items(), key=lambda ec: _grlex_key(ec[0]))

    def substitute(self, bindings: Mapping[str, object]) -> "Polynomial":
        return poly_substitute(self, bindings)

    def divexact(self, d: "Polynomial") -> "Polynomial":
        """Exact quotient self / d; raises UsageError if d does not divide."""
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if d.is_constant():
            c = d.constant_value()
            return Polynomial._raw(self.vt, {e: _norm(Fraction(x) / c) for e, x in self._terms.items()})
        rem = self
        quot: dict = {}
        de, dc = d.leading_term()
        while rem._terms:
            re_, rc = rem.leading_term()
            qe = tuple(a - b for a, b in zip(re_, de))
            if any(x < 0 for x in qe):
                raise UsageError(f"{d} does not divide {self}")
            qc = _norm(Fraction(rc) / dc)
            quot[qe] = qc
            rem = rem - Polynomial._raw(self.vt, {qe: qc}) * d
        return Polynomial._raw(self.vt, quot)

    def __str__(self):
        return poly_canon(self)

    def __repr__(self):
        return f"Polynomial({poly_canon(self)!r}, m={self.vt.m})"


def _norm(c: Rational) -> Rational:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _grlex_key(e: tuple) -> tuple:
    return (-sum(e), tuple(-x for x in e))


def elem_sym(i: int, m: int) -> Polynomial:
    """The i-th elementary symmetric polynomial in u1..um (e_0 = 1)."""
    if not 0 <= i <= m:
        raise UsageError(f"elem_sym index {i} outside 0..{m}")
    return _elem_sym(i, m)


@lru_cache(maxsize=None)
def _elem_sym(i: int, m: int) -> Polynomial:
    from itertools import combinations
    vt = VarTable(m)
    terms = {}
    for combo in combinations(range(m), i):
        e = [0] * vt.nvars
        for j in combo:
            e[j] = 1
        terms[tuple(e)] = 1
    return Polynomial(vt, terms)


def poly_substitute(p: Polynomial, bindings: Mapping[str, object]) -> Polynomial:
    """Evaluate some variables at rationals (or polynomials); others survive."""
    vt = p.vt
    vals = {}
    for name, v in bindings.items():
        idx = vt.index(name)
        if isinstance(v, Polynomial):
            if v.vt != vt:
                raise UsageError("binding polynomial lives over a different variable table")
            vals[idx] = v
        else:
            vals[idx] = to_rational(v)
    if not vals:
        return p
    if all(not isinstance(v, Polynomial) for v in vals.values()):
        out: dict = {}
        for e, c in p.items():
            coeff = c
            e2 = list(e)
            for idx, v in vals.items():
                if e2[idx]:
                    coeff = coeff * v ** e2[idx]
                    e2[idx] = 0
            if coeff:
                t = tuple(e2)
                s = out.get(t, 0) + coeff
                if s:
                    out[t] = s
                else:
                    del out[t]
        return Polynomial._raw(vt, {e: _norm(c) for e, c in out.items()})
    out_p = Polynomial(vt, {})
    for e, c in p.items():
        e2 = list(e)
        term = Polynomial.constant(vt, c)
        for idx, v in vals.items():
            if e2[idx]:
                term = term * (v if isinstance(v, Polynomial) else Polynomial.constant(vt, v)) ** e2[idx]
                e2[idx] = 0
        out_p = out_p + term * Polynomial._raw(vt, {tuple(e2): 1})
    return out_p


def _fmt_coeff(c: Rational) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def poly_canon(p: Polynomial) -> str:
    """Canonical text, graded-lex with u1 > ... > um > z > y1 > ... ."""
    if p.is_zero():
        return "0"
    names = p.vt.names
    pieces = []
    for idx, (e, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        if not factors:
            body = _fmt_coeff(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = _fmt_coeff(a) + "*" + "*".join(factors)
        if idx == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+\d*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            break
        if mt.group(1) is not None:
            toks.append(("num", mt.group(1), mt.start(1)))
        elif mt.group(2) is not None:
            toks.append(("name", mt.group(2), mt.start(2)))
        elif mt.group(3) is not None:
            toks.append(("op", mt.group(3), mt.start(3)))
        pos = mt.end()
    toks.append(("end", "", len(text)))
    return toks


class _PolyParser:
    """Recursive descent over + - * ^ ( ) with rational literals a/b."""

    def __init__(self, text: str, vt: VarTable):
        self.text = text
        self.vt = vt
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("expected a nonnegative integer exponent", tok)
            base = base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "num" or int(den[1]) == 0:
                    self.fail("expected a positive integer denominator", den)
                return Polynomial.constant(self.vt, Fraction(int(val), int(den[1])))
            return Polynomial.constant(self.vt, int(val))
        if kind == "name":
            if val not in self.vt.names:
                self.fail(f"unknown variable {val!r}", tok)
            return self.vt.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return p
        self.fail(f"unexpected {val!r}" if kind != "end" else "unexpected end of input", tok)


def poly_parse(text: str, vt: VarTable) -> Polynomial:
    """Parse polynomial text; inverse of `poly_canon`."""
    return _PolyParser(text, vt).parse()

