"""
The degenerate cyclotomic Hecke algebra H_n(u) in its Jucys-Murphy standard basis.

Every element is stored as a map from standard monomials
``J_1^a_1 ... J_n^a_n * w`` (all a_i < m, w in S_n) to nonzero polynomial
coefficients; this map is the canonical form, so equality is structural.

Products are computed by pushing Jucys-Murphy factors leftward through the
permutation part with the local rules

    s_i J_j = J_j s_i        (j != i, i+1)
    s_i J_i = J_{i+1} s_i - 1
    s_i J_{i+1} = J_i s_i + 1

and by replacing any J_k^m with its precomputed expansion R_k.  R_1 comes
from the cyclotomic relation; for k > 1

    R_k = s R_{k-1} s + sum_{i<m} J_k^{m-1-i} J_{k-1}^i s,   s = s_{k-1},

which follows from J_k^c s = s J_{k-1}^c + sum_{i<c} J_k^{c-1-i} J_{k-1}^i.
Each R_k has total J-degree below m, so rewriting terminates: the total
degree of an overflowing monomial strictly drops at every reduction.

>>> x = normalize_word(GenWord(2, 2, parse_letters("s1 t s1")))
>>> print(x)
-s1 + J2
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Optional, Sequence

from .coeffring import Polynomial, UsageError, VarTable, elem_sym, poly_canon, poly_parse
from .report import Report
from .symgroup import (
    Perm, all_perms, compose, embed_perm, identity, perm, reduced_word, simple,
    transposition,
)

__all__ = [
    "Element", "Letter", "GenWord", "parse_letters", "basis", "one", "monomial",
    "right_mul_s", "right_mul_J", "right_mul_perm", "left_mul_s", "mul",
    "reduce_power", "normalize_word", "jm", "lk", "tk", "check_relations",
    "monomial_key", "element_from_json",
]

Exp = tuple[int, ...]
Monomial = tuple[Exp, Perm]


@lru_cache(maxsize=None)
def _vt(m: int) -> VarTable:
    return VarTable(m)


def monomial_key(mon: Monomial) -> tuple:
    """Lexicographic on (exponent vector, one-line permutation)."""
    return mon


class Element:
    """An immutable element of H_n(u), as {(exp, perm): Polynomial}."""

    __slots__ = ("m", "n", "_terms")

    def __init__(self, m: int, n: int, terms: Optional[dict] = None):
        if m < 1 or n < 0:
            raise UsageError(f"bad ambient (m={m}, n={n})")
        self.m, self.n = m, n
        vt = _vt(m)
        clean = {}
        for (exp, w), c in (terms or {}).items():
            exp = tuple(exp)
            w = perm(w)
            if len(exp) != n or len(w) != n:
                raise UsageError(f"monomial {exp}, {w} does not live in H_{n}")
            if any(a < 0 or a >= m for a in exp):
                raise UsageError(f"exponent vector {exp} not reduced mod m={m}")
            if not isinstance(c, Polynomial):
                c = Polynomial.constant(vt, c)
            elif c.vt != vt:
                raise UsageError("coefficient over the wrong variable table")
            if c:
                clean[(exp, w)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, m: int, n: int, terms: dict) -> "Element":
        x = object.__new__(cls)
        x.m, x.n, x._terms = m, n, terms
        return x

    @property
    def vt(self) -> VarTable:
        return _vt(self.m)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Monomial, Polynomial]]:
        return sorted(self._terms.items(), key=lambda mc: monomial_key(mc[0]))

    def __iter__(self) -> Iterator[tuple[Monomial, Polynomial]]:
        return iter(self.sorted_items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, exp: Sequence[int], w: Sequence[int]) -> Polynomial:
        return self._terms.get((tuple(exp), tuple(w)), self.vt.zero())

    def degree(self) -> int:
        """Largest total J-degree among the monomials (-1 for zero)."""
        return max((sum(e) for e, _ in self._terms), default=-1)

    def _check(self, other: "Element"):
        if (self.m, self.n) != (other.m, other.n):
            raise UsageError(f"ambient mismatch: (m={self.m}, n={self.n}) vs (m={other.m}, n={other.n})")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            _acc(out, k, c)
        return Element._raw(self.m, self.n, out)

    def __neg__(self):
        return Element._raw(self.m, self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Element":
        if not isinstance(c, Polynomial):
            c = Polynomial.constant(self.vt, c)
        if not c:
            return Element._raw(self.m, self.n, {})
        return Element._raw(self.m, self.n, {k: v * c for k, v in self._terms.items() if v * c})

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        if isinstance(other, (int, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self._terms == other._terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self._terms.items())))

    def substitute(self, bindings) -> "Element":
        out = {}
        for k, c in self._terms.items():
            c2 = c.substitute(bindings)
            if c2:
                out[k] = c2
        return Element._raw(self.m, self.n, out)

    def embed(self, n: int) -> "Element":
        """The same element viewed in H_n for n >= self.n."""
        if n < self.n:
            raise UsageError(f"cannot embed H_{self.n} into H_{n}")
        pad = (0,) * (n - self.n)
        return Element._raw(self.m, n, {(e + pad, embed_perm(w, n)): c
                                        for (e, w), c in self._terms.items()})

    def restrict(self, n: int) -> "Element":
        """View in H_n; raises if the support uses strands above n."""
        out = {}
        for (e, w), c in self._terms.items():
            if any(e[n:]) or w[n:] != tuple(range(n + 1, self.n + 1)):
                raise UsageError(f"element is not supported in H_{n}")
            out[(e[:n], w[:n])] = c
        return Element._raw(self.m, n, out)

    def top_strand(self) -> int:
        """Smallest k such that the element lies in H_k."""
        k = 0
        for (e, w), _ in self._terms.items():
            for j in range(self.n, k, -1):
                if e[j - 1] or w[j - 1] != j:
                    k = j
                    break
        return k

    def to_json(self, basis: str = "J") -> dict:
        return {
            "m": self.m, "n": self.n, "basis": basis,
            "terms": [{"exp": list(e), "perm": list(w), "coeff": poly_canon(c)}
                      for (e, w), c in self.sorted_items()],
        }

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element(m={self.m}, n={self.n}, {format_element(self)!r})"


def element_from_json(data) -> Element:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("basis", "J") != "J":
        raise UsageError(f"expected a J-basis element, got basis {data.get('basis')!r}")
    m, n = int(data["m"]), int(data["n"])
    vt = _vt(m)
    terms: dict = {}
    for t in data["terms"]:
        key = (tuple(t["exp"]), perm(t["perm"]))
        c = poly_parse(str(t["coeff"]), vt)
        if key in terms:
            raise UsageError(f"duplicate monomial {key}")
        terms[key] = c
    return Element(m, n, terms)


def _mon_text(exp: Exp, w: Perm, tletter: str = "J") -> str:
    parts = []
    for i, a in enumerate(exp, 1):
        if a == 1:
            parts.append(f"{tletter}{i}")
        elif a:
            parts.append(f"{tletter}{i}^{a}")
    if w != identity(len(w)):
        parts.extend(f"s{i}" for i in reduced_word(w))
    return "*".join(parts)


def format_element(x: Element, tletter: str = "J") -> str:
    """Human-readable text that parses back through the CLI grammar."""
    if not x._terms:
        return "0"
    pieces = []
    for idx, ((e, w), c) in enumerate(x.sorted_items()):
        mon = _mon_text(e, w, tletter)
        if c.is_constant():
            v = c.constant_value()
            neg = v < 0
            a = -v if neg else v
            ctext = "" if a == 1 and mon else str(a)
        else:
            neg = False
            ctext = f"({poly_canon(c)})"
        body = ctext + ("*" if ctext and mon else "") + mon
        if idx == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def _acc(out: dict, key, c: Polynomial):
    old = out.get(key)
    if old is None:
        if c:
            out[key] = c
        return
    s = old + c
    if s:
        out[key] = s
    else:
        del out[key]


def _check_index(i: int, lo: int, hi: int, what: str):
    if not lo <= i <= hi:
        raise UsageError(f"{what} index {i} outside {lo}..{hi}")


def one(m: int, n: int) -> Element:
    return Element._raw(m, n, {((0,) * n, identity(n)): _vt(m).one()})


def zero(m: int, n: int) -> Element:
    return Element._raw(m, n, {})


def monomial(m: int, n: int, exp: Sequence[int], w: Optional[Sequence[int]] = None, coeff=1) -> Element:
    """J^exp * w; exponents >= m are reduced."""
    w = identity(n) if w is None else perm(w)
    exp = tuple(exp)
    if len(exp) != n or len(w) != n:
        raise UsageError("monomial size does not match n")
    c = coeff if isinstance(coeff, Polynomial) else Polynomial.constant(_vt(m), coeff)
    if all(a < m for a in exp):
        return Element._raw(m, n, {(exp, w): c} if c else {})
    out: dict = {}
    for (b, v), d in _reduce_exp(m, n, exp).items():
        _acc(out, (b, compose(v, w)), d * c)
    return Element._raw(m, n, out)


def basis(m: int, n: int) -> list[Monomial]:
    """The standard basis, sorted by the monomial order."""
    return [(e, w) for e in product(range(m), repeat=n) for w in all_perms(n)]


# ---------------------------------------------------------------------------
# rewriting kernel

@lru_cache(maxsize=None)
def _perm_times_J(w: Perm, j: int) -> tuple[int, Perm, tuple[tuple[int, Perm], ...]]:
    """
    w * J_j = J_{j'} * q + sum(sign * p) with q, p permutations.

    Walks the reduced word of w from the right, moving J leftward.
    """
    n = len(w)
    word = reduced_word(w)
    q = identity(n)
    corrections = []
    for pos in range(len(word) - 1, -1, -1):
        i = word[pos]
        s = simple(i, n)
        if j == i or j == i + 1:
            prefix = identity(n)
            for letter in word[:pos]:
                prefix = compose(prefix, simple(letter, n))
            sign = -1 if j == i else 1
            corrections.append((sign, compose(prefix, q)))
            j = i + 1 if j == i else i
        q = compose(s, q)
    return j, q, tuple(corrections)


@lru_cache(maxsize=None)
def _R(m: int, n: int, k: int) -> dict:
    """Canonical terms of J_k^m in ambient H_n."""
    vt = _vt(m)
    out: dict = {}
    if k == 1:
        for i in range(1, m + 1):
            e = [0] * n
            e[0] = m - i
            _acc(out, (tuple(e), identity(n)), elem_sym(i, m) * (-1) ** (i + 1))
        return out
    s = simple(k - 1, n)
    for (b, v), d in _R(m, n, k - 1).items():
        c = b[k - 2]
        base = list(b)
        base[k - 2] = 0
        main = list(base)
        main[k - 1] = c
        _acc(out, (tuple(main), compose(compose(s, v), s)), d)
        for i in range(c):
            e = list(base)
            e[k - 1] = c - 1 - i
            e[k - 2] = i
            _acc(out, (tuple(e), compose(v, s)), -d)
    for i in range(m):
        e = [0] * n
        e[k - 1] = m - 1 - i
        e[k - 2] += i
        _acc(out, (tuple(e), s), vt.one())
    assert all(a < m for (e, _), _c in out.items() for a in e)
    return out


@lru_cache(maxsize=None)
def _reduce_exp(m: int, n: int, a: Exp) -> dict:
    """Canonical terms of J^a for an exponent vector with entries possibly >= m."""
    for k, ak in enumerate(a, 1):
        if ak >= m:
            break
    else:
        return {(a, identity(n)): _vt(m).one()}
    rest = list(a)
    rest[k - 1] -= m
    out: dict = {}
    for (b, v), d in _R(m, n, k).items():
        e = tuple(x + y for x, y in zip(rest, b))
        if all(x < m for x in e):
            _acc(out, (e, v), d)
        else:
            for (b2, v2), d2 in _reduce_exp(m, n, e).items():
                _acc(out, (b2, compose(v2, v)), d * d2)
    return out


def reduce_power(k: int, m: int, n: Optional[int] = None) -> Element:
    """The canonical expansion of J_k^m, in H_n (default H_k)."""
    n = k if n is None else n
    _check_index(k, 1, n, "strand")
    return Element._raw(m, n, dict(_R(m, n, k)))


def right_mul_s(x: Element, i: int) -> Element:
    _check_index(i, 1, x.n - 1, "generator")
    s = simple(i, x.n)
    return Element._raw(x.m, x.n, {(e, compose(w, s)): c for (e, w), c in x._terms.items()})


def right_mul_perm(x: Element, v: Perm) -> Element:
    if len(v) != x.n:
        raise UsageError("permutation size does not match ambient n")
    return Element._raw(x.m, x.n, {(e, compose(w, v)): c for (e, w), c in x._terms.items()})


def right_mul_J(x: Element, j: int) -> Element:
    _check_index(j, 1, x.n, "strand")
    m, n = x.m, x.n
    out: dict = {}
    for (a, w), c in x._terms.items():
        jf, q, corrections = _perm_times_J(w, j)
        a2 = list(a)
        a2[jf - 1] += 1
        a2 = tuple(a2)
        if a2[jf - 1] < m:
            _acc(out, (a2, q), c)
        else:
            for (b, v), d in _reduce_exp(m, n, a2).items():
                _acc(out, (b, compose(v, q)), c * d)
        for sign, p in corrections:
            _acc(out, (a, p), c if sign > 0 else -c)
    return Element._raw(m, n, out)


def left_mul_s(i: int, x: Element) -> Element:
    """s_i * x, moving s_i rightward through the J-part."""
    _check_index(i, 1, x.n - 1, "generator")
    m, n = x.m, x.n
    s = simple(i, n)
    out: dict = {}

    def put(e, w, c):
        if all(a < m for a in e):
            _acc(out, (e, w), c)
        else:
            for (b, v), d in _reduce_exp(m, n, e).items():
                _acc(out, (b, compose(v, w)), c * d)

    for (a, w), c in x._terms.items():
        p, q = a[i - 1], a[i]
        base = list(a)
        base[i - 1] = base[i] = 0
        # s J_i^p J_{i+1}^q = J_i^q J_{i+1}^p s
        #   + sum_{r<q} J_{i+1}^{p+q-1-r} J_i^r - sum_{r<p} J_{i+1}^{p+q-1-r} J_i^r
        e = list(base)
        e[i - 1], e[i] = q, p
        put(tuple(e), compose(s, w), c)
        for r in range(max(p, q)):
            sign = (r < q) - (r < p)
            if sign:
                e = list(base)
                e[i - 1], e[i] = r, p + q - 1 - r
                put(tuple(e), w, c if sign > 0 else -c)
    return Element._raw(m, n, out)


def mul(x: Element, y: Element) -> Element:
    """The algebra product x*y."""
    x._check(y)
    m, n = x.m, x.n
    out: dict = {}
    cache: dict = {}
    for (b, v), d in y._terms.items():
        part = cache.get(b)
        if part is None:
            part = x
            for j, bj in enumerate(b, 1):
                for _ in range(bj):
                    part = right_mul_J(part, j)
            cache[b] = part
        for (e, w), c in part._terms.items():
            _acc(out, (e, compose(w, v)), c * d)
    return Element._raw(m, n, out)


# ---------------------------------------------------------------------------
# words and named elements

class Letter(NamedTuple):
    """One generator-word letter: kind in {t, s, J, T, L} plus an index."""
    kind: str
    index: int = 0

    def __str__(self):
        return "t" if self.kind == "t" else f"{self.kind}{self.index}"


@dataclass(frozen=True)
class GenWord:
    """A word in t, s_i and the macros J_k, t_k (kind T), L_k, over (m, n)."""
    m: int
    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(Letter(*l) for l in self.letters))
        for l in self.letters:
            if l.kind == "t":
                if self.n < 1:
                    raise UsageError("t needs n >= 1")
            elif l.kind == "s":
                _check_index(l.index, 1, self.n - 1, "generator s")
            elif l.kind in ("J", "T", "L"):
                _check_index(l.index, 1, self.n, f"macro {l.kind}")
            else:
                raise UsageError(f"unknown letter kind {l.kind!r}")


def parse_letters(text: str) -> tuple[Letter, ...]:
    """'t s1 J2' -> letters; whitespace or '*' separated."""
    out = []
    for tok in text.replace("*", " ").split():
        if tok == "t":
            out.append(Letter("t"))
        elif tok[0] in "sJTL" and tok[1:].isdigit():
            out.append(Letter(tok[0], int(tok[1:])))
        else:
            raise UsageError(f"bad letter {tok!r}")
    return tuple(out)


def normalize_word(word: GenWord) -> Element:
    """Fold the letters left to right into the canonical form."""
    x = one(word.m, word.n)
    for l in word.letters:
        x = apply_letter(x, l)
    return x


def apply_letter(x: Element, l: Letter) -> Element:
    if l.kind == "t":
        return right_mul_J(x, 1)
    if l.kind == "s":
        return right_mul_s(x, l.index)
    if l.kind == "J":
        return right_mul_J(x, l.index)
    if l.kind == "T":
        return mul(x, tk(x.m, x.n, l.index))
    if l.kind == "L":
        return mul(x, lk(x.m, x.n, l.index))
    raise UsageError(f"unknown letter kind {l.kind!r}")


def jm(m: int, n: int, k: int) -> Element:
    """The Jucys-Murphy element J_k."""
    _check_index(k, 1, n, "strand")
    return right_mul_J(one(m, n), k)


def lk(m: int, n: int, k: int) -> Element:
    """L_k = (1 k) + ... + (k-1 k); L_1 = 0."""
    _check_index(k, 1, n, "strand")
    c = _vt(m).one()
    return Element._raw(m, n, {((0,) * n, transposition(i, k, n)): c for i in range(1, k)})


def tk(m: int, n: int, k: int) -> Element:
    """t_k = s_{k-1}...s_1 t s_1...s_{k-1} = J_k - L_k."""
    return _tk(m, n, k)


@lru_cache(maxsize=None)
def _tk(m: int, n: int, k: int) -> Element:
    return jm(m, n, k) - lk(m, n, k)


# ---------------------------------------------------------------------------
# defining relations

def _word(m: int, n: int, text: str) -> Element:
    return normalize_word(GenWord(m, n, parse_letters(text)))


def check_relations(m: int, n: int) -> Report:
    """Normalize both sides of every defining relation; report differences."""
    names = ("cyclotomic", "t-J2 commutation", "t-s commutation", "involution", "braid", "far commutation")
    # a family with no instances at this n (e.g. far commutation below n = 4) is vacuous
    rep = Report("relations", m, n, params={"families": list(names), "instances": dict.fromkeys(names, 0)})
    counts = rep.params["instances"]
    vt = _vt(m)

    def check(family, desc, lhs, rhs):
        counts[family] += 1
        diff = lhs - rhs
        rep.check(diff.is_zero(), f"{family}: {desc}", {"m": m, "n": n}, lhs, rhs)

    if n >= 1:
        t = jm(m, n, 1)
        acc = one(m, n)
        for i in range(1, m + 1):
            acc = mul(acc, t - one(m, n).scale(vt.u(i)))
        check("cyclotomic", "(t-u1)...(t-um) = 0", acc, zero(m, n))
    if n >= 2:
        j2 = _word(m, n, "s1 t s1") + _word(m, n, "s1")
        t = jm(m, n, 1)
        check("t-J2 commutation", "t(s1 t s1 + s1) = (s1 t s1 + s1) t", mul(t, j2), mul(j2, t))
    for i in range(2, n):
        check("t-s commutation", f"t s{i} = s{i} t", _word(m, n, f"t s{i}"), _word(m, n, f"s{i} t"))
    for i in range(1, n):
        check("involution", f"s{i}^2 = 1", _word(m, n, f"s{i} s{i}"), one(m, n))
    for i in range(1, n - 1):
        check("braid", f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}",
              _word(m, n, f"s{i} s{i+1} s{i}"), _word(m, n, f"s{i+1} s{i} s{i+1}"))
    for i in range(1, n):
        for j in range(i + 2, n):
            check("far commutation", f"s{i} s{j} = s{j} s{i}",
                  _word(m, n, f"s{i} s{j}"), _word(m, n, f"s{j} s{i}"))
    return rep
