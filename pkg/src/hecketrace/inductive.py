"""
H_{n+1} as a free left H_n-module, and the t-basis built from it.

Two module bases of H_{n+1} over H_n are used:

    J-form:  1,  s_n...s_i,  s_n...s_i J_i^k,  J_{n+1}^k
    t-form:  1,  s_n...s_i,  s_n...s_i t_i^k,  t_{n+1}^k

with 1 <= i <= n and 1 <= k < m, for m(n+1) labels in total.  A
`Decomposition` stores the left coefficient (an element of H_n) of each
label.

The J-form split follows the basis-theorem recursion: a monomial
J^a J_{n+1}^k w' s_n...s_i is handled by pushing J_{n+1}^k through the
tail with  J_{n+1}^k s_n = s_n J_n^k + sum_{j<k} J_{n+1}^{k-1-j} J_n^j,
and s_n * (module basis of H_n over H_{n-1}) is again a label.  The t-form
is obtained from the J-form by swapping each J-label for its t-label and
re-splitting the (strictly lower-degree) difference until it vanishes.

The t-basis t_1^b_1 ... t_n^b_n * w of H_n follows by peeling the top
strand recursively, using  s_{n-1}...s_i t_i^k = t_n^k s_{n-1}...s_i.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .coeffring import UsageError, poly_parse
from .heckealg import (
    Element, _acc, _vt, element_from_json, format_element, monomial, mul, one,
    right_mul_perm, tk,
)
from .symgroup import Perm, compose, embed_perm, identity, last_strand_factor, tail_word, word_to_perm

__all__ = [
    "Label", "Decomposition", "labels_J", "labels_T", "label_word",
    "decompose_J", "decompose_T", "recompose", "to_T_basis", "from_T_basis",
    "t_monomial", "t_to_json", "t_from_json", "format_t",
]

_KIND_ORDER = {"Unit": 0, "Tail": 1, "TailJ": 2, "TopJ": 3, "TailT": 2, "TopT": 3}


@dataclass(frozen=True)
class Label:
    """A module-basis word: Unit | Tail(i) | TailJ(i,k) | TopJ(k) | TailT(i,k) | TopT(k)."""
    kind: str
    i: int = 0
    k: int = 0

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.kind, self.i, self.k)

    def to_json(self) -> dict:
        out: dict = {"label": self.kind}
        if self.kind in ("Tail", "TailJ", "TailT"):
            out["i"] = self.i
        if self.kind in ("TailJ", "TopJ", "TailT", "TopT"):
            out["k"] = self.k
        return out

    def __str__(self):
        if self.kind == "Unit":
            return "Unit"
        if self.kind == "Tail":
            return f"Tail({self.i})"
        if self.kind in ("TopJ", "TopT"):
            return f"{self.kind}({self.k})"
        return f"{self.kind}({self.i},{self.k})"


UNIT = Label("Unit")


def _tail(i: int) -> Label:
    return Label("Tail", i)


def labels_J(m: int, n1: int) -> list[Label]:
    """The J-form labels of H_{n1} over H_{n1-1}."""
    n = n1 - 1
    out = [UNIT] + [_tail(i) for i in range(1, n + 1)]
    out += [Label("TailJ", i, k) for i in range(1, n + 1) for k in range(1, m)]
    out += [Label("TopJ", 0, k) for k in range(1, m)]
    return out


def labels_T(m: int, n1: int) -> list[Label]:
    n = n1 - 1
    out = [UNIT] + [_tail(i) for i in range(1, n + 1)]
    out += [Label("TailT", i, k) for i in range(1, n + 1) for k in range(1, m)]
    out += [Label("TopT", 0, k) for k in range(1, m)]
    return out


@dataclass
class Decomposition:
    """x = sum over labels of coeffs[label] * word(label), coefficients in H_{n1-1}."""
    m: int
    n1: int
    coeffs: dict = field(default_factory=dict)

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda lc: lc[0].sort_key())

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return (self.m, self.n1) == (other.m, other.n1) and self.coeffs == other.coeffs

    def to_json(self) -> dict:
        return {"labels": [dict(lab.to_json(), coeff=h.to_json()) for lab, h in self.sorted_items()]}

    @classmethod
    def from_json(cls, data, m: int, n1: int) -> "Decomposition":
        if isinstance(data, str):
            data = json.loads(data)
        coeffs = {}
        for entry in data["labels"]:
            lab = Label(entry["label"], entry.get("i", 0), entry.get("k", 0))
            coeffs[lab] = element_from_json(entry["coeff"])
        return cls(m, n1, coeffs)

    def __str__(self):
        return "\n".join(f"{lab}: {h}" for lab, h in self.sorted_items())


def _add(d: dict, lab: Label, h: Element):
    old = d.get(lab)
    s = h if old is None else old + h
    if s.is_zero():
        d.pop(lab, None)
    else:
        d[lab] = s


@lru_cache(maxsize=None)
def label_word(m: int, n1: int, lab: Label) -> Element:
    """The element of H_{n1} a label stands for."""
    n = n1 - 1
    if lab.kind == "Unit":
        return one(m, n1)
    if lab.kind in ("TopJ", "TopT"):
        if not 1 <= lab.k < m:
            raise UsageError(f"bad exponent in {lab}")
        if lab.kind == "TopJ":
            e = [0] * n1
            e[n1 - 1] = lab.k
            return monomial(m, n1, e)
        return _power(tk(m, n1, n1), lab.k)
    if not 1 <= lab.i <= n:
        raise UsageError(f"bad tail index in {lab} for H_{n1}")
    tail = right_mul_perm(one(m, n1), word_to_perm(tail_word(n1, lab.i), n1))
    if lab.kind == "Tail":
        return tail
    if not 1 <= lab.k < m:
        raise UsageError(f"bad exponent in {lab}")
    if lab.kind == "TailJ":
        e = [0] * n1
        e[lab.i - 1] = lab.k
        return mul(tail, monomial(m, n1, e))
    if lab.kind == "TailT":
        return mul(tail, _power(tk(m, n1, lab.i), lab.k))
    raise UsageError(f"unknown label kind {lab.kind!r}")


def _power(x: Element, k: int) -> Element:
    out = one(x.m, x.n)
    for _ in range(k):
        out = mul(out, x)
    return out


def recompose(dec: Decomposition) -> Element:
    out = Element._raw(dec.m, dec.n1, {})
    for lab, h in dec.coeffs.items():
        out = out + mul(h.embed(dec.n1), label_word(dec.m, dec.n1, lab))
    return out


# ---------------------------------------------------------------------------
# J-form


def _shift_by_sn(lab: Label, n: int) -> Label:
    """s_n * (label of H_n over H_{n-1}) as a label of H_{n+1} over H_n."""
    if lab.kind == "Unit":
        return _tail(n)
    if lab.kind == "Tail":
        return lab
    if lab.kind == "TailJ":
        return lab
    if lab.kind == "TopJ":
        return Label("TailJ", n, lab.k)
    raise UsageError(f"not a J-form label: {lab}")


@lru_cache(maxsize=None)
def _top_tail(m: int, n1: int, k: int, i: int) -> tuple[tuple[Label, Element], ...]:
    """J-form decomposition of J_{n1}^k s_{n1-1}...s_i (1 <= k < m, i < n1)."""
    n = n1 - 1
    out: dict = {}
    tail_n = word_to_perm(tail_word(n, i), n) if i < n else identity(n)
    # sum_j J_n^j s_{n-1}...s_i J_{n+1}^{k-1-j}
    for j in range(k):
        e = [0] * n
        e[n - 1] = j
        h = right_mul_perm(monomial(m, n, e), tail_n)
        top = k - 1 - j
        _add(out, UNIT if top == 0 else Label("TopJ", 0, top), h)
    # s_n * (J_n^k s_{n-1}...s_i), split one level down
    if i == n:
        inner = ((Label("TopJ", 0, k), one(m, n - 1)),)
    else:
        inner = _top_tail(m, n, k, i)
    for lab, g in inner:
        _add(out, _shift_by_sn(lab, n), g.embed(n))
    return tuple(sorted(out.items(), key=lambda lc: lc[0].sort_key()))


def decompose_J(x: Element) -> Decomposition:
    """Split x in H_{n+1} over the J-form labels with coefficients in H_n."""
    m, n1 = x.m, x.n
    if n1 < 1:
        raise UsageError("decomposition needs n+1 >= 1")
    n = n1 - 1
    out: dict = {}
    for (a, w), c in x.items():
        k = a[n]
        wp, i = last_strand_factor(w)
        h = monomial(m, n, a[:n], wp[:n], c)
        if k == 0:
            _add(out, UNIT if i is None else _tail(i), h)
        elif i is None:
            _add(out, Label("TopJ", 0, k), h)
        else:
            for lab, g in _top_tail(m, n1, k, i):
                _add(out, lab, mul(h, g))
    return Decomposition(m, n1, out)


# ---------------------------------------------------------------------------
# t-form

_J_TO_T = {"TailJ": "TailT", "TopJ": "TopT"}


@lru_cache(maxsize=None)
def _t_minus_j(m: int, n1: int, lab: Label) -> Element:
    tl = Label(_J_TO_T[lab.kind], lab.i, lab.k)
    return label_word(m, n1, tl) - label_word(m, n1, lab)


def decompose_T(x: Element, max_rounds: Optional[int] = None) -> Decomposition:
    """Split x in H_{n+1} over the t-form labels with coefficients in H_n."""
    m, n1 = x.m, x.n
    out: dict = {}
    rem = x
    rounds = 0
    limit = max_rounds if max_rounds is not None else (m - 1) * n1 * 2 + 2
    while not rem.is_zero():
        rounds += 1
        if rounds > limit:
            raise RuntimeError("t-form splitting did not terminate within its degree bound")
        dec = decompose_J(rem)
        nxt = Element._raw(m, n1, {})
        for lab, h in dec.coeffs.items():
            if lab.kind in ("Unit", "Tail"):
                _add(out, lab, h)
                continue
            tl = Label(_J_TO_T[lab.kind], lab.i, lab.k)
            _add(out, tl, h)
            # h*J-word = h*t-word - h*(t-word - J-word)
            nxt = nxt - mul(h.embed(n1), _t_minus_j(m, n1, lab))
        rem = nxt
    return Decomposition(m, n1, out)


# ---------------------------------------------------------------------------
# t-basis of H_n

TMonomial = tuple[tuple[int, ...], Perm]


def to_T_basis(x: Element) -> dict:
    """Coordinates of x in the basis t_1^b_1 ... t_n^b_n * w."""
    n = x.n
    if n == 0:
        c = x.coeff((), ())
        return {((), ()): c} if c else {}
    out: dict = {}
    for lab, h in decompose_T(x).coeffs.items():
        sub = to_T_basis(h)
        if lab.kind in ("Tail", "TailT"):
            tail = word_to_perm(tail_word(n, lab.i), n)
        else:
            tail = identity(n)
        top = lab.k if lab.kind in ("TailT", "TopT") else 0
        for (b, sigma), c in sub.items():
            key = (b + (top,), compose(embed_perm(sigma, n), tail))
            _acc(out, key, c)
    return out


@lru_cache(maxsize=None)
def _t_word(m: int, n: int, b: tuple[int, ...]) -> Element:
    x = one(m, n)
    for i, bi in enumerate(b, 1):
        if bi:
            x = mul(x, _power(tk(m, n, i), bi))
    return x


def t_monomial(m: int, n: int, b, w=None) -> Element:
    """t_1^b_1 ... t_n^b_n * w in the standard basis."""
    w = identity(n) if w is None else tuple(w)
    return right_mul_perm(_t_word(m, n, tuple(b)), w)


def from_T_basis(coords: dict, m: int, n: int) -> Element:
    out = Element._raw(m, n, {})
    for (b, w), c in coords.items():
        out = out + t_monomial(m, n, b, w).scale(c)
    return out


def t_to_json(coords: dict, m: int, n: int) -> dict:
    x = Element(m, n, coords)
    return x.to_json(basis="T")


def t_from_json(data) -> tuple[dict, int, int]:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("basis") != "T":
        raise UsageError("expected a T-basis element")
    m, n = int(data["m"]), int(data["n"])
    vt = _vt(m)
    coords = {(tuple(t["exp"]), tuple(t["perm"])): poly_parse(str(t["coeff"]), vt)
              for t in data["terms"]}
    return {k: v for k, v in coords.items() if v}, m, n


def format_t(coords: dict, m: int, n: int) -> str:
    return format_element(Element(m, n, coords), tletter="T")
