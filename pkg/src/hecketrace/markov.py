"""
Markov traces on the tower H_1 < H_2 < ...

Two evaluators:

* `tr_eval`, the normalized trace (tr(1) = 1), evaluated in the t-basis:
  tr(t_n^k h) = y_k tr(h) for h in H_{n-1}, and tr(a s_{n-1} b) = z tr(ab).
* `Tr_eval`, the non-normalized trace (Tr(1) = 0), evaluated in the
  J-basis.  Each level n carries its own functional Tr_n; a monomial whose
  top strand is untouched contributes Tr(J_n^0) = Tr(1) = 0, a top power
  J_n^k contributes the moment TrJ_moment(n, k) times Tr_{n-1} of the rest,
  and a tail s_{n-1}...s_j contributes z times Tr_{n-1} with the top letter
  stripped.

Both evaluators work symbolically in z, y1..y(m-1) and memoize per basis
monomial; `TraceParams` values are substituted at the end.

>>> from .heckealg import jm, one
>>> print(tr_eval(jm(2, 2, 2)))
z + y1
>>> print(Tr_eval(one(2, 1)))
0
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Mapping, Optional

from .coeffring import Polynomial, UsageError, VarTable, to_rational
from .heckealg import Element, _vt, monomial, mul, right_mul_perm
from .inductive import t_monomial, to_T_basis
from .symgroup import Perm, identity, last_strand_factor, tail_word, word_to_perm

__all__ = [
    "TraceParams", "TraceKind", "TraceMismatch", "tr_eval", "Tr_eval",
    "TrJ_moment", "tau_bk", "tr0", "specialize_trace", "trace_of",
]


class TraceMismatch(RuntimeError):
    """Two routes to the same specialized trace disagreed."""


@dataclass(frozen=True)
class TraceParams:
    """Values for z and y1..y(m-1); each defaults to its own symbol."""
    m: int
    z: Polynomial
    y: tuple

    def __post_init__(self):
        if len(self.y) != self.m - 1:
            raise UsageError(f"need {self.m - 1} y-parameters, got {len(self.y)}")

    @classmethod
    def symbolic(cls, m: int) -> "TraceParams":
        vt = _vt(m)
        return cls(m, vt.z(), tuple(vt.y(k) for k in range(1, m)))

    @classmethod
    def from_values(cls, m: int, z=None, y: Optional[Mapping[int, object]] = None) -> "TraceParams":
        """Override some parameters; values may be rationals or Polynomials."""
        vt = _vt(m)
        base = cls.symbolic(m)
        zz = base.z if z is None else _as_poly(vt, z)
        ys = list(base.y)
        for k, v in (y or {}).items():
            if not 1 <= k < m:
                raise UsageError(f"y{k} is not a parameter for m={m}")
            ys[k - 1] = _as_poly(vt, v)
        return cls(m, zz, tuple(ys))

    @classmethod
    def from_bindings(cls, m: int, bindings: Mapping[str, object]) -> "TraceParams":
        """Pick z and y<k> out of a name -> value map; other names are ignored."""
        z = bindings.get("z")
        y = {int(name[1:]): v for name, v in bindings.items()
             if name.startswith("y") and name[1:].isdigit()}
        return cls.from_values(m, z, y)

    def bindings(self) -> dict:
        out = {"z": self.z}
        for k, v in enumerate(self.y, 1):
            out[f"y{k}"] = v
        return out

    def apply(self, p: Polynomial) -> Polynomial:
        return p.substitute(self.bindings())


def _as_poly(vt: VarTable, v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    return vt.const(to_rational(v))


class TraceKind(Enum):
    NORMALIZED = "normalized"
    NON_NORMALIZED = "raw"
    CANONICAL0 = "canonical0"
    BK01 = "bk01"
    DIRECT_BK = "bk"

    @classmethod
    def parse(cls, text: str) -> "TraceKind":
        aliases = {"normalized": cls.NORMALIZED, "tr": cls.NORMALIZED,
                   "raw": cls.NON_NORMALIZED, "nonnormalized": cls.NON_NORMALIZED,
                   "non-normalized": cls.NON_NORMALIZED, "Tr": cls.NON_NORMALIZED,
                   "canonical0": cls.CANONICAL0, "tr0": cls.CANONICAL0,
                   "bk01": cls.BK01, "bk": cls.DIRECT_BK, "tau": cls.DIRECT_BK}
        try:
            return aliases[text]
        except KeyError:
            raise UsageError(f"unknown trace kind {text!r}; expected one of "
                             + ", ".join(sorted(aliases))) from None


def _tail_perm(n: int, j: int) -> Perm:
    """s_{n-1}...s_j in S_n (identity when j == n)."""
    return word_to_perm(tail_word(n, j), n) if j < n else identity(n)


def _linear(x: Element, value) -> Polynomial:
    vt = x.vt
    out = vt.zero()
    for (a, w), c in x.items():
        v = value(x.m, x.n, a, w)
        if not v.is_zero():
            out = out + c * v
    return out


# ---------------------------------------------------------------------------
# normalized trace, t-basis route

@lru_cache(maxsize=None)
def _tr_t(m: int, n: int, b: tuple, w: Perm) -> Polynomial:
    """Symbolic tr(t_1^b_1 ... t_n^b_n w)."""
    vt = _vt(m)
    if n == 0:
        return vt.one()
    k = b[n - 1]
    if w[n - 1] == n:
        rest = _tr_t(m, n - 1, b[:n - 1], w[:n - 1])
        return rest if k == 0 else vt.y(k) * rest
    # t^b' t_n^k w' s_{n-1} rest  =  t^b' w' s_{n-1} t_{n-1}^k rest
    wp, j = last_strand_factor(w)
    a = t_monomial(m, n - 1, b[:n - 1], wp[:n - 1])
    inner = t_monomial(m, n - 1, (0,) * (n - 2) + (k,), _tail_perm(n - 1, j))
    prod = mul(a, inner)
    total = vt.zero()
    for (bb, ww), c in to_T_basis(prod).items():
        total = total + c * _tr_t(m, n - 1, bb, ww)
    return vt.z() * total


def _tr_sym(x: Element) -> Polynomial:
    vt = x.vt
    out = vt.zero()
    for (b, w), c in to_T_basis(x).items():
        out = out + c * _tr_t(x.m, x.n, b, w)
    return out


def tr_eval(x: Element, p: Optional[TraceParams] = None) -> Polynomial:
    """The normalized Markov trace tr(x)."""
    v = _tr_sym(x)
    return v if p is None else p.apply(v)


# ---------------------------------------------------------------------------
# non-normalized trace, J-basis route

@lru_cache(maxsize=None)
def _moment(m: int, nstr: int, k: int) -> Polynomial:
    vt = _vt(m)
    if k == 0:
        return vt.zero()
    if nstr == 1:
        return vt.y(k)
    z = vt.z()
    out = _moment(m, nstr - 1, k) + z * _moment(m, nstr - 1, k - 1)
    if k >= 2:
        out = out + (k - 1) * z * _moment(m, nstr - 1, k - 2)
    for i in range(k - 1):
        for j in range(k - 1 - i):
            out = out + _moment(m, nstr, k - 2 - i - j) * _moment(m, nstr - 1, i + j)
        out = out + _moment(m, nstr, k - 2 - i) * _moment(m, nstr - 1, i)
    return out


def TrJ_moment(nstr: int, k: int, p: TraceParams) -> Polynomial:
    """The weight Tr(J_nstr^k) attached to a top-strand power, by its recursion in nstr."""
    if nstr < 1:
        raise UsageError(f"strand index must be >= 1, got {nstr}")
    if not 0 <= k < p.m:
        raise UsageError(f"exponent {k} out of range 0..{p.m - 1}; reduce the power first")
    return p.apply(_moment(p.m, nstr, k))


@lru_cache(maxsize=None)
def _Tr_J(m: int, n: int, a: tuple, w: Perm) -> Polynomial:
    """Symbolic Tr_n(J^a w)."""
    vt = _vt(m)
    if n == 0:
        return vt.one()
    k = a[n - 1]
    if w[n - 1] == n:
        if k == 0:
            return vt.zero()
        return _moment(m, n, k) * _Tr_J(m, n - 1, a[:n - 1], w[:n - 1])
    wp, j = last_strand_factor(w)
    head = monomial(m, n - 1, a[:n - 1], wp[:n - 1])
    rest = _tail_perm(n - 1, j)
    if k == 0:
        # strip the top letter s_{n-1}
        return vt.z() * _linear(right_mul_perm(head, rest), _Tr_J)
    # J_n^k s_{n-1} = s_{n-1} J_{n-1}^k + sum_i J_n^{k-1-i} J_{n-1}^i, J_n central over H_{n-1}
    total = vt.z() * _linear(right_mul_perm(mul(head, _jpow(m, n - 1, n - 1, k)), rest), _Tr_J)
    for i in range(k):
        top = k - 1 - i
        if top == 0:
            continue
        h = right_mul_perm(mul(head, _jpow(m, n - 1, n - 1, i)), rest)
        total = total + _moment(m, n, top) * _linear(h, _Tr_J)
    return total


def _jpow(m: int, n: int, j: int, k: int) -> Element:
    e = [0] * n
    e[j - 1] = k
    return monomial(m, n, e)


def _Tr_sym(x: Element) -> Polynomial:
    return _linear(x, _Tr_J)


def Tr_eval(x: Element, p: Optional[TraceParams] = None) -> Polynomial:
    """The non-normalized trace Tr_n(x) at the ambient level n of x."""
    v = _Tr_sym(x)
    return v if p is None else p.apply(v)


# ---------------------------------------------------------------------------
# closed forms

def tau_bk(x: Element) -> Polynomial:
    """Coefficient of J_1^{m-1}...J_n^{m-1} (identity permutation)."""
    return x.coeff((x.m - 1,) * x.n, identity(x.n))


def tr0(x: Element) -> Polynomial:
    """Coefficient of the identity t-monomial."""
    coords = to_T_basis(x)
    return coords.get(((0,) * x.n, identity(x.n)), x.vt.zero())


def _bk_params(m: int) -> TraceParams:
    y = {k: 0 for k in range(1, m)}
    if m >= 2:
        y[m - 1] = 1
    return TraceParams.from_values(m, 0, y)


def trace_of(kind: TraceKind, x: Element, p: Optional[TraceParams] = None) -> Polynomial:
    """Evaluate a trace of the given kind; `p` applies to the two generic kinds."""
    if kind is TraceKind.NORMALIZED:
        return tr_eval(x, p)
    if kind is TraceKind.NON_NORMALIZED:
        return Tr_eval(x, p)
    return specialize_trace(kind, x)


def specialize_trace(kind: TraceKind, x: Element) -> Polynomial:
    m = x.m
    if kind is TraceKind.CANONICAL0:
        return tr_eval(x, TraceParams.from_values(m, 0, {k: 0 for k in range(1, m)}))
    if kind is TraceKind.BK01:
        v = Tr_eval(x, _bk_params(m))
        ref = tau_bk(x)
        if v != ref:
            raise TraceMismatch(f"specialized Tr gives {v}, coefficient functional gives {ref}")
        return v
    if kind is TraceKind.DIRECT_BK:
        return tau_bk(x)
    if kind is TraceKind.NORMALIZED:
        return tr_eval(x)
    if kind is TraceKind.NON_NORMALIZED:
        return Tr_eval(x)
    raise UsageError(f"unknown trace kind {kind!r}")
