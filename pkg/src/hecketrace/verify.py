"""
Independent oracles and verification suites.

`oracle_decompose` solves for module coefficients by exact elimination over
the polynomial ring instead of following the constructive recursion, so it
can referee `decompose_J` / `decompose_T`.  `run_suite` runs one named
battery and returns a `Report`; every battery is deterministic given its
seed.

>>> run_suite("relations", 2, 2).passed
True
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Optional

from .coeffring import Polynomial, UsageError
from .heckealg import (
    Element, _vt, basis, check_relations, format_element, jm, lk, monomial, mul,
    one, reduce_power, tk, zero,
)
from .inductive import (
    Decomposition, Label, decompose_J, decompose_T, from_T_basis, label_word,
    labels_J, labels_T, recompose, t_monomial, to_T_basis,
)
from .markov import (
    TraceKind, TraceParams, TrJ_moment, Tr_eval, specialize_trace, tau_bk, tr0,
    tr_eval, _moment,
)
from .report import Report
from .symgroup import identity, simple, tail_word, word_to_perm

__all__ = [
    "DEFAULT_SEED", "DEFAULT_SAMPLES", "SUITES", "OracleInconsistency",
    "oracle_decompose", "run_suite", "dimension_check", "tr_by_module",
    "Tr_by_module",
]

DEFAULT_SEED = 1729
DEFAULT_SAMPLES = 50
SUITES = ("relations", "lemmas-2", "inductive", "tr-rules", "tr-symmetry",
          "Tr-rules", "Tr-symmetry", "specializations", "all")


class OracleInconsistency(RuntimeError):
    """The change-of-basis matrix is singular: the claimed module basis is not free."""


# ---------------------------------------------------------------------------
# small builders

def _pow(x: Element, k: int) -> Element:
    out = one(x.m, x.n)
    for _ in range(k):
        out = mul(out, x)
    return out


def _s(m: int, n: int, i: int) -> Element:
    return monomial(m, n, [0] * n, simple(i, n))


def _perm_word(m: int, n: int, letters: Iterable[int]) -> Element:
    return monomial(m, n, [0] * n, word_to_perm(list(letters), n))


def _prod(*xs: Element) -> Element:
    out = xs[0]
    for x in xs[1:]:
        out = mul(out, x)
    return out


def _t(m: int, n: int) -> Element:
    return jm(m, n, 1)


def _txt(x) -> str:
    return format_element(x) if isinstance(x, Element) else str(x)


def _basis_elems(m: int, n: int) -> list[Element]:
    return [monomial(m, n, a, w) for a, w in basis(m, n)]


def _mon_key(x: Element) -> tuple:
    (a, w), = x.terms.keys()
    return a, w


def _mon_size(x: Element) -> tuple:
    a, w = _mon_key(x)
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
    return (sum(a) + inv, a, w)


# ---------------------------------------------------------------------------
# exact elimination oracle

@dataclass
class _Solver:
    """A recorded Gauss-Jordan reduction of a square polynomial matrix."""
    rows: list
    cols: list
    ops: list
    pivots: list  # (row, col, diagonal entry)

    def solve(self, rhs: dict) -> dict:
        vec = dict(rhs)
        for op in self.ops:
            if op[0] == "scale":
                _, r, c = op
                if r in vec:
                    vec[r] = vec[r] * c
            else:
                _, j, p, a, r = op
                vr = vec.get(r)
                vj = vec.get(j)
                new = None
                if vj is not None and p is not None:
                    new = vj * p
                elif vj is not None:
                    new = vj
                if vr is not None:
                    t = vr * a
                    new = -t if new is None else new - t
                if new is None or new.is_zero():
                    vec.pop(j, None)
                else:
                    vec[j] = new
        out = {}
        for r, c, d in self.pivots:
            v = vec.get(r)
            if v is None or v.is_zero():
                continue
            out[c] = v if d.is_constant() and d.constant_value() == 1 else v.divexact(d)
        return out


def _eliminate(matrix: dict, rows: list, cols: list, vt) -> _Solver:
    """Reduce `matrix` (row -> {col -> Polynomial}) to a permuted diagonal."""
    M = {r: dict(matrix.get(r, {})) for r in rows}
    col_rows: dict = {c: set() for c in cols}
    for r, row in M.items():
        for c in row:
            col_rows[c].add(r)
    used: set = set()
    ops: list = []
    pivots: list = []
    for c in cols:
        cands = [r for r in col_rows[c] if r not in used]
        if not cands:
            raise OracleInconsistency(f"no pivot for column {c}")

        def rank(r):
            e = M[r][c]
            return (0 if e.is_constant() else 1, e.degree(), len(M[r]), str(r))
        r = min(cands, key=rank)
        used.add(r)
        p = M[r][c]
        if p.is_constant():
            cv = p.constant_value()
            if cv != 1:
                inv = vt.const(Fraction(1) / cv)
                M[r] = {k: v * inv for k, v in M[r].items()}
                ops.append(("scale", r, inv))
            p = None
        for j in sorted(col_rows[c] - {r}, key=str):
            a = M[j][c]
            old_keys = set(M[j])
            row_j = dict(M[j]) if p is None else {k: v * p for k, v in M[j].items()}
            for k, v in M[r].items():
                nv = row_j.get(k)
                nv = -(v * a) if nv is None else nv - v * a
                if nv.is_zero():
                    row_j.pop(k, None)
                else:
                    row_j[k] = nv
            for k in old_keys | set(row_j):
                if k in row_j:
                    col_rows[k].add(j)
                else:
                    col_rows[k].discard(j)
            M[j] = row_j
            ops.append(("sub", j, p, a, r))
        col_rows[c] = {r}
    for r in rows:
        if len(M[r]) != 1:
            raise OracleInconsistency("elimination left a non-diagonal row")
        (c, d), = M[r].items()
        pivots.append((r, c, d))
    return _Solver(rows, cols, ops, pivots)


@lru_cache(maxsize=None)
def _oracle_solver(m: int, n1: int, kind: str) -> _Solver:
    n = n1 - 1
    labels = labels_J(m, n1) if kind == "J" else labels_T(m, n1)
    cols = [(lab, mon) for lab in labels for mon in basis(m, n)]
    rows = list(basis(m, n1))
    matrix: dict = {}
    for lab, (a, w) in cols:
        col = mul(monomial(m, n, a, w).embed(n1), label_word(m, n1, lab))
        for key, c in col.items():
            matrix.setdefault(key, {})[(lab, (a, w))] = c
    if len(rows) != len(cols):
        raise OracleInconsistency(f"{len(cols)} module columns for {len(rows)} basis rows")
    return _eliminate(matrix, rows, cols, _vt(m))


def oracle_decompose(x: Element, kind: str = "J") -> Decomposition:
    """Module coefficients of x in H_{n+1} over H_n by exact linear solve."""
    if kind not in ("J", "T"):
        raise UsageError("kind must be 'J' or 'T'")
    m, n1 = x.m, x.n
    if m ** n1 * factorial(n1) > 400:
        raise UsageError("oracle limited to dimension <= 400")
    sol = _oracle_solver(m, n1, kind).solve(dict(x.items()))
    coeffs: dict = {}
    n = n1 - 1
    for (lab, (a, w)), c in sol.items():
        h = monomial(m, n, a, w, c)
        coeffs[lab] = coeffs[lab] + h if lab in coeffs else h
    dec = Decomposition(m, n1, {k: v for k, v in coeffs.items() if not v.is_zero()})
    if recompose(dec) != x:
        raise OracleInconsistency("back-substitution does not reproduce the input")
    return dec


# ---------------------------------------------------------------------------
# second routes for the traces: recursion over the module decompositions

def _tail_elem(m: int, n: int, i: int) -> Element:
    return _perm_word(m, n, tail_word(n, i)) if i < n else one(m, n)


def _module_b(m: int, n: int, lab: Label) -> Element:
    """The right factor b in a s_n b for a tail label of H_{n+1}."""
    b = _tail_elem(m, n, lab.i)
    if lab.kind == "TailJ":
        e = [0] * n
        e[lab.i - 1] = lab.k
        b = mul(b, monomial(m, n, e))
    elif lab.kind == "TailT":
        b = mul(b, _pow(tk(m, n, lab.i), lab.k))
    return b


def _linear(x: Element, f) -> Polynomial:
    out = x.vt.zero()
    for (a, w), c in x.items():
        out = out + c * f(x.m, x.n, a, w)
    return out


@lru_cache(maxsize=None)
def _tr_mod(m: int, n1: int, a: tuple, w: tuple) -> Polynomial:
    vt = _vt(m)
    if n1 == 0:
        return vt.one()
    n = n1 - 1
    out = vt.zero()
    for lab, h in decompose_T(monomial(m, n1, a, w)).coeffs.items():
        if lab.kind == "Unit":
            out = out + _linear(h, _tr_mod)
        elif lab.kind == "TopT":
            out = out + vt.y(lab.k) * _linear(h, _tr_mod)
        else:
            out = out + vt.z() * _linear(mul(h, _module_b(m, n, lab)), _tr_mod)
    return out


def tr_by_module(x: Element) -> Polynomial:
    """tr via x = a s_n b + alpha_0 + sum alpha_k t_{n+1}^k, independent of the t-monomial route."""
    return _linear(x, _tr_mod)


@lru_cache(maxsize=None)
def _Tr_mod(m: int, n1: int, a: tuple, w: tuple) -> Polynomial:
    vt = _vt(m)
    if n1 == 0:
        return vt.one()
    n = n1 - 1
    out = vt.zero()
    for lab, h in decompose_J(monomial(m, n1, a, w)).coeffs.items():
        if lab.kind == "Unit":
            continue  # weight Tr(J^0) = Tr(1) = 0
        if lab.kind == "TopJ":
            out = out + _moment(m, n1, lab.k) * _linear(h, _Tr_mod)
        else:
            out = out + vt.z() * _linear(mul(h, _module_b(m, n, lab)), _Tr_mod)
    return out


def Tr_by_module(x: Element) -> Polynomial:
    """Tr via the J-form module decomposition, independent of the strand-peeling route."""
    return _linear(x, _Tr_mod)


# ---------------------------------------------------------------------------
# batteries

def _check_eq(rep: Report, desc: str, lhs, rhs, inputs=None):
    rep.check(lhs == rhs, desc, inputs, _txt(lhs), _txt(rhs))


def _relations(m: int, n: int, seed: int, samples: int) -> Report:
    rep = check_relations(m, n)
    rng = random.Random(seed)
    B = _basis_elems(m, n)
    for _ in range(samples):
        a, b, c = (rng.choice(B) for _ in range(3))
        _check_eq(rep, "associativity (ab)c = a(bc)", mul(mul(a, b), c), mul(a, mul(b, c)),
                  [_txt(a), _txt(b), _txt(c)])
    for k in range(1, n):
        lhs = jm(m, n, k + 1)
        rhs = _prod(_s(m, n, k), jm(m, n, k), _s(m, n, k)) + _s(m, n, k)
        _check_eq(rep, f"J{k+1} = s{k} J{k} s{k} + s{k}", lhs, rhs)
    for k in range(1, n + 1):
        down = tail_word(k, 1)
        rhs = _prod(_perm_word(m, n, down), _t(m, n), _perm_word(m, n, down[::-1]))
        _check_eq(rep, f"t{k} = J{k} - L{k} equals s{k-1}...s1 t s1...s{k-1}", tk(m, n, k), rhs)
        _check_eq(rep, f"J{k}^m by repeated multiplication = reduced power",
                  _pow(jm(m, n, k), m), reduce_power(k, m, n))
    return rep


def _lemmas(m: int, n: int) -> Report:
    """The commutation lemmas for s_i, J_j and t_a."""
    rep = Report("lemmas-2", m, n)
    vt = _vt(m)
    J = lambda j: jm(m, n, j)
    s = lambda i: _s(m, n, i)
    T = lambda a: tk(m, n, a)
    t = _t(m, n)
    # s/J lemma
    for j in range(1, n):
        _check_eq(rep, f"s-J exchange: s{j} J{j} - J{j+1} s{j} = -1", mul(s(j), J(j)) - mul(J(j + 1), s(j)), -one(m, n))
    for j in range(2, n + 1):
        _check_eq(rep, f"s-J exchange: s{j-1} J{j} - J{j-1} s{j-1} = 1",
                  mul(s(j - 1), J(j)) - mul(J(j - 1), s(j - 1)), one(m, n))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                _check_eq(rep, f"s-J far commutation: s{i} J{j} = J{j} s{i}", mul(s(i), J(j)), mul(J(j), s(i)))
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            _check_eq(rep, f"J commutation: J{j} J{k} = J{k} J{j}", mul(J(j), J(k)), mul(J(k), J(j)))
    for j in range(1, n):
        p, q = mul(J(j), J(j + 1)), J(j) + J(j + 1)
        _check_eq(rep, f"s-J symmetric: s{j} commutes with J{j}J{j+1}", mul(s(j), p), mul(p, s(j)))
        _check_eq(rep, f"s-J symmetric: s{j} commutes with J{j}+J{j+1}", mul(s(j), q), mul(q, s(j)))
    for a in (0, 1, -2):
        for j in range(1, n + 1):
            prod = one(m, n)
            for l in range(1, j + 1):
                prod = mul(prod, J(l) - one(m, n).scale(vt.const(a)))
            for i in range(1, n):
                if i != j:
                    _check_eq(rep, f"s-J prefix product: s{i} commutes with prod_(l<={j}) (J_l - ({a}))",
                              mul(s(i), prod), mul(prod, s(i)))
    for a in range(1, n + 1):
        for i in range(1, m + 1):
            prod = one(m, n)
            for l in range(1, a + 1):
                prod = mul(prod, J(l) - one(m, n).scale(vt.u(i)))
            for i2 in range(1, n):
                if i2 != a:
                    _check_eq(rep, f"s-J prefix product: s{i2} commutes with prod_(l<={a}) (J_l - u{i})",
                              mul(s(i2), prod), mul(prod, s(i2)))
    # s/t lemma
    for a in range(1, n):
        for b in range(1, n + 1):
            if b not in (a, a + 1):
                _check_eq(rep, f"s-t far commutation: s{a} t{b} = t{b} s{a}", mul(s(a), T(b)), mul(T(b), s(a)))
        _check_eq(rep, f"s-t shift: s{a} t{a} = t{a+1} s{a}", mul(s(a), T(a)), mul(T(a + 1), s(a)))
    # signs as verified: [t_a, t_b] = [t_b, L_a] - [t_a, L_b],
    # and for a > b the conjugated form carries t s1 - s1 t
    comm = mul(t, s(1)) - mul(s(1), t) if n >= 2 else None
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            lhs = mul(T(a), T(b)) - mul(T(b), T(a))
            La, Lb = lk(m, n, a), lk(m, n, b)
            rhs = (mul(T(b), La) - mul(La, T(b))) - (mul(T(a), Lb) - mul(Lb, T(a)))
            _check_eq(rep, f"t commutator: [t{a},t{b}] = [t{b},L{a}] - [t{a},L{b}]", lhs, rhs)
            if a > b:
                left = _perm_word(m, n, list(range(b - 1, 0, -1)) + list(range(a - 1, 1, -1)))
                right = _perm_word(m, n, list(range(2, a)) + list(range(1, b)))
                _check_eq(rep, f"t commutator: [t{a},t{b}] as a conjugate of t s1 - s1 t",
                          lhs, _prod(left, comm, right))
    if n >= 2:
        for l in range(1, m):
            for k in range(1, m):
                lhs = _prod(_pow(t, l), s(1), _pow(t, k), s(1))
                rhs = _prod(s(1), _pow(t, k), s(1), _pow(t, l))
                for i in range(1, l + 1):
                    rhs = rhs + _prod(_pow(t, l - i), s(1), _pow(t, k + i - 1)) \
                        - _prod(_pow(t, k + i - 1), s(1), _pow(t, l - i))
                _check_eq(rep, f"t-s1 expansion: t^{l} s1 t^{k} s1 expansion", lhs, rhs)
    for nn in range(1, n):
        for l in range(1, m):
            for k in range(1, m):
                lhs = mul(_pow(T(nn), l), _pow(T(nn + 1), k))
                left = _prod(*[_perm_word(m, n, [j - 1, j]) for j in range(nn, 1, -1)]) if nn > 1 else one(m, n)
                right = _prod(*[_perm_word(m, n, [j, j - 1]) for j in range(2, nn + 1)]) if nn > 1 else one(m, n)
                core = _prod(_pow(t, l), s(1), _pow(t, k), s(1))
                _check_eq(rep, f"neighbouring t powers: t{nn}^{l} t{nn+1}^{k} by conjugating t^{l} s1 t^{k} s1",
                          lhs, _prod(left, core, right))
        for k in range(1, m):
            lhs = mul(_pow(T(nn + 1), k), t)
            pal = _perm_word(m, n, list(range(nn, 0, -1)) + list(range(2, nn + 1)))
            rhs = mul(t, _pow(T(nn + 1), k)) + mul(_pow(t, k), pal) - mul(pal, _pow(t, k))
            _check_eq(rep, f"top t power past t: t{nn+1}^{k} t = t t{nn+1}^{k} + t^{k} w - w t^{k}", lhs, rhs)
    # commutator of neighbouring t-powers, and its shifted form
    for nn in range(1, n):
        for l in range(1, m):
            for k in range(1, m):
                for a in range(1, min(2, n - nn) + 1):
                    lhs = mul(_pow(T(nn), l), _pow(T(nn + a), k))
                    rhs = mul(_pow(T(nn + a), k), _pow(T(nn), l))
                    conj_l = _perm_word(m, n, list(range(nn + a - 1, nn, -1)))
                    conj_r = _perm_word(m, n, list(range(nn + 1, nn + a)))
                    for i in range(1, l + 1):
                        inner = _prod(_pow(T(nn), l - i), s(nn), _pow(T(nn), k + i - 1)) \
                            - _prod(_pow(T(nn), k + i - 1), s(nn), _pow(T(nn), l - i))
                        rhs = rhs + _prod(conj_l, inner, conj_r)
                    _check_eq(rep, f"t-commutator: t{nn}^{l} t{nn+a}^{k} (offset {a})", lhs, rhs)
    return rep


def _inductive(m: int, n: int, seed: int, samples: int) -> Report:
    rep = Report("inductive", m, n, seed=seed, params={"samples": samples})
    if n < 1:
        return rep
    n0 = n - 1
    rep.check(len(labels_J(m, n)) == m * n and len(labels_T(m, n)) == m * n,
              "label census: m(n) labels of H_n over H_(n-1)",
              {"labels": len(labels_J(m, n))}, len(labels_J(m, n)), m * n)
    rep.check(len(labels_J(m, n)) * m ** n0 * factorial(n0) == m ** n * factorial(n),
              "freeness census", None)
    B = list(basis(m, n))
    dim = len(B)
    exhaustive = dim <= 48
    rng = random.Random(seed)
    picks = B if exhaustive else [rng.choice(B) for _ in range(samples)]
    use_oracle = dim <= 400
    for a, w in picks:
        x = monomial(m, n, a, w)
        dj, dt = decompose_J(x), decompose_T(x)
        _check_eq(rep, "recompose(decompose_J(x)) = x", recompose(dj), x, _txt(x))
        _check_eq(rep, "recompose(decompose_T(x)) = x", recompose(dt), x, _txt(x))
        _check_eq(rep, "from_T_basis(to_T_basis(x)) = x", from_T_basis(to_T_basis(x), m, n), x, _txt(x))
        if use_oracle:
            rep.check(oracle_decompose(x, "J") == dj, "decompose_J agrees with the linear-solve oracle",
                      _txt(x), str(dj), "")
            rep.check(oracle_decompose(x, "T") == dt, "decompose_T agrees with the linear-solve oracle",
                      _txt(x), str(dt), "")
    if not exhaustive:
        for _ in range(min(samples, 10)):
            terms = {rng.choice(B): _vt(m).const(rng.randint(-3, 3)) for _ in range(4)}
            x = Element(m, n, {k: v for k, v in terms.items() if not v.is_zero()})
            if use_oracle:
                rep.check(oracle_decompose(x, "J") == decompose_J(x),
                          "decompose_J agrees with oracle on a random combination", _txt(x))
    for a, w in basis(m, n0):
        h = monomial(m, n0, a, w).embed(n)
        d = decompose_T(h)
        rep.check(set(d.coeffs) == {Label("Unit")} and d.coeffs[Label("Unit")].embed(n) == h,
                  "decompose_T of an element of H_(n-1) is {Unit: x}", _txt(h), str(d), "")
    return rep


def _tr_rules(m: int, n: int, seed: int, samples: int) -> Report:
    rep = Report("tr-rules", m, n, seed=seed)
    vt = _vt(m)
    _check_eq(rep, "unit: tr(1) = 1", tr_eval(one(m, n)), vt.one())
    for i in range(1, n):
        for a, w in basis(m, i):
            alpha = monomial(m, i, a, w).embed(i + 1)
            base = tr_eval(alpha)
            _check_eq(rep, f"s-rule: tr(alpha s{i}) = z tr(alpha), alpha in H_{i}",
                      tr_eval(mul(alpha, _s(m, i + 1, i))), vt.z() * base, _txt(alpha))
            for k in range(1, m):
                _check_eq(rep, f"t-power rule: tr(alpha t{i+1}^{k}) = y{k} tr(alpha), alpha in H_{i}",
                          tr_eval(mul(alpha, _pow(tk(m, i + 1, i + 1), k))), vt.y(k) * base, _txt(alpha))
    for k in range(1, m):
        _check_eq(rep, f"t-power rule: tr(t^{k}) = y{k}", tr_eval(_pow(_t(m, 1), k)), vt.y(k))
    for i in range(1, n + 1):
        for a, w in basis(m, i):
            x = monomial(m, i, a, w)
            for big in range(i + 1, n + 1):
                _check_eq(rep, f"restriction: tr on H_{i} equals tr on H_{big}",
                          tr_eval(x.embed(big)), tr_eval(x), _txt(x))
    for a, w in basis(m, n):
        x = monomial(m, n, a, w)
        _check_eq(rep, "t-monomial route equals module-recursion route", tr_eval(x), tr_by_module(x), _txt(x))
    # tr(x s_k y s_k) = tr(s_k x s_k y) for x, y in H_k
    rng = random.Random(seed)
    for k in range(1, n):
        Bk = _basis_elems(m, k)
        pairs = [(x, y) for x in Bk for y in Bk]
        if len(pairs) > samples:
            pairs = [(rng.choice(Bk), rng.choice(Bk)) for _ in range(samples)]
        sk = _s(m, k + 1, k)
        for x, y in pairs:
            X, Y = x.embed(k + 1), y.embed(k + 1)
            _check_eq(rep, f"tr(x s{k} y s{k}) = tr(s{k} x s{k} y)",
                      tr_eval(_prod(X, sk, Y, sk)), tr_eval(_prod(sk, X, sk, Y)), [_txt(x), _txt(y)])
    return rep


def _symmetry(name: str, f: Callable, m: int, n: int, seed: int, samples: int) -> Report:
    B = _basis_elems(m, n)
    exhaustive = len(B) ** 2 <= max(samples, 2304)
    rep = Report(name, m, n, seed=seed, params={"pairs": "all" if exhaustive else samples})
    if exhaustive:
        pairs = [(a, b) for a in B for b in B]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(B), rng.choice(B)) for _ in range(samples)]
    bad = []
    for a, b in pairs:
        l, r = f(mul(a, b)), f(mul(b, a))
        ok = rep.check(l == r, "trace(ab) = trace(ba)", [_txt(a), _txt(b)], l, r)
        if not ok:
            bad.append((_mon_size(a), _mon_size(b), a, b, l, r))
    if bad:
        bad.sort(key=lambda t: (t[0][0] + t[1][0], t[0], t[1]))
        _, _, a, b, l, r = bad[0]
        rep.params["minimal_counterexample"] = {"a": _txt(a), "b": _txt(b), "lhs": str(l), "rhs": str(r)}
    return rep


def _Tr_rules(m: int, n: int, seed: int, samples: int) -> Report:
    rep = Report("Tr-rules", m, n, seed=seed)
    vt = _vt(m)
    for i in range(1, n + 1):
        _check_eq(rep, f"unit: Tr(1) = 0 in H_{i}", Tr_eval(one(m, i)), vt.zero())
    for k in range(1, m):
        _check_eq(rep, f"bottom power: Tr(J1^{k}) = y{k}", Tr_eval(_pow(_t(m, 1), k)), vt.y(k))
    for i in range(1, n):
        _check_eq(rep, f"s-rule: Tr(s{i}) = z", Tr_eval(_s(m, i + 1, i)), vt.z())
        for a, w in basis(m, i):
            h = monomial(m, i, a, w)
            _check_eq(rep, f"s-rule: Tr(h s{i}) = z Tr(h), h in H_{i}",
                      Tr_eval(mul(h.embed(i + 1), _s(m, i + 1, i))), vt.z() * Tr_eval(h), _txt(h))
    # J_{k+1}^c s_k = s_k J_k^c + sum and its mirror
    for kk in range(1, n):
        for c in range(1, m):
            top, low, sk = jm(m, n, kk + 1), jm(m, n, kk), _s(m, n, kk)
            tail = zero(m, n)
            for i in range(c):
                tail = tail + mul(_pow(top, c - 1 - i), _pow(low, i))
            _check_eq(rep, f"J{kk+1}^{c} s{kk} = s{kk} J{kk}^{c} + sum",
                      mul(_pow(top, c), sk), mul(sk, _pow(low, c)) + tail)
            _check_eq(rep, f"s{kk} J{kk+1}^{c} = J{kk}^{c} s{kk} + sum",
                      mul(sk, _pow(top, c)), mul(_pow(low, c), sk) + tail)
    for a, w in basis(m, n):
        x = monomial(m, n, a, w)
        _check_eq(rep, "strand-peeling route equals module-recursion route", Tr_eval(x), Tr_by_module(x), _txt(x))
    # Tr(x J_{k+1}^c y) = Tr(J_{k+1}^c) Tr(xy), with Tr(J^c) the moment weight
    rng = random.Random(seed)
    p = TraceParams.symbolic(m)
    for k in range(1, n):
        Bk = _basis_elems(m, k)
        pairs = [(x, y) for x in Bk for y in Bk]
        if len(pairs) > samples:
            pairs = [(rng.choice(Bk), rng.choice(Bk)) for _ in range(samples)]
        for c in range(1, m):
            Jc = _pow(jm(m, k + 1, k + 1), c)
            w = TrJ_moment(k + 1, c, p)
            for x, y in pairs:
                _check_eq(rep, f"Tr(x J{k+1}^{c} y) = Tr(J{k+1}^{c}) Tr(xy)",
                          Tr_eval(_prod(x.embed(k + 1), Jc, y.embed(k + 1))), w * Tr_eval(mul(x, y)),
                          [_txt(x), _txt(y)])
    return rep


def _specializations(m: int, n: int, seed: int, samples: int) -> Report:
    rep = Report("specializations", m, n, seed=seed)
    vt = _vt(m)
    for a, w in basis(m, n):
        x = monomial(m, n, a, w)
        _check_eq(rep, "Tr at z=0, y_(m-1)=1, other y=0 equals the top-coefficient functional",
                  Tr_eval(x, _bk01(m)), tau_bk(x), _txt(x))
        _check_eq(rep, "tr at z=y=0 equals the identity t-coefficient",
                  specialize_trace(TraceKind.CANONICAL0, x), tr0(x), _txt(x))
        tm = t_monomial(m, n, a, w)
        want = vt.one() if (not any(a) and w == identity(n)) else vt.zero()
        _check_eq(rep, "canonical trace is the indicator of the identity t-monomial",
                  specialize_trace(TraceKind.CANONICAL0, tm), want, {"texp": list(a), "perm": list(w)})
    # z = 0 factorization over the top powers
    from itertools import product
    z0 = {"z": 0}
    p = TraceParams.symbolic(m)
    for a in product(range(1, m), repeat=n):
        x = monomial(m, n, a)
        lhs = Tr_eval(x).substitute(z0)
        rhs = vt.one()
        for i, ai in enumerate(a, 1):
            rhs = rhs * TrJ_moment(i, ai, p).substitute(z0)
        _check_eq(rep, "Tr(J1^a1...Jn^an) at z=0 is the product of the moments at z=0", lhs, rhs, list(a))
    # at z = 0 the non-normalized functional is a trace for every choice of y
    sym = _symmetry("specializations", lambda x: Tr_eval(x).substitute(z0), m, n, seed, samples)
    for v in sym.violations:
        v.description = "Tr at z=0: " + v.description
    rep.merge(sym)
    return rep


def _bk01(m: int) -> TraceParams:
    y = {k: 0 for k in range(1, m)}
    if m >= 2:
        y[m - 1] = 1
    return TraceParams.from_values(m, 0, y)


def dimension_check(m: int, n: int, seed: int = DEFAULT_SEED, samples: int = 20) -> Report:
    """Count the standard basis and check products stay inside it."""
    rep = Report("dimension", m, n, seed=seed)
    if m ** n * factorial(n) > 10 ** 4:
        raise UsageError("dimension check limited to m^n n! <= 10^4")
    B = list(basis(m, n))
    rep.params["dimension"] = len(B)
    rep.check(len(B) == m ** n * factorial(n), "basis size is m^n n!", {"m": m, "n": n},
              len(B), m ** n * factorial(n))
    rep.check(len(set(B)) == len(B), "basis monomials are distinct")
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = rng.choice(B), rng.choice(B)
        x = mul(monomial(m, n, *a), monomial(m, n, *b))
        ok = all(len(e) == n and all(0 <= v < m for v in e) and sorted(w) == list(range(1, n + 1))
                 for (e, w), _ in x.items())
        rep.check(ok, "product stays in the standard basis", [list(a[0]), list(a[1]), list(b[0]), list(b[1])])
    return rep


def run_suite(name: str, m: int, n: int, seed: Optional[int] = None,
              samples: int = DEFAULT_SAMPLES) -> Report:
    """Run one named battery; deterministic given (name, m, n, seed, samples)."""
    if m < 1 or n < 1:
        raise UsageError("m and n must be positive")
    seed = DEFAULT_SEED if seed is None else seed
    if name == "relations":
        rep = _relations(m, n, seed, samples)
        rep.suite, rep.seed = "relations", seed
        return rep
    if name == "lemmas-2":
        return _lemmas(m, n)
    if name == "inductive":
        return _inductive(m, n, seed, samples)
    if name == "tr-rules":
        return _tr_rules(m, n, seed, samples)
    if name == "tr-symmetry":
        return _symmetry("tr-symmetry", tr_eval, m, n, seed, samples)
    if name == "Tr-rules":
        return _Tr_rules(m, n, seed, samples)
    if name == "Tr-symmetry":
        return _symmetry("Tr-symmetry", Tr_eval, m, n, seed, samples)
    if name == "specializations":
        return _specializations(m, n, seed, samples)
    if name == "all":
        rep = Report("all", m, n, seed=seed, params={"suites": []})
        for sub in SUITES[:-1]:
            r = run_suite(sub, m, n, seed, samples)
            rep.params["suites"].append({"suite": sub, "checks": r.checks, "passed": r.passed})
            rep.merge(r)
        return rep
    raise UsageError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
