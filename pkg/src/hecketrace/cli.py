"""
Command-line front end.

    hecketrace normalize --m 2 --n 2 --expr "s1*t*s1"
    hecketrace trace --kind normalized --m 2 --n 1 --expr "t"
    hecketrace table --kind raw --m 2 --n 2 --output csv
    hecketrace verify --suite relations --m 2 --n 3

Expressions:  expr := term (('+'|'-') term)*,  term := factor ('*' factor)*,
factor := atom ('^' uint)?,  atom := t | s<i> | J<k> | T<k> | L<k> | scalar |
'(' expr ')'.  Scalars are integers, rationals a/b and the variables u<i>, z,
y<k>.  T<k> is t_k.

Exit status: 0 on success, 1 when a verification finds violations, 2 on
usage or parse errors.

>>> terms = parse_expr("2*s1*t - z", 2, 2)
>>> [(str(c), " ".join(map(str, w.letters))) for c, w in terms]
[('-z', ''), ('2', 's1 t')]
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .coeffring import ParseError, Polynomial, UsageError, _tokenize, poly_canon, to_rational
from .heckealg import Element, GenWord, Letter, _vt, basis, format_element, monomial, normalize_word
from .markov import TraceKind, TraceMismatch, TraceParams, trace_of
from .verify import DEFAULT_SAMPLES, DEFAULT_SEED, SUITES, dimension_check, run_suite

__all__ = ["parse_expr", "parse_element", "parse_bindings", "main"]

_LETTER_KINDS = {"s": "s", "J": "J", "T": "T", "L": "L"}


class _ExprParser:
    """Builds a formal sum {letters: coefficient}; words multiply by concatenation."""

    def __init__(self, text: str, m: int, n: int):
        self.text, self.m, self.n = text, m, n
        self.vt = _vt(m)
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

    def parse(self) -> dict:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        out = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return out

    def _add(self, a: dict, b: dict, sign: int = 1) -> dict:
        out = dict(a)
        for w, c in b.items():
            s = out.get(w, self.vt.zero()) + (c if sign > 0 else -c)
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return out

    def _mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                out = self._add(out, {wa + wb: ca * cb})
        return out

    def expr(self) -> dict:
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = self._add({}, acc, -1)
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            acc = self._add(acc, self.term(), 1 if op == "+" else -1)
        return acc

    def term(self) -> dict:
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            acc = self._mul(acc, self.factor())
        return acc

    def factor(self) -> dict:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("expected a nonnegative integer exponent", tok)
            out = {(): self.vt.one()}
            for _ in range(int(tok[1])):
                out = self._mul(out, base)
            base = out
        return base

    def atom(self) -> dict:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "num" or int(den[1]) == 0:
                    self.fail("expected a positive integer denominator", den)
                return {(): self.vt.const(Fraction(int(val), int(den[1])))}
            return {(): self.vt.const(int(val))}
        if kind == "name":
            if val == "t":
                if self.n < 1:
                    self.fail("t needs n >= 1", tok)
                return {(Letter("t"),): self.vt.one()}
            head, digits = val[0], val[1:]
            if head in _LETTER_KINDS and digits.isdigit():
                idx = int(digits)
                hi = self.n - 1 if head == "s" else self.n
                if not 1 <= idx <= hi:
                    raise UsageError(f"{val} is out of range for n={self.n} "
                                     f"(line 1, column {pos + 1})")
                return {(Letter(_LETTER_KINDS[head], idx),): self.vt.one()}
            if val in self.vt.names:
                return {(): self.vt.var(val)}
            self.fail(f"unknown symbol {val!r}", tok)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail(f"unexpected {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_expr(text: str, m: int, n: int) -> list[tuple[Polynomial, GenWord]]:
    """Flatten an expression to (coefficient, word) pairs, sorted by word."""
    if m < 1 or n < 1:
        raise UsageError("m and n must be positive")
    terms = _ExprParser(text, m, n).parse()
    return [(c, GenWord(m, n, w)) for w, c in sorted(terms.items(), key=lambda wc: [tuple(l) for l in wc[0]])]


def parse_element(text: str, m: int, n: int) -> Element:
    out = Element(m, n, {})
    for c, w in parse_expr(text, m, n):
        out = out + normalize_word(w).scale(c)
    return out


def parse_bindings(specs: Sequence[str], m: int) -> dict:
    """'z=0,y1=1' (possibly repeated) -> {name: Rational}; only z, y<k>, u<i>."""
    vt = _vt(m)
    out: dict = {}
    for spec in specs:
        for part in spec.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise UsageError(f"binding {part!r} is not of the form name=value")
            name, val = (s.strip() for s in part.split("=", 1))
            if name not in vt.names:
                raise UsageError(f"cannot bind {name!r}; allowed: {', '.join(vt.names)}")
            try:
                out[name] = to_rational(val)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"value {val!r} for {name} is not a rational number") from None
    return out


def _evaluate(kind: TraceKind, x: Element, bindings: dict) -> Polynomial:
    params = TraceParams.from_bindings(x.m, bindings)
    v = trace_of(kind, x, params)
    ubind = {k: v2 for k, v2 in bindings.items() if k.startswith("u")}
    return v.substitute(ubind) if ubind else v


def _perm_text(w) -> str:
    return " ".join(map(str, w))


# ---------------------------------------------------------------------------
# subcommands

def cmd_normalize(args, out) -> int:
    x = parse_element(args.expr, args.m, args.n)
    bind = parse_bindings(args.bind, args.m)
    if bind:
        x = x.substitute(bind)
    if args.output == "json":
        out.write(json.dumps(x.to_json(), indent=2) + "\n")
    elif args.output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow([f"a_{i}" for i in range(1, args.n + 1)] + ["permutation", "coefficient"])
        for (a, perm), c in x.sorted_items():
            w.writerow(list(a) + [_perm_text(perm), poly_canon(c)])
    else:
        out.write(format_element(x) + "\n")
    return 0


def cmd_trace(args, out) -> int:
    kind = TraceKind.parse(args.kind)
    x = parse_element(args.expr, args.m, args.n)
    v = _evaluate(kind, x, parse_bindings(args.bind, args.m))
    if args.output == "json":
        out.write(json.dumps({"m": args.m, "n": args.n, "kind": kind.value, "value": poly_canon(v)}) + "\n")
    elif args.output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["value"])
        w.writerow([poly_canon(v)])
    else:
        out.write(poly_canon(v) + "\n")
    return 0


def cmd_table(args, out) -> int:
    kind = TraceKind.parse(args.kind)
    bind = parse_bindings(args.bind, args.m)
    rows = []
    for a, perm in basis(args.m, args.n):
        v = _evaluate(kind, monomial(args.m, args.n, a, perm), bind)
        rows.append((a, perm, poly_canon(v)))
    if args.output == "json":
        data = [{"exp": list(a), "perm": list(p), "value": v} for a, p, v in rows]
        out.write(json.dumps({"m": args.m, "n": args.n, "kind": kind.value, "rows": data}, indent=2) + "\n")
    elif args.output == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow([f"a_{i}" for i in range(1, args.n + 1)] + ["permutation", "value"])
        for a, p, v in rows:
            w.writerow(list(a) + [_perm_text(p), v])
    else:
        for a, p, v in rows:
            mon = format_element(monomial(args.m, args.n, a, p))
            out.write(f"{mon}\t{v}\n")
    return 0


def cmd_verify(args, out) -> int:
    seed = args.seed
    env = os.environ.get("HECKE_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"HECKE_SEED={env!r} is not an integer") from None
    if args.suite == "dimension":
        rep = dimension_check(args.m, args.n, seed)
    else:
        rep = run_suite(args.suite, args.m, args.n, seed, args.samples)
    if args.output == "text":
        status = "pass" if rep.passed else "FAIL"
        out.write(f"{rep.suite} m={rep.m} n={rep.n} seed={rep.seed}: {rep.checks} checks, "
                  f"{len(rep.violations)} violations: {status}\n")
        for v in rep.violations:
            out.write(f"  {v.description}: {v.lhs} != {v.rhs}  inputs={json.dumps(v.inputs)}\n")
    else:
        out.write(rep.dumps() + "\n")
    return 0 if rep.passed else 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hecketrace",
                                description="Exact arithmetic and Markov traces for degenerate cyclotomic Hecke algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, expr: bool, kind: bool, outputs=("text", "json", "csv")):
        sp.add_argument("--m", type=int, required=True, help="number of cyclotomic parameters")
        sp.add_argument("--n", type=int, required=True, help="number of strands")
        if expr:
            sp.add_argument("--expr", required=True, help="expression in t, s<i>, J<k>, T<k>, L<k> and scalars")
        if kind:
            sp.add_argument("--kind", default="normalized",
                            help="normalized | raw | canonical0 | bk01 | bk (default: normalized)")
        sp.add_argument("--output", choices=outputs, default="text")

    sp = sub.add_parser("normalize", help="print the canonical form of an expression")
    common(sp, True, False)
    sp.add_argument("--bind", action="append", default=[], help="z=0,y1=1,u1=2 ...")
    sp.set_defaults(func=cmd_normalize)
    sp = sub.add_parser("trace", help="evaluate a trace on an expression")
    common(sp, True, True)
    sp.add_argument("--bind", action="append", default=[])
    sp.set_defaults(func=cmd_trace)
    sp = sub.add_parser("table", help="trace of every standard basis monomial")
    common(sp, False, True)
    sp.add_argument("--bind", action="append", default=[])
    sp.set_defaults(func=cmd_table)
    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp, False, False, outputs=("json", "text"))
    sp.add_argument("--suite", default="all", choices=list(SUITES) + ["dimension"])
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="overridden by HECKE_SEED")
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.m < 1 or args.n < 1:
        sys.stderr.write("error: --m and --n must be positive\n")
        return 2
    try:
        return args.func(args, out)
    except (ParseError, UsageError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except TraceMismatch as e:
        sys.stderr.write(f"inconsistency: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
