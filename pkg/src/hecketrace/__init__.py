"""
Exact arithmetic and Markov traces for the degenerate cyclotomic Hecke
algebra H_n(u) of type G(m,1,n).

>>> from hecketrace import parse_element, tr_eval
>>> print(tr_eval(parse_element("t*s1", 2, 2)))
z*y1
"""

from .coeffring import ParseError, Polynomial, UsageError, VarTable, poly_canon, poly_parse
from .heckealg import Element, GenWord, basis, format_element, jm, monomial, mul, normalize_word, one, tk
from .inductive import Decomposition, decompose_J, decompose_T, recompose, to_T_basis
from .markov import TraceKind, TraceParams, Tr_eval, tau_bk, tr0, tr_eval, trace_of
from .cli import parse_element, parse_expr
from .verify import run_suite

__all__ = [
    "ParseError", "Polynomial", "UsageError", "VarTable", "poly_canon", "poly_parse",
    "Element", "GenWord", "basis", "format_element", "jm", "monomial", "mul", "normalize_word", "one", "tk",
    "Decomposition", "decompose_J", "decompose_T", "recompose", "to_T_basis",
    "TraceKind", "TraceParams", "Tr_eval", "tau_bk", "tr0", "tr_eval", "trace_of",
    "parse_element", "parse_expr", "run_suite",
]

__version__ = "0.1.0"
