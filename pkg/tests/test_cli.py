import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from hecketrace.cli import main, parse_element, parse_expr
from hecketrace.coeffring import ParseError, UsageError
from hecketrace.heckealg import Letter, format_element


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_expr_words():
    [(c, w)] = parse_expr("t*s1*t*s1", 2, 2)
    assert str(c) == "1"
    assert w.letters == (Letter("t"), Letter("s", 1), Letter("t"), Letter("s", 1))
    assert len(parse_expr("J2^2 - (u1+u2)*J2", 2, 2)) == 2
    assert parse_element("s1*s1 - 1", 2, 2).is_zero()
    assert parse_element("-(1/2)*z*s1 + 1/2*z*s1", 2, 2).is_zero()


def test_parse_errors():
    with pytest.raises(ParseError) as e:
        parse_expr("s1 +\n  * t", 2, 2)
    assert (e.value.line, e.value.col) == (2, 3)
    with pytest.raises(ParseError):
        parse_expr("(s1", 2, 2)
    with pytest.raises(ParseError):
        parse_expr("", 2, 2)
    with pytest.raises(UsageError):
        parse_expr("s2", 2, 2)
    with pytest.raises(UsageError):
        parse_expr("J3", 2, 2)


def test_trace_examples():
    assert run("trace", "--kind", "raw", "--m", "2", "--n", "2", "--expr", "J1*J2", "--bind", "z=0,y1=1") == (0, "1\n")
    assert run("trace", "--kind", "normalized", "--m", "2", "--n", "1", "--expr", "t") == (0, "y1\n")
    assert run("trace", "--m", "2", "--n", "2", "--expr", "J2", "--bind", "z=0", "--bind", "u1=1") == (0, "y1\n")
    code, out = run("trace", "--m", "2", "--n", "2", "--expr", "J2", "--output", "json")
    assert json.loads(out)["value"] == "z + y1"


def test_table():
    code, out = run("table", "--kind", "normalized", "--m", "2", "--n", "2", "--output", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["a_1", "a_2", "permutation", "value"]
    assert len(rows) == 9
    assert rows[1] == ["0", "0", "1 2", "1"]


def test_normalize_outputs():
    assert run("normalize", "--m", "2", "--n", "2", "--expr", "s1*t*s1") == (0, "-s1 + J2\n")
    code, out = run("normalize", "--m", "2", "--n", "2", "--expr", "s1*t*s1", "--output", "json")
    assert json.loads(out)["terms"]


def test_exit_codes(monkeypatch):
    assert run("trace", "--m", "2", "--n", "2", "--expr", "s1 +")[0] == 2
    assert run("trace", "--m", "2", "--n", "2", "--expr", "s5")[0] == 2
    assert run("trace", "--m", "2", "--n", "2", "--expr", "s1", "--bind", "q=1")[0] == 2
    assert run("trace", "--m", "2", "--n", "2", "--expr", "s1", "--kind", "nope")[0] == 2
    assert run("verify", "--suite", "relations", "--m", "2", "--n", "2")[0] == 0
    assert run("verify", "--suite", "Tr-rules", "--m", "2", "--n", "2")[0] == 1
    assert run("bogus")[0] == 2


def test_seed_env_override(monkeypatch):
    monkeypatch.setenv("HECKE_SEED", "42")
    code, out = run("verify", "--suite", "dimension", "--m", "2", "--n", "2", "--seed", "7", "--output", "json")
    assert json.loads(out)["seed"] == 42


def test_deterministic_output():
    argv = ["verify", "--suite", "tr-rules", "--m", "2", "--n", "3", "--samples", "5"]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "hecketrace", "trace", "--m", "2", "--n", "1", "--expr", "t"],
                       capture_output=True, text=True)
    assert (p.returncode, p.stdout) == (0, "y1\n")


@given(st.lists(st.tuples(st.integers(-3, 3), st.sampled_from(["t", "s1", "J2", "T2", "L2", "z", "u1", "y1"])),
                min_size=1, max_size=4))
def test_normalize_print_parse_round_trip(parts):
    text = " + ".join(f"({c})*{a}*s1" for c, a in parts)
    x = parse_element(text, 2, 2)
    assert parse_element(format_element(x), 2, 2) == x
