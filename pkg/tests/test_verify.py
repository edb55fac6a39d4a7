import pytest

from hecketrace.coeffring import UsageError
from hecketrace.verify import SUITES, dimension_check, run_suite


@pytest.mark.parametrize("suite,m,n", [
    ("relations", 2, 3), ("lemmas-2", 2, 2), ("inductive", 2, 2), ("tr-rules", 2, 2),
    ("tr-symmetry", 2, 2), ("specializations", 2, 2), ("Tr-symmetry", 2, 2),
])
def test_passing_suites(suite, m, n):
    rep = run_suite(suite, m, n)
    assert rep.passed, rep.dumps()
    assert rep.checks > 0


def test_symmetry_scan_is_exhaustive_on_H2():
    rep = run_suite("tr-symmetry", 2, 2)
    assert rep.params["pairs"] == "all"
    assert rep.checks == 64


def test_relation_families():
    rep = run_suite("relations", 2, 3)
    assert len(rep.params["families"]) == 6


def test_failing_rule_is_reported_not_raised():
    rep = run_suite("Tr-rules", 2, 2)
    assert not rep.passed
    assert any("Tr(s1) = z" in v.description for v in rep.violations)


def test_counterexample_is_minimal_and_reported():
    rep = run_suite("Tr-symmetry", 2, 3, samples=200)
    assert not rep.passed
    ce = rep.params["minimal_counterexample"]
    assert ce["lhs"] != ce["rhs"]


def test_dimension():
    for m, n, d in [(2, 3, 48), (3, 2, 18), (1, 3, 6)]:
        rep = dimension_check(m, n)
        assert rep.passed and rep.params["dimension"] == d


def test_determinism():
    a = run_suite("tr-rules", 2, 3, seed=5, samples=10).dumps()
    assert a == run_suite("tr-rules", 2, 3, seed=5, samples=10).dumps()


def test_all_lists_every_suite():
    rep = run_suite("all", 2, 2, samples=10)
    assert [s["suite"] for s in rep.params["suites"]] == list(SUITES[:-1])


def test_unknown_suite():
    with pytest.raises(UsageError):
        run_suite("nope", 2, 2)
