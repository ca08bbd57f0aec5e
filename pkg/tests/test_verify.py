import pytest

from padicrep.errors import DomainError
from padicrep.verify import SUITES, RunConfig, run_suite, stirling2


def test_run_config_invariants():
    with pytest.raises(DomainError):
        RunConfig(trunc=7)
    with pytest.raises(DomainError):
        RunConfig(backend="approx", prec=3)
    with pytest.raises(DomainError):
        RunConfig(p=9)
    RunConfig(backend="approx", prec=4, trunc=8)


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_suite("nope", RunConfig())


def test_stirling_numbers():
    assert [stirling2(4, j) for j in range(5)] == [0, 1, 7, 6, 1]


def test_reports_deterministic_and_mirrored():
    cfg = RunConfig(trunc=16, seed=11)
    a, b = run_suite("lemma43", cfg), run_suite("lemma43", cfg)
    assert a.to_text() == b.to_text() and a.to_json() == b.to_json()
    d = a.to_dict()
    assert [c["name"] for c in d["cases"]] == sorted(c["name"] for c in d["cases"])
    assert d["config"]["seed"] == 11
    for c in d["cases"]:
        assert f"{c['name']}  cases={c['count']}" in a.to_text()


def test_seed_changes_random_cases_only():
    a = run_suite("thm54-congruence", RunConfig(trunc=16, seed=1))
    b = run_suite("thm54-congruence", RunConfig(trunc=16, seed=2))
    assert a.passed and b.passed
    assert [c.name for c in a.cases] == [c.name for c in b.cases]


def test_suite_names():
    assert set(SUITES) >= {"amice-ring", "lemma43", "newton-log", "lemma53", "thm54-congruence",
                           "prop55", "casimir", "pbw-ad", "haar", "homdims", "intertwiner",
                           "bruhat"}


def test_prop55_reports_log_coefficients():
    from fractions import Fraction
    rep = run_suite("prop55", RunConfig(c=Fraction(1), trunc=16))
    assert rep.passed
    assert any("coefficients=[0/1, 1/1, -1/2, 1/3" in n for n in rep.notes)


def test_failures_are_reported():
    from padicrep.verify import Report, _Cases
    cases = _Cases(5)
    cases["x"].residuals([0, 5])
    rep = Report("demo", {}, cases.done())
    assert not rep.passed
    assert "FAIL  x  cases=1  failures=1  residual=1/5" in rep.to_text()
