import pytest

from tournament_lab.errors import TooLarge, UnknownCheck
from tournament_lab.verify import CHECKS, MAX_COUNTEREXAMPLES, VerificationReport, check_ids, run_check

REQUIRED = [
    "lemma-3.1", "cor-3.2", "obs-3.4", "thm-deltan-formula", "thm-deltan-max", "cor-3.6",
    "prop-5.1", "prop-5.2", "thm-6.1", "thm-6.2", "thm-6.3", "thm-6.4", "fact-4.1", "fact-4.2",
]


def test_required_checks_exist():
    assert set(REQUIRED) <= set(check_ids())


def test_formula_check(reps):
    r = run_check("thm-deltan-formula", range(5, 8), reps)
    assert r.passed and r.range == [5, 6, 7]
    assert r.checked == 12 + 56 + 456 and r.counterexamples == []


def test_fact_42(reps):
    r = run_check("fact-4.2", [5], reps)
    assert r.passed and r.checked == 12


def test_check_restricts_to_applicable_n(reps):
    r = run_check("prop-5.1", range(3, 8), reps)
    assert r.range == [4, 6] and r.passed
    r = run_check("thm-6.1", range(3, 8), reps)
    assert r.range == [] and r.passed


def test_unknown_and_too_large(reps):
    with pytest.raises(UnknownCheck):
        run_check("bogus", [5], reps)
    with pytest.raises(TooLarge):
        run_check("thm-6.4", [11], reps)


def test_counterexamples_capped():
    r = VerificationReport("x", [5])
    for i in range(25):
        r.fail(f"T{i}", "bad")
    assert r.status == "fail" and r.counterexample_count == 25
    assert len(r.counterexamples) == MAX_COUNTEREXAMPLES
    js = r.to_json()
    assert js["counterexample_count"] == 25 and len(js["counterexamples"]) == MAX_COUNTEREXAMPLES


def test_reports_deterministic(reps):
    a = run_check("obs-3.4", range(3, 7), reps).to_json()
    b = run_check("obs-3.4", range(3, 7), reps).to_json()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


@pytest.mark.parametrize("check_id", sorted(CHECKS))
def test_every_check_passes_to_seven(reps, check_id):
    assert run_check(check_id, range(1, 8), reps).passed
