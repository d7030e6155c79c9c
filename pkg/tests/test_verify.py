import json

import pytest

from bsym import verify
from bsym.verify import SuiteConfig, report_json, run_suites

SMALL = SuiteConfig(seed=7, trials=2000, lemma_trials=100, exhaustive_n_max=8)


@pytest.fixture(scope="module")
def reports():
    return run_suites(SMALL)


def test_all_suites_pass(reports):
    for name, rep in reports.items():
        assert rep.passed, (name, rep.failures[:3])


def test_every_rule_covered(reports):
    cov = reports["code"].coverage
    for rule in ("Prop6", "Prop8_e1", "Thm9", "Thm11", "ZeroCode"):
        assert cov.get(f"rule_{rule}", 0) >= 1, rule
    assert cov.get("hamming", 0) >= 1


def test_lemma_covers_both_cases(reports):
    cov = reports["lemma"].coverage
    assert any(k.endswith("case1") for k in cov)
    assert any(k.endswith("case2") for k in cov)


def test_bounds_coverage(reports):
    cov = reports["bounds"].coverage
    for key in ("golden_bounds", "single_symbol", "prop1_random", "cor2", "prop7",
                "monotone_b", "shift_invariance"):
        assert cov.get(key, 0) >= 1, key


def test_reports_deterministic():
    a = report_json(run_suites(SMALL, "formula"))
    b = report_json(run_suites(SMALL, "formula"))
    assert a == b


def test_report_json_structure(reports):
    payload = json.loads(report_json(reports))
    assert set(payload) == set(verify.SUITES)
    for rep in payload.values():
        assert rep["passed"] is True
        assert rep["failures"] == []
        assert rep["cases"] > 0


def test_suite_self_check_detects_mutation():
    """A broken formula must produce failures (test of the test)."""
    import bsym.verify as v
    original = v.dist_b_formula
    try:
        v.dist_b_formula = lambda x, y, b: original(x, y, b) + (
            1 if x.symbols != y.symbols else 0
        )
        rep = v.run_formula_suite(SuiteConfig(seed=7, trials=50,
                                              exhaustive_n_max=4))
        assert not rep.passed
    finally:
        v.dist_b_formula = original


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(trials=0)
