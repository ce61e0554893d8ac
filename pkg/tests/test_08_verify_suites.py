# tests/test_08_verify_suites.py
import pytest

from motzkin.verify_suites import Grid, Suite, SuiteReport, run_suite


def test_report_tallies_and_lines():
    report = SuiteReport("demo")
    report.check("alpha", "a0", True)
    report.check("alpha", "a1", True)
    report.check("beta", "b0", False)
    assert (report.passed, report.failed, report.ok) == (2, 1, False)
    assert report.lines() == [
        "alpha: 2 pass",
        "beta: 0 pass, 1 fail",
        "FAILED beta: b0",
        "demo: 2 pass, 1 fail",
    ]


@pytest.mark.parametrize("suite", list(Suite))
def test_small_suites_pass(suite):
    report = run_suite(suite, Grid.SMALL)
    assert report.ok, report.failures
    assert report.passed > 0


def test_catalan_suite_sections():
    lines = run_suite(Suite.CATALAN).lines()
    assert lines[0] == "m=0..100: 101 pass"
    assert lines[1] == "k-form m=0..30: 186 pass"
    assert lines[-1].endswith(" 0 fail")


def test_moments_suite_bridges_on_small_grid():
    report = run_suite(Suite.MOMENTS, Grid.SMALL)
    assert report.sections["shift covariance"] == [100, 0]
    assert report.sections["invert of moments"] == [100, 0]
    assert report.sections["revert bridge"] == [20, 0]
    assert (report.passed, report.failed) == (299, 0)
