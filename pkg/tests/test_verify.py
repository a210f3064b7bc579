"""The invariant suites themselves run clean at a small scale."""
import pytest

from homing.verify import SUITES, run_suite, suite_names


def test_suite_names():
    names = suite_names()
    assert names[0] == "all"
    assert set(names[1:]) == set(SUITES)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes(suite):
    for result in run_suite(suite, nmax=5, cap=7):
        assert result.passed, f"{result.name}: {result.detail}"


def test_all_runs_everything():
    results = run_suite("all", nmax=4, cap=6)
    assert len(results) == sum(len(v) for v in SUITES.values())
    assert all(r.passed for r in results)


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nope")
