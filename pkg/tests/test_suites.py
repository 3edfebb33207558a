import pytest

from snbracket.suites import IDENTITIES, SUITES, SuiteConfig, format_results, run_suites


def test_every_suite_has_identities():
    assert {i.suite for i in IDENTITIES.values()} == set(SUITES)


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(suites=())
    with pytest.raises(ValueError):
        SuiteConfig(suites=("topology",))
    with pytest.raises(ValueError):
        SuiteConfig(variant="nonsense")


def test_deterministic_given_seed():
    cfg = SuiteConfig(dims=(2,), trials=3, suites=("schouten", "poisson"), seed=11)
    a, b = run_suites(cfg), run_suites(cfg)
    assert format_results(a, cfg) == format_results(b, cfg)


def test_dimension_caps_are_reported():
    res = run_suites(SuiteConfig(dims=(1, 4), trials=1, suites=("cartan",)))
    assert all(r.skipped_dims == [4] for r in res.values())


def test_zero_trials_is_vacuous():
    res = run_suites(SuiteConfig(trials=0))
    assert all(r.passed and (r.runs == 0) for r in res.values())
