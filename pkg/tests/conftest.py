import sys

import pytest

from snbracket.parser import parse


@pytest.fixture
def mv():
    return lambda text, dim: parse(text, dim, "multivector")


@pytest.fixture
def form():
    return lambda text, dim: parse(text, dim, "form")


@pytest.fixture
def poly():
    return lambda text, dim: parse(text, dim, "polynomial")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.verdict_line(n))
