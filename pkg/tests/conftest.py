import pytest

from gini_invariance.certify import certify_resultant_chain


@pytest.fixture(scope="session")
def resultant_chain():
    """(verdict_810, verdict_812, P_{8,10}, P_{8,12}) computed once per session."""
    return certify_resultant_chain(cross_check=True)


def pytest_terminal_summary(terminalreporter):
    from criteria_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
