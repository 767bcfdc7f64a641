import pytest

from cominuscule.decide import DEFAULT_CATALOG

ACCEPTANCE_LINES: list[str] = []

# spaces whose every ideal is exercised by the property tests
CATALOG = DEFAULT_CATALOG + ["A3/P2", "A5/P3", "B2/P1", "C3/P3", "D4/P4", "D6/P1", "E6/P1"]


@pytest.fixture(scope="session")
def catalog():
    return list(CATALOG)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
