import pytest

_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record an acceptance verdict; printed in the terminal summary."""
    def record(number, name, passed, detail=""):
        _CRITERIA.append((number, name, passed, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {name}: {detail}")
