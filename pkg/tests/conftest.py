import pytest

_ACCEPTANCE: dict = {}


@pytest.fixture
def acceptance_line():
    """Record the one-line pass/fail summary for an acceptance criterion."""
    def record(number: int, ok: bool, detail: str) -> None:
        _ACCEPTANCE[number] = "criterion %2d: %s  %s" % (number, "PASS" if ok else "FAIL", detail)
        print(_ACCEPTANCE[number])
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])
