import pytest

_RESULTS: dict = {}


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance check."""

    def record(key: str, ok: bool, detail: str = "") -> None:
        _RESULTS[key] = f"{key}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS):
        terminalreporter.write_line(_RESULTS[key])
