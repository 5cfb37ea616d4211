import pytest

_acceptance = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the end-of-run summary."""
    def record(label, ok):
        _acceptance.append((label, bool(ok)))
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
        assert ok, label
    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _acceptance:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
