import pytest

ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def report(request):
    """Record one acceptance line, then assert it."""
    lines = request.config.stash[ACCEPTANCE]

    def _report(label: str, ok: bool, detail: str):
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        assert ok, detail

    return _report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[ACCEPTANCE]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
