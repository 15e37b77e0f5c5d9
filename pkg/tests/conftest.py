import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    def record(label):
        _ACCEPTANCE.append((label, request.node))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, node in _ACCEPTANCE:
        rep = getattr(node, "rep_call", None)
        ok = rep is not None and rep.passed
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
