import pytest

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def acceptance(request):
    """Record a criterion's outcome; the line shows in the terminal summary."""
    label = request.node.get_closest_marker("criterion").args[0]
    yield
    call = getattr(request.node, "_call_report", None)
    ok = call is not None and call.passed
    _ACCEPTANCE[request.node.name] = f"{'PASS' if ok else 'FAIL'}  {label}"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item._call_report = report


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[name])
