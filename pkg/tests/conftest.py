import pytest

_criteria: dict = {}


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="also run k=5,6 heavy checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    state = _criteria.setdefault(n, {"passed": 0, "failed": 0, "skipped": 0})
    if report.when == "call":
        state["passed" if report.passed else "failed"] += 1
    elif report.failed:
        state["failed"] += 1
    elif report.skipped and report.when == "setup":
        state["skipped"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        s = _criteria[n]
        verdict = "FAIL" if s["failed"] or not s["passed"] else "PASS"
        extra = f" ({s['skipped']} slow checks skipped)" if s["skipped"] else ""
        terminalreporter.write_line(f"criterion {n}: {verdict}  [{s['passed']} passed, {s['failed']} failed]{extra}")
