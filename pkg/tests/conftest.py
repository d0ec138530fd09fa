"""Collects acceptance-criterion outcomes and prints one line per criterion at the end of the run."""

import time

import pytest

RUNTIME_LIMIT_S = 15 * 60
_results: dict[int, dict] = {}
_start = time.perf_counter()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _results.setdefault(number, {"title": title, "passed": True, "seconds": 0.0})
    entry["passed"] &= not report.failed
    entry["seconds"] += report.duration


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    elapsed = getattr(config, "_elapsed", time.perf_counter() - _start)
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_results):
        r = _results[number]
        tr.write_line(f"criterion {number:2d} {'PASS' if r['passed'] else 'FAIL'}  {r['title']}  ({r['seconds']:.1f}s)")
    ok = elapsed < RUNTIME_LIMIT_S
    tr.write_line(f"criterion 10 {'PASS' if ok else 'FAIL'}  whole-suite runtime under 15 minutes  ({elapsed:.1f}s)")


def pytest_sessionfinish(session, exitstatus):
    # runs before the terminal summary, so a runtime overrun can still fail the session
    session.config._elapsed = time.perf_counter() - _start
    if _results and session.config._elapsed >= RUNTIME_LIMIT_S and exitstatus == 0:
        session.exitstatus = 1
