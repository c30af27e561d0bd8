import pytest

from scrollulrich.catalog import ENTRIES
from scrollulrich.ulrich import classify

CRITERIA = {
    1: "degrees of the ten catalog scrolls",
    2: "scrolls over P2: two Ulrich line bundles in each of the four cases",
    3: "quadric and F1 scrolls",
    4: "Palatini scroll: six classes up to permutation",
    5: "Ext and chi numbers",
    6: "stability discriminators",
    7: "construction numerics",
    8: "K3 lattice facts",
    9: "property suites",
}

_results: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    n = getattr(report, "criterion", None)
    if n is not None:
        _results.setdefault(n, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m:
        rep.criterion = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _results:
            continue
        ok = all(_results[n])
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {CRITERIA[n]}")


@pytest.fixture(scope="session")
def classified():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = classify(ENTRIES[name].scroll, 20, cross_check=True)
        return cache[name]
    return get
