"""Collects acceptance outcomes and prints one verdict line per criterion."""

import pytest

TITLES = {
    1: "crossed module axioms for U(z -> heis3) and k[A3 -> S3]",
    2: "P(U(x)) isomorphic to x for three Lie crossed modules",
    3: "crossed modules vs strict 2-objects, kernels commute, interchange",
    4: "characters of functions recover A3 -> S3, star action laws",
    5: "grouplikes of kG recover G, group algebras have no primitives",
    6: "pre-cat1 Hopf algebra gives U(z -> heis3)",
    7: "Chevalley-Eilenberg complex, connecting map and splice",
    8: "negative controls exit 1 with witnesses",
    9: "Hopf axioms on emitted algebras and U(sl2) to degree 4",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = mark.args[0]


def pytest_runtest_logreport(report):
    n = getattr(report, "criterion", None)
    if n is None:
        return
    entry = _results.setdefault(n, {"ok": True, "tests": set(), "seconds": 0.0})
    entry["tests"].add(report.nodeid)
    entry["seconds"] += report.duration
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(TITLES):
        entry = _results.get(n)
        if entry is None:
            terminalreporter.write_line(f"criterion {n}: NOT RUN  {TITLES[n]}")
            continue
        verdict = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {TITLES[n]}  "
                                    f"[tests: {len(entry['tests'])}, {entry['seconds']:.2f} s]")
