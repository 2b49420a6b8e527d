from collections import defaultdict

_outcomes = defaultdict(list)
_titles = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args[0]))
            _titles[mark.args[0]] = mark.args[1]


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[crit].append((report.nodeid.split("::")[-1], report.passed, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_outcomes):
        runs = _outcomes[crit]
        ok = all(passed for _, passed, _ in runs)
        secs = sum(d for _, _, d in runs)
        line = f"criterion {crit}: {'PASS' if ok else 'FAIL'}  {_titles[crit]}  ({secs:.2f}s)"
        failed = [name for name, passed, _ in runs if not passed]
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
